#pragma once

#include <optional>
#include <string>
#include <vector>

#include "scherk/arcs.hpp"
#include "scherk/area.hpp"
#include "scherk/halfplane.hpp"

// Ideal domains as complexes of standard quadrilateral cells glued along
// sides, horocycle systems, the alpha/beta/length/area measures of inscribed
// cell-union polygons, and the admissibility verdict: the boundary balance
// equality plus strict slack inequalities for every proper polygon.

namespace scherk {

struct SideIncidence {
    int cell = -1;
    SideKind kind = SideKind::A;  // kind of this side relative to that cell
};

struct Side {
    int va = -1, vb = -1;
    HArc arc;
    SideIncidence inc0;
    std::optional<SideIncidence> inc1;

    bool is_boundary() const { return !inc1.has_value(); }
    SideKind ambient_kind() const;       // boundary sides only
    SideKind kind_for(int cell) const;
};

// Cell sides in standard-chart order: s[0]=[P1P2], s[1]=[P2P3], s[2]=[P3P4],
// s[3]=[P4P1]; same order for the vertex images in v.
struct Cell {
    QuadParams params;
    Isometry chart;  // standard chart -> ambient
    std::array<int, 4> v{};
    std::array<int, 4> s{};
};

struct OrientedSide {
    int side = -1;
    bool fwd = true;
};

struct PairRecord {
    int side_a = -1, side_b = -1;
    int cell_e = -1, cell_ep = -1;
};

struct StepHistory {
    int host_cell_count = 0;  // cells 0 .. host_cell_count-1 existed before the step
    std::vector<PairRecord> pairs;
};

struct CellComplex {
    double H = 0.0;
    std::vector<BoundaryPoint> vertices;
    std::vector<Side> sides;
    std::vector<Cell> cells;
    std::vector<OrientedSide> boundary;  // outer boundary cycle
    std::vector<StepHistory> history;

    BoundaryPoint boundary_start(const OrientedSide& os) const;
    BoundaryPoint boundary_end(const OrientedSide& os) const;
    int boundary_start_vertex(const OrientedSide& os) const;
    int boundary_end_vertex(const OrientedSide& os) const;
    bool contains(const HPoint& p) const;
    HPoint interior_probe(int cell) const;
};

enum class QuadMode { computed_root, paper_formula };

CellComplex standard_quadrilateral(double mu, double H, double d3);
CellComplex standard_quadrilateral(double mu, double H, QuadMode mode, double quad_tol = 1e-11);

// Horocycle sizes indexed by vertex id (Euclidean radius, or height M for a
// vertex at infinity).
struct HorocycleSystem {
    std::vector<double> size;
};

Horocycle horocycle_at(const CellComplex& c, const HorocycleSystem& hs, int vertex);
HorocycleSystem uniform_horocycles(const CellComplex& c, double r, double M);
HorocycleSystem scaled(const HorocycleSystem& hs, double factor);
void validate_disjoint(const CellComplex& c, const HorocycleSystem& hs);
// smallest separation ratio - 1 over all horocycle pairs (0 = tangent)
double min_horocycle_gap(const CellComplex& c, const HorocycleSystem& hs);

struct BoundaryPolygon {
    std::vector<int> cells;  // sorted
    std::vector<int> sides;
    bool outer = false;
    std::string id;
};

struct PolygonMeasures {
    double alpha = 0.0;
    double beta = 0.0;
    double length = 0.0;
    double area = 0.0;
};

struct Tolerances {
    double balance = 1e-7;
    double slack = 1e-9;
    double quad = 1e-11;
    double probe = 1e-10;
};

BoundaryPolygon outer_polygon(const CellComplex& c);
BoundaryPolygon polygon_for_cells(const CellComplex& c, std::vector<int> cells);

double side_truncated_length(const CellComplex& c, const HorocycleSystem& hs, int side,
                             double quad_tol = 1e-11);
double union_area(const CellComplex& c, const std::vector<int>& cells,
                  double quad_tol = 1e-11);

PolygonMeasures measures(const CellComplex& c, const BoundaryPolygon& poly,
                         const HorocycleSystem& hs, double quad_tol = 1e-11);

// alpha - beta - 2 H Area over the outer boundary (the G-value).
double balance_residual(const CellComplex& c, const HorocycleSystem& hs,
                        double quad_tol = 1e-11);

// (s_A, s_B) = (l + 2HA - 2 alpha, l - 2HA - 2 beta).
std::pair<double, double> polygon_slacks(const CellComplex& c, const BoundaryPolygon& poly,
                                         const HorocycleSystem& hs, double quad_tol = 1e-11);

// (1 - 4H^2)(1 + exp(4 pi H / sqrt(1 - 4H^2))); exceeds 2 on (0, 1/2).
double xi(double H);

// Balance of the standalone standard quadrilateral (mu, d3) with a canonical
// horocycle system; the function whose d3-root defines the admissible shape.
double balance_function(double mu, double d3, double H, double quad_tol = 1e-11);

struct RootResult {
    double d3_star = 0.0;
    bool increasing = true;
    double g_lo = 0.0, g_hi = 0.0;
    double bracket_lo = 0.0, bracket_hi = 0.0;
};

RootResult solve_d3_star(double mu, double H, double quad_tol = 1e-11);

// All boundary polygons of connected nonempty cell unions (cells joined
// through a shared side or shared vertex), the full complex included and
// flagged as outer. Throws when the cell count exceeds `cell_cap` or the
// number of connected unions exceeds `budget`.
std::vector<BoundaryPolygon> enumerate_boundary_polygons(const CellComplex& c,
                                                         int cell_cap = 64,
                                                         long budget = 1 << 20);

struct PolygonCheck {
    std::string id;
    std::vector<int> cells;
    double s_A = 0.0;
    double s_B = 0.0;
    bool ok = false;
};

struct AdmissibilityReport {
    double balance = 0.0;
    bool balance_ok = false;
    std::vector<PolygonCheck> polygons;  // proper polygons only
    std::string family;                  // "exhaustive" or "pair-family"
    double tol_balance = 0.0;
    double slack_threshold = 0.0;
    std::vector<double> horocycle_sizes;
    bool pass = false;
    std::string failing;  // empty when pass
};

enum class PolygonFamily { automatic, exhaustive, pair_local };

AdmissibilityReport check_admissibility(const CellComplex& c, const HorocycleSystem& hs,
                                        const Tolerances& tol = {},
                                        PolygonFamily family = PolygonFamily::automatic);

CellComplex apply(const Isometry& g, const CellComplex& c);
HorocycleSystem apply(const Isometry& g, const CellComplex& original,
                      const HorocycleSystem& hs);

}  // namespace scherk
