#include "scherk/domain.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <set>
#include <stdexcept>

#include "scherk/numerics.hpp"

namespace scherk {

namespace {
constexpr double kPi = std::numbers::pi;
}

SideKind Side::ambient_kind() const {
    if (!is_boundary()) throw std::logic_error("Side: ambient kind of an interior side");
    return inc0.kind;
}

SideKind Side::kind_for(int cell) const {
    if (inc0.cell == cell) return inc0.kind;
    if (inc1 && inc1->cell == cell) return inc1->kind;
    throw std::logic_error("Side: cell is not incident");
}

BoundaryPoint CellComplex::boundary_start(const OrientedSide& os) const {
    return vertices[boundary_start_vertex(os)];
}

BoundaryPoint CellComplex::boundary_end(const OrientedSide& os) const {
    return vertices[boundary_end_vertex(os)];
}

int CellComplex::boundary_start_vertex(const OrientedSide& os) const {
    const Side& s = sides[os.side];
    return os.fwd ? s.va : s.vb;
}

int CellComplex::boundary_end_vertex(const OrientedSide& os) const {
    const Side& s = sides[os.side];
    return os.fwd ? s.vb : s.va;
}

bool CellComplex::contains(const HPoint& p) const {
    for (const Cell& cell : cells) {
        if (std_contains(cell.params, cell.chart.inverse()(p))) return true;
    }
    return false;
}

HPoint CellComplex::interior_probe(int cell) const {
    return cells[cell].chart(std_interior_point(cells[cell].params));
}

CellComplex standard_quadrilateral(double mu, double H, double d3) {
    CellComplex c;
    c.H = H;
    const QuadParams params = QuadParams::create(mu, d3, H);
    c.vertices = {BoundaryPoint::finite(0.0), BoundaryPoint::finite(2.0 * mu),
                  BoundaryPoint::finite(d3), BoundaryPoint::infinity()};

    struct Spec {
        int va, vb;
        SideKind kind;
        Bulge bulge;
    };
    // boundary traversed with the interior on the left: A sides deviate right,
    // B sides deviate left
    const Spec specs[4] = {{0, 1, SideKind::B, Bulge::left},
                           {1, 2, SideKind::A, Bulge::right},
                           {2, 3, SideKind::B, Bulge::left},
                           {3, 0, SideKind::A, Bulge::right}};
    for (int i = 0; i < 4; ++i) {
        Side s;
        s.va = specs[i].va;
        s.vb = specs[i].vb;
        s.arc = equidistant_arc(c.vertices[s.va], c.vertices[s.vb], H, specs[i].bulge);
        s.inc0 = SideIncidence{0, specs[i].kind};
        c.sides.push_back(s);
    }
    Cell cell;
    cell.params = params;
    cell.chart = Isometry::identity();
    cell.v = {0, 1, 2, 3};
    cell.s = {0, 1, 2, 3};
    c.cells.push_back(cell);
    c.boundary = {{3, true}, {0, true}, {1, true}, {2, true}};
    return c;
}

CellComplex standard_quadrilateral(double mu, double H, QuadMode mode, double quad_tol) {
    double d3;
    if (mode == QuadMode::paper_formula) {
        const double theta = std::asin(2.0 * H);
        d3 = 2.0 * mu * (1.0 + std::exp(2.0 * kPi * std::tan(theta)));
    } else {
        d3 = solve_d3_star(mu, H, quad_tol).d3_star;
    }
    return standard_quadrilateral(mu, H, d3);
}

Horocycle horocycle_at(const CellComplex& c, const HorocycleSystem& hs, int vertex) {
    return Horocycle{c.vertices[vertex], hs.size.at(vertex)};
}

HorocycleSystem uniform_horocycles(const CellComplex& c, double r, double M) {
    HorocycleSystem hs;
    hs.size.reserve(c.vertices.size());
    for (const BoundaryPoint& v : c.vertices) hs.size.push_back(v.is_infinity() ? M : r);
    return hs;
}

HorocycleSystem scaled(const HorocycleSystem& hs, double factor) {
    if (!(factor > 0.0)) throw std::invalid_argument("scaled: factor must be positive");
    HorocycleSystem out = hs;
    for (double& s : out.size) s *= factor;
    return out;
}

namespace {

double pair_gap(const CellComplex& c, const HorocycleSystem& hs, int i, int j) {
    const Horocycle hi = horocycle_at(c, hs, i);
    const Horocycle hj = horocycle_at(c, hs, j);
    if (hi.base.is_infinity() || hj.base.is_infinity()) {
        const double r = hi.base.is_infinity() ? hj.size : hi.size;
        const double m = hi.base.is_infinity() ? hi.size : hj.size;
        return m / (2.0 * r) - 1.0;
    }
    const double dx = hi.base.value() - hj.base.value();
    return dx * dx / (4.0 * hi.size * hj.size) - 1.0;
}

}  // namespace

double min_horocycle_gap(const CellComplex& c, const HorocycleSystem& hs) {
    double best = std::numeric_limits<double>::infinity();
    const int n = static_cast<int>(c.vertices.size());
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            best = std::min(best, pair_gap(c, hs, i, j));
        }
    }
    return best;
}

void validate_disjoint(const CellComplex& c, const HorocycleSystem& hs) {
    if (hs.size.size() != c.vertices.size()) {
        throw std::invalid_argument("HorocycleSystem: one horocycle per vertex required");
    }
    for (double s : hs.size) {
        if (!(s > 0.0)) throw std::invalid_argument("HorocycleSystem: sizes must be positive");
    }
    const int n = static_cast<int>(c.vertices.size());
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (pair_gap(c, hs, i, j) <= 0.0) {
                throw std::domain_error("HorocycleSystem: horocycles at vertices " +
                                        std::to_string(i) + " and " + std::to_string(j) +
                                        " are not disjoint");
            }
        }
    }
}

namespace {

std::string cells_id(const std::vector<int>& cells) {
    std::string id;
    for (size_t i = 0; i < cells.size(); ++i) {
        if (i) id += '+';
        id += std::to_string(cells[i]);
    }
    return id;
}

}  // namespace

BoundaryPolygon polygon_for_cells(const CellComplex& c, std::vector<int> cells) {
    std::sort(cells.begin(), cells.end());
    if (std::adjacent_find(cells.begin(), cells.end()) != cells.end()) {
        throw std::invalid_argument("polygon_for_cells: duplicate cell");
    }
    std::vector<char> in(c.cells.size(), 0);
    for (int id : cells) in.at(id) = 1;
    BoundaryPolygon poly;
    poly.cells = std::move(cells);
    for (int s = 0; s < static_cast<int>(c.sides.size()); ++s) {
        const Side& side = c.sides[s];
        int count = in[side.inc0.cell] ? 1 : 0;
        if (side.inc1 && in[side.inc1->cell]) ++count;
        if (count == 1) poly.sides.push_back(s);
    }
    poly.outer = poly.cells.size() == c.cells.size();
    poly.id = poly.outer ? "outer" : cells_id(poly.cells);
    return poly;
}

BoundaryPolygon outer_polygon(const CellComplex& c) {
    std::vector<int> all(c.cells.size());
    for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    return polygon_for_cells(c, all);
}

double side_truncated_length(const CellComplex& c, const HorocycleSystem& hs, int side,
                             double quad_tol) {
    const Side& s = c.sides.at(side);
    return truncated_length(s.arc, horocycle_at(c, hs, s.va), horocycle_at(c, hs, s.vb),
                            quad_tol);
}

double union_area(const CellComplex& c, const std::vector<int>& cells, double quad_tol) {
    std::set<int> seen;
    double area = 0.0;
    for (int id : cells) {
        if (!seen.insert(id).second) {
            throw std::invalid_argument("union_area: cells must have disjoint interiors");
        }
        area += quad_area(c.cells.at(id).params, quad_tol);
    }
    return area;
}

namespace {

PolygonMeasures measures_cached(const CellComplex& c, const BoundaryPolygon& poly,
                                const std::vector<double>& side_len,
                                const std::vector<double>& cell_area) {
    PolygonMeasures m;
    for (int s : poly.sides) {
        const Side& side = c.sides[s];
        m.length += side_len[s];
        if (side.is_boundary()) {
            if (side.ambient_kind() == SideKind::A) {
                m.alpha += side_len[s];
            } else {
                m.beta += side_len[s];
            }
        }
    }
    for (int id : poly.cells) m.area += cell_area[id];
    return m;
}

}  // namespace

PolygonMeasures measures(const CellComplex& c, const BoundaryPolygon& poly,
                         const HorocycleSystem& hs, double quad_tol) {
    validate_disjoint(c, hs);
    PolygonMeasures m;
    for (int s : poly.sides) {
        const double len = side_truncated_length(c, hs, s, quad_tol);
        m.length += len;
        const Side& side = c.sides[s];
        if (side.is_boundary()) {
            (side.ambient_kind() == SideKind::A ? m.alpha : m.beta) += len;
        }
    }
    m.area = union_area(c, poly.cells, quad_tol);
    return m;
}

double balance_residual(const CellComplex& c, const HorocycleSystem& hs, double quad_tol) {
    const PolygonMeasures m = measures(c, outer_polygon(c), hs, quad_tol);
    return m.alpha - m.beta - 2.0 * c.H * m.area;
}

std::pair<double, double> polygon_slacks(const CellComplex& c, const BoundaryPolygon& poly,
                                         const HorocycleSystem& hs, double quad_tol) {
    const PolygonMeasures m = measures(c, poly, hs, quad_tol);
    const double twoHA = 2.0 * c.H * m.area;
    return {m.length + twoHA - 2.0 * m.alpha, m.length - twoHA - 2.0 * m.beta};
}

double xi(double H) {
    if (!(H > 0.0) || !(H < 0.5)) throw std::invalid_argument("xi: requires 0 < H < 1/2");
    const double root = std::sqrt(1.0 - 4.0 * H * H);
    return (1.0 - 4.0 * H * H) * (1.0 + std::exp(4.0 * kPi * H / root));
}

double balance_function(double mu, double d3, double H, double quad_tol) {
    const CellComplex c = standard_quadrilateral(mu, H, d3);
    const double theta = std::asin(2.0 * H);
    // any disjoint choice gives the same value; keep the radius clear of the
    // 2mu / d3 vertex gap, which shrinks toward the connectivity bound
    const double r = std::min(mu / 8.0, (d3 - 2.0 * mu) / 8.0);
    const HorocycleSystem hs = uniform_horocycles(c, r, 4.0 * mu / std::cos(theta));
    return balance_residual(c, hs, quad_tol);
}

RootResult solve_d3_star(double mu, double H, double quad_tol) {
    const double bound = connectivity_bound(mu, H);
    const double theta = std::asin(2.0 * H);
    RootResult res;
    res.bracket_lo = bound * (1.0 + 1e-6);
    res.bracket_hi = 2.0 * std::max(2.0 * mu * (1.0 + std::exp(2.0 * kPi * std::tan(theta))),
                                    4.0 * mu);
    const auto g = [&](double d) { return balance_function(mu, d, H, quad_tol); };
    res.g_lo = g(res.bracket_lo);
    res.g_hi = g(res.bracket_hi);
    int expansions = 0;
    while ((res.g_lo > 0.0) == (res.g_hi > 0.0) && expansions < 8) {
        res.bracket_hi *= 4.0;
        res.g_hi = g(res.bracket_hi);
        ++expansions;
    }
    if ((res.g_lo > 0.0) == (res.g_hi > 0.0)) {
        throw std::domain_error("solve_d3_star: balance residual does not change sign across the bracket");
    }
    res.increasing = res.g_hi > res.g_lo;
    RootOptions ropts;
    ropts.x_tol = 1e-12 * res.bracket_hi;
    res.d3_star = brent_root(g, res.bracket_lo, res.bracket_hi, ropts);
    return res;
}

namespace {

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<uint64_t> cell_adjacency(const CellComplex& c) {
    const int n = static_cast<int>(c.cells.size());
    std::vector<uint64_t> nbr(n, 0);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            bool touch = false;
            for (int si : c.cells[i].s) {
                for (int sj : c.cells[j].s) {
                    if (si == sj) touch = true;
                }
            }
            for (int vi : c.cells[i].v) {
                for (int vj : c.cells[j].v) {
                    if (vi == vj) touch = true;
                }
            }
            if (touch) {
                nbr[i] |= uint64_t{1} << j;
                nbr[j] |= uint64_t{1} << i;
            }
        }
    }
    return nbr;
}

void grow_connected(const std::vector<uint64_t>& nbr, uint64_t set, uint64_t candidates,
                    uint64_t banned, long& budget, std::vector<uint64_t>& out) {
    if (--budget < 0) throw BudgetExceeded("enumerate_boundary_polygons: enumeration budget exceeded");
    out.push_back(set);
    uint64_t cand = candidates;
    while (cand) {
        const int v = std::countr_zero(cand);
        const uint64_t bit = uint64_t{1} << v;
        cand &= ~bit;
        grow_connected(nbr, set | bit, (cand | (nbr[v] & ~set & ~banned)) & ~bit & ~set,
                       banned, budget, out);
        banned |= bit;
    }
}

}  // namespace

std::vector<BoundaryPolygon> enumerate_boundary_polygons(const CellComplex& c, int cell_cap,
                                                         long budget) {
    const int n = static_cast<int>(c.cells.size());
    if (n > cell_cap || n > 64) {
        throw std::length_error("enumerate_boundary_polygons: cell count exceeds the cap");
    }
    const std::vector<uint64_t> nbr = cell_adjacency(c);
    std::vector<uint64_t> masks;
    uint64_t banned = 0;
    for (int i = 0; i < n; ++i) {
        const uint64_t bit = uint64_t{1} << i;
        grow_connected(nbr, bit, nbr[i] & ~banned, banned, budget, masks);
        banned |= bit;
    }
    std::sort(masks.begin(), masks.end());
    std::vector<BoundaryPolygon> polys;
    polys.reserve(masks.size());
    for (uint64_t mask : masks) {
        std::vector<int> cells;
        for (int i = 0; i < n; ++i) {
            if (mask & (uint64_t{1} << i)) cells.push_back(i);
        }
        polys.push_back(polygon_for_cells(c, std::move(cells)));
    }
    return polys;
}

namespace {

std::vector<BoundaryPolygon> pair_family_polygons(const CellComplex& c) {
    std::vector<BoundaryPolygon> polys;
    std::set<std::string> seen;
    const auto add = [&](std::vector<int> cells) {
        BoundaryPolygon poly = polygon_for_cells(c, std::move(cells));
        if (poly.outer) return;
        if (seen.insert(poly.id).second) polys.push_back(std::move(poly));
    };
    for (const StepHistory& step : c.history) {
        std::vector<int> host(step.host_cell_count);
        for (int i = 0; i < step.host_cell_count; ++i) host[i] = i;
        add(host);
        for (const PairRecord& pr : step.pairs) {
            add({pr.cell_e});
            add({pr.cell_ep});
            add({pr.cell_e, pr.cell_ep});
            std::vector<int> he = host;
            he.push_back(pr.cell_e);
            add(he);
            std::vector<int> hp = host;
            hp.push_back(pr.cell_ep);
            add(hp);
        }
    }
    return polys;
}

}  // namespace

AdmissibilityReport check_admissibility(const CellComplex& c, const HorocycleSystem& hs,
                                        const Tolerances& tol, PolygonFamily family) {
    validate_disjoint(c, hs);
    AdmissibilityReport report;
    report.tol_balance = tol.balance;
    report.slack_threshold = tol.slack;
    report.horocycle_sizes = hs.size;

    std::vector<double> side_len(c.sides.size());
    for (size_t s = 0; s < c.sides.size(); ++s) {
        side_len[s] = side_truncated_length(c, hs, static_cast<int>(s), tol.quad);
    }
    std::vector<double> cell_area(c.cells.size());
    for (size_t i = 0; i < c.cells.size(); ++i) {
        cell_area[i] = quad_area(c.cells[i].params, tol.quad);
    }

    const BoundaryPolygon outer = outer_polygon(c);
    const PolygonMeasures om = measures_cached(c, outer, side_len, cell_area);
    report.balance = om.alpha - om.beta - 2.0 * c.H * om.area;
    report.balance_ok = std::abs(report.balance) <= tol.balance;

    std::vector<BoundaryPolygon> polys;
    if (family == PolygonFamily::pair_local) {
        polys = pair_family_polygons(c);
        report.family = "pair-family";
    } else {
        try {
            polys = enumerate_boundary_polygons(c);
            report.family = "exhaustive";
        } catch (const std::runtime_error&) {
            if (family == PolygonFamily::exhaustive) throw;
            polys = pair_family_polygons(c);
            report.family = "pair-family";
        }
    }

    report.pass = report.balance_ok;
    if (!report.balance_ok) report.failing = "balance";
    for (const BoundaryPolygon& poly : polys) {
        if (poly.outer) continue;
        const PolygonMeasures m = measures_cached(c, poly, side_len, cell_area);
        PolygonCheck check;
        check.id = poly.id;
        check.cells = poly.cells;
        const double twoHA = 2.0 * c.H * m.area;
        check.s_A = m.length + twoHA - 2.0 * m.alpha;
        check.s_B = m.length - twoHA - 2.0 * m.beta;
        check.ok = check.s_A > tol.slack && check.s_B > tol.slack;
        if (!check.ok && report.failing.empty()) {
            report.failing = "polygon " + check.id;
        }
        report.pass = report.pass && check.ok;
        report.polygons.push_back(std::move(check));
    }
    return report;
}

CellComplex apply(const Isometry& g, const CellComplex& c) {
    CellComplex out;
    out.H = c.H;
    out.history = c.history;
    out.boundary = c.boundary;
    out.vertices.reserve(c.vertices.size());
    for (const BoundaryPoint& v : c.vertices) out.vertices.push_back(g(v));
    out.sides.reserve(c.sides.size());
    for (const Side& s : c.sides) {
        Side ns = s;
        Bulge bulge = s.arc.bulge;
        if (g.reflect()) bulge = bulge == Bulge::left ? Bulge::right : Bulge::left;
        ns.arc = equidistant_arc(out.vertices[s.va], out.vertices[s.vb], 0.5 * s.arc.curv,
                                 bulge);
        out.sides.push_back(ns);
    }
    out.cells.reserve(c.cells.size());
    for (const Cell& cell : c.cells) {
        Cell nc = cell;
        nc.chart = g * cell.chart;
        out.cells.push_back(nc);
    }
    return out;
}

HorocycleSystem apply(const Isometry& g, const CellComplex& original,
                      const HorocycleSystem& hs) {
    HorocycleSystem out;
    out.size.reserve(hs.size.size());
    for (size_t v = 0; v < hs.size.size(); ++v) {
        out.size.push_back(apply(g, horocycle_at(original, hs, static_cast<int>(v))).size);
    }
    return out;
}

}  // namespace scherk
