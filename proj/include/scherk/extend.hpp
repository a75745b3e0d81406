#pragma once

#include "scherk/domain.hpp"

// Attaching perturbed admissible quadrilaterals to an (A, B) side pair of an
// admissible host so the two admissibility defects are equal and cancel, and
// the whole-boundary extension that replaces every A side by A,B,A and every
// B side by B,A,B.

namespace scherk {

enum class CellRole { e_type, ep_type };

struct PlacedCell {
    int cell = -1;
    CellRole role = CellRole::e_type;
    int host_side = -1;
    std::array<int, 2> new_vertices{-1, -1};  // images of P3 and the other free vertex
};

struct ExtensionRecord {
    int side_a = -1, side_b = -1;
    int cell_e = -1, cell_ep = -1;
    double d3_star = 0.0;
    double d3_e = 0.0, d3_ep = 0.0;
    double tau_e = 0.0, tau_ep = 0.0;
    double phi_target = 0.0;
    double phi_e = 0.0, phi_ep = 0.0;  // measured in the ambient chart
};

struct ExtendPolicy {
    double phi_ratio = 0.01;
    Tolerances tol{};
    PolygonFamily family = PolygonFamily::automatic;
};

// Attaches the standard quadrilateral (mu_param, d3_param) across a boundary
// side of the host, with the shared arc matched endpoint-to-endpoint and the
// new interior on the far side. Throws when no orientation class realizes
// the match.
PlacedCell place_quadrilateral(CellComplex& c, int host_side, double mu_param,
                               double d3_param, const Tolerances& tol = {});

// Admissibility defect of an attached cell, measured against the global
// horocycle system: zero when the cell shape sits exactly at the balance
// root, positive on the constructed perturbations.
double phi_value(const CellComplex& c, const PlacedCell& cell, const HorocycleSystem& hs,
                 double quad_tol = 1e-11);

// Perturbs and places E across side_a (an A side) and E' across side_b (the
// following B side) so both defects equal phi_target.
ExtensionRecord balance_pair(CellComplex& c, HorocycleSystem& hs, int side_a, int side_b,
                             double phi_target, const Tolerances& tol = {});

// Consecutive (A, B) boundary side pairs in processing order, starting from
// the canonical side (lowest start vertex).
std::vector<std::pair<int, int>> boundary_side_pairs(const CellComplex& c);

struct ExtendOutcome {
    CellComplex complex;
    HorocycleSystem hs;
    std::vector<ExtensionRecord> records;
    AdmissibilityReport report;
};

// One full extension sweep over every (A, B) pair. The outcome carries the
// admissibility report of the result; callers must treat report.pass = false
// as a rejected construction.
ExtendOutcome extend_domain(const CellComplex& host, const HorocycleSystem& hs,
                            const ExtendPolicy& policy = {});

}  // namespace scherk
