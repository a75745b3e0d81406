#pragma once

#include <optional>

#include "scherk/extend.hpp"

// Iterated extension with shrinking horocycles: D_0 inside D_1 inside ...
// with every intermediate complex re-verified and the outward drift of the
// boundary recorded step by step.

namespace scherk {

struct ExhaustionSchedule {
    int iterations = 1;
    double phi_ratio = 0.01;
    double shrink = 0.5;
    std::optional<HPoint> base;  // defaults to an interior point of the seed cell
    int cell_cap = 64;
    Tolerances tol{};
    PolygonFamily family = PolygonFamily::automatic;
};

struct StepTrace {
    int step = 0;
    int cells = 0;
    int side_count = 0;
    double balance = 0.0;
    bool has_min_slack = false;
    double min_slack = 0.0;
    double boundary_distance = 0.0;
    double min_horocycle_gap = 0.0;
    std::string family;
};

struct ExhaustionTrace {
    HPoint base;
    std::vector<StepTrace> steps;  // steps[0] describes the seed
};

struct ExhaustionRun {
    ExhaustionTrace trace;
    CellComplex complex;
    HorocycleSystem hs;
    std::vector<std::vector<ExtensionRecord>> records;  // one vector per step
    std::vector<CellComplex> snapshots;                 // complex after each step
    std::vector<HorocycleSystem> snapshot_hs;
};

// Hyperbolic distance from the base point to the nearest boundary side.
double boundary_distance(const CellComplex& c, const HPoint& base);
double distance_to_arc(const HArc& arc, const HPoint& p);

ExhaustionRun run_exhaustion(const CellComplex& seed, const HorocycleSystem& hs,
                             const ExhaustionSchedule& schedule);

}  // namespace scherk
