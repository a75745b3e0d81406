#include "scherk/exhaust.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "scherk/numerics.hpp"

namespace scherk {

double distance_to_arc(const HArc& arc, const HPoint& p) {
    double lo, hi;
    if (arc.is_line) {
        const double u = std::log(p.y);
        lo = u - 50.0;
        hi = u + 50.0;
    } else {
        const double pad = 1e-9 * (arc.phi_hi - arc.phi_lo);
        lo = arc.phi_lo + pad;
        hi = arc.phi_hi - pad;
    }
    const auto f = [&](double t) { return dist(p, arc.point_at(t)); };
    const double t = scan_golden_min(f, lo, hi, 160, 1e-10 * (hi - lo));
    return f(t);
}

double boundary_distance(const CellComplex& c, const HPoint& base) {
    if (!c.contains(base)) {
        throw std::domain_error("boundary_distance: base point is outside the domain");
    }
    double best = std::numeric_limits<double>::infinity();
    for (const OrientedSide& os : c.boundary) {
        best = std::min(best, distance_to_arc(c.sides[os.side].arc, base));
    }
    return best;
}

namespace {

StepTrace trace_step(int step, const CellComplex& c, const HorocycleSystem& hs,
                     const AdmissibilityReport& report, const HPoint& base) {
    StepTrace t;
    t.step = step;
    t.cells = static_cast<int>(c.cells.size());
    t.side_count = static_cast<int>(c.boundary.size());
    t.balance = report.balance;
    for (const PolygonCheck& p : report.polygons) {
        const double s = std::min(p.s_A, p.s_B);
        if (!t.has_min_slack || s < t.min_slack) {
            t.has_min_slack = true;
            t.min_slack = s;
        }
    }
    t.boundary_distance = boundary_distance(c, base);
    t.min_horocycle_gap = min_horocycle_gap(c, hs);
    t.family = report.family;
    return t;
}

}  // namespace

ExhaustionRun run_exhaustion(const CellComplex& seed, const HorocycleSystem& hs,
                             const ExhaustionSchedule& schedule) {
    if (schedule.iterations < 1) {
        throw std::invalid_argument("run_exhaustion: iterations must be at least 1");
    }
    if (!(schedule.phi_ratio > 0.0 && schedule.phi_ratio < 1.0)) {
        throw std::invalid_argument("run_exhaustion: phi ratio must lie in (0, 1)");
    }
    if (!(schedule.shrink > 0.0 && schedule.shrink < 1.0)) {
        throw std::invalid_argument("run_exhaustion: shrink factor must lie in (0, 1)");
    }

    ExhaustionRun run;
    run.complex = seed;
    run.hs = hs;
    run.trace.base = schedule.base ? *schedule.base : seed.interior_probe(0);

    const AdmissibilityReport seed_report =
        check_admissibility(run.complex, run.hs, schedule.tol, schedule.family);
    if (!seed_report.pass) {
        throw std::domain_error("run_exhaustion: seed fails admissibility at " +
                                seed_report.failing);
    }
    run.trace.steps.push_back(trace_step(0, run.complex, run.hs, seed_report, run.trace.base));

    for (int n = 1; n <= schedule.iterations; ++n) {
        const int next_cells = static_cast<int>(run.complex.cells.size()) +
                               static_cast<int>(run.complex.boundary.size());
        if (next_cells > schedule.cell_cap) {
            throw std::length_error("run_exhaustion: cell cap reached at step " +
                                    std::to_string(n));
        }
        run.hs = scaled(run.hs, schedule.shrink);
        ExtendPolicy policy;
        policy.phi_ratio = schedule.phi_ratio;
        policy.tol = schedule.tol;
        policy.family = schedule.family;
        ExtendOutcome out = extend_domain(run.complex, run.hs, policy);
        if (!out.report.pass) {
            throw std::domain_error("run_exhaustion: admissibility failed at step " +
                                    std::to_string(n) + " (" + out.report.failing + ")");
        }
        run.complex = std::move(out.complex);
        run.hs = std::move(out.hs);
        run.records.push_back(std::move(out.records));
        run.trace.steps.push_back(
            trace_step(n, run.complex, run.hs, out.report, run.trace.base));
        run.snapshots.push_back(run.complex);
        run.snapshot_hs.push_back(run.hs);
    }
    return run;
}

}  // namespace scherk
