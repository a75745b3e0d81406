#include "scherk/arcs.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "scherk/numerics.hpp"

namespace scherk {

namespace {

constexpr double kPi = std::numbers::pi;

double wrap_into(double phi, double lo) {
    while (phi < lo - 1e-9) phi += 2.0 * kPi;
    return phi;
}

}  // namespace

HPoint HArc::point_at(double t) const {
    if (is_line) {
        const double y = std::exp(t);
        return HPoint(x0 + tilt * y, y);
    }
    return HPoint(cx + R * std::cos(t), cy + R * std::sin(t));
}

double HArc::param_of(const HPoint& p) const {
    if (is_line) return std::log(p.y);
    const double phi = wrap_into(std::atan2(p.y - cy, p.x - cx), phi_lo);
    if (phi > phi_hi + 1e-9) {
        throw std::domain_error("HArc: point parameter outside the upper arc");
    }
    return phi;
}

double HArc::param_dir() const {
    if (is_line) return a.is_infinity() ? -1.0 : 1.0;
    return t_b > t_a ? 1.0 : -1.0;
}

double HArc::residual(const HPoint& p) const {
    if (is_line) {
        return std::abs(p.x - (x0 + tilt * p.y)) / std::sqrt(1.0 + tilt * tilt) /
               (1.0 + std::abs(x0));
    }
    return std::abs(std::hypot(p.x - cx, p.y - cy) - R) / (1.0 + R);
}

HArc equidistant_arc(const BoundaryPoint& a, const BoundaryPoint& b, double H, Bulge bulge) {
    if (!(H >= 0.0) || !(H < 0.5)) {
        throw std::invalid_argument("equidistant_arc: requires 0 <= H < 1/2");
    }
    if (approx_equal(a, b)) {
        throw std::invalid_argument("equidistant_arc: endpoints coincide");
    }
    HArc arc;
    arc.a = a;
    arc.b = b;
    arc.curv = 2.0 * H;
    arc.bulge = bulge;
    arc.theta = std::asin(arc.curv);
    const double tan_t = std::tan(arc.theta);

    if (a.is_infinity() || b.is_infinity()) {
        arc.is_line = true;
        const bool upward = b.is_infinity();
        arc.x0 = upward ? a.value() : b.value();
        // deviation of the tilted line relative to the vertical geodesic:
        // left of the oriented traversal is -x when heading up, +x heading down
        const double dev = (bulge == Bulge::left) == upward ? -1.0 : 1.0;
        arc.tilt = dev * tan_t;
        return arc;
    }

    const double av = a.value();
    const double bv = b.value();
    const bool east = bv > av;
    arc.R = std::abs(bv - av) / (2.0 * std::cos(arc.theta));
    arc.cx = 0.5 * (av + bv);
    const bool above = (bulge == Bulge::left) == east;
    arc.cy = (above ? 1.0 : -1.0) * arc.R * std::sin(arc.theta);

    double phi_a = std::atan2(-arc.cy, av - arc.cx);
    double phi_b = std::atan2(-arc.cy, bv - arc.cx);
    double lo = std::min(phi_a, phi_b);
    double hi = std::max(phi_a, phi_b);
    if (!(lo <= 0.5 * kPi && 0.5 * kPi <= hi)) {
        // the upper sub-arc wraps: shift the smaller angle by a full turn
        if (phi_a < phi_b) {
            phi_a += 2.0 * kPi;
        } else {
            phi_b += 2.0 * kPi;
        }
        lo = std::min(phi_a, phi_b);
        hi = std::max(phi_a, phi_b);
    }
    arc.phi_lo = lo;
    arc.phi_hi = hi;
    arc.t_a = phi_a;
    arc.t_b = phi_b;
    return arc;
}

namespace {

// squared distance to the horocycle center minus r^2, as a function of the
// arc parameter; roots are the arc/horocycle crossings
double horo_gap(const HArc& arc, double bx, double r, double t) {
    const HPoint p = arc.point_at(t);
    const double dx = p.x - bx;
    const double dy = p.y - r;
    return dx * dx + dy * dy - r * r;
}

HPoint circle_intersection_fallback(const HArc& arc, double bx, double r, bool base_at_a) {
    const double t_base = base_at_a ? arc.t_a : arc.t_b;
    const double t_far = base_at_a ? arc.t_b : arc.t_a;
    const int n = 512;
    double prev_t = t_base + (t_far - t_base) * 1e-9;
    double prev_f = horo_gap(arc, bx, r, prev_t);
    for (int i = 1; i <= n; ++i) {
        const double t = t_base + (t_far - t_base) * (static_cast<double>(i) / n);
        const double f = horo_gap(arc, bx, r, t);
        if (prev_f < 0.0 && f >= 0.0) {
            const double root = brent_root(
                [&](double u) { return horo_gap(arc, bx, r, u); }, prev_t, t);
            return arc.point_at(root);
        }
        prev_t = t;
        prev_f = f;
    }
    throw std::domain_error("arc_horocycle_intersection: tangential or degenerate configuration");
}

}  // namespace

HPoint arc_horocycle_intersection(const HArc& arc, const Horocycle& h) {
    const bool at_a = approx_equal(h.base, arc.a);
    const bool at_b = approx_equal(h.base, arc.b);
    if (!at_a && !at_b) {
        throw std::invalid_argument("arc_horocycle_intersection: horocycle not based at an endpoint");
    }
    if (!(h.size > 0.0)) throw std::invalid_argument("arc_horocycle_intersection: size must be positive");

    if (arc.is_line) {
        if (h.base.is_infinity()) {
            return HPoint(arc.x0 + arc.tilt * h.size, h.size);
        }
        const double y = 2.0 * h.size / (1.0 + arc.tilt * arc.tilt);
        return HPoint(arc.x0 + arc.tilt * y, y);
    }

    if (h.base.is_infinity()) {
        throw std::invalid_argument("arc_horocycle_intersection: horocycle not based at an endpoint");
    }
    const double bx = h.base.value();
    const double r = h.size;
    // both circles pass through (bx, 0); the second crossing is its mirror
    // image across the line of centers
    const double dx = bx - arc.cx;
    const double dy = r - arc.cy;
    const double len2 = dx * dx + dy * dy;
    const double scale = std::max({arc.R, r, std::sqrt(len2)});
    if (len2 <= 1e-24 * scale * scale) {
        return circle_intersection_fallback(arc, bx, r, at_a);
    }
    const double vx = bx - arc.cx;
    const double vy = -arc.cy;
    const double dot = vx * dx + vy * dy;
    const double px = arc.cx + 2.0 * dot * dx / len2 - vx;
    const double py = arc.cy + 2.0 * dot * dy / len2 - vy;
    const double sep = std::hypot(px - bx, py);
    if (sep <= 1e-12 * scale || !(py > 0.0)) {
        return circle_intersection_fallback(arc, bx, r, at_a);
    }
    return HPoint(px, py);
}

double truncated_length(const HArc& arc, const Horocycle& at_a, const Horocycle& at_b,
                        double quad_tol) {
    if (!approx_equal(at_a.base, arc.a) || !approx_equal(at_b.base, arc.b)) {
        throw std::invalid_argument("truncated_length: horocycles must be based at the arc endpoints");
    }
    const HPoint pa = arc_horocycle_intersection(arc, at_a);
    const HPoint pb = arc_horocycle_intersection(arc, at_b);
    const double ta = arc.param_of(pa);
    const double tb = arc.param_of(pb);
    if (!((tb - ta) * arc.param_dir() > 0.0)) {
        throw std::domain_error("truncated_length: horodisks overlap along the arc");
    }
    QuadratureOptions opts;
    opts.abs_tol = quad_tol;
    if (arc.is_line) {
        const double y_lo = std::exp(std::min(ta, tb));
        const double y_hi = std::exp(std::max(ta, tb));
        const double slope = std::sqrt(1.0 + arc.tilt * arc.tilt);
        return integrate([&](double y) { return slope / y; }, y_lo, y_hi, opts);
    }

    // Integrate each half of the arc in the angular distance t from its axis
    // crossing. There the height is the exact product 2R sin(t/2) cos(t/2 +- theta),
    // which stays relatively accurate where the integrand spikes; measuring t
    // against the far crossing would cancel catastrophically for large R.
    const double th = arc.theta;
    const bool above = arc.cy >= 0.0;
    const double cross_lo = above ? -th : th;
    const double cross_hi = above ? kPi + th : kPi - th;
    const auto height = [&](double t) {
        return 2.0 * arc.R * std::sin(0.5 * t) *
               (above ? std::cos(0.5 * t - th) : std::cos(0.5 * t + th));
    };
    // angular separation of an arc point from a crossing, from O(1) vectors
    const auto t_from = [&](const HPoint& p, double cross) {
        const double ux = std::cos(cross), uy = std::sin(cross);
        const double vx = (p.x - arc.cx) / arc.R, vy = (p.y - arc.cy) / arc.R;
        return std::atan2(std::abs(ux * vy - uy * vx), ux * vx + uy * vy);
    };
    const double apex = 0.5 * kPi;
    const double lo_phi = std::min(ta, tb);
    const double hi_phi = std::max(ta, tb);
    const HPoint lo_pt = lo_phi == ta ? pa : pb;
    const HPoint hi_pt = lo_phi == ta ? pb : pa;
    const auto piece = [&](double t0, double t1) {
        if (!(t1 > t0)) return 0.0;
        return integrate([&](double t) { return arc.R / height(t); }, t0, t1, opts);
    };
    double total = 0.0;
    if (lo_phi < apex) {
        const double t0 = t_from(lo_pt, cross_lo);
        const double t1 = hi_phi <= apex ? t_from(hi_pt, cross_lo) : apex - cross_lo;
        total += piece(t0, t1);
    }
    if (hi_phi > apex) {
        const double t0 = lo_phi >= apex ? t_from(lo_pt, cross_hi) : cross_hi - apex;
        const double t1 = t_from(hi_pt, cross_hi);
        total += piece(std::min(t0, t1), std::max(t0, t1));
    }
    return total;
}

double side_of(const HArc& arc, const HPoint& p) {
    if (arc.is_line) return p.x - (arc.x0 + arc.tilt * p.y);
    return std::hypot(p.x - arc.cx, p.y - arc.cy) - arc.R;
}

double signed_curvature(const HArc& arc, const HPoint& ref) {
    const double s = side_of(arc, ref);
    if (arc.is_line) {
        const double n_y = -(s >= 0.0 ? 1.0 : -1.0) * arc.tilt / std::sqrt(1.0 + arc.tilt * arc.tilt);
        return n_y;
    }
    // constant along the curve: +cy/R seen from inside the disk, -cy/R outside
    return (s >= 0.0 ? -1.0 : 1.0) * arc.cy / arc.R;
}

HArc apply(const Isometry& g, const HArc& arc) {
    Bulge bulge = arc.bulge;
    if (g.reflect()) bulge = bulge == Bulge::left ? Bulge::right : Bulge::left;
    return equidistant_arc(g(arc.a), g(arc.b), 0.5 * arc.curv, bulge);
}

Horocycle apply(const Isometry& g, const Horocycle& h) {
    const HPoint probe = h.base.is_infinity() ? HPoint(0.0, h.size)
                                              : HPoint(h.base.value(), 2.0 * h.size);
    const BoundaryPoint base = g(h.base);
    const HPoint p = g(probe);
    if (base.is_infinity()) return Horocycle{base, p.y};
    const double dx = p.x - base.value();
    return Horocycle{base, (dx * dx + p.y * p.y) / (2.0 * p.y)};
}

bool horocycles_disjoint(const Horocycle& h1, const Horocycle& h2) {
    if (h1.base.is_infinity() && h2.base.is_infinity()) return false;
    if (h1.base.is_infinity() || h2.base.is_infinity()) {
        const double r = h1.base.is_infinity() ? h2.size : h1.size;
        const double m = h1.base.is_infinity() ? h1.size : h2.size;
        return 2.0 * r < m;
    }
    const double gap = h1.base.value() - h2.base.value();
    return gap * gap > 4.0 * h1.size * h2.size;
}

}  // namespace scherk
