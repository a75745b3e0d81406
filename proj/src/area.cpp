#include "scherk/area.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "scherk/numerics.hpp"

namespace scherk {

double connectivity_bound(double mu, double H) {
    if (!(mu > 0.0)) throw std::invalid_argument("connectivity_bound: mu must be positive");
    if (!(H >= 0.0) || !(H < 0.5)) throw std::invalid_argument("connectivity_bound: requires 0 <= H < 1/2");
    return 2.0 * mu / (1.0 - 4.0 * H * H);
}

double crossing_discriminant(double mu, double d3, double H) {
    const double theta = std::asin(2.0 * H);
    const double sec2 = 1.0 / (1.0 - 4.0 * H * H);
    const double tan_t = std::tan(theta);
    const double b = -2.0 * d3 * tan_t;
    return b * b - 4.0 * sec2 * (d3 * d3 - 2.0 * mu * d3);
}

QuadParams QuadParams::create(double mu, double d3, double H) {
    const double bound = connectivity_bound(mu, H);
    if (!(d3 > bound)) {
        throw std::invalid_argument("QuadParams: d3 must exceed the connectivity bound 2 mu / (1 - 4 H^2)");
    }
    QuadParams p;
    p.mu = mu;
    p.d3 = d3;
    p.H = H;
    p.theta = std::asin(2.0 * H);
    const double c = std::cos(p.theta);
    p.R_A = (d3 - 2.0 * mu) / (2.0 * c);
    p.R_B = mu / c;
    return p;
}

namespace {

double chord_half_width(double R, double center_y, double y) {
    const double off = y - center_y;
    return std::sqrt(std::max(0.0, R * R - off * off));
}

}  // namespace

double quad_area(const QuadParams& p, double quad_tol) {
    const double s = std::sin(p.theta);
    const double c = std::cos(p.theta);
    const double RA = p.R_A;
    const double RB = p.R_B;
    const double top_a = RA * (1.0 - s);  // highest point of the A2 disk
    const double top_b = RB * (1.0 + s);  // highest point of the B1 disk
    const double y_min = std::min(top_a, top_b);
    const double y_max = std::max(top_a, top_b);

    // w_A(y), w_B(y): half-widths of the two circular segments
    const auto w_a = [&](double y) { return chord_half_width(RA, -RA * s, y); };
    const auto w_b = [&](double y) { return chord_half_width(RB, RB * s, y); };

    // On [0, y_min] both segments are alive and the integrand
    // (d3 - 2 w_A - 2 w_B)/y^2 is evaluated in the rationalized form that is
    // regular at y = 0.
    const auto regular = [&](double y) {
        const double wa = w_a(y);
        const double wb = w_b(y);
        const double mixed =
            2.0 * s * (2.0 * RA * RB * s * (RA + RB) - y * (RA * RA - RB * RB)) /
            (RA * wb + RB * wa);
        return 2.0 * ((RA + RB) * c + wa + wb + mixed) /
               ((RA * c + wa) * (RB * c + wb));
    };

    // rationalized single-disk differences: 2 R c - 2 w without cancellation
    const auto bracket_a = [&](double y) {
        return 2.0 * y * (y + 2.0 * RA * s) / (RA * c + w_a(y));
    };
    const auto bracket_b = [&](double y) {
        return 2.0 * y * (y - 2.0 * RB * s) / (RB * c + w_b(y));
    };

    QuadratureOptions opts;
    opts.abs_tol = quad_tol;
    opts.initial_panels = 16;
    // the fully combined form degenerates where both chords vanish at once,
    // and the per-disk brackets lose accuracy only as y -> 0; split the range
    const auto both = [&](double y) { return (bracket_a(y) + bracket_b(y)) / (y * y); };
    double area = integrate(regular, 0.0, 0.5 * y_min, opts) +
                  integrate(both, 0.5 * y_min, y_min, opts);

    if (y_max > y_min) {
        const bool a_is_live = top_a > top_b;
        const auto middle = [&](double y) {
            const double dead = a_is_live ? 2.0 * RB * c : 2.0 * RA * c;
            const double live = a_is_live ? bracket_a(y) : bracket_b(y);
            return (dead + live) / (y * y);
        };
        area += integrate(middle, y_min, y_max, opts);
    }
    return area + p.d3 / y_max;
}

HPoint std_interior_point(const QuadParams& p) {
    const double s = std::sin(p.theta);
    const double c = std::cos(p.theta);
    const double top_b = p.mu * (1.0 + s) / c;
    double y;
    if (p.theta > 0.0) {
        const double limit = (p.d3 - p.mu) / std::tan(p.theta);
        y = std::sqrt(top_b * limit);
    } else {
        y = 2.0 * p.mu;
    }
    const HPoint probe(p.mu, y);
    if (!std_contains(p, probe)) {
        throw std::logic_error("std_interior_point: probe fell outside the quadrilateral");
    }
    return probe;
}

bool std_contains(const QuadParams& p, const HPoint& q) {
    const double tan_t = std::tan(p.theta);
    if (!(q.x > -q.y * tan_t)) return false;
    if (!(q.x < p.d3 - q.y * tan_t)) return false;
    const double s = std::sin(p.theta);
    const double bx = q.x - p.mu;
    const double by = q.y - p.R_B * s;
    if (bx * bx + by * by < p.R_B * p.R_B) return false;
    const double ax = q.x - 0.5 * (p.d3 + 2.0 * p.mu);
    const double ay = q.y + p.R_A * s;
    if (ax * ax + ay * ay < p.R_A * p.R_A) return false;
    return true;
}

}  // namespace scherk
