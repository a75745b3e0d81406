#pragma once

#include "scherk/halfplane.hpp"

// Equidistant arcs of geodesic curvature 2H in [0, 1) joining two ideal
// points, horocycles, their intersections, and horocycle-truncated lengths.

namespace scherk {

enum class Bulge { left, right };  // side of the oriented geodesic a -> b the arc deviates to
enum class SideKind { A, B };

struct HArc {
    BoundaryPoint a, b;
    double curv = 0.0;  // 2H, in [0, 1)
    Bulge bulge = Bulge::left;
    double theta = 0.0;  // arcsin(curv)

    // Euclidean representation. Lines (one endpoint at infinity):
    // x = x0 + tilt * y, parametrized by u = ln y. Circles: center (cx, cy),
    // radius R, parametrized by angle; the sub-arc above the axis is
    // [phi_lo, phi_hi] which always contains pi/2.
    bool is_line = false;
    double x0 = 0.0, tilt = 0.0;
    double cx = 0.0, cy = 0.0, R = 0.0;
    double phi_lo = 0.0, phi_hi = 0.0;
    // param of the a-end and b-end (circles only; for lines the ends sit at
    // u = -inf / +inf depending on which endpoint is infinite)
    double t_a = 0.0, t_b = 0.0;

    HPoint point_at(double t) const;
    double param_of(const HPoint& p) const;
    // +1 if the param increases from the a-end toward the b-end
    double param_dir() const;
    // scaled distance from p to the full supporting curve
    double residual(const HPoint& p) const;
};

HArc equidistant_arc(const BoundaryPoint& a, const BoundaryPoint& b, double H, Bulge bulge);

struct Horocycle {
    BoundaryPoint base;
    double size = 0.0;  // Euclidean radius r for finite base, height M for infinity
};

// Intersection of the open arc with a horocycle based at one of its
// endpoints; the point distinct from the shared ideal base.
HPoint arc_horocycle_intersection(const HArc& arc, const Horocycle& h);

// Length of the compact sub-arc outside the two horodisks.
double truncated_length(const HArc& arc, const Horocycle& at_a, const Horocycle& at_b,
                        double quad_tol = 1e-11);

// Geodesic curvature of the arc measured with the normal pointing toward the
// side of `ref`: +2H when the arc deviates away from that side, -2H toward it.
double signed_curvature(const HArc& arc, const HPoint& ref);

// Signed side of the supporting curve: positive outside a circle / on the
// +x side of a line, negative on the other side.
double side_of(const HArc& arc, const HPoint& p);

HArc apply(const Isometry& g, const HArc& arc);
Horocycle apply(const Isometry& g, const Horocycle& h);

bool horocycles_disjoint(const Horocycle& h1, const Horocycle& h2);

}  // namespace scherk
