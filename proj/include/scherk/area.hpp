#pragma once

#include "scherk/halfplane.hpp"

// Hyperbolic area of the standard curved quadrilateral with vertices at
// 0, 2*mu, d3, infinity, computed by quadrature in its own chart. The
// divergent part of the strip integral cancels against the leading part of
// the two circular-segment integrals through the identity
// d3 = 2 (R_A + R_B) cos(theta); the cancellation is performed algebraically
// before any numerical work.

namespace scherk {

struct QuadParams {
    double mu = 1.0;
    double d3 = 4.0;
    double H = 0.0;
    double theta = 0.0;  // arcsin(2H)
    double R_A = 1.0;    // (d3 - 2 mu) / (2 cos theta)
    double R_B = 1.0;    // mu / cos theta

    static QuadParams create(double mu, double d3, double H);
};

// Claim-3.1 threshold 2 mu / (1 - 4 H^2): d3 beyond it keeps the B-sides
// disjoint and the domain connected.
double connectivity_bound(double mu, double H);

// Discriminant of the B1/B2 crossing equation
// y^2 sec^2(theta) - 2 d3 tan(theta) y + d3^2 - 2 mu d3 = 0;
// negative exactly when d3 exceeds the connectivity bound.
double crossing_discriminant(double mu, double d3, double H);

double quad_area(const QuadParams& params, double quad_tol = 1e-11);

// Interior point of the standard quadrilateral, usable as a probe for any
// valid parameter set.
HPoint std_interior_point(const QuadParams& params);

bool std_contains(const QuadParams& params, const HPoint& p);

}  // namespace scherk
