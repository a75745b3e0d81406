#pragma once

#include <functional>

// Small numerical kernels shared across the library: adaptive Simpson
// quadrature with an absolute tolerance, Brent's method for bracketed
// root-finding, and a golden-section minimizer with a coarse pre-scan.

namespace scherk {

struct QuadratureOptions {
    double abs_tol = 1e-11;
    int max_depth = 60;
    int initial_panels = 8;
    long max_evals = 4'000'000;  // guards against runaway refinement
};

// Integrates f on [a, b] (a <= b) by adaptive interval bisection.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureOptions& opts = {});

struct RootOptions {
    double x_tol = 1e-13;   // absolute, scaled by bracket magnitude internally
    int max_iter = 200;
};

// Brent root finder. Requires f(lo) and f(hi) of opposite sign.
double brent_root(const std::function<double(double)>& f, double lo, double hi,
                  const RootOptions& opts = {});

// Scans [lo, hi] at `samples` points, then refines the best bracket by
// golden-section search. Returns the argmin.
double scan_golden_min(const std::function<double(double)>& f, double lo, double hi,
                       int samples, double x_tol);

}  // namespace scherk
