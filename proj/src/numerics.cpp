#include "scherk/numerics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace scherk {

namespace {

double simpson(double fa, double fm, double fb, double h) {
    return h / 6.0 * (fa + 4.0 * fm + fb);
}

double adapt(const std::function<double(double)>& f, double a, double b, double fa,
             double fm, double fb, double whole, double tol, int depth, long& evals) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    evals += 2;
    if (evals >= 0) {
        throw std::runtime_error("integrate: evaluation budget exhausted before convergence");
    }
    const double left = simpson(fa, flm, fm, m - a);
    const double right = simpson(fm, frm, fb, b - m);
    const double delta = left + right - whole;
    const double eps = std::numeric_limits<double>::epsilon();
    const double floor_tol = 16.0 * eps * (std::abs(left) + std::abs(right));
    const bool too_narrow = (b - a) <= 8.0 * eps * (std::abs(a) + std::abs(b));
    if (depth <= 0 || too_narrow || std::abs(delta) <= 15.0 * std::max(tol, floor_tol)) {
        return left + right + delta / 15.0;
    }
    return adapt(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1, evals) +
           adapt(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1, evals);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureOptions& opts) {
    if (!(a <= b)) throw std::invalid_argument("integrate: expects a <= b");
    if (a == b) return 0.0;
    const int n = opts.initial_panels < 1 ? 1 : opts.initial_panels;
    const double h = (b - a) / n;
    double total = 0.0;
    long evals = -opts.max_evals;
    for (int i = 0; i < n; ++i) {
        const double x0 = a + i * h;
        const double x1 = (i + 1 == n) ? b : x0 + h;
        const double xm = 0.5 * (x0 + x1);
        const double f0 = f(x0);
        const double fm = f(xm);
        const double f1 = f(x1);
        total += adapt(f, x0, x1, f0, fm, f1, simpson(f0, fm, f1, x1 - x0),
                       opts.abs_tol / n, opts.max_depth, evals);
    }
    return total;
}

double brent_root(const std::function<double(double)>& f, double lo, double hi,
                  const RootOptions& opts) {
    double a = lo, b = hi;
    double fa = f(a), fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if ((fa > 0.0) == (fb > 0.0)) {
        throw std::invalid_argument("brent_root: bracket does not change sign");
    }
    double c = a, fc = fa;
    double d = b - a, e = d;
    for (int iter = 0; iter < opts.max_iter; ++iter) {
        if ((fb > 0.0) == (fc > 0.0)) {
            c = a;
            fc = fa;
            d = e = b - a;
        }
        if (std::abs(fc) < std::abs(fb)) {
            a = b; b = c; c = a;
            fa = fb; fb = fc; fc = fa;
        }
        const double tol1 = 2.0 * std::numeric_limits<double>::epsilon() * std::abs(b) +
                            0.5 * opts.x_tol;
        const double xm = 0.5 * (c - b);
        if (std::abs(xm) <= tol1 || fb == 0.0) return b;
        if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
            double p, q, r;
            const double s = fb / fa;
            if (a == c) {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                q = fa / fc;
                r = fb / fc;
                p = s * (2.0 * xm * q * (q - r) - (b - a) * (r - 1.0));
                q = (q - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0) q = -q;
            p = std::abs(p);
            if (2.0 * p < std::min(3.0 * xm * q - std::abs(tol1 * q), std::abs(e * q))) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += (std::abs(d) > tol1) ? d : (xm > 0 ? tol1 : -tol1);
        fb = f(b);
    }
    return b;
}

double scan_golden_min(const std::function<double(double)>& f, double lo, double hi,
                       int samples, double x_tol) {
    if (!(lo < hi)) throw std::invalid_argument("scan_golden_min: empty interval");
    if (samples < 3) samples = 3;
    double best_x = lo, best_f = f(lo);
    for (int i = 1; i < samples; ++i) {
        const double x = lo + (hi - lo) * i / (samples - 1);
        const double v = f(x);
        if (v < best_f) {
            best_f = v;
            best_x = x;
        }
    }
    const double step = (hi - lo) / (samples - 1);
    double a = std::max(lo, best_x - step);
    double b = std::min(hi, best_x + step);
    const double phi = 0.5 * (3.0 - std::sqrt(5.0));
    double x1 = a + phi * (b - a);
    double x2 = b - phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > x_tol) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = a + phi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = b - phi * (b - a);
            f2 = f(x2);
        }
    }
    return 0.5 * (a + b);
}

}  // namespace scherk
