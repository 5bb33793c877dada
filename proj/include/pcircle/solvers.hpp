#pragma once

#include <cmath>
#include <string>
#include <utility>

#include "pcircle/errors.hpp"

namespace pcircle::solvers {

struct RootResult {
    double root = 0.0;
    double residual = 0.0; // f(root)
    int iterations = 0;
};

// Brent's method on a bracketed sign change. Stops when the bracket shrinks
// below xtol or |f| drops below ftol. Throws SolverError if [lo, hi] does not
// bracket a root.
template <class F>
RootResult brent(F&& f, double lo, double hi, double xtol, double ftol, int max_iter = 200) {
    double a = lo, b = hi;
    double fa = f(a), fb = f(b);
    RootResult result;
    result.iterations = 2;
    if (fa == 0.0) return {a, 0.0, result.iterations};
    if (fb == 0.0) return {b, 0.0, result.iterations};
    if ((fa > 0.0) == (fb > 0.0))
        throw SolverError("brent: endpoints do not bracket a sign change on [" +
                          std::to_string(lo) + ", " + std::to_string(hi) + "]");

    double c = a, fc = fa;
    double d = b - a, e = d;
    for (int it = 0; it < max_iter; ++it) {
        ++result.iterations;
        if ((fb > 0.0) == (fc > 0.0)) {
            c = a;
            fc = fa;
            d = e = b - a;
        }
        if (std::abs(fc) < std::abs(fb)) {
            a = b; b = c; c = a;
            fa = fb; fb = fc; fc = fa;
        }
        const double tol1 = 2.0 * 2.220446049250313e-16 * std::abs(b) + 0.5 * xtol;
        const double xm = 0.5 * (c - b);
        if (std::abs(xm) <= tol1 || fb == 0.0 || std::abs(fb) <= ftol) break;

        if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
            // inverse quadratic / secant step
            const double s = fb / fa;
            double p, q;
            if (a == c) {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                const double qq = fa / fc;
                const double r = fb / fc;
                p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
                q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
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
        b += (std::abs(d) > tol1) ? d : (xm > 0.0 ? tol1 : -tol1);
        fb = f(b);
    }
    result.root = b;
    result.residual = fb;
    return result;
}

} // namespace pcircle::solvers
