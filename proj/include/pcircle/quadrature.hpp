#pragma once

#include <cmath>
#include <cstdint>

#include "pcircle/errors.hpp"

namespace pcircle::quad {

struct QuadratureConfig {
    double target_rel_error = 1e-12; // must lie in [1e-14, 1e-4]
    int max_levels = 10;             // must lie in [3, 12]

    void validate() const {
        if (!(target_rel_error >= 1e-14 && target_rel_error <= 1e-4))
            throw ArgumentError("QuadratureConfig: target relative error must be in [1e-14, 1e-4]");
        if (max_levels < 3 || max_levels > 12)
            throw ArgumentError("QuadratureConfig: max refinement levels must be in [3, 12]");
    }
};

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0; // |last refinement delta|
    std::int64_t evaluations = 0;
    int levels = 0;
    bool converged = false;
};

namespace detail {

// One tanh-sinh node on [0,1] at transform parameter u. omx = 1-x is carried
// separately; near the right endpoint it stays accurate long after 1-x would
// round to zero in x itself.
struct Node {
    double x;
    double omx;
    double weight;
};

inline Node node_at(double u) {
    const double s = 1.5707963267948966 * std::sinh(u); // (pi/2) sinh u
    const double e = std::exp(-2.0 * std::abs(s));
    const double small = e / (1.0 + e);
    const double large = 1.0 / (1.0 + e);
    Node n;
    if (s >= 0.0) {
        n.x = large;
        n.omx = small;
    } else {
        n.x = small;
        n.omx = large;
    }
    // dx/du = pi * cosh(u) * x * (1-x)
    n.weight = 3.141592653589793 * std::cosh(u) * small * large;
    return n;
}

constexpr double kUmax = 6.1;   // beyond this 1-x underflows in double
constexpr double kBaseH = 0.5;

} // namespace detail

// Tanh-sinh (double-exponential) quadrature of f over [a, b]. The integrand
// receives (t, b - t); the second argument is exact down to the underflow
// limit, which is what endpoint-singular integrands need. Refinement halves
// the step and reuses previous nodes until successive estimates agree to the
// configured relative error.
template <class F>
QuadratureResult tanh_sinh(F&& f, double a, double b, const QuadratureConfig& cfg) {
    cfg.validate();
    const double width = b - a;
    QuadratureResult res;
    if (width == 0.0) {
        res.converged = true;
        return res;
    }

    auto eval = [&](double u) -> double {
        const detail::Node n = detail::node_at(u);
        if (n.weight == 0.0 || n.omx == 0.0 || n.x == 0.0) return 0.0;
        ++res.evaluations;
        return n.weight * f(a + width * n.x, width * n.omx);
    };

    double h = detail::kBaseH;
    double sum = eval(0.0);
    for (int j = 1; j * h <= detail::kUmax; ++j) {
        sum += eval(j * h) + eval(-j * h);
    }
    double estimate = width * h * sum;

    double previous = estimate;
    for (int level = 1; level <= cfg.max_levels; ++level) {
        h *= 0.5;
        double new_sum = 0.0;
        for (int j = 1; (2 * j - 1) * h <= detail::kUmax; ++j) {
            const double u = (2 * j - 1) * h;
            new_sum += eval(u) + eval(-u);
        }
        previous = estimate;
        estimate = 0.5 * estimate + width * h * new_sum;
        res.levels = level;
        const double delta = std::abs(estimate - previous);
        res.error_estimate = delta;
        const double scale = std::abs(estimate);
        if (level >= 2 && delta <= cfg.target_rel_error * (scale > 0.0 ? scale : 1.0)) {
            res.converged = true;
            break;
        }
    }
    res.value = estimate;
    return res;
}

// Same, but throws AccuracyError if the refinement stalls.
template <class F>
QuadratureResult tanh_sinh_or_throw(F&& f, double a, double b, const QuadratureConfig& cfg,
                                    const char* what) {
    QuadratureResult r = tanh_sinh(static_cast<F&&>(f), a, b, cfg);
    if (!r.converged)
        throw AccuracyError(std::string(what) + ": quadrature did not converge after " +
                                std::to_string(cfg.max_levels) + " levels",
                            r.value, r.error_estimate);
    return r;
}

} // namespace pcircle::quad
