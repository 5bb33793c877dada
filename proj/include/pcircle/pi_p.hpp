#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pcircle/quadrature.hpp"

namespace pcircle::pi {

enum class Method {
    gamma,
    defining_integral,
    area_integral,
    series,
    monte_carlo,
};

const char* method_name(Method m);

// A computed value of pi_p with an error model. `error` is a quadrature error
// estimate, a last-term magnitude (series), or a Monte Carlo standard error.
// `count` is integrand evaluations, terms, or samples. `seed` is present
// exactly for Monte Carlo estimates.
struct Estimate {
    double value = 0.0;
    double error = 0.0;
    Method method = Method::gamma;
    std::uint64_t count = 0;
    std::optional<std::uint64_t> seed;
};

// Closed form 2*gamma(1/p)^2 / (p*gamma(2/p)), for p >= 1.
double gamma_form(double p);

// Twice the complete inverse-sine integral, by tanh-sinh quadrature.
Estimate defining_integral(double p, const quad::QuadratureConfig& cfg = {});

// Four times the quarter-disk area integral of (1-x^p)^{1/p}.
Estimate area_integral(double p, const quad::QuadratureConfig& cfg = {});

// Partial sum of 2 * sum_k ((p-1)/p)^{(k)} / (k! (kp+1)), integer p >= 2.
// The error field is the magnitude of the last included term: indicative
// only, since the expansion point sits on the boundary of convergence.
Estimate series_partial_sum(int p, std::uint64_t terms);

// Dartboard estimate: n uniform points in [-1,1]^2, 4 * hits / n. Splits work
// into per-worker streams with fixed quotas, so the result depends only on
// (seed, workers), never on scheduling.
Estimate monte_carlo(double p, std::uint64_t n, std::uint64_t seed, unsigned workers = 1);

struct GridPoint {
    double p;
    double pi_p;
};

struct MonotonicityScan {
    std::vector<GridPoint> points;
    bool strictly_increasing = true;
    double gap_to_limit = 0.0; // 4 - pi_p at the grid maximum
};

// Evaluates the closed form over an ascending grid and flags any adjacent
// non-increase.
MonotonicityScan monotonicity_scan(std::span<const double> grid);

} // namespace pcircle::pi
