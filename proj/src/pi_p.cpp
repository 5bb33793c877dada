#include "pcircle/pi_p.hpp"

#include <cmath>
#include <thread>

#include "pcircle/ptrig.hpp"
#include "pcircle/rng.hpp"
#include "pcircle/special_functions.hpp"

namespace pcircle::pi {

const char* method_name(Method m) {
    switch (m) {
        case Method::gamma: return "gamma";
        case Method::defining_integral: return "defining-integral";
        case Method::area_integral: return "area-integral";
        case Method::series: return "series";
        case Method::monte_carlo: return "monte-carlo";
    }
    return "unknown";
}

double gamma_form(double p) {
    if (!(p >= 1.0) || !std::isfinite(p))
        throw DomainError("pi gamma form: p must be a finite real >= 1");
    const double g1 = special::gamma(1.0 / p);
    const double g2 = special::gamma(2.0 / p);
    return 2.0 * g1 * g1 / (p * g2);
}

Estimate defining_integral(double p, const quad::QuadratureConfig& cfg) {
    trig::PParam pp(p);
    quad::QuadratureResult q = trig::arcsin_p_quad(1.0, pp, cfg);
    Estimate e;
    e.value = 2.0 * q.value;
    e.error = 2.0 * q.error_estimate;
    e.method = Method::defining_integral;
    e.count = static_cast<std::uint64_t>(q.evaluations);
    return e;
}

Estimate area_integral(double p, const quad::QuadratureConfig& cfg) {
    if (!(p >= 1.0) || !std::isfinite(p))
        throw DomainError("pi area integral: p must be a finite real >= 1");
    auto height = [p](double x, double dist_to_one) {
        const double one_minus_xp =
            (x < 0.9) ? 1.0 - std::pow(x, p) : -std::expm1(p * std::log1p(-dist_to_one));
        return std::pow(std::max(one_minus_xp, 0.0), 1.0 / p);
    };
    quad::QuadratureResult q =
        quad::tanh_sinh_or_throw(height, 0.0, 1.0, cfg, "pi area integral");
    Estimate e;
    e.value = 4.0 * q.value;
    e.error = 4.0 * q.error_estimate;
    e.method = Method::area_integral;
    e.count = static_cast<std::uint64_t>(q.evaluations);
    return e;
}

Estimate series_partial_sum(int p, std::uint64_t terms) {
    if (p < 2) throw ArgumentError("pi series: p must be an integer >= 2");
    if (terms < 1) throw ArgumentError("pi series: need at least one term");
    const double ratio_base = (p - 1.0) / p;
    double rising_over_factorial = 1.0; // ((p-1)/p)^{(k)} / k!
    double sum = 0.0;
    double last = 0.0;
    for (std::uint64_t k = 0; k < terms; ++k) {
        last = 2.0 * rising_over_factorial / (static_cast<double>(k) * p + 1.0);
        sum += last;
        rising_over_factorial *= (ratio_base + static_cast<double>(k)) / (static_cast<double>(k) + 1.0);
    }
    Estimate e;
    e.value = sum;
    e.error = std::abs(last);
    e.method = Method::series;
    e.count = terms;
    return e;
}

namespace {

std::uint64_t count_hits(double p, std::uint64_t samples, std::uint64_t seed, unsigned worker) {
    rng::SplitMix64 gen = rng::worker_stream(seed, worker);
    std::uint64_t hits = 0;
    for (std::uint64_t i = 0; i < samples; ++i) {
        const double x = gen.next_symmetric();
        const double y = gen.next_symmetric();
        if (std::pow(std::abs(x), p) + std::pow(std::abs(y), p) <= 1.0) ++hits;
    }
    return hits;
}

} // namespace

Estimate monte_carlo(double p, std::uint64_t n, std::uint64_t seed, unsigned workers) {
    if (!(p >= 1.0) || !std::isfinite(p))
        throw DomainError("pi monte carlo: p must be a finite real >= 1");
    if (n < 1) throw ArgumentError("pi monte carlo: need at least one sample");
    if (workers < 1) workers = 1;
    if (workers > n) workers = static_cast<unsigned>(n);

    // Fixed per-worker quotas; worker w draws its own stream, so the total is
    // a function of (seed, workers) alone.
    std::vector<std::uint64_t> hits(workers, 0);
    const std::uint64_t base = n / workers;
    const std::uint64_t extra = n % workers;
    if (workers == 1) {
        hits[0] = count_hits(p, n, seed, 0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            const std::uint64_t quota = base + (w < extra ? 1 : 0);
            pool.emplace_back([&hits, p, quota, seed, w] { hits[w] = count_hits(p, quota, seed, w); });
        }
        for (auto& th : pool) th.join();
    }
    std::uint64_t total = 0;
    for (std::uint64_t h : hits) total += h;

    const double q = static_cast<double>(total) / static_cast<double>(n);
    Estimate e;
    e.value = 4.0 * q;
    e.error = 4.0 * std::sqrt(q * (1.0 - q) / static_cast<double>(n));
    e.method = Method::monte_carlo;
    e.count = n;
    e.seed = seed;
    return e;
}

MonotonicityScan monotonicity_scan(std::span<const double> grid) {
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (!(grid[i] > grid[i - 1]))
            throw ArgumentError("monotonicity scan: grid must be sorted ascending");
    MonotonicityScan scan;
    scan.points.reserve(grid.size());
    for (double p : grid) scan.points.push_back({p, gamma_form(p)});
    for (std::size_t i = 1; i < scan.points.size(); ++i)
        if (!(scan.points[i].pi_p > scan.points[i - 1].pi_p)) scan.strictly_increasing = false;
    if (!scan.points.empty()) scan.gap_to_limit = 4.0 - scan.points.back().pi_p;
    return scan;
}

} // namespace pcircle::pi
