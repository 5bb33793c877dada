#include <doctest.h>

#include <cmath>

#include "pcircle/quadrature.hpp"

using namespace pcircle::quad;
using pcircle::AccuracyError;
using pcircle::ArgumentError;

TEST_CASE("smooth integrands") {
    QuadratureConfig cfg;
    auto sq = tanh_sinh([](double x, double) { return x * x; }, 0.0, 1.0, cfg);
    CHECK(sq.converged);
    CHECK(sq.value == doctest::Approx(1.0 / 3.0).epsilon(1e-13));

    auto c = tanh_sinh([](double x, double) { return std::cos(x); }, 0.0, 2.0, cfg);
    CHECK(c.value == doctest::Approx(std::sin(2.0)).epsilon(1e-13));

    auto empty = tanh_sinh([](double, double) { return 1.0; }, 0.5, 0.5, cfg);
    CHECK(empty.value == 0.0);
    CHECK(empty.converged);
}

TEST_CASE("endpoint singularities") {
    QuadratureConfig cfg;
    // right endpoint: 1/sqrt(1-x), uses the exact distance argument
    auto r = tanh_sinh([](double, double omx) { return 1.0 / std::sqrt(omx); }, 0.0, 1.0, cfg);
    CHECK(r.value == doctest::Approx(2.0).epsilon(1e-12));
    // left endpoint: -log x
    auto l = tanh_sinh([](double x, double) { return -std::log(x); }, 0.0, 1.0, cfg);
    CHECK(l.value == doctest::Approx(1.0).epsilon(1e-12));
    // both factors of the arcsine kernel; 1-x comes from the distance argument
    auto b = tanh_sinh([](double x, double omx) { return 1.0 / std::sqrt(omx * (1.0 + x)); },
                       0.0, 1.0, cfg);
    CHECK(b.value == doctest::Approx(M_PI / 2.0).epsilon(1e-12));
}

TEST_CASE("error estimate tracks the actual error") {
    QuadratureConfig cfg;
    auto q = tanh_sinh([](double x, double) { return std::exp(x); }, 0.0, 1.0, cfg);
    const double truth = std::exp(1.0) - 1.0;
    CHECK(std::abs(q.value - truth) <= std::max(q.error_estimate, 1e-13 * truth));
}

TEST_CASE("config validation") {
    QuadratureConfig bad_tol{1e-16, 10};
    CHECK_THROWS_AS(tanh_sinh([](double, double) { return 1.0; }, 0.0, 1.0, bad_tol),
                    ArgumentError);
    QuadratureConfig bad_levels{1e-10, 2};
    CHECK_THROWS_AS(tanh_sinh([](double, double) { return 1.0; }, 0.0, 1.0, bad_levels),
                    ArgumentError);
}

TEST_CASE("non-convergence carries the best estimate") {
    // A hard oscillator with a tight budget and a tight target.
    QuadratureConfig cfg{1e-14, 3};
    bool threw = false;
    try {
        tanh_sinh_or_throw([](double x, double) { return std::cos(500.0 * x * x); }, 0.0, 1.0,
                           cfg, "oscillator");
    } catch (const AccuracyError& e) {
        threw = true;
        CHECK(std::isfinite(e.best_value()));
        CHECK(e.best_error() > 0.0);
    }
    CHECK(threw);
}
