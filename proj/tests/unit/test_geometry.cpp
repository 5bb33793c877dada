#include <doctest.h>

#include <cmath>
#include <random>

#include "pcircle/geometry.hpp"
#include "pcircle/pi_p.hpp"
#include "pcircle/ptrig.hpp"
#include "pcircle/solvers.hpp"

using namespace pcircle::geom;
using pcircle::ArgumentError;
using pcircle::DomainError;

TEST_CASE("area") {
    CHECK(area(2.0) == doctest::Approx(M_PI).epsilon(1e-11));
    CHECK(area(1.0) == doctest::Approx(2.0).epsilon(1e-11));
    // holds the halfway-area target
    CHECK(area(3.162038) == doctest::Approx((M_PI + 4.0) / 2.0).epsilon(1e-4));
    for (double p : {1.0, 1.7, 2.0, 3.0, 4.0, 8.0})
        CHECK(std::abs(area(p) - pcircle::pi::gamma_form(p)) <= 1e-9 * area(p));
}

TEST_CASE("perimeter") {
    CHECK(perimeter(2.0) == doctest::Approx(2.0 * M_PI).epsilon(1e-9));
    CHECK(perimeter(1.0) == doctest::Approx(4.0 * std::sqrt(2.0)).epsilon(1e-13));
    // monotone toward the enclosing square's perimeter 8
    double prev = 0.0;
    for (double p : {2.0, 3.0, 4.0, 6.0, 10.0}) {
        const double len = perimeter(p);
        CHECK(len > prev);
        CHECK(len < 8.0);
        prev = len;
    }
    // root of perimeter(p) = pi + 4, pinned from a 40-digit quadrature oracle
    CHECK(perimeter(4.658458997820722) == doctest::Approx(M_PI + 4.0).epsilon(1e-9));
}

TEST_CASE("curvature at explicit points") {
    CHECK(curvature_implicit(M_SQRT1_2, M_SQRT1_2, 2.0) == doctest::Approx(1.0).epsilon(1e-12));
    for (double p : {1.2, 2.0, 3.0, 5.0}) {
        const double xy = std::pow(2.0, -1.0 / p);
        CHECK(std::abs(curvature_implicit(xy, xy, p) - curvature_diagonal(p)) < 1e-9);
    }
    CHECK_THROWS_AS(curvature_implicit(0.5, 0.5, 2.0), DomainError);  // off the circle
    CHECK_THROWS_AS(curvature_implicit(1.0, 0.0, 2.0), DomainError);  // axis point
}

TEST_CASE("curvature matches a finite-difference oracle on the p=3 arc") {
    // curvature of a parametric curve: |x'y'' - y'x''| / (x'^2 + y'^2)^{3/2},
    // with derivatives in the areal parameter by central differences
    pcircle::trig::PParam p3(3.0);
    const double h = 1e-3;
    std::mt19937_64 gen(11);
    std::uniform_real_distribution<double> adist(0.15, 0.6); // interior of [0, pi_3/4]
    for (int i = 0; i < 5; ++i) {
        const double a = adist(gen);
        auto at = [&](double s) { return pcircle::trig::areal_point(s, p3); };
        auto pm = at(a - h), p0 = at(a), pp = at(a + h);
        const double xd = (pp.x - pm.x) / (2 * h), yd = (pp.y - pm.y) / (2 * h);
        const double xdd = (pp.x - 2 * p0.x + pm.x) / (h * h);
        const double ydd = (pp.y - 2 * p0.y + pm.y) / (h * h);
        const double kappa_fd =
            std::abs(xd * ydd - yd * xdd) / std::pow(xd * xd + yd * yd, 1.5);
        CHECK(curvature_implicit(p0.x, p0.y, 3.0) == doctest::Approx(kappa_fd).epsilon(1e-4));
    }
}

TEST_CASE("diagonal curvature closed form") {
    CHECK(curvature_diagonal(2.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(curvature_diagonal(1.0) == 0.0);
    CHECK(curvature_diagonal(1.43643264) == doctest::Approx(0.5).epsilon(1e-6));
}

TEST_CASE("optimal p by area") {
    OptimalResult r = optimal_p(Objective::area);
    CHECK(r.p_star == doctest::Approx(3.162038).epsilon(1e-4));
    CHECK(std::abs(area(r.p_star) - (M_PI + 4.0) / 2.0) < 1e-8);
    CHECK(r.bracket_lo == 2.0);
    CHECK(r.bracket_hi == 6.0);
    CHECK(r.iterations > 0);
}

TEST_CASE("optimal p by perimeter solves the stated equation") {
    OptimalResult r = optimal_p(Objective::perimeter);
    // pinned against the independent 40-digit oracle root
    CHECK(r.p_star == doctest::Approx(4.658458997820722).epsilon(1e-7));
    CHECK(std::abs(perimeter(r.p_star) - (M_PI + 4.0)) < 1e-8);
}

TEST_CASE("optimal p by curvature") {
    OptimalResult r = optimal_p(Objective::curvature);
    CHECK(r.p_star == doctest::Approx(1.43643264).epsilon(1e-6));
    CHECK(std::abs(curvature_diagonal(r.p_star) - 0.5) < 1e-8);
    CHECK(!r.note.empty()); // the degenerate p = 1 convention is surfaced
    CHECK_THROWS_AS(optimal_p(Objective::curvature, 1e-12), ArgumentError);
}

TEST_CASE("brent rejects brackets without a sign change") {
    CHECK_THROWS_AS(pcircle::solvers::brent([](double x) { return x * x + 1.0; }, 0.0, 1.0,
                                            1e-12, 1e-12),
                    pcircle::SolverError);
    auto root = pcircle::solvers::brent([](double x) { return x * x - 2.0; }, 0.0, 2.0, 1e-14,
                                        1e-14);
    CHECK(root.root == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("pythagorean points") {
    RationalPoint p21 = pythagorean_point(2, 1);
    CHECK(p21.x == pcircle::exact::BigRational(3, 5));
    CHECK(p21.y == pcircle::exact::BigRational(4, 5));

    RationalPoint p32 = pythagorean_point(3, 2);
    CHECK(p32.x == pcircle::exact::BigRational(5, 13));
    CHECK(p32.y == pcircle::exact::BigRational(12, 13));

    // on the circle exactly, including non-primitive inputs
    for (unsigned long u = 2; u <= 7; ++u) {
        for (unsigned long v = 1; v < u; ++v) {
            RationalPoint pt = pythagorean_point(u, v);
            CHECK(pt.x * pt.x + pt.y * pt.y == pcircle::exact::BigRational(1));
        }
    }
    // coprime, opposite parity: already in lowest terms over u^2 + v^2
    RationalPoint p52 = pythagorean_point(5, 2);
    CHECK(p52.x.denominator() == 29);
    CHECK(p52.y.denominator() == 29);

    CHECK_THROWS_AS(pythagorean_point(1, 1), ArgumentError);
    CHECK_THROWS_AS(pythagorean_point(2, 0), ArgumentError);
}

TEST_CASE("rational point classification") {
    Classification c4 = classify_rational_points(4);
    CHECK(c4.kind == PointClass::axis_points_only);
    CHECK(c4.samples.size() == 4);
    CHECK(c4.justification == "Fermat's Last Theorem");

    Classification c2 = classify_rational_points(2);
    CHECK(c2.kind == PointClass::infinite_parametrized);
    bool has_345 = false;
    for (const auto& pt : c2.samples)
        if (pt.x == pcircle::exact::BigRational(3, 5) && pt.y == pcircle::exact::BigRational(4, 5))
            has_345 = true;
    CHECK(has_345);

    Classification c1 = classify_rational_points(1);
    CHECK(c1.kind == PointClass::dense_segment);
    bool has_onethird = false;
    for (const auto& pt : c1.samples)
        if (pt.x == pcircle::exact::BigRational(1, 3) && pt.y == pcircle::exact::BigRational(2, 3))
            has_onethird = true;
    CHECK(has_onethird);
    for (const auto& pt : c1.samples) CHECK(pt.x + pt.y == pcircle::exact::BigRational(1));

    CHECK(classify_rational_points(7).samples.size() == 4);
    CHECK_THROWS_AS(classify_rational_points(0), ArgumentError);

    CHECK(c4.to_json().find("\"count\":4") != std::string::npos);
    CHECK(c4.to_json().find("Fermat") != std::string::npos);
}
