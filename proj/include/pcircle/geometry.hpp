#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pcircle/quadrature.hpp"
#include "pcircle/rational.hpp"

namespace pcircle::geom {

// Area enclosed by the p-circle: four times the quarter-area integral.
double area(double p, const quad::QuadratureConfig& cfg = {});

// Euclidean arc length of the full p-circle,
// 4 * integral of sqrt(1 + (1-x^p)^{2(1-p)/p} x^{2(p-1)}) over [0,1].
double perimeter(double p, const quad::QuadratureConfig& cfg = {});

// Curvature of the implicit curve x^p + y^p = 1 at an interior
// first-quadrant point; the point must satisfy the circle equation to 1e-6
// and stay off the axes.
double curvature_implicit(double x, double y, double p);

// Closed form (p-1) * 2^{1/p - 1/2} at the diagonal point x = y.
double curvature_diagonal(double p);

enum class Objective { area, perimeter, curvature };

const char* objective_name(Objective o);

// Root-finding result for the halfway-between-circle-and-square problems.
struct OptimalResult {
    double p_star = 0.0;
    double residual = 0.0;
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
    int iterations = 0;
    std::string note; // extra context (the curvature target is also met degenerately at p = 1)
};

// Solves area(p) = (pi+4)/2 on [2,6], perimeter(p) = pi+4 on [2,10], or
// diagonal curvature = 1/2 on [1,2], by Brent's method.
OptimalResult optimal_p(Objective objective, double tol = 1e-10);

struct RationalPoint {
    exact::BigRational x;
    exact::BigRational y;
};

// ((u^2-v^2)/(u^2+v^2), 2uv/(u^2+v^2)) in lowest terms; requires u > v >= 1.
// Satisfies x^2 + y^2 = 1 exactly.
RationalPoint pythagorean_point(unsigned long u, unsigned long v);

// k-th point of a fixed enumeration of the parametrization above over
// coprime (u, v) of opposite parity; a concrete generator for the infinite
// family on the 2-circle.
RationalPoint pythagorean_sample(std::size_t k);

enum class PointClass {
    dense_segment,          // p = 1: every rational (t, 1-t) and sign variants
    infinite_parametrized,  // p = 2: Pythagorean parametrization
    axis_points_only,       // p >= 3: exactly the four axis points
};

struct Classification {
    int p = 0;
    PointClass kind = PointClass::axis_points_only;
    std::string justification;
    std::vector<RationalPoint> samples;

    std::string to_json() const;
};

// Classifies the rational points on the p-circle for integer p >= 1.
Classification classify_rational_points(int p);

} // namespace pcircle::geom
