#pragma once

#include <vector>

#include "pcircle/quadrature.hpp"

namespace pcircle::trig {

using quad::QuadratureConfig;
using quad::QuadratureResult;

// Validated exponent of the p-circle |x|^p + |y|^p = 1. Numeric operations
// accept any finite real p >= 1.
class PParam {
public:
    explicit PParam(double p) : p_(p) {
        if (!(p >= 1.0) || !std::isfinite(p))
            throw DomainError("PParam: p must be a finite real >= 1");
    }
    double value() const { return p_; }

private:
    double p_;
};

struct PlanePoint {
    double x;
    double y;
};

struct CivpSample {
    double t;
    double x;
    double y;
};

// Inverse sine on the p-circle: the integral of (1 - t^p)^{-(p-1)/p} from 0
// to x. The version returning QuadratureResult carries the error estimate and
// evaluation count for callers that report provenance.
double arcsin_p(double x, PParam p, const QuadratureConfig& cfg = {});
QuadratureResult arcsin_p_quad(double x, PParam p, const QuadratureConfig& cfg = {});

// Inverse cosine: the same integrand from x to 1.
double arccos_p(double x, PParam p, const QuadratureConfig& cfg = {});

// sin_p / cos_p on the whole real line: reduce modulo the period, fold into
// the first quarter-period by symmetry, then invert the monotone arcsin_p by
// safeguarded Newton iteration.
double sin_p(double t, PParam p, const QuadratureConfig& cfg = {});
double cos_p(double t, PParam p, const QuadratureConfig& cfg = {});

// Quotients and reciprocals; a denominator below 1e-300 in magnitude raises
// PoleError naming the vanishing function.
double tan_p(double t, PParam p, const QuadratureConfig& cfg = {});
double sec_p(double t, PParam p, const QuadratureConfig& cfg = {});
double csc_p(double t, PParam p, const QuadratureConfig& cfg = {});
double cot_p(double t, PParam p, const QuadratureConfig& cfg = {});

// Fixed-step classical Runge-Kutta trajectory of the defining system
// x' = -y^{p-1}, y' = x^{p-1}, x(0) = 1, y(0) = 0. Valid on the first-quadrant
// arc, i.e. t_end at most a quarter period. Kept as an independent
// cross-check for the quadrature/root-finding path.
std::vector<CivpSample> civp_integrate(PParam p, double t_end, double step);

// Point on the p-circle whose sector from (1,0) has area a; the areal
// parametrization (cos_p(2a), sin_p(2a)). Requires 0 <= a <= quarter period/2.
PlanePoint areal_point(double a, PParam p, const QuadratureConfig& cfg = {});

// Area of the sector between (1,0) and the arc point with abscissa x:
// x/2 * (1-x^p)^{1/p} plus the area integral from x to 1.
double sector_area(double x, PParam p, const QuadratureConfig& cfg = {});

} // namespace pcircle::trig
