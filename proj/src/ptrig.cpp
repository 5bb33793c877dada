#include "pcircle/ptrig.hpp"

#include <cmath>

#include "pcircle/pi_p.hpp"

namespace pcircle::trig {

namespace {

// (1 - t^p)^{-(p-1)/p}, assuming t^p stays well away from 1.
double inverse_sine_integrand(double t, double p) {
    const double one_minus_tp = 1.0 - std::pow(t, p);
    return std::pow(one_minus_tp, -(p - 1.0) / p);
}

// The integrand is symmetric about t* = 2^{-1/p} under t -> (1-t^p)^{1/p}, so
// any integral over [0,1] folds into pieces on [0, t*] where 1 - t^p >= 1/2.
// That removes the endpoint singularity analytically; plain double-precision
// node spacing cannot resolve it once (p-1)/p gets close to 1.
double fold_point(double p) { return std::exp(-M_LN2 / p); }

QuadratureResult integrate_smooth(double lo, double hi, double p, const QuadratureConfig& cfg) {
    return quad::tanh_sinh_or_throw(
        [p](double t, double) { return inverse_sine_integrand(t, p); }, lo, hi, cfg, "arcsin_p");
}

// Complement abscissa (1 - x^p)^{1/p}, stable for x near 1.
double complement_abscissa(double x, double p) {
    if (x == 0.0) return 1.0;
    if (x == 1.0) return 0.0;
    const double one_minus_xp = -std::expm1(p * std::log(x));
    return std::pow(one_minus_xp, 1.0 / p);
}

} // namespace

QuadratureResult arcsin_p_quad(double x, PParam p, const QuadratureConfig& cfg) {
    if (!(x >= 0.0 && x <= 1.0) || !std::isfinite(x))
        throw DomainError("arcsin_p: argument must lie in [0, 1]");
    const double pv = p.value();
    QuadratureResult res;
    if (x == 0.0) {
        res.converged = true;
        return res;
    }
    const double tstar = fold_point(pv);
    if (x <= tstar) return integrate_smooth(0.0, x, pv, cfg);

    // arcsin_p(x) = 2*arcsin_p(t*) - arcsin_p(x') with x' = (1-x^p)^{1/p} <= t*.
    const double xprime = complement_abscissa(x, pv);
    QuadratureResult head = integrate_smooth(0.0, tstar, pv, cfg);
    res.value = 2.0 * head.value;
    res.error_estimate = 2.0 * head.error_estimate;
    res.evaluations = head.evaluations;
    res.levels = head.levels;
    res.converged = head.converged;
    if (xprime > 0.0) {
        QuadratureResult tail = integrate_smooth(0.0, xprime, pv, cfg);
        res.value -= tail.value;
        res.error_estimate += tail.error_estimate;
        res.evaluations += tail.evaluations;
        if (tail.levels > res.levels) res.levels = tail.levels;
        res.converged = res.converged && tail.converged;
    }
    return res;
}

double arcsin_p(double x, PParam p, const QuadratureConfig& cfg) {
    return arcsin_p_quad(x, p, cfg).value;
}

double arccos_p(double x, PParam p, const QuadratureConfig& cfg) {
    if (!(x >= 0.0 && x <= 1.0) || !std::isfinite(x))
        throw DomainError("arccos_p: argument must lie in [0, 1]");
    const double pv = p.value();
    if (x == 1.0) return 0.0;
    const double tstar = fold_point(pv);
    if (x >= tstar) {
        // Integral from x to 1 equals the integral from 0 to (1-x^p)^{1/p}.
        return integrate_smooth(0.0, complement_abscissa(x, pv), pv, cfg).value;
    }
    return integrate_smooth(x, tstar, pv, cfg).value +
           integrate_smooth(0.0, tstar, pv, cfg).value;
}

namespace {

double quarter_period(double p) { return 0.5 * pi::gamma_form(p); }

// Solves arcsin_p(x) = theta for x in [0,1]. Newton steps use the separable
// derivative dx/dtheta = (1-x^p)^{(p-1)/p}, safeguarded by bisection on the
// sign-tracking bracket.
double invert_arcsin(double theta, double p, double pihalf, const QuadratureConfig& cfg) {
    if (theta <= 0.0) return 0.0;
    if (theta >= pihalf) return 1.0; // the quarter-period peak maps to exactly 1
    PParam pp(p);
    double lo = 0.0, hi = 1.0;
    double x = std::min(theta / pihalf, 1.0 - 1e-12);
    for (int it = 0; it < 80; ++it) {
        const double f = arcsin_p(x, pp, cfg) - theta;
        if (f == 0.0) return x;
        if (f > 0.0) hi = x; else lo = x;
        if (std::abs(f) < 1e-14 * std::max(1.0, theta)) return x;
        const double one_minus_xp = (x < 0.9) ? 1.0 - std::pow(x, p)
                                              : -std::expm1(p * std::log(x));
        const double slope_inv = std::pow(std::max(one_minus_xp, 0.0), (p - 1.0) / p);
        double next = x - f * slope_inv;
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (std::abs(next - x) < 1e-13) return next;
        x = next;
    }
    return x;
}

struct Reduced {
    double theta; // in [0, quarter period]
    int sin_sign;
    int cos_sign;
};

// Fold any real t into the first quarter period using the symmetry and
// periodicity extension.
Reduced reduce_argument(double t, double pihalf) {
    const double period = 4.0 * pihalf;
    double tau = std::fmod(t, period);
    if (tau < 0.0) tau += period;
    Reduced r{0.0, 1, 1};
    if (tau > 2.0 * pihalf) {
        // sin_p(t) = -sin_p(2*pi_p - t), cos_p(t) = cos_p(2*pi_p - t)
        tau = period - tau;
        r.sin_sign = -1;
    }
    if (tau > pihalf) {
        // sin_p(t) = sin_p(pi_p - t), cos_p(t) = -cos_p(pi_p - t)
        tau = 2.0 * pihalf - tau;
        r.cos_sign = -1;
    }
    r.theta = tau;
    return r;
}

double cos_from_sin(double s, double p) {
    if (s <= 0.0) return 1.0;
    if (s >= 1.0) return 0.0;
    const double one_minus_sp = -std::expm1(p * std::log(s));
    return std::pow(std::max(one_minus_sp, 0.0), 1.0 / p);
}

// Cosine on the first quarter period. Where the sine abscissa stays at or
// below the fold point, (1 - sin^p)^{1/p} is well conditioned and is used
// directly. Near the peak it is not: sin saturates at double resolution and
// the p-th root amplifies that to ~(p*eps)^{1/p}. There the cosine abscissa
// is solved from its own integral, arccos_p(x) = theta, whose slope is
// bounded below by 1 on [0, fold point].
double cos_on_quarter(double theta, double p, double pihalf, const QuadratureConfig& cfg) {
    if (theta <= 0.0) return 1.0;
    if (theta >= pihalf) return 0.0;
    const double tstar = fold_point(p);
    const QuadratureResult head = integrate_smooth(0.0, tstar, p, cfg);
    if (theta <= head.value) {
        const double s = invert_arcsin(theta, p, pihalf, cfg);
        return cos_from_sin(s, p);
    }
    // Newton on F(x) = arccos_p(x) - theta, decreasing, bracketed in [0, t*].
    double lo = 0.0, hi = tstar;
    double x = tstar * (pihalf - theta) / (pihalf - head.value);
    for (int it = 0; it < 80; ++it) {
        const double f = integrate_smooth(x, tstar, p, cfg).value + head.value - theta;
        if (f == 0.0) return x;
        if (f > 0.0) lo = x; else hi = x;
        if (std::abs(f) < 1e-14 * std::max(1.0, theta)) return x;
        const double slope_inv = std::pow(1.0 - std::pow(x, p), (p - 1.0) / p);
        double next = x + f * slope_inv;
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (std::abs(next - x) < 1e-13) return next;
        x = next;
    }
    return x;
}

} // namespace

double sin_p(double t, PParam p, const QuadratureConfig& cfg) {
    const double pihalf = quarter_period(p.value());
    const Reduced r = reduce_argument(t, pihalf);
    return r.sin_sign * invert_arcsin(r.theta, p.value(), pihalf, cfg);
}

double cos_p(double t, PParam p, const QuadratureConfig& cfg) {
    const double pihalf = quarter_period(p.value());
    const Reduced r = reduce_argument(t, pihalf);
    return r.cos_sign * cos_on_quarter(r.theta, p.value(), pihalf, cfg);
}

namespace {

double checked_quotient(double num, double den, const char* vanishing, const char* op) {
    if (std::abs(den) < 1e-300)
        throw PoleError(vanishing, std::string(op) + ": pole, " + vanishing + " vanishes here");
    return num / den;
}

} // namespace

double tan_p(double t, PParam p, const QuadratureConfig& cfg) {
    return checked_quotient(sin_p(t, p, cfg), cos_p(t, p, cfg), "cos_p", "tan_p");
}

double sec_p(double t, PParam p, const QuadratureConfig& cfg) {
    return checked_quotient(1.0, cos_p(t, p, cfg), "cos_p", "sec_p");
}

double csc_p(double t, PParam p, const QuadratureConfig& cfg) {
    return checked_quotient(1.0, sin_p(t, p, cfg), "sin_p", "csc_p");
}

double cot_p(double t, PParam p, const QuadratureConfig& cfg) {
    return checked_quotient(cos_p(t, p, cfg), sin_p(t, p, cfg), "sin_p", "cot_p");
}

std::vector<CivpSample> civp_integrate(PParam p, double t_end, double step) {
    if (!(step > 0.0) || !std::isfinite(step))
        throw ArgumentError("civp_integrate: step must be positive");
    if (t_end < 0.0 || !std::isfinite(t_end))
        throw ArgumentError("civp_integrate: t_end must be non-negative");
    const double pihalf = quarter_period(p.value());
    if (t_end > pihalf * (1.0 + 1e-9))
        throw DomainError("civp_integrate: t_end beyond the first-quadrant arc");

    const double pm1 = p.value() - 1.0;
    // Clamp at zero: the trajectory grazes the axes at the arc endpoints and
    // fractional powers of small negatives would go complex.
    auto dx = [pm1](double /*x*/, double y) { return -std::pow(std::max(y, 0.0), pm1); };
    auto dy = [pm1](double x, double /*y*/) { return std::pow(std::max(x, 0.0), pm1); };

    std::vector<CivpSample> out;
    out.reserve(static_cast<std::size_t>(t_end / step) + 2);
    double t = 0.0, x = 1.0, y = 0.0;
    out.push_back({t, x, y});
    while (t < t_end) {
        const double h = std::min(step, t_end - t);
        if (h <= 0.0) break;
        const double k1x = dx(x, y), k1y = dy(x, y);
        const double k2x = dx(x + 0.5 * h * k1x, y + 0.5 * h * k1y);
        const double k2y = dy(x + 0.5 * h * k1x, y + 0.5 * h * k1y);
        const double k3x = dx(x + 0.5 * h * k2x, y + 0.5 * h * k2y);
        const double k3y = dy(x + 0.5 * h * k2x, y + 0.5 * h * k2y);
        const double k4x = dx(x + h * k3x, y + h * k3y);
        const double k4y = dy(x + h * k3x, y + h * k3y);
        x += h / 6.0 * (k1x + 2.0 * k2x + 2.0 * k3x + k4x);
        y += h / 6.0 * (k1y + 2.0 * k2y + 2.0 * k3y + k4y);
        t += h;
        out.push_back({t, x, y});
    }
    return out;
}

PlanePoint areal_point(double a, PParam p, const QuadratureConfig& cfg) {
    const double quarter_area = 0.5 * quarter_period(p.value());
    if (!(a >= 0.0 && a <= quarter_area * (1.0 + 1e-12)))
        throw DomainError("areal_point: sector area must lie in [0, pi_p/4]");
    return {cos_p(2.0 * a, p, cfg), sin_p(2.0 * a, p, cfg)};
}

double sector_area(double x, PParam p, const QuadratureConfig& cfg) {
    if (!(x >= 0.0 && x <= 1.0))
        throw DomainError("sector_area: abscissa must lie in [0, 1]");
    const double pv = p.value();
    const double triangle = 0.5 * x * complement_abscissa(x, pv);
    if (x == 1.0) return triangle;
    auto height = [pv](double t, double dist_to_one) {
        const double one_minus_tp =
            (t < 0.9) ? 1.0 - std::pow(t, pv) : -std::expm1(pv * std::log1p(-dist_to_one));
        return std::pow(std::max(one_minus_tp, 0.0), 1.0 / pv);
    };
    QuadratureResult cap = quad::tanh_sinh_or_throw(height, x, 1.0, cfg, "sector_area");
    return triangle + cap.value;
}

} // namespace pcircle::trig
