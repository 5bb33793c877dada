#include "pcircle/geometry.hpp"

#include <cmath>
#include <functional>

#include "pcircle/pi_p.hpp"
#include "pcircle/solvers.hpp"

namespace pcircle::geom {

double area(double p, const quad::QuadratureConfig& cfg) {
    return pi::area_integral(p, cfg).value;
}

double perimeter(double p, const quad::QuadratureConfig& cfg) {
    if (!(p >= 1.0) || !std::isfinite(p))
        throw DomainError("perimeter: p must be a finite real >= 1");
    if (p == 1.0) return 4.0 * std::sqrt(2.0); // integrand is the constant sqrt(2)

    auto arc_element = [p](double x, double dist_to_one) -> double {
        if (x <= 0.0) return 1.0;
        if (dist_to_one < 1e-305) return 0.0; // weight underflows first; skip
        const double one_minus_xp =
            (x < 0.9) ? 1.0 - std::pow(x, p) : -std::expm1(p * std::log1p(-dist_to_one));
        // (1-x^p)^{2(1-p)/p} * x^{2(p-1)}, in log space: the derivative term
        // blows up at x = 1 and overflows long before its weighted
        // contribution becomes negligible.
        const double log_term =
            (2.0 * (1.0 - p) / p) * std::log(one_minus_xp) + 2.0 * (p - 1.0) * std::log(x);
        if (log_term > 80.0) return std::exp(0.5 * log_term); // sqrt(1+A) ~ sqrt(A)
        return std::sqrt(1.0 + std::exp(log_term));
    };
    quad::QuadratureResult q = quad::tanh_sinh_or_throw(arc_element, 0.0, 1.0, cfg, "perimeter");
    return 4.0 * q.value;
}

double curvature_implicit(double x, double y, double p) {
    if (!(p >= 1.0) || !std::isfinite(p))
        throw DomainError("curvature: p must be a finite real >= 1");
    if (!(x > 0.0) || !(y > 0.0))
        throw DomainError("curvature: point must lie strictly inside the first quadrant "
                          "(the formula degenerates on the axes)");
    const double residual = std::pow(x, p) + std::pow(y, p) - 1.0;
    if (std::abs(residual) > 1e-6)
        throw DomainError("curvature: point is off the p-circle (|x|^p + |y|^p differs from 1 by " +
                          std::to_string(residual) + ")");
    const double xp = std::pow(x, p), yp = std::pow(y, p);
    const double x2p = xp * xp, y2p = yp * yp;
    const double numerator = xp * y2p + x2p * yp;
    const double denominator = std::pow(x2p * y * y + y2p * x * x, 1.5);
    return (p - 1.0) * numerator / denominator * (x * y);
}

double curvature_diagonal(double p) {
    if (!(p >= 1.0) || !std::isfinite(p))
        throw DomainError("curvature: p must be a finite real >= 1");
    return (p - 1.0) * std::pow(2.0, 1.0 / p - 0.5);
}

const char* objective_name(Objective o) {
    switch (o) {
        case Objective::area: return "area";
        case Objective::perimeter: return "perimeter";
        case Objective::curvature: return "curvature";
    }
    return "unknown";
}

OptimalResult optimal_p(Objective objective, double tol) {
    if (!(tol >= 1e-10)) throw ArgumentError("optimal_p: tolerance must be >= 1e-10");
    const double pi2 = 3.14159265358979323846;

    double lo = 0.0, hi = 0.0, target = 0.0;
    std::string note;
    std::function<double(double)> value;
    quad::QuadratureConfig cfg; // defaults: 1e-12, well below any tol accepted here
    switch (objective) {
        case Objective::area:
            lo = 2.0; hi = 6.0;
            target = (pi2 + 4.0) / 2.0;
            value = [cfg](double p) { return area(p, cfg); };
            break;
        case Objective::perimeter:
            lo = 2.0; hi = 10.0;
            target = pi2 + 4.0;
            value = [cfg](double p) { return perimeter(p, cfg); };
            break;
        case Objective::curvature:
            lo = 1.0; hi = 2.0;
            target = 0.5;
            value = [](double p) { return curvature_diagonal(p); };
            note = "under the flat-corner convention the target is also met degenerately "
                   "as p -> 1 and p -> infinity; this root is the interior solution";
            break;
    }

    auto objective_fn = [&](double p) { return value(p) - target; };
    solvers::RootResult root =
        solvers::brent(objective_fn, lo, hi, tol, tol * std::abs(target));

    OptimalResult res;
    res.p_star = root.root;
    res.residual = std::abs(root.residual);
    res.bracket_lo = lo;
    res.bracket_hi = hi;
    res.iterations = root.iterations;
    res.note = std::move(note);
    return res;
}

RationalPoint pythagorean_point(unsigned long u, unsigned long v) {
    if (!(u > v) || v < 1)
        throw ArgumentError("pythagorean_point: requires u > v >= 1");
    const mpz_class uz(u), vz(v);
    const mpz_class hyp = uz * uz + vz * vz;
    return {exact::BigRational(uz * uz - vz * vz, hyp), exact::BigRational(2 * uz * vz, hyp)};
}

RationalPoint pythagorean_sample(std::size_t k) {
    // Walk u = 2, 3, ... and v < u with gcd(u,v) = 1 and opposite parity;
    // each pair hits a distinct primitive point.
    std::size_t seen = 0;
    for (unsigned long u = 2;; ++u) {
        for (unsigned long v = 1; v < u; ++v) {
            if ((u + v) % 2 == 0) continue;
            if (mpz_class(gcd(mpz_class(u), mpz_class(v))) != 1) continue;
            if (seen++ == k) return pythagorean_point(u, v);
        }
    }
}

Classification classify_rational_points(int p) {
    if (p < 1) throw ArgumentError("rational points: p must be an integer >= 1");
    Classification c;
    c.p = p;
    if (p == 1) {
        c.kind = PointClass::dense_segment;
        c.justification = "every rational t in [0,1] gives (t, 1-t) on the segment "
                          "|x|+|y| = 1, plus sign variants; the rational points are dense";
        c.samples = {{exact::BigRational(1, 3), exact::BigRational(2, 3)},
                     {exact::BigRational(1, 2), exact::BigRational(1, 2)},
                     {exact::BigRational(3, 7), exact::BigRational(4, 7)}};
    } else if (p == 2) {
        c.kind = PointClass::infinite_parametrized;
        c.justification = "infinite family ((u^2-v^2)/(u^2+v^2), 2uv/(u^2+v^2)) from the "
                          "Pythagorean parametrization";
        c.samples = {pythagorean_sample(0), pythagorean_sample(1), pythagorean_sample(2)};
    } else {
        c.kind = PointClass::axis_points_only;
        c.justification = "Fermat's Last Theorem";
        c.samples = {{exact::BigRational(1), exact::BigRational(0)},
                     {exact::BigRational(-1), exact::BigRational(0)},
                     {exact::BigRational(0), exact::BigRational(1)},
                     {exact::BigRational(0), exact::BigRational(-1)}};
    }
    return c;
}

namespace {

const char* point_class_name(PointClass k) {
    switch (k) {
        case PointClass::dense_segment: return "infinite-dense";
        case PointClass::infinite_parametrized: return "infinite-parametrized";
        case PointClass::axis_points_only: return "four-axis-points";
    }
    return "unknown";
}

} // namespace

std::string Classification::to_json() const {
    std::string out = "{\"p\":" + std::to_string(p) + ",\"kind\":\"" + point_class_name(kind) +
                      "\",\"justification\":\"" + justification + "\",\"points\":[";
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (i) out += ",";
        out += "[\"" + samples[i].x.to_string() + "\",\"" + samples[i].y.to_string() + "\"]";
    }
    out += "]";
    if (kind == PointClass::axis_points_only) out += ",\"count\":4";
    out += "}";
    return out;
}

} // namespace pcircle::geom
