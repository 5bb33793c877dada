#include "pcircle/power_series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <utility>

#include "pcircle/combinatorics.hpp"
#include "pcircle/errors.hpp"
#include "pcircle/special_functions.hpp"

namespace pcircle::series {

using exact::BigRational;

PowerSeries::PowerSeries(int order) {
    if (order < 0) throw ArgumentError("PowerSeries: order must be non-negative");
    coeffs_.assign(static_cast<std::size_t>(order) + 1, BigRational(0));
}

const BigRational& PowerSeries::coeff(int k) const {
    if (k < 0 || k > order()) throw ArgumentError("PowerSeries: coefficient index out of range");
    return coeffs_[static_cast<std::size_t>(k)];
}

void PowerSeries::set_coeff(int k, BigRational value) {
    if (k < 0 || k > order()) throw ArgumentError("PowerSeries: coefficient index out of range");
    coeffs_[static_cast<std::size_t>(k)] = std::move(value);
}

BigRational PowerSeries::ordinary_coeff(int k) const {
    return coeff(k) / BigRational(exact::factorial(static_cast<unsigned>(k)));
}

double PowerSeries::evaluate(double z) const {
    // Horner over ordinary coefficients; exact until the final conversion.
    double acc = 0.0;
    for (int k = order(); k >= 0; --k) acc = acc * z + ordinary_coeff(k).to_double();
    return acc;
}

std::string PowerSeries::to_json() const {
    std::string out = "{\"order\":" + std::to_string(order()) + ",\"coefficients\":[";
    for (int k = 0; k <= order(); ++k) {
        if (k) out += ",";
        out += "\"" + coeffs_[static_cast<std::size_t>(k)].to_string() + "\"";
    }
    out += "]}";
    return out;
}

namespace {

void check_series_p(int p) {
    if (p < 2) throw ArgumentError("series: p must be an integer >= 2");
}

} // namespace

PowerSeries arcsin_series(int p, int max_order) {
    check_series_p(p);
    if (max_order < 1 || max_order > 200)
        throw ArgumentError("arcsin_series: order must lie in [1, 200]");
    PowerSeries f(max_order);
    const BigRational ratio(p - 1, p);
    for (int k = 0; k * p + 1 <= max_order; ++k) {
        const int l = k * p + 1;
        const unsigned ku = static_cast<unsigned>(k);
        BigRational c = exact::rising_factorial(ratio, ku) *
                        BigRational(exact::factorial(ku * static_cast<unsigned>(p))) /
                        BigRational(exact::factorial(ku));
        f.set_coeff(l, std::move(c));
    }
    return f;
}

PowerSeries lagrange_invert(const PowerSeries& f) {
    if (!f.coeff(0).is_zero())
        throw ArgumentError("lagrange_invert: constant term must vanish (f_0 = 0)");
    if (f.order() < 1 || f.coeff(1).is_zero())
        throw ArgumentError("lagrange_invert: linear term must be nonzero (f_1 != 0)");

    const int n_max = f.order();
    const BigRational& f1 = f.coeff(1);

    // fhat_k = f_{k+1} / ((k+1) f_1), k = 1..N-1.
    std::vector<BigRational> fhat(static_cast<std::size_t>(n_max), BigRational(0));
    for (int k = 1; k <= n_max - 1; ++k)
        fhat[static_cast<std::size_t>(k)] = f.coeff(k + 1) / (BigRational(k + 1) * f1);

    PowerSeries g(n_max);
    g.set_coeff(1, BigRational(1) / f1);
    for (int n = 2; n <= n_max; ++n) {
        BigRational sum(0);
        for (int k = 1; k <= n - 1; ++k) {
            // B_{n-1,k}(fhat_1, ..., fhat_{n-k})
            std::span<const BigRational> args(fhat.data() + 1, static_cast<std::size_t>(n - k));
            BigRational bell = exact::bell_partial(static_cast<unsigned>(n - 1),
                                                   static_cast<unsigned>(k), args);
            if (bell.is_zero()) continue;
            BigRational term =
                BigRational(exact::rising_factorial(mpz_class(n), static_cast<unsigned>(k))) * bell;
            if (k % 2 == 1) term = -term;
            sum += term;
        }
        if (!sum.is_zero()) g.set_coeff(n, sum / exact::rational_pow(f1, static_cast<unsigned>(n)));
    }
    return g;
}

PowerSeries sin_series(int p, int max_order) {
    return lagrange_invert(arcsin_series(p, max_order));
}

namespace {

std::vector<BigRational> truncated_product(const std::vector<BigRational>& a,
                                           const std::vector<BigRational>& b, std::size_t size) {
    std::vector<BigRational> out(size, BigRational(0));
    for (std::size_t i = 0; i < a.size() && i < size; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size() && i + j < size; ++j) {
            if (b[j].is_zero()) continue;
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

} // namespace

PowerSeries compose(const PowerSeries& f, const PowerSeries& g) {
    if (!g.coeff(0).is_zero())
        throw ArgumentError("compose: inner series must have zero constant term");
    const int order = std::min(f.order(), g.order());
    const std::size_t size = static_cast<std::size_t>(order) + 1;

    std::vector<BigRational> inner(size);
    for (int k = 0; k <= order; ++k) inner[static_cast<std::size_t>(k)] = g.ordinary_coeff(k);

    // Horner: h = a_N; h = h*inner + a_i, truncating every product.
    std::vector<BigRational> acc(size, BigRational(0));
    acc[0] = f.ordinary_coeff(order);
    for (int i = order - 1; i >= 0; --i) {
        acc = truncated_product(acc, inner, size);
        acc[0] += f.ordinary_coeff(i);
    }

    PowerSeries h(order);
    for (int k = 0; k <= order; ++k)
        h.set_coeff(k, acc[static_cast<std::size_t>(k)] *
                           BigRational(exact::factorial(static_cast<unsigned>(k))));
    return h;
}

BigRational sinc_limit(int p) {
    check_series_p(p);
    return sin_series(p, 1).coeff(1);
}

BigRational arcsin_derivative_at_zero(int n, int l) {
    check_series_p(n);
    if (l < 1) throw ArgumentError("arcsin_derivative_at_zero: order must be positive");
    if (l % n != 1) return BigRational(0);
    const unsigned k = static_cast<unsigned>((l - 1) / n);
    return exact::rising_factorial(BigRational(n - 1, n), k) *
           BigRational(exact::factorial(k * static_cast<unsigned>(n))) /
           BigRational(exact::factorial(k));
}

DerivativeReport arcsin_derivative_report(int n, int l) {
    DerivativeReport rep;
    rep.n = n;
    rep.l = l;
    rep.exact_value = arcsin_derivative_at_zero(n, l);
    if (l % n != 1) {
        rep.gamma_form = 0.0;
        rep.gamma_form_shifted = 0.0;
        return rep;
    }
    const unsigned k = static_cast<unsigned>((l - 1) / n);
    const double inv_n = 1.0 / n;
    const double factorial_ratio =
        mpq_class(exact::factorial(k * static_cast<unsigned>(n)), exact::factorial(k)).get_d();
    rep.gamma_form =
        special::gamma(k + 1.0 - inv_n) / special::gamma(1.0 - inv_n) * factorial_ratio;
    rep.gamma_form_shifted =
        (k >= 1) ? special::gamma(k - inv_n) / special::gamma(1.0 - inv_n) * factorial_ratio
                 : std::numeric_limits<double>::quiet_NaN();
    return rep;
}

RigidityReport rigidity_report(int p, int depth) {
    check_series_p(p);
    if (depth < 1 || depth > 60)
        throw ArgumentError("rigidity_report: depth must lie in [1, 60]");

    const PowerSeries f = arcsin_series(p, depth);
    const PowerSeries g = lagrange_invert(f);

    RigidityReport rep;
    rep.p = p;
    rep.depth = depth;
    rep.consistent = true;
    for (int l = 0; l <= depth; ++l) {
        RigidityRow row{l, f.coeff(l), g.coeff(l), !f.coeff(l).is_zero(), !g.coeff(l).is_zero(),
                        l % p == 1};
        if (row.arcsin_nonzero != row.expected_nonzero || row.sin_nonzero != row.expected_nonzero)
            rep.consistent = false;
        rep.rows.push_back(std::move(row));
    }
    rep.summary = rep.consistent
                      ? "nonzero coefficients of both series up to order " +
                            std::to_string(depth) + " occur exactly at orders l = 1 (mod " +
                            std::to_string(p) +
                            "); consistent with the simultaneous-vanishing conjecture "
                            "(checked numerically, not proven)"
                      : "MISMATCH: some order violates the l = 1 (mod " + std::to_string(p) +
                            ") pattern; see rows";
    return rep;
}

std::string RigidityReport::to_json() const {
    std::string out = "{\"p\":" + std::to_string(p) + ",\"depth\":" + std::to_string(depth) +
                      ",\"consistent\":" + (consistent ? "true" : "false") + ",\"rows\":[";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const RigidityRow& r = rows[i];
        if (i) out += ",";
        out += "{\"order\":" + std::to_string(r.order) + ",\"arcsin\":\"" +
               r.arcsin_coeff.to_string() + "\",\"sin\":\"" + r.sin_coeff.to_string() +
               "\",\"arcsin_nonzero\":" + (r.arcsin_nonzero ? "true" : "false") +
               ",\"sin_nonzero\":" + (r.sin_nonzero ? "true" : "false") +
               ",\"expected_nonzero\":" + (r.expected_nonzero ? "true" : "false") + "}";
    }
    out += "],\"summary\":\"" + summary + "\"}";
    return out;
}

} // namespace pcircle::series
