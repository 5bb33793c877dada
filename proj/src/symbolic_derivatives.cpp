#include "pcircle/symbolic_derivatives.hpp"

#include <algorithm>
#include <map>

#include "pcircle/errors.hpp"

namespace pcircle::series {

std::string PExponent::to_string() const {
    if (b == 0) return std::to_string(a);
    std::string s;
    if (b == -1) s = "-p";
    else if (b == 1) s = "p";
    else s = std::to_string(b) + "p";
    if (a > 0) s += "+" + std::to_string(a);
    else if (a < 0) s += std::to_string(a);
    return s;
}

TrigExpr::TrigExpr(std::vector<TrigMonomial> terms) : terms_(std::move(terms)) { normalize(); }

TrigExpr TrigExpr::sin_seed() {
    return TrigExpr({{exact::IntPolynomial::constant(1), {0, 0}, {1, 0}}});
}

void TrigExpr::normalize() {
    std::erase_if(terms_, [](const TrigMonomial& t) { return t.coeff.is_zero(); });
    std::sort(terms_.begin(), terms_.end(), [](const TrigMonomial& x, const TrigMonomial& y) {
        if (x.cos_exp != y.cos_exp) return x.cos_exp < y.cos_exp;
        return x.sin_exp < y.sin_exp;
    });
    std::vector<TrigMonomial> merged;
    for (auto& t : terms_) {
        if (!merged.empty() && merged.back().cos_exp == t.cos_exp &&
            merged.back().sin_exp == t.sin_exp) {
            merged.back().coeff += t.coeff;
        } else {
            merged.push_back(std::move(t));
        }
    }
    std::erase_if(merged, [](const TrigMonomial& t) { return t.coeff.is_zero(); });
    terms_ = std::move(merged);
}

TrigExpr TrigExpr::derivative() const {
    std::vector<TrigMonomial> out;
    out.reserve(terms_.size() * 2);
    for (const auto& t : terms_) {
        // m and n enter the coefficient as degree-one polynomials in p.
        const exact::IntPolynomial m = exact::IntPolynomial::affine(t.cos_exp.a, t.cos_exp.b);
        const exact::IntPolynomial n = exact::IntPolynomial::affine(t.sin_exp.a, t.sin_exp.b);
        if (!m.is_zero()) {
            out.push_back({-(t.coeff * m),
                           {t.cos_exp.a - 1, t.cos_exp.b},
                           {t.sin_exp.a - 1, t.sin_exp.b + 1}});
        }
        if (!n.is_zero()) {
            out.push_back({t.coeff * n,
                           {t.cos_exp.a - 1, t.cos_exp.b + 1},
                           {t.sin_exp.a - 1, t.sin_exp.b}});
        }
    }
    return TrigExpr(std::move(out));
}

exact::BigRational TrigExpr::evaluate_at_zero(long p) const {
    // Merge at the concrete p first: a symbolic term whose coefficient
    // polynomial vanishes there (or cancels against a sibling) contributes
    // nothing even if its resolved exponents look problematic.
    exact::BigRational total(0);
    for (const auto& t : substitute(p)) {
        if (t.sin_exp > 0) continue; // sin_p(0) = 0 kills the term
        if (t.sin_exp < 0)
            throw DomainError("TrigExpr: negative sin exponent at x = 0 (pole) for p = " +
                              std::to_string(p));
        // cos_p(0) = 1 regardless of its exponent.
        total += exact::BigRational(t.coeff);
    }
    return total;
}

std::vector<TrigExpr::ResolvedTerm> TrigExpr::substitute(long p) const {
    std::map<std::pair<long, long>, mpz_class> acc;
    for (const auto& t : terms_)
        acc[{t.cos_exp.resolve(p), t.sin_exp.resolve(p)}] += t.coeff.evaluate(mpz_class(p));
    std::vector<ResolvedTerm> out;
    for (auto& [key, coeff] : acc)
        if (coeff != 0) out.push_back({coeff, key.first, key.second});
    return out;
}

std::string TrigExpr::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& t : terms_) {
        if (!s.empty()) s += " + ";
        s += "(" + t.coeff.to_string("p") + ")[" + t.cos_exp.to_string() + "," +
             t.sin_exp.to_string() + "]";
    }
    return s;
}

TrigExpr nth_sin_derivative(unsigned n) {
    TrigExpr e = TrigExpr::sin_seed();
    for (unsigned i = 0; i < n; ++i) e = e.derivative();
    return e;
}

exact::IntPolynomial leading_term_coefficient(unsigned n) {
    if (n == 0) return exact::IntPolynomial::constant(1);
    exact::IntPolynomial c = exact::IntPolynomial::constant(1);
    for (unsigned i = 1; i + 1 <= n; ++i)
        c = c * exact::IntPolynomial::affine(-static_cast<long>(i), 1); // (p - i)
    if (n % 2 == 0) c = -c;                                             // (-1)^{n-1}
    return c;
}

} // namespace pcircle::series
