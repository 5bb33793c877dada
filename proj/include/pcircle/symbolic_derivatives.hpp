#pragma once

#include <string>
#include <vector>

#include "pcircle/polynomial.hpp"
#include "pcircle/rational.hpp"

namespace pcircle::series {

// Exponent affine in p: value a + b*p. Ordered by (b, a) so that the chain of
// leading terms produced by repeated differentiation sorts first.
struct PExponent {
    long a = 0;
    long b = 0;

    long resolve(long p) const { return a + b * p; }
    bool is_symbolically_zero() const { return a == 0 && b == 0; }
    friend auto operator<=>(const PExponent&, const PExponent&) = default;
    std::string to_string() const;
};

// One term c(p) * cos_p^{m}(x) * sin_p^{n}(x) with m, n affine in p and the
// coefficient an integer polynomial in p.
struct TrigMonomial {
    exact::IntPolynomial coeff;
    PExponent cos_exp;
    PExponent sin_exp;
};

// Sum of monomials, kept sorted by exponent pair with like terms merged and
// zero coefficients dropped.
class TrigExpr {
public:
    TrigExpr() = default;
    explicit TrigExpr(std::vector<TrigMonomial> terms);

    // sin_p(x) itself: 1 * cos^0 sin^1.
    static TrigExpr sin_seed();

    // Termwise product rule for d/dx [cos^m sin^n]:
    //   -m [m-1, n+p-1] + n [m+p-1, n-1].
    TrigExpr derivative() const;

    const std::vector<TrigMonomial>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    // Value at x = 0 for a concrete integer p >= 2: cos_p(0) = 1, sin_p(0) = 0,
    // so a term contributes exactly when its resolved sin exponent is zero.
    // A negative resolved sin exponent means the expression has a pole at 0.
    exact::BigRational evaluate_at_zero(long p) const;

    // Resolves exponents and coefficients at a concrete p, merging terms again;
    // returns (coefficient, cos exponent, sin exponent) triples.
    struct ResolvedTerm {
        mpz_class coeff;
        long cos_exp;
        long sin_exp;
    };
    std::vector<ResolvedTerm> substitute(long p) const;

    std::string to_string() const;

private:
    void normalize();

    std::vector<TrigMonomial> terms_;
};

// n-fold derivative of sin_p as a TrigExpr (n >= 0).
TrigExpr nth_sin_derivative(unsigned n);

// Closed form for the coefficient of the leading monomial of the n-th
// derivative: (-1)^{n-1} (p-1)(p-2)...(p-n+1), as a polynomial in p.
exact::IntPolynomial leading_term_coefficient(unsigned n);

} // namespace pcircle::series
