#pragma once

#include <string>
#include <vector>

#include "pcircle/rational.hpp"

namespace pcircle::series {

// Truncated formal power series with exact rational coefficients in
// factorial-normalized form: the stored list c_0..c_N represents
// sum_k c_k z^k / k!. Both c_0 and c_1 are stored explicitly.
class PowerSeries {
public:
    explicit PowerSeries(int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }

    // Factorial-normalized coefficient c_k.
    const exact::BigRational& coeff(int k) const;
    void set_coeff(int k, exact::BigRational value);

    // Plain Taylor coefficient c_k / k!.
    exact::BigRational ordinary_coeff(int k) const;

    // Partial sum at z, in double precision.
    double evaluate(double z) const;

    // {"order": N, "coefficients": ["num/den", ...]} with exact strings.
    std::string to_json() const;

private:
    std::vector<exact::BigRational> coeffs_;
};

// Inverse-sine series for integer p >= 2: nonzero only at orders kp+1, where
// the factorial-normalized coefficient is ((p-1)/p)^{(k)} (kp)!/k!.
PowerSeries arcsin_series(int p, int max_order);

// Compositional inverse via the Bell-polynomial form of Lagrange inversion.
// Requires f_0 = 0 and f_1 != 0.
PowerSeries lagrange_invert(const PowerSeries& f);

// Sine series: lagrange_invert(arcsin_series(p, max_order)).
PowerSeries sin_series(int p, int max_order);

// Formal composition f(g(z)), truncated to the smaller order; g_0 must be 0.
PowerSeries compose(const PowerSeries& f, const PowerSeries& g);

// First-order coefficient of the sine series; equals 1 for every integer
// p >= 2, which is exactly the statement sin_p(x)/x -> 1.
exact::BigRational sinc_limit(int p);

// l-th derivative of the inverse sine at 0 for integer n >= 2, as an exact
// rational: zero unless l = kn+1, in which case ((n-1)/n)^{(k)} (kn)!/k!.
exact::BigRational arcsin_derivative_at_zero(int n, int l);

// The same value three ways: the exact rising-factorial form, the equivalent
// gamma-ratio form gamma(k+1-1/n)/gamma(1-1/n) * (kn)!/k!, and a shifted
// variant with gamma(k-1/n) in the numerator that a telescoping slip
// produces. The shifted variant disagrees already at n = 2, l = 3; it is
// reported for diagnostics and is NaN when undefined (k = 0).
struct DerivativeReport {
    int n = 0;
    int l = 0;
    exact::BigRational exact_value;
    double gamma_form = 0.0;
    double gamma_form_shifted = 0.0;
};
DerivativeReport arcsin_derivative_report(int n, int l);

// Simultaneous-vanishing check: exact coefficients of both series up to the
// given depth, with the orders where each is nonzero compared against the
// arithmetic progression l = 1 (mod n). A verification report, not a proof.
struct RigidityRow {
    int order;
    exact::BigRational arcsin_coeff;
    exact::BigRational sin_coeff;
    bool arcsin_nonzero;
    bool sin_nonzero;
    bool expected_nonzero; // order = 1 (mod n)
};

struct RigidityReport {
    int p = 0;
    int depth = 0;
    std::vector<RigidityRow> rows;
    bool consistent = false;
    std::string summary;

    std::string to_json() const;
};
RigidityReport rigidity_report(int p, int depth);

} // namespace pcircle::series
