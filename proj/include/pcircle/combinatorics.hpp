#pragma once

#include <gmpxx.h>

#include <span>
#include <vector>

#include "pcircle/polynomial.hpp"
#include "pcircle/rational.hpp"

namespace pcircle::exact {

mpz_class factorial(unsigned n);
mpz_class binomial(unsigned n, unsigned k);

// Signed Stirling number of the first kind, via the recurrence
// s(n+1,k) = s(n,k-1) - n*s(n,k), s(0,0) = 1. Memoized; thread-safe.
// Returns 0 for k out of range.
mpz_class stirling_first(unsigned n, unsigned k);

// Falling factorial x(x-1)...(x-n+1) as a polynomial in x, built by direct
// multiplication of the linear factors (independent of stirling_first).
IntPolynomial falling_factorial_poly(unsigned n);

// Rising factorial a(a+1)...(a+k-1); empty product is 1.
BigRational rising_factorial(const BigRational& a, unsigned k);
mpz_class rising_factorial(const mpz_class& a, unsigned k);

// Partial exponential Bell polynomial B_{n,k} evaluated at the given point.
// Requires 1 <= k <= n and exactly n-k+1 arguments. Enumerates all index
// sequences (j_1,...,j_{n-k+1}) with sum j_i = k and sum i*j_i = n.
BigRational bell_partial(unsigned n, unsigned k, std::span<const BigRational> x);

} // namespace pcircle::exact
