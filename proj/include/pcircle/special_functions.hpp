#pragma once

namespace pcircle::special {

// Gamma function for x > 0 via a fixed-coefficient Lanczos rational
// approximation; relative error well under 1e-12 across the supported range.
// Arguments x <= 0 raise DomainError (negative axis is out of scope).
double gamma(double x);

// beta(x, y) = gamma(x) * gamma(y) / gamma(x + y), for x, y > 0.
double beta(double x, double y);

} // namespace pcircle::special
