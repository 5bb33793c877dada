#pragma once

// Test-only oracles, deliberately independent of the library implementations
// they check: direct products instead of recurrences, set-partition sums
// instead of index enumeration, raw integral discretization instead of the
// Lanczos kernel.

#include <cmath>
#include <cstdint>
#include <vector>

#include "pcircle/rational.hpp"

namespace oracles {

using pcircle::exact::BigRational;

// Coefficients of x(x-1)...(x-n+1) by direct convolution with plain machine
// integers (safe through n = 12 with room to spare).
inline std::vector<long long> falling_factorial_coeffs(unsigned n) {
    std::vector<long long> poly{1};
    for (unsigned i = 0; i < n; ++i) {
        std::vector<long long> next(poly.size() + 1, 0);
        for (std::size_t k = 0; k < poly.size(); ++k) {
            next[k + 1] += poly[k];                            // * x
            next[k] -= static_cast<long long>(i) * poly[k];    // * (-i)
        }
        poly = std::move(next);
    }
    return poly;
}

namespace detail {

inline void partitions_rec(unsigned next_element, unsigned n, unsigned k,
                           std::vector<unsigned>& block_sizes,
                           const std::vector<BigRational>& x, BigRational& total) {
    const unsigned remaining = n - next_element;
    if (block_sizes.size() > k) return;
    if (block_sizes.size() + remaining < k) return; // cannot reach k blocks
    if (next_element == n) {
        if (block_sizes.size() != k) return;
        BigRational product(1);
        for (unsigned size : block_sizes) product *= x[size - 1]; // x_{|block|}
        total += product;
        return;
    }
    for (std::size_t b = 0; b < block_sizes.size(); ++b) {
        ++block_sizes[b];
        partitions_rec(next_element + 1, n, k, block_sizes, x, total);
        --block_sizes[b];
    }
    block_sizes.push_back(1);
    partitions_rec(next_element + 1, n, k, block_sizes, x, total);
    block_sizes.pop_back();
}

} // namespace detail

// Partial Bell polynomial as a sum over set partitions of {1..n} into k
// blocks: each partition contributes the product of x_{block size}.
inline BigRational bell_by_set_partitions(unsigned n, unsigned k,
                                          const std::vector<BigRational>& x) {
    BigRational total(0);
    std::vector<unsigned> block_sizes;
    detail::partitions_rec(0, n, k, block_sizes, x, total);
    return total;
}

// Gamma by trapezoidal discretization of the defining integral after the
// substitution t = e^u, which makes the integrand decay doubly exponentially
// on the right and exponentially (rate z) on the left.
inline double gamma_by_integral(double z) {
    const double h = 0.01;
    const double lo = -60.0 / z; // e^{z*lo} ~ 1e-26
    const double hi = 6.0;       // e^{-e^6} ~ 0
    double sum = 0.0;
    for (double u = lo; u <= hi; u += h) {
        sum += std::exp(z * u - std::exp(u));
    }
    return sum * h;
}

} // namespace oracles
