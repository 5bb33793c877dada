#include "pcircle/combinatorics.hpp"

#include <mutex>

#include "pcircle/errors.hpp"

namespace pcircle::exact {

mpz_class factorial(unsigned n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

mpz_class binomial(unsigned n, unsigned k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

namespace {

// Rows of signed Stirling numbers of the first kind; row n holds s(n,0..n).
// Guarded: concurrent callers must observe no torn state.
class StirlingTable {
public:
    mpz_class get(unsigned n, unsigned k) {
        std::lock_guard<std::mutex> lock(mutex_);
        while (rows_.size() <= n) {
            const unsigned m = static_cast<unsigned>(rows_.size()); // building row m from row m-1
            std::vector<mpz_class> row(m + 1);
            if (m == 0) {
                row[0] = 1;
            } else {
                const auto& prev = rows_[m - 1];
                for (unsigned j = 1; j <= m; ++j) {
                    // s(m,j) = s(m-1,j-1) - (m-1)*s(m-1,j)
                    row[j] = prev[j - 1];
                    if (j < m) row[j] -= mpz_class(m - 1) * prev[j];
                }
            }
            rows_.push_back(std::move(row));
        }
        return k < rows_[n].size() ? rows_[n][k] : mpz_class(0);
    }

private:
    std::mutex mutex_;
    std::vector<std::vector<mpz_class>> rows_{};
};

StirlingTable& stirling_table() {
    static StirlingTable table;
    return table;
}

} // namespace

mpz_class stirling_first(unsigned n, unsigned k) {
    return stirling_table().get(n, k);
}

IntPolynomial falling_factorial_poly(unsigned n) {
    IntPolynomial p = IntPolynomial::constant(1);
    for (unsigned i = 0; i < n; ++i)
        p = p * IntPolynomial::affine(-static_cast<long>(i), 1); // (x - i)
    return p;
}

BigRational rising_factorial(const BigRational& a, unsigned k) {
    BigRational r(1);
    for (unsigned i = 0; i < k; ++i) r *= a + BigRational(static_cast<long>(i));
    return r;
}

mpz_class rising_factorial(const mpz_class& a, unsigned k) {
    mpz_class r = 1;
    for (unsigned i = 0; i < k; ++i) r *= a + i;
    return r;
}

namespace {

// Recursive enumeration over the index sequences of the Bell sum. Arguments
// that are exactly zero force j_i = 0, which prunes most of the tree for the
// sparse series this library feeds in.
void bell_enumerate(unsigned i, unsigned remaining_count, unsigned remaining_weight,
                    std::span<const BigRational> x, const mpz_class& n_factorial,
                    std::vector<unsigned>& j, BigRational& total) {
    const unsigned m = static_cast<unsigned>(x.size());
    if (i == m) {
        if (remaining_count != 0 || remaining_weight != 0) return;
        // n! / prod(j_i!) * prod((x_i / i!)^{j_i})
        mpz_class denom = 1;
        BigRational term(1);
        for (unsigned idx = 0; idx < m; ++idx) {
            if (j[idx] == 0) continue;
            denom *= factorial(j[idx]);
            BigRational base = x[idx] / BigRational(factorial(idx + 1));
            term *= rational_pow(base, j[idx]);
        }
        total += BigRational(n_factorial, denom) * term;
        return;
    }
    const unsigned weight = i + 1;
    unsigned max_j = remaining_count;
    if (weight * max_j > remaining_weight) max_j = remaining_weight / weight;
    if (x[i].is_zero() && max_j > 0) max_j = 0; // zero argument contributes only with j_i = 0
    for (unsigned ji = 0; ji <= max_j; ++ji) {
        j[i] = ji;
        bell_enumerate(i + 1, remaining_count - ji, remaining_weight - ji * weight, x,
                       n_factorial, j, total);
    }
    j[i] = 0;
}

} // namespace

BigRational bell_partial(unsigned n, unsigned k, std::span<const BigRational> x) {
    if (n == 0 || k == 0 || k > n)
        throw ArgumentError("bell_partial: requires 1 <= k <= n");
    if (x.size() != n - k + 1)
        throw ArgumentError("bell_partial: expected exactly n-k+1 arguments, got " +
                            std::to_string(x.size()));
    BigRational total(0);
    std::vector<unsigned> j(x.size(), 0);
    bell_enumerate(0, k, n, x, factorial(n), j, total);
    return total;
}

} // namespace pcircle::exact
