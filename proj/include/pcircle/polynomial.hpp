#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

#include "pcircle/rational.hpp"

namespace pcircle::exact {

// Dense polynomial with arbitrary-precision integer coefficients,
// coefficients_[k] = coefficient of x^k. Canonical form has no trailing
// zeros; the zero polynomial is the empty list.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<mpz_class> coefficients) : coeffs_(std::move(coefficients)) {
        trim();
    }
    static IntPolynomial constant(const mpz_class& c) {
        return c == 0 ? IntPolynomial() : IntPolynomial({c});
    }
    // a + b*x
    static IntPolynomial affine(const mpz_class& a, const mpz_class& b) {
        return IntPolynomial({a, b});
    }

    bool is_zero() const { return coeffs_.empty(); }
    // Degree of the zero polynomial is reported as -1.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    mpz_class coefficient(std::size_t k) const {
        return k < coeffs_.size() ? coeffs_[k] : mpz_class(0);
    }
    const std::vector<mpz_class>& coefficients() const { return coeffs_; }

    IntPolynomial& operator+=(const IntPolynomial& o) {
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }
    IntPolynomial& operator-=(const IntPolynomial& o) {
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }

    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }

    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<mpz_class> out(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return IntPolynomial(std::move(out));
    }

    IntPolynomial operator-() const {
        std::vector<mpz_class> out(coeffs_.size());
        for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = -coeffs_[i];
        return IntPolynomial(std::move(out));
    }

    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }

    mpz_class evaluate(const mpz_class& x) const {
        mpz_class acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }
    BigRational evaluate(const BigRational& x) const {
        BigRational acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * x + BigRational(*it);
        return acc;
    }

    std::string to_string(const std::string& variable = "x") const {
        if (is_zero()) return "0";
        std::string out;
        for (int k = degree(); k >= 0; --k) {
            const mpz_class& c = coeffs_[static_cast<std::size_t>(k)];
            if (c == 0) continue;
            if (!out.empty()) out += (c > 0) ? " + " : " - ";
            else if (c < 0) out += "-";
            mpz_class a = ::abs(c);
            if (a != 1 || k == 0) out += a.get_str();
            if (k >= 1) {
                out += variable;
                if (k > 1) out += "^" + std::to_string(k);
            }
        }
        return out;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<mpz_class> coeffs_;
};

} // namespace pcircle::exact
