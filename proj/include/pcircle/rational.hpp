#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <utility>

#include "pcircle/errors.hpp"

namespace pcircle::exact {

// Arbitrary-precision rational, always in lowest terms with positive
// denominator. Canonical zero is 0/1. Backed by GMP; GMP keeps canonical
// inputs canonical across arithmetic, so we only normalize at construction.
class BigRational {
public:
    BigRational() : value_(0) {}
    BigRational(long numerator) : value_(numerator) {}            // NOLINT(google-explicit-constructor)
    BigRational(long numerator, long denominator) : value_(numerator, denominator) {
        if (denominator == 0) throw DomainError("BigRational: zero denominator");
        value_.canonicalize();
    }
    explicit BigRational(mpz_class numerator) : value_(std::move(numerator)) {}
    BigRational(const mpz_class& numerator, const mpz_class& denominator)
        : value_(numerator, denominator) {
        if (denominator == 0) throw DomainError("BigRational: zero denominator");
        value_.canonicalize();
    }

    const mpz_class& numerator() const { return value_.get_num(); }
    const mpz_class& denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    int sign() const { return sgn(value_); }

    BigRational operator-() const { return BigRational(mpq_class(-value_)); }

    BigRational& operator+=(const BigRational& o) { value_ += o.value_; return *this; }
    BigRational& operator-=(const BigRational& o) { value_ -= o.value_; return *this; }
    BigRational& operator*=(const BigRational& o) { value_ *= o.value_; return *this; }
    BigRational& operator/=(const BigRational& o) {
        if (o.is_zero()) throw DomainError("BigRational: division by zero");
        value_ /= o.value_;
        return *this;
    }

    friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
    friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
    friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
    friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

    friend bool operator==(const BigRational& a, const BigRational& b) { return a.value_ == b.value_; }
    friend bool operator!=(const BigRational& a, const BigRational& b) { return a.value_ != b.value_; }
    friend bool operator<(const BigRational& a, const BigRational& b) { return a.value_ < b.value_; }
    friend bool operator<=(const BigRational& a, const BigRational& b) { return a.value_ <= b.value_; }
    friend bool operator>(const BigRational& a, const BigRational& b) { return a.value_ > b.value_; }
    friend bool operator>=(const BigRational& a, const BigRational& b) { return a.value_ >= b.value_; }

    BigRational abs() const { return BigRational(mpq_class(::abs(value_))); }

    double to_double() const { return value_.get_d(); }

    // Always "numerator/denominator", e.g. "-18/1"; stable for serialization.
    std::string to_string() const {
        return value_.get_num().get_str() + "/" + value_.get_den().get_str();
    }

private:
    explicit BigRational(mpq_class v) : value_(std::move(v)) {}

    mpq_class value_;
};

inline BigRational rational_pow(const BigRational& base, unsigned exponent) {
    BigRational r(1);
    for (unsigned i = 0; i < exponent; ++i) r *= base;
    return r;
}

} // namespace pcircle::exact
