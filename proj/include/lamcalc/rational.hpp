#pragma once

/**
 * @file rational.hpp
 * @brief Exact arbitrary-precision rational scalar backed by GMP.
 *
 * Canonical form is maintained through every operation:
 *   gcd(|num|, den) == 1, den > 0, zero is 0/1.
 * Equality is therefore structural, which is what makes "exact identity"
 * a plain comparison everywhere else in the library.
 */

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace lamcalc {

class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}           // NOLINT: implicit by design
    Rational(int n) : v_(n) {}            // NOLINT
    Rational(long n, long d);
    explicit Rational(mpq_class q);

    /// Parses `[-]?digits` or `[-]?digits/digits`. Throws on malformed
    /// text or a zero denominator.
    static Rational parse(const std::string& text);

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }
    const mpq_class& mpq() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    /// Multiplicative inverse; throws on zero.
    Rational inverse() const;

    /// s^k exactly, with 0^0 = 1. Throws on 0^negative.
    Rational pow(std::int64_t k) const;

    Rational abs() const { return sign() < 0 ? -*this : *this; }

    /// "p/q", or bare "p" for integers.
    std::string str() const;

    double to_double() const { return v_.get_d(); }

private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Renders a coefficient vector as "[c0, c1, ...]".
std::string str(const std::vector<Rational>& v);

/// binomial(n, 2) = n(n-1)/2 as a plain integer exponent.
std::int64_t binom2(std::int64_t n);

}  // namespace lamcalc
