#pragma once

/**
 * @file complex_approx.hpp
 * @brief High-precision complex scalar with an explicit precision tag.
 *
 * Each value carries precision_digits (decimal). Binary operations work at
 * the minimum of the two operands' precision and the result carries that
 * minimum, so a chain of operations can never silently claim more accuracy
 * than its weakest input. Non-finite results are rejected at construction.
 */

#include <cstdint>
#include <string>

#include "lamcalc/bigfloat.hpp"
#include "lamcalc/rational.hpp"

namespace lamcalc {

/// Rounds (or pads) v to the given decimal precision, preserving its value.
BigFloat round_to(BigFloat v, unsigned digits);

/// Exact single-rounding conversion mpq -> mpfr at the given precision.
BigFloat bigfloat_from_rational(const Rational& r, unsigned digits);

bool bigfloat_finite(const BigFloat& v);

class ComplexApprox {
public:
    static constexpr unsigned kMinDigits = 15;
    static constexpr unsigned kDefaultDigits = 50;

    ComplexApprox() : ComplexApprox(Rational(0), kDefaultDigits) {}
    ComplexApprox(const Rational& re, unsigned digits);
    ComplexApprox(const Rational& re, const Rational& im, unsigned digits);
    ComplexApprox(BigFloat re, BigFloat im, unsigned digits);

    /// Parses a plain decimal string (e.g. "0.5", "1e30") as a real value.
    static ComplexApprox parse_decimal(const std::string& text, unsigned digits);

    const BigFloat& re() const { return re_; }
    const BigFloat& im() const { return im_; }
    unsigned digits() const { return digits_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }
    /// True when im == 0 and re is an exact integer.
    bool is_integer() const;
    /// Value as int64; precondition is_integer().
    std::int64_t to_int() const;

    ComplexApprox operator-() const;
    friend ComplexApprox operator+(const ComplexApprox& a, const ComplexApprox& b);
    friend ComplexApprox operator-(const ComplexApprox& a, const ComplexApprox& b);
    friend ComplexApprox operator*(const ComplexApprox& a, const ComplexApprox& b);
    friend ComplexApprox operator/(const ComplexApprox& a, const ComplexApprox& b);

    BigFloat abs() const;

    ComplexApprox pow_int(std::int64_t k) const;

    /// Decimal rendering with precision_digits significant digits; pure real
    /// values render as a single number, otherwise "re + im*i" / "re - im*i".
    std::string str() const;

private:
    BigFloat re_, im_;
    unsigned digits_;
};

/// base^w on the principal branch; requires base > 0.
ComplexApprox pow_rational_base(const Rational& base, const ComplexApprox& w);

ComplexApprox operator*(const ComplexApprox& a, const Rational& b);
ComplexApprox operator*(const Rational& a, const ComplexApprox& b);

BigFloat abs_diff(const ComplexApprox& a, const ComplexApprox& b);

}  // namespace lamcalc
