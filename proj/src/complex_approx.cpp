#include "lamcalc/complex_approx.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace lamcalc {

namespace {

unsigned check_digits(unsigned digits) {
    if (digits < ComplexApprox::kMinDigits)
        throw std::invalid_argument("ComplexApprox: precision_digits must be >= 15");
    return digits;
}

unsigned working_digits(const ComplexApprox& a, const ComplexApprox& b) {
    return std::min(a.digits(), b.digits());
}

}  // namespace

BigFloat round_to(BigFloat v, unsigned digits) {
    v.round_to_digits(digits);
    return v;
}

BigFloat bigfloat_from_rational(const Rational& r, unsigned digits) {
    BigFloat x = BigFloat::with_digits(digits);
    mpfr_set_q(x.data(), r.mpq().get_mpq_t(), MPFR_RNDN);
    return x;
}

bool bigfloat_finite(const BigFloat& v) {
    return v.is_finite();
}

ComplexApprox::ComplexApprox(const Rational& re, unsigned digits)
    : ComplexApprox(re, Rational(0), digits) {}

ComplexApprox::ComplexApprox(const Rational& re, const Rational& im, unsigned digits)
    : re_(bigfloat_from_rational(re, check_digits(digits))),
      im_(bigfloat_from_rational(im, digits)),
      digits_(digits) {}

ComplexApprox::ComplexApprox(BigFloat re, BigFloat im, unsigned digits)
    : re_(round_to(std::move(re), check_digits(digits))),
      im_(round_to(std::move(im), digits)),
      digits_(digits) {
    if (!re_.is_finite() || !im_.is_finite())
        throw std::domain_error("ComplexApprox: non-finite value");
}

ComplexApprox ComplexApprox::parse_decimal(const std::string& text, unsigned digits) {
    check_digits(digits);
    BigFloat x = BigFloat::parse(text, digits);
    return ComplexApprox(std::move(x), BigFloat::with_digits(digits), digits);
}

bool ComplexApprox::is_integer() const {
    return im_.is_zero() && re_.is_integer();
}

std::int64_t ComplexApprox::to_int() const {
    if (!is_integer()) throw std::domain_error("ComplexApprox: not an integer");
    return re_.to_int();
}

ComplexApprox ComplexApprox::operator-() const {
    return ComplexApprox(-re_, -im_, digits_);
}

ComplexApprox operator+(const ComplexApprox& a, const ComplexApprox& b) {
    const unsigned d = working_digits(a, b);
    return ComplexApprox(a.re_ + b.re_, a.im_ + b.im_, d);
}

ComplexApprox operator-(const ComplexApprox& a, const ComplexApprox& b) {
    const unsigned d = working_digits(a, b);
    return ComplexApprox(a.re_ - b.re_, a.im_ - b.im_, d);
}

ComplexApprox operator*(const ComplexApprox& a, const ComplexApprox& b) {
    const unsigned d = working_digits(a, b);
    return ComplexApprox(a.re_ * b.re_ - a.im_ * b.im_,
                         a.re_ * b.im_ + a.im_ * b.re_, d);
}

ComplexApprox operator/(const ComplexApprox& a, const ComplexApprox& b) {
    const unsigned d = working_digits(a, b);
    const BigFloat n = b.re_ * b.re_ + b.im_ * b.im_;
    if (n.is_zero()) throw std::domain_error("ComplexApprox: division by zero");
    return ComplexApprox((a.re_ * b.re_ + a.im_ * b.im_) / n,
                         (a.im_ * b.re_ - a.re_ * b.im_) / n, d);
}

BigFloat ComplexApprox::abs() const {
    if (im_.is_zero()) return round_to(lamcalc::abs(re_), digits_);
    return round_to(lamcalc::sqrt(re_ * re_ + im_ * im_), digits_);
}

ComplexApprox ComplexApprox::pow_int(std::int64_t k) const {
    if (k == 0) return ComplexApprox(Rational(1), digits_);
    if (is_zero()) {
        if (k < 0) throw std::domain_error("ComplexApprox: 0 raised to negative power");
        return ComplexApprox(Rational(0), digits_);
    }
    if (k == INT64_MIN) throw std::overflow_error("ComplexApprox: pow exponent overflow");
    const bool neg = k < 0;
    std::uint64_t e = static_cast<std::uint64_t>(neg ? -k : k);
    ComplexApprox base = *this;
    ComplexApprox acc(Rational(1), digits_);
    while (e) {  // square-and-multiply
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    if (neg) return ComplexApprox(Rational(1), digits_) / acc;
    return acc;
}

namespace {

// %.{digits}g-style: fixed when the magnitude is moderate, scientific
// otherwise; integral values are padded so the digit count stays visible.
std::string format_real(const BigFloat& v, unsigned digits) {
    if (v.is_zero()) {
        std::string s = "0.";
        s.append(digits > 1 ? digits - 1 : 1, '0');
        return s;
    }
    // mpfr exponent is base-2; decimal magnitude ~ exponent2 * log10(2)
    const double dec_mag = static_cast<double>(v.exponent2()) * 0.30103;
    if (dec_mag < -4 || dec_mag > static_cast<double>(digits))
        return v.str(digits, std::ios_base::scientific);
    return v.str(digits, std::ios_base::fixed);
}

}  // namespace

std::string ComplexApprox::str() const {
    std::string s = format_real(re_, digits_);
    if (!im_.is_zero()) {
        if (im_.sign() > 0)
            s += " + " + format_real(im_, digits_) + "*i";
        else
            s += " - " + format_real(-im_, digits_) + "*i";
    }
    return s;
}

ComplexApprox pow_rational_base(const Rational& base, const ComplexApprox& w) {
    if (base.sign() <= 0)
        throw std::domain_error("pow_rational_base: base must be positive");
    const unsigned d = w.digits();
    if (w.is_integer()) {
        return ComplexApprox(base.pow(w.to_int()), d);
    }
    const BigFloat lb = log(bigfloat_from_rational(base, d));
    const BigFloat tre = w.re() * lb;
    const BigFloat tim = w.im() * lb;
    const BigFloat mag = exp(tre);
    if (tim.is_zero()) return ComplexApprox(mag, BigFloat::with_digits(d), d);
    return ComplexApprox(mag * cos(tim), mag * sin(tim), d);
}

ComplexApprox operator*(const ComplexApprox& a, const Rational& b) {
    return a * ComplexApprox(b, a.digits());
}

ComplexApprox operator*(const Rational& a, const ComplexApprox& b) {
    return ComplexApprox(a, b.digits()) * b;
}

BigFloat abs_diff(const ComplexApprox& a, const ComplexApprox& b) {
    return (a - b).abs();
}

}  // namespace lamcalc
