#pragma once

/**
 * @file bigfloat.hpp
 * @brief RAII wrapper over mpfr_t with explicit per-value decimal precision.
 *
 * Every value owns its mpfr_t and carries its precision in decimal digits;
 * binary operations compute at the larger operand precision. There is no
 * global or thread-local precision state anywhere, so values are safe to
 * create and combine concurrently (MPFR itself is built thread-safe here).
 */

#include <mpfr.h>

#include <cstdint>
#include <ios>
#include <string>

namespace lamcalc {

class BigFloat {
public:
    BigFloat() : BigFloat(0.0) {}
    BigFloat(double v);  // NOLINT: implicit by design (tolerances, literals)
    BigFloat(int v) : BigFloat(static_cast<long>(v)) {}
    BigFloat(long v);

    /// Zero at the given precision.
    static BigFloat with_digits(unsigned digits10);
    /// Parses a decimal string at the given precision; throws on junk.
    static BigFloat parse(const std::string& text, unsigned digits10);

    BigFloat(const BigFloat& o);
    BigFloat(BigFloat&& o) noexcept;
    BigFloat& operator=(const BigFloat& o);
    BigFloat& operator=(BigFloat&& o) noexcept;
    ~BigFloat();

    unsigned precision() const { return digits10_; }
    /// In-place precision change, preserving the value (mpfr_prec_round).
    void round_to_digits(unsigned digits10);

    mpfr_srcptr data() const { return v_; }
    mpfr_ptr data() { return v_; }

    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    bool is_integer() const { return mpfr_integer_p(v_) != 0; }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    std::int64_t to_int() const { return mpfr_get_si(v_, MPFR_RNDN); }
    long exponent2() const { return static_cast<long>(mpfr_get_exp(v_)); }

    BigFloat operator-() const;
    friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b);

    friend int compare(const BigFloat& a, const BigFloat& b) {
        return mpfr_cmp(a.v_, b.v_);
    }

    /// Decimal rendering: scientific gives `digits` significant digits with
    /// an exponent; fixed gives `digits` digits after the point; default
    /// (no flags) is shortest-form %g with `digits` significant digits.
    std::string str(int digits, std::ios_base::fmtflags flags = {}) const;

private:
    explicit BigFloat(unsigned digits10, bool);  // uninitialized-value tag

    mpfr_t v_;
    unsigned digits10_;
};

inline bool operator==(const BigFloat& a, const BigFloat& b) { return compare(a, b) == 0; }
inline bool operator!=(const BigFloat& a, const BigFloat& b) { return compare(a, b) != 0; }
inline bool operator<(const BigFloat& a, const BigFloat& b) { return compare(a, b) < 0; }
inline bool operator<=(const BigFloat& a, const BigFloat& b) { return compare(a, b) <= 0; }
inline bool operator>(const BigFloat& a, const BigFloat& b) { return compare(a, b) > 0; }
inline bool operator>=(const BigFloat& a, const BigFloat& b) { return compare(a, b) >= 0; }

BigFloat abs(const BigFloat& v);
BigFloat sqrt(const BigFloat& v);
BigFloat exp(const BigFloat& v);
BigFloat log(const BigFloat& v);
BigFloat sin(const BigFloat& v);
BigFloat cos(const BigFloat& v);

}  // namespace lamcalc
