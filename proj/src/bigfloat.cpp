#include "lamcalc/bigfloat.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lamcalc {

namespace {

// enough bits for digits10 decimal digits, with guard bits on top
mpfr_prec_t bits_for(unsigned digits10) {
    const double b = static_cast<double>(digits10) * 3.3219280948873623;
    return static_cast<mpfr_prec_t>(b) + 16;
}

// a double or machine integer is exact at this precision
constexpr unsigned kScalarDigits = 20;

}  // namespace

BigFloat::BigFloat(unsigned digits10, bool) : digits10_(digits10) {
    mpfr_init2(v_, bits_for(digits10));
}

BigFloat::BigFloat(double v) : BigFloat(kScalarDigits, true) {
    mpfr_set_d(v_, v, MPFR_RNDN);
}

BigFloat::BigFloat(long v) : BigFloat(kScalarDigits, true) {
    mpfr_set_si(v_, v, MPFR_RNDN);
}

BigFloat BigFloat::with_digits(unsigned digits10) {
    BigFloat r(digits10, true);
    mpfr_set_zero(r.v_, 1);
    return r;
}

BigFloat BigFloat::parse(const std::string& text, unsigned digits10) {
    BigFloat r(digits10, true);
    if (mpfr_set_str(r.v_, text.c_str(), 10, MPFR_RNDN) != 0)
        throw std::invalid_argument("BigFloat: malformed decimal '" + text + "'");
    return r;
}

BigFloat::BigFloat(const BigFloat& o) : digits10_(o.digits10_) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept : digits10_(o.digits10_) {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
    if (this != &o) {
        mpfr_set_prec(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
        digits10_ = o.digits10_;
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
    if (this != &o) {
        mpfr_swap(v_, o.v_);
        digits10_ = o.digits10_;
    }
    return *this;
}

BigFloat::~BigFloat() {
    mpfr_clear(v_);
}

void BigFloat::round_to_digits(unsigned digits10) {
    mpfr_prec_round(v_, bits_for(digits10), MPFR_RNDN);
    digits10_ = digits10;
}

BigFloat BigFloat::operator-() const {
    BigFloat r(digits10_, true);
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

#define LAMCALC_BIGFLOAT_BINOP(op, fn)                                  \
    BigFloat operator op(const BigFloat& a, const BigFloat& b) {        \
        BigFloat r(std::max(a.digits10_, b.digits10_), true);           \
        fn(r.v_, a.v_, b.v_, MPFR_RNDN);                                \
        return r;                                                       \
    }

LAMCALC_BIGFLOAT_BINOP(+, mpfr_add)
LAMCALC_BIGFLOAT_BINOP(-, mpfr_sub)
LAMCALC_BIGFLOAT_BINOP(*, mpfr_mul)
LAMCALC_BIGFLOAT_BINOP(/, mpfr_div)

#undef LAMCALC_BIGFLOAT_BINOP

std::string BigFloat::str(int digits, std::ios_base::fmtflags flags) const {
    char* s = nullptr;
    int rc;
    if (flags & std::ios_base::scientific)
        rc = mpfr_asprintf(&s, "%.*Re", digits > 0 ? digits - 1 : 0, v_);
    else if (flags & std::ios_base::fixed)
        rc = mpfr_asprintf(&s, "%.*Rf", digits, v_);
    else
        rc = mpfr_asprintf(&s, "%.*Rg", digits, v_);
    if (rc < 0 || !s) throw std::runtime_error("BigFloat: formatting failed");
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

#define LAMCALC_BIGFLOAT_UNARY(name, fn)        \
    BigFloat name(const BigFloat& v) {          \
        BigFloat r = v;                         \
        fn(r.data(), v.data(), MPFR_RNDN);      \
        return r;                               \
    }

LAMCALC_BIGFLOAT_UNARY(abs, mpfr_abs)
LAMCALC_BIGFLOAT_UNARY(sqrt, mpfr_sqrt)
LAMCALC_BIGFLOAT_UNARY(exp, mpfr_exp)
LAMCALC_BIGFLOAT_UNARY(log, mpfr_log)
LAMCALC_BIGFLOAT_UNARY(sin, mpfr_sin)
LAMCALC_BIGFLOAT_UNARY(cos, mpfr_cos)

#undef LAMCALC_BIGFLOAT_UNARY

}  // namespace lamcalc
