#pragma once

/**
 * @file laurent_poly.hpp
 * @brief Sparse Laurent polynomial over Rational: finite map exponent -> coeff.
 *
 * Canonical form stores no zero coefficients, so equality is map equality.
 * x is a unit of this ring: multiplying by x^k is a plain exponent shift.
 *
 * Text format (CLI and fixtures): comma-separated `exp:coeff` terms, e.g.
 * "2:1,0:3,-1:1/2" is x^2 + 3 + (1/2)x^-1. Order irrelevant; duplicate
 * exponents are an error; the zero polynomial prints as "0:0".
 */

#include <cstdint>
#include <map>
#include <string>

#include "lamcalc/complex_approx.hpp"
#include "lamcalc/rational.hpp"

namespace lamcalc {

class LaurentPoly {
public:
    using TermMap = std::map<std::int64_t, Rational>;

    LaurentPoly() = default;

    static LaurentPoly constant(const Rational& c);
    static LaurentPoly monomial(std::int64_t exp, const Rational& c);
    static LaurentPoly parse(const std::string& text);

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    /// Smallest/largest exponent; precondition: not zero.
    std::int64_t min_exp() const;
    std::int64_t max_exp() const;

    /// Coefficient of x^e (0 when absent).
    Rational coeff(std::int64_t e) const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly operator-() const;

    /// c*f.
    LaurentPoly scaled(const Rational& c) const;
    /// f(c*x): coeff*x^e -> coeff*c^e*x^e. Requires c != 0.
    LaurentPoly scaled_arg(const Rational& c) const;
    /// x^k * f (exact; x is invertible).
    LaurentPoly shifted(std::int64_t k) const;

    /// Exact evaluation; throws on x0 = 0 with negative exponents present.
    Rational eval(const Rational& x0) const;
    /// Evaluation at working precision; throws on a pole at 0.
    ComplexApprox eval(const ComplexApprox& z) const;

    std::string str() const;

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

private:
    void add_term(std::int64_t e, const Rational& c);

    TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

}  // namespace lamcalc
