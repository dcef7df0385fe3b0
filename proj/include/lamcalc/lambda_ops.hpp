#pragma once

/**
 * @file lambda_ops.hpp
 * @brief The order-1 homogeneous linear operator pair and its calculus.
 *
 * D_lambda f(x) = f(lambda*x)/x        (termwise: c*x^e -> c*lambda^e*x^{e-1})
 * I_lambda f(x) = (x/lambda)*f(x/lambda) (termwise: c*x^e -> c*lambda^{-(e+1)}*x^{e+1})
 *
 * The two are exact two-sided inverses on Laurent polynomials. A constant c
 * maps to c*x^-1 under D_lambda, so the image always stays in the ring and
 * the only D_lambda-constant is 0.
 */

#include <cstdint>

#include "lamcalc/complex_approx.hpp"
#include "lamcalc/laurent_poly.hpp"
#include "lamcalc/rational.hpp"

namespace lamcalc {

struct OperatorContext {
    Rational lambda;

    explicit OperatorContext(Rational l);
};

LaurentPoly d_lambda(const LaurentPoly& f, const OperatorContext& ctx);
LaurentPoly i_lambda(const LaurentPoly& f, const OperatorContext& ctx);

/// n-fold D_lambda. Computes both the iterate and the closed form
/// f(lambda^n x) / (lambda^binom(n,2) x^n) and requires them to agree.
LaurentPoly d_lambda_n(const LaurentPoly& f, const OperatorContext& ctx, std::int64_t n);

/// n-fold I_lambda, dual closed form x^n/lambda^binom(n+1,2) * f(x/lambda^n).
LaurentPoly i_lambda_n(const LaurentPoly& f, const OperatorContext& ctx, std::int64_t n);

struct MonomialPower {
    ComplexApprox scale;
    ComplexApprox exponent;
};

/// D_lambda^k x^alpha = lambda^{k*alpha - binom(k,2)} x^{alpha-k}.
/// Non-integer alpha takes the principal power and needs lambda > 0.
MonomialPower monomial_dk(const ComplexApprox& alpha, std::int64_t k,
                          const OperatorContext& ctx);

/// I_lambda^k x^alpha = x^{k+alpha} / lambda^{k*alpha + binom(k+1,2)}.
MonomialPower monomial_ik(const ComplexApprox& alpha, std::int64_t k,
                          const OperatorContext& ctx);

/// Definite integral (beta/lambda)f(beta/lambda) - (alpha/lambda)f(alpha/lambda);
/// requires f evaluable at both endpoints over lambda.
Rational definite_integral(const LaurentPoly& f, const OperatorContext& ctx,
                           const Rational& alpha, const Rational& beta);

/// Jackson derivative D_q f = (f(x) - f(qx)) / ((1-q)x), computed both as that
/// difference quotient and as (D_1 - D_q)/(1-q); the two routes must agree.
LaurentPoly jackson_derivative(const LaurentPoly& f, const Rational& q);

}  // namespace lamcalc
