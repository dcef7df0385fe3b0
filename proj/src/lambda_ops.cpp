#include "lamcalc/lambda_ops.hpp"

#include <stdexcept>

namespace lamcalc {

OperatorContext::OperatorContext(Rational l) : lambda(std::move(l)) {
    if (lambda.is_zero())
        throw std::domain_error("OperatorContext: lambda must be nonzero");
}

LaurentPoly d_lambda(const LaurentPoly& f, const OperatorContext& ctx) {
    return f.scaled_arg(ctx.lambda).shifted(-1);
}

LaurentPoly i_lambda(const LaurentPoly& f, const OperatorContext& ctx) {
    const Rational inv = ctx.lambda.inverse();
    return f.scaled_arg(inv).shifted(1).scaled(inv);
}

LaurentPoly d_lambda_n(const LaurentPoly& f, const OperatorContext& ctx, std::int64_t n) {
    if (n < 0) throw std::domain_error("d_lambda_n: n must be non-negative");
    LaurentPoly iterated = f;
    for (std::int64_t i = 0; i < n; ++i) iterated = d_lambda(iterated, ctx);
    const LaurentPoly closed =
        f.scaled_arg(ctx.lambda.pow(n)).shifted(-n).scaled(ctx.lambda.pow(-binom2(n)));
    if (iterated != closed)
        throw std::logic_error("d_lambda_n: iterate and closed form disagree");
    return closed;
}

LaurentPoly i_lambda_n(const LaurentPoly& f, const OperatorContext& ctx, std::int64_t n) {
    if (n < 0) throw std::domain_error("i_lambda_n: n must be non-negative");
    LaurentPoly iterated = f;
    for (std::int64_t i = 0; i < n; ++i) iterated = i_lambda(iterated, ctx);
    const LaurentPoly closed = f.scaled_arg(ctx.lambda.pow(-n))
                                   .shifted(n)
                                   .scaled(ctx.lambda.pow(-binom2(n + 1)));
    if (iterated != closed)
        throw std::logic_error("i_lambda_n: iterate and closed form disagree");
    return closed;
}

MonomialPower monomial_dk(const ComplexApprox& alpha, std::int64_t k,
                          const OperatorContext& ctx) {
    if (k < 0) throw std::domain_error("monomial_dk: k must be non-negative");
    const unsigned d = alpha.digits();
    if (!alpha.is_integer() && ctx.lambda.sign() <= 0)
        throw std::domain_error("monomial_dk: non-integer alpha requires lambda > 0");
    // exponent of lambda: k*alpha - binom(k,2)
    const ComplexApprox e =
        alpha * Rational(static_cast<long>(k)) - ComplexApprox(Rational(binom2(k)), d);
    ComplexApprox scale = alpha.is_integer()
                              ? ComplexApprox(ctx.lambda.pow(k * alpha.to_int() - binom2(k)), d)
                              : pow_rational_base(ctx.lambda, e);
    return {scale, alpha - ComplexApprox(Rational(static_cast<long>(k)), d)};
}

MonomialPower monomial_ik(const ComplexApprox& alpha, std::int64_t k,
                          const OperatorContext& ctx) {
    if (k < 0) throw std::domain_error("monomial_ik: k must be non-negative");
    const unsigned d = alpha.digits();
    if (!alpha.is_integer() && ctx.lambda.sign() <= 0)
        throw std::domain_error("monomial_ik: non-integer alpha requires lambda > 0");
    const ComplexApprox e =
        -(alpha * Rational(static_cast<long>(k))) -
        ComplexApprox(Rational(binom2(k + 1)), d);
    ComplexApprox scale =
        alpha.is_integer()
            ? ComplexApprox(ctx.lambda.pow(-(k * alpha.to_int()) - binom2(k + 1)), d)
            : pow_rational_base(ctx.lambda, e);
    return {scale, alpha + ComplexApprox(Rational(static_cast<long>(k)), d)};
}

Rational definite_integral(const LaurentPoly& f, const OperatorContext& ctx,
                           const Rational& alpha, const Rational& beta) {
    const Rational a = alpha / ctx.lambda;
    const Rational b = beta / ctx.lambda;
    return b * f.eval(b) - a * f.eval(a);
}

LaurentPoly jackson_derivative(const LaurentPoly& f, const Rational& q) {
    if (q.is_zero() || q == Rational(1))
        throw std::domain_error("jackson_derivative: q must avoid {0, 1}");
    const Rational c = (Rational(1) - q).inverse();
    const OperatorContext one(Rational(1));
    const OperatorContext qq(q);
    const LaurentPoly combo = (d_lambda(f, one) - d_lambda(f, qq)).scaled(c);
    const LaurentPoly direct = (f - f.scaled_arg(q)).scaled(c).shifted(-1);
    if (combo != direct)
        throw std::logic_error("jackson_derivative: the two routes disagree");
    return direct;
}

}  // namespace lamcalc
