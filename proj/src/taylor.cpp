#include "lamcalc/taylor.hpp"

#include <stdexcept>

#include "lamcalc/lambda_ops.hpp"

namespace lamcalc {

namespace {

void check_basis_params(const Rational& a, const Rational& lambda) {
    if (a.is_zero()) throw std::domain_error("basis expansion: a must be nonzero");
    if (lambda.is_zero() || lambda == Rational(1) || lambda == Rational(-1))
        throw std::domain_error("basis expansion: lambda must avoid {0, 1, -1}");
}

std::int64_t inverse_degree(const LaurentPoly& f) {
    if (f.is_zero()) return 0;
    if (f.max_exp() > 0)
        throw std::domain_error("basis expansion: f must have non-positive exponents");
    return -f.min_exp();
}

}  // namespace

BasisExpansion::BasisExpansion(Rational a_, Rational lambda_, std::vector<Rational> coeffs_)
    : a(std::move(a_)), lambda(std::move(lambda_)), coeffs(std::move(coeffs_)) {
    check_basis_params(a, lambda);
    if (coeffs.empty()) coeffs.push_back(Rational(0));
}

LaurentPoly reconstruct(const BasisExpansion& e) {
    const BasisSpec spec(e.a, e.lambda);
    LaurentPoly sum;
    for (std::size_t k = 0; k < e.coeffs.size(); ++k)
        sum += lb_expand(spec, static_cast<std::int64_t>(k)).scaled(e.coeffs[k]);
    return sum;
}

BasisExpansion taylor_via_system(const LaurentPoly& f, const Rational& a,
                                 const Rational& lambda) {
    check_basis_params(a, lambda);
    const std::int64_t n = inverse_degree(f);
    const OperatorContext ctx(lambda);

    // (lambda;lambda)_i for i <= n
    std::vector<Rational> qq(static_cast<std::size_t>(n) + 1);
    for (std::int64_t i = 0; i <= n; ++i) qq[i] = q_pochhammer(lambda, lambda, i);

    std::vector<Rational> c(static_cast<std::size_t>(n) + 1, Rational(0));
    c[0] = f.eval(a);
    for (std::int64_t i = 1; i <= n; ++i) {
        // row i: (I^i f)(a) = c0 a^i/l^B + (a^i (l;l)_i / l^B) sum_{k=1..i} c_k/(l;l)_{i-k}
        // with B = binom(i+1,2); solve for c_i.
        const Rational lhs = i_lambda_n(f, ctx, i).eval(a);
        const Rational lB = lambda.pow(binom2(i + 1));
        const Rational ai = a.pow(i);
        Rational sum = (lhs - c[0] * ai / lB) * lB / (ai * qq[i]);
        for (std::int64_t k = 1; k < i; ++k) sum -= c[k] / qq[i - k];
        c[i] = sum;
    }
    return BasisExpansion(a, lambda, std::move(c));
}

BasisExpansion taylor_via_connection(const LaurentPoly& f, const Rational& a,
                                     const Rational& lambda) {
    check_basis_params(a, lambda);
    const std::int64_t m = inverse_degree(f);
    std::vector<Rational> c(static_cast<std::size_t>(m) + 1, Rational(0));
    for (std::int64_t k = 0; k <= m; ++k) {
        Rational sum(0);
        for (std::int64_t i = k; i <= m; ++i)
            sum += f.coeff(-i) / a.pow(i) * q_binomial(i, k, lambda);
        Rational v = sum * lambda.pow(binom2(k));
        if (k & 1) v = -v;
        c[k] = v;
    }
    return BasisExpansion(a, lambda, std::move(c));
}

BasisExpansion connect_monomial(std::int64_t n, const Rational& a, const Rational& lambda) {
    if (n < 0) throw std::domain_error("connect_monomial: n must be non-negative");
    return BasisExpansion(a, lambda, printed_monomial(n, a, lambda));
}

BasisExpansion connect_two_point(std::int64_t n, const Rational& a, const Rational& b,
                                 const Rational& lambda) {
    if (n < 0) throw std::domain_error("connect_two_point: n must be non-negative");
    check_basis_params(a, lambda);
    BasisExpansion e = taylor_via_connection(lb_expand(BasisSpec(b, lambda), n), a, lambda);
    // b = 0 collapses the target to the constant 1; pad back to c_0..c_n
    e.coeffs.resize(static_cast<std::size_t>(n) + 1, Rational(0));
    return e;
}

BasisExpansion connect_pochhammer(std::int64_t n, const Rational& a,
                                  const Rational& lambda) {
    if (n < 0) throw std::domain_error("connect_pochhammer: n must be non-negative");
    return BasisExpansion(a, lambda, printed_pochhammer(n, a, lambda));
}

BasisExpansion connect_rogers_szego(std::int64_t n, const Rational& a,
                                    const Rational& lambda) {
    if (n < 0) throw std::domain_error("connect_rogers_szego: n must be non-negative");
    return BasisExpansion(a, lambda, printed_rogers_szego(n, a, lambda));
}

BasisExpansion connect_stieltjes_wigert(std::int64_t n, const Rational& a,
                                        const Rational& lambda) {
    if (n < 0) throw std::domain_error("connect_stieltjes_wigert: n must be non-negative");
    check_basis_params(a, lambda);
    return taylor_via_connection(stieltjes_wigert(n, lambda).substitute_inverse(), a,
                                 lambda);
}

std::vector<Rational> printed_monomial(std::int64_t n, const Rational& a,
                                       const Rational& lambda) {
    check_basis_params(a, lambda);
    const Rational an_inv = a.pow(n).inverse();
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    for (std::int64_t k = 0; k <= n; ++k) {
        Rational v = an_inv * lambda.pow(binom2(k)) * q_binomial(n, k, lambda);
        if (k & 1) v = -v;
        c[k] = v;
    }
    return c;
}

std::vector<Rational> printed_two_point(std::int64_t n, const Rational& a,
                                        const Rational& b, const Rational& lambda,
                                        bool with_sign) {
    check_basis_params(a, lambda);
    const BasisSpec b_spec(b, lambda);
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    for (std::int64_t k = 0; k <= n; ++k) {
        // [n k]_l lambda^{2 binom(k,2)} (lambda^{1-n} b/a)^k (a-b)_l^{n-k}
        Rational v = q_binomial(n, k, lambda) * lambda.pow(2 * binom2(k)) *
                     (lambda.pow(1 - n) * b / a).pow(k) * lb_eval(b_spec, n - k, a);
        if (with_sign && (k & 1)) v = -v;
        c[k] = v;
    }
    return c;
}

std::vector<Rational> printed_pochhammer(std::int64_t n, const Rational& a,
                                         const Rational& lambda) {
    check_basis_params(a, lambda);
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    for (std::int64_t k = 0; k <= n; ++k) {
        // [n k]_l lambda^{2 binom(k,2)} a^-k (lambda^k a^-1; lambda)_{n-k}
        c[k] = q_binomial(n, k, lambda) * lambda.pow(2 * binom2(k)) * a.pow(-k) *
               q_pochhammer(lambda.pow(k) / a, lambda, n - k);
    }
    return c;
}

std::vector<Rational> printed_rogers_szego(std::int64_t n, const Rational& a,
                                           const Rational& lambda) {
    check_basis_params(a, lambda);
    const Rational a_inv = a.inverse();
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    for (std::int64_t k = 0; k <= n; ++k) {
        Rational v = q_binomial(n, k, lambda) * lambda.pow(binom2(k)) * a.pow(-k) *
                     rogers_szego(n - k, lambda).eval(a_inv);
        if (k & 1) v = -v;
        c[k] = v;
    }
    return c;
}

std::vector<Rational> printed_stieltjes_wigert(std::int64_t n, const Rational& a,
                                               const Rational& lambda) {
    check_basis_params(a, lambda);
    const Rational arg = lambda * lambda / a;
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    for (std::int64_t k = 0; k <= n; ++k) {
        // [n k]_l (-1)^k lambda^{k(3k-1)/2} a^-k S_{n-k}(lambda^2 a^-1 | lambda)
        Rational v = q_binomial(n, k, lambda) * lambda.pow(k * (3 * k - 1) / 2) *
                     a.pow(-k) * stieltjes_wigert(n - k, lambda).eval(arg);
        if (k & 1) v = -v;
        c[k] = v;
    }
    return c;
}

LaurentPoly connection_target(ConnectionFamily family, std::int64_t n, const Rational& b,
                              const Rational& lambda) {
    switch (family) {
        case ConnectionFamily::monomial:
            return LaurentPoly::monomial(-n, Rational(1));
        case ConnectionFamily::twopoint:
            return lb_expand(BasisSpec(b, lambda), n);
        case ConnectionFamily::pochhammer:
            return gauss_expand(n, lambda).substitute_inverse();
        case ConnectionFamily::rogers_szego:
            return rogers_szego(n, lambda).substitute_inverse();
        case ConnectionFamily::stieltjes_wigert:
            return stieltjes_wigert(n, lambda).substitute_inverse();
    }
    throw std::logic_error("connection_target: unknown family");
}

}  // namespace lamcalc
