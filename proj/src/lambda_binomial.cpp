#include "lamcalc/lambda_binomial.hpp"

#include <functional>
#include <set>
#include <stdexcept>

#include "lamcalc/lambda_ops.hpp"

namespace lamcalc {

BasisSpec::BasisSpec(Rational a_, Rational lambda_)
    : a(std::move(a_)), lambda(std::move(lambda_)) {
    if (lambda.is_zero()) throw std::domain_error("BasisSpec: lambda must be nonzero");
}

LaurentPoly lb_expand(const BasisSpec& spec, std::int64_t n) {
    if (n < 0) throw std::domain_error("lb_expand: n must be non-negative");
    LaurentPoly prod = LaurentPoly::constant(Rational(1));
    Rational lk(1);  // lambda^k
    for (std::int64_t k = 0; k < n; ++k) {
        LaurentPoly factor = LaurentPoly::constant(Rational(1));
        factor += LaurentPoly::monomial(-1, -(spec.a / lk));
        prod = prod * factor;
        lk *= spec.lambda;
    }
    return prod;
}

Rational lb_eval(const BasisSpec& spec, std::int64_t n, const Rational& x0) {
    if (x0.is_zero()) throw std::domain_error("lb_eval: x0 must be nonzero");
    if (n >= 0) {
        Rational prod(1);
        Rational lk(1);
        for (std::int64_t k = 0; k < n; ++k) {
            prod *= Rational(1) - spec.a / (lk * x0);
            lk *= spec.lambda;
        }
        return prod;
    }
    // (x-a)_l^{-m} = 1 / prod_{j=1}^{m} (1 - a lambda^j / x)
    const std::int64_t m = -n;
    Rational den(1);
    Rational lj = spec.lambda;
    for (std::int64_t j = 1; j <= m; ++j) {
        den *= Rational(1) - spec.a * lj / x0;
        lj *= spec.lambda;
    }
    if (den.is_zero()) throw std::domain_error("lb_eval: pole (vanishing denominator)");
    return den.inverse();
}

ComplexApprox lb_eval_complex(const BasisSpec& spec, std::int64_t n,
                              const ComplexApprox& x) {
    if (x.is_zero()) throw std::domain_error("lb_eval_complex: x must be nonzero");
    const unsigned d = x.digits();
    const ComplexApprox one(Rational(1), d);
    if (n >= 0) {
        ComplexApprox prod = one;
        Rational lk(1);
        for (std::int64_t k = 0; k < n; ++k) {
            prod = prod * (one - ComplexApprox(spec.a / lk, d) / x);
            lk *= spec.lambda;
        }
        return prod;
    }
    const std::int64_t m = -n;
    ComplexApprox den = one;
    Rational lj = spec.lambda;
    for (std::int64_t j = 1; j <= m; ++j) {
        den = den * (one - ComplexApprox(spec.a * lj, d) / x);
        lj *= spec.lambda;
    }
    if (den.is_zero()) throw std::domain_error("lb_eval_complex: pole");
    return one / den;
}

ComplexApprox lb_general(const BasisSpec& spec, const ComplexApprox& alpha,
                         const ComplexApprox& x, const TruncationConfig& cfg) {
    if (spec.lambda.abs() <= Rational(1))
        throw std::domain_error("lb_general: requires |lambda| > 1");
    if (x.is_zero()) throw std::domain_error("lb_general: x must be nonzero");
    const unsigned d = cfg.precision_digits;
    ComplexApprox lam_alpha(Rational(1), d);
    if (alpha.is_integer()) {
        lam_alpha = ComplexApprox(spec.lambda.pow(alpha.to_int()), d);
    } else {
        if (spec.lambda.sign() <= 0)
            throw std::domain_error("lb_general: non-integer alpha requires lambda > 0");
        lam_alpha = pow_rational_base(spec.lambda, alpha);
    }
    const ComplexApprox q(spec.lambda.inverse(), d);
    const ComplexApprox a_c(spec.a, d);
    const ComplexApprox num = q_pochhammer_inf(a_c / x, q, cfg);
    const ComplexApprox den = q_pochhammer_inf(a_c / (lam_alpha * x), q, cfg);
    if (den.is_zero()) throw std::domain_error("lb_general: vanishing denominator product");
    return num / den;
}

namespace {

// (lambda^{-k}x - a)_l^k at x0, i.e. prod_{j=1}^{k} (1 - a lambda^j / x0).
Rational shifted_base_eval(const BasisSpec& spec, std::int64_t k, const Rational& x0) {
    Rational prod(1);
    Rational lj = spec.lambda;
    for (std::int64_t j = 1; j <= k; ++j) {
        prod *= Rational(1) - spec.a * lj / x0;
        lj *= spec.lambda;
    }
    return prod;
}

Rational draw_sample_point(Rng& rng) {
    for (;;) {
        const Rational r(rng.uniform(-30, 30), rng.uniform(1, 9));
        if (!r.is_zero()) return r;
    }
}

IdentityCertificate exact_certificate(const LaurentPoly& lhs, const LaurentPoly& rhs) {
    IdentityCertificate cert;
    cert.exact = true;
    cert.holds = lhs == rhs;
    cert.lhs = lhs.str();
    cert.rhs = rhs.str();
    if (!cert.holds) cert.detail = "exact Laurent comparison failed";
    return cert;
}

// Runs `eval` at `count` distinct nonzero sample points, re-drawing on pole
// collisions (domain_error). eval returns {lhs, rhs} at the point.
IdentityCertificate pointwise_certificate(
    std::int64_t count, Rng& rng,
    const std::function<std::pair<Rational, Rational>(const Rational&)>& eval) {
    IdentityCertificate cert;
    cert.exact = false;
    cert.holds = true;
    std::set<Rational> used;
    int drawn = 0;
    int attempts = 0;
    while (drawn < count) {
        if (++attempts > 10000)
            throw std::runtime_error("identity certificate: sample space exhausted");
        const Rational x0 = draw_sample_point(rng);
        if (used.count(x0)) continue;
        std::pair<Rational, Rational> sides;
        try {
            sides = eval(x0);
        } catch (const std::domain_error&) {
            continue;  // pole hit; re-draw
        }
        used.insert(x0);
        ++drawn;
        if (drawn == 1) {
            cert.lhs = sides.first.str() + " @ x=" + x0.str();
            cert.rhs = sides.second.str() + " @ x=" + x0.str();
        }
        if (sides.first != sides.second) {
            cert.holds = false;
            cert.detail = "mismatch at x=" + x0.str() + ": " + sides.first.str() +
                          " != " + sides.second.str();
            break;
        }
    }
    cert.points = drawn;
    return cert;
}

}  // namespace

IdentityCertificate lb_dk(const BasisSpec& spec, std::int64_t n, std::int64_t k, Rng& rng) {
    if (k < 0) throw std::domain_error("lb_dk: k must be non-negative");
    const OperatorContext ctx(spec.lambda);
    const Rational lead = spec.lambda.pow(binom2(k));
    if (n >= 0) {
        const LaurentPoly lhs = lb_expand(spec, k)
                                    .shifted(k)
                                    .scaled(lead) *
                                d_lambda_n(lb_expand(spec, n), ctx, k);
        const LaurentPoly rhs = lb_expand(spec, n + k);
        return exact_certificate(lhs, rhs);
    }
    const std::int64_t count = std::max(-n, k) + k + 2;
    const Rational lam_k = spec.lambda.pow(k);
    return pointwise_certificate(count, rng, [&](const Rational& x0) {
        // D_l^k f (x0) = f(lambda^k x0) / (lambda^binom(k,2) x0^k)
        const Rational dk = lb_eval(spec, n, lam_k * x0) / (lead * x0.pow(k));
        const Rational lhs = lead * x0.pow(k) * lb_eval(spec, k, x0) * dk;
        const Rational rhs = lb_eval(spec, n + k, x0);
        return std::pair{lhs, rhs};
    });
}

IdentityCertificate lb_ik(const BasisSpec& spec, std::int64_t n, std::int64_t k, Rng& rng) {
    if (k < 0) throw std::domain_error("lb_ik: k must be non-negative");
    const OperatorContext ctx(spec.lambda);
    const Rational denom = spec.lambda.pow(binom2(k + 1));
    if (n == 0) {
        // I^k(1) = x^k / lambda^binom(k+1,2); the shifted-base factors cancel
        const LaurentPoly lhs =
            i_lambda_n(LaurentPoly::constant(Rational(1)), ctx, k);
        const LaurentPoly rhs = LaurentPoly::monomial(k, denom.inverse());
        return exact_certificate(lhs, rhs);
    }
    if (n >= 0 && k <= n) {
        const LaurentPoly lhs = i_lambda_n(lb_expand(spec, n), ctx, k);
        const LaurentPoly rhs = (lb_expand(spec, k).scaled_arg(spec.lambda.pow(-k)) *
                                 lb_expand(spec, n - k))
                                    .shifted(k)
                                    .scaled(denom.inverse());
        return exact_certificate(lhs, rhs);
    }
    const std::int64_t count = std::max(n < 0 ? -n : n, k) + k + 2;
    const Rational lam_mk = spec.lambda.pow(-k);
    return pointwise_certificate(count, rng, [&](const Rational& x0) {
        // I_l^k f (x0) = x0^k f(x0/lambda^k) / lambda^binom(k+1,2)
        const Rational lhs = x0.pow(k) * lb_eval(spec, n, lam_mk * x0) / denom;
        const Rational rhs =
            x0.pow(k) * shifted_base_eval(spec, k, x0) * lb_eval(spec, n - k, x0) / denom;
        return std::pair{lhs, rhs};
    });
}

IdentityCertificate lb_addition(const BasisSpec& spec, std::int64_t m, std::int64_t n) {
    if (m < 0 || n < 0) throw std::domain_error("lb_addition: m, n must be non-negative");
    const LaurentPoly lhs = lb_expand(spec, n + m);
    const LaurentPoly rhs =
        lb_expand(spec, m) * lb_expand(spec, n).scaled_arg(spec.lambda.pow(m));
    return exact_certificate(lhs, rhs);
}

IdentityCertificate lb_dk_reciprocal(const BasisSpec& spec, std::int64_t n,
                                     std::int64_t k, Rng& rng) {
    if (n < 0 || k < 0)
        throw std::domain_error("lb_dk_reciprocal: n, k must be non-negative");
    const Rational lead = spec.lambda.pow(binom2(k));
    const Rational lam_k = spec.lambda.pow(k);
    const std::int64_t count = n + 2 * k + 2;
    return pointwise_certificate(count, rng, [&](const Rational& x0) {
        const Rational base = lb_eval(spec, n, lam_k * x0);
        if (base.is_zero()) throw std::domain_error("pole of the reciprocal");
        const Rational dk = base.inverse() / (lead * x0.pow(k));
        const Rational lhs = lead * x0.pow(k) * lb_eval(spec, n + k, x0) * dk;
        const Rational rhs = lb_eval(spec, k, x0);
        return std::pair{lhs, rhs};
    });
}

BigFloat lb_addition_general(const BasisSpec& spec, const ComplexApprox& alpha,
                             const ComplexApprox& beta, const ComplexApprox& x,
                             const TruncationConfig& cfg) {
    const unsigned d = cfg.precision_digits;
    ComplexApprox lam_alpha(Rational(1), d);
    if (alpha.is_integer())
        lam_alpha = ComplexApprox(spec.lambda.pow(alpha.to_int()), d);
    else
        lam_alpha = pow_rational_base(spec.lambda, alpha);
    const ComplexApprox lhs =
        lb_general(spec, alpha, x, cfg) * lb_general(spec, beta, lam_alpha * x, cfg);
    const ComplexApprox rhs = lb_general(spec, alpha + beta, x, cfg);
    return abs_diff(lhs, rhs);
}

BigFloat lb_general_dk(const BasisSpec& spec, const ComplexApprox& alpha,
                       std::int64_t k, const ComplexApprox& x,
                       const TruncationConfig& cfg, bool reciprocal) {
    if (k < 0) throw std::domain_error("lb_general_dk: k must be non-negative");
    const unsigned d = cfg.precision_digits;
    const ComplexApprox one(Rational(1), d);
    const ComplexApprox lam_k(spec.lambda.pow(k), d);
    const ComplexApprox lead(spec.lambda.pow(binom2(k)), d);
    const ComplexApprox xk = x.pow_int(k);
    const ComplexApprox k_c(Rational(static_cast<long>(k)), d);

    const auto f = [&](const ComplexApprox& y) {
        const ComplexApprox v = lb_general(spec, alpha, y, cfg);
        if (reciprocal) {
            if (v.is_zero()) throw std::domain_error("lb_general_dk: pole");
            return one / v;
        }
        return v;
    };
    const ComplexApprox lhs = f(lam_k * x) / (lead * xk);

    const ComplexApprox binom_k = lb_eval_complex(spec, k, x);
    ComplexApprox rhs(Rational(0), d);
    if (!reciprocal) {
        rhs = lb_general(spec, alpha + k_c, x, cfg) / (lead * xk * binom_k);
    } else {
        const ComplexApprox den = lb_general(spec, alpha + k_c, x, cfg);
        if (den.is_zero()) throw std::domain_error("lb_general_dk: vanishing denominator");
        rhs = binom_k / (lead * xk * den);
    }
    return abs_diff(lhs, rhs);
}

}  // namespace lamcalc
