#pragma once

/**
 * @file lambda_binomial.hpp
 * @brief The binomial-type basis (x-a)_lambda^n and its operator calculus.
 *
 * (x-a)_lambda^n = prod_{k=0}^{n-1} (1 - a/(lambda^k x)) for n >= 0, with
 * (x-a)_lambda^{-n} = 1 / ((lambda^{-n}x - a)_lambda^n). Nonnegative powers
 * expand to Laurent polynomials with support {0,...,-n}; negative powers are
 * rational functions handled by exact pointwise evaluation.
 *
 * Operator identities that leave the polynomial ring are certified exactly
 * at enough distinct nonzero rational sample points to pin the rational
 * functions involved; points are drawn from a caller-provided seeded
 * generator and re-drawn on pole collisions.
 */

#include <cstdint>
#include <string>

#include "lamcalc/complex_approx.hpp"
#include "lamcalc/laurent_poly.hpp"
#include "lamcalc/qsymbols.hpp"
#include "lamcalc/rational.hpp"
#include "lamcalc/rng.hpp"

namespace lamcalc {

struct BasisSpec {
    Rational a;
    Rational lambda;

    BasisSpec(Rational a_, Rational lambda_);
};

/// Exact expansion of (x-a)_lambda^n, n >= 0.
LaurentPoly lb_expand(const BasisSpec& spec, std::int64_t n);

/// Exact value of (x-a)_lambda^n at x0 for any integer n; throws on x0 = 0
/// or on a vanishing denominator factor.
Rational lb_eval(const BasisSpec& spec, std::int64_t n, const Rational& x0);

/// Same function at a complex point (finite products, any integer n).
ComplexApprox lb_eval_complex(const BasisSpec& spec, std::int64_t n,
                              const ComplexApprox& x);

/// General power (x-a)_lambda^alpha = (a/x;1/lambda)_inf / (a/(lambda^alpha x);1/lambda)_inf.
/// Requires |lambda| > 1; non-integer alpha additionally requires lambda > 1
/// (principal branch).
ComplexApprox lb_general(const BasisSpec& spec, const ComplexApprox& alpha,
                         const ComplexApprox& x, const TruncationConfig& cfg);

struct IdentityCertificate {
    bool holds = false;
    bool exact = false;   // compared as Laurent polynomials
    int points = 0;       // sample count in pointwise mode
    std::string lhs;      // both sides (polynomial text or first sampled values)
    std::string rhs;
    std::string detail;   // mismatch description; empty when the identity holds
};

/// lambda^binom(k,2) x^k (x-a)_l^k D_l^k (x-a)_l^n = (x-a)_l^{n+k}; exact
/// Laurent comparison for n >= 0, pointwise at max(|n|,k)+k+2 points otherwise.
IdentityCertificate lb_dk(const BasisSpec& spec, std::int64_t n, std::int64_t k, Rng& rng);

/// I_l^k (x-a)_l^n = x^k (lambda^{-k}x-a)_l^k (x-a)_l^{n-k} / lambda^binom(k+1,2);
/// exact for 0 <= k <= n, pointwise otherwise.
IdentityCertificate lb_ik(const BasisSpec& spec, std::int64_t n, std::int64_t k, Rng& rng);

/// (x-a)_l^{n+m} = (x-a)_l^m (lambda^m x-a)_l^n, exact for m, n >= 0.
IdentityCertificate lb_addition(const BasisSpec& spec, std::int64_t m, std::int64_t n);

/// lambda^binom(k,2) x^k (x-a)_l^{n+k} D_l^k [(x-a)_l^n]^{-1} = (x-a)_l^k,
/// n >= 0, certified at n+2k+2 points.
IdentityCertificate lb_dk_reciprocal(const BasisSpec& spec, std::int64_t n,
                                     std::int64_t k, Rng& rng);

/// |lhs - rhs| for the complex addition formula
/// (x-a)_l^alpha (lambda^alpha x-a)_l^beta = (x-a)_l^{alpha+beta}.
BigFloat lb_addition_general(const BasisSpec& spec, const ComplexApprox& alpha,
                             const ComplexApprox& beta, const ComplexApprox& x,
                             const TruncationConfig& cfg);

/// |lhs - rhs| for D_l^k (x-a)_l^alpha = (x-a)_l^{alpha+k} /
/// (lambda^binom(k,2) x^k (x-a)_l^k), with D_l^k applied through the
/// closed form f(lambda^k x)/(lambda^binom(k,2) x^k). With reciprocal=true,
/// checks the 1/(x-a)_l^alpha variant instead.
BigFloat lb_general_dk(const BasisSpec& spec, const ComplexApprox& alpha,
                       std::int64_t k, const ComplexApprox& x,
                       const TruncationConfig& cfg, bool reciprocal = false);

}  // namespace lamcalc
