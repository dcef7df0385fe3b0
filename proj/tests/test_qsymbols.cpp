#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "lamcalc/qsymbols.hpp"
#include "lamcalc/rng.hpp"

using namespace lamcalc;

TEST_CASE("q_pochhammer exact values") {
    CHECK(q_pochhammer(Rational(7, 2), Rational(5), 0) == Rational(1));
    // (1-2)(1-6) = 5
    CHECK(q_pochhammer(Rational(2), Rational(3), 2) == Rational(5));
    const Rational q(4, 7);
    CHECK(q_pochhammer(q, q, 1) == Rational(1) - q);
}

TEST_CASE("q_pochhammer_inf against a long direct product") {
    TruncationConfig cfg;
    const unsigned d = cfg.precision_digits;
    const ComplexApprox half(Rational(1, 2), d);
    const ComplexApprox got = q_pochhammer_inf(half, half, cfg);
    // direct oracle: 121 factors of (1 - 2^{-k-1}) at the same precision
    ComplexApprox want(Rational(1), d);
    const ComplexApprox one(Rational(1), d);
    for (int k = 0; k <= 120; ++k)
        want = want * (one - ComplexApprox(Rational(1, 2).pow(k + 1), d));
    CHECK(abs_diff(got, want) < BigFloat(1e-25));

    CHECK(q_pochhammer_inf(ComplexApprox(Rational(0), d), half, cfg).re() == 1);
    // q = 0: only the k = 0 factor differs from 1
    const ComplexApprox a(Rational(1, 3), d);
    CHECK(abs_diff(q_pochhammer_inf(a, ComplexApprox(Rational(0), d), cfg),
                   ComplexApprox(Rational(2, 3), d)) < BigFloat(1e-49));
    CHECK_THROWS_AS(q_pochhammer_inf(a, ComplexApprox(Rational(1), d), cfg),
                    std::domain_error);
    TruncationConfig tiny = cfg;
    tiny.max_terms = 3;
    CHECK_THROWS_AS(q_pochhammer_inf(half, half, tiny), std::overflow_error);
}

TEST_CASE("q_binomial exact values and guards") {
    CHECK(q_binomial(5, 0, Rational(9, 7)) == Rational(1));
    CHECK(q_binomial(4, 2, Rational(2)) == Rational(35));
    CHECK(q_binomial(3, -1, Rational(2)) == Rational(0));
    CHECK(q_binomial(3, 4, Rational(2)) == Rational(0));
    const Rational q(3, 5);
    CHECK(q_binomial(5, 2, q) == q_binomial(5, 3, q));
    CHECK_THROWS_AS(q_binomial(2, 1, Rational(1)), std::domain_error);
    CHECK_THROWS_AS(q_binomial(2, 1, Rational(-1)), std::domain_error);
    // [1 k]_{-1} is still well-defined
    CHECK(q_binomial(1, 1, Rational(-1)) == Rational(1));
}

TEST_CASE("gauss expansion equals the direct product") {
    CHECK(gauss_expand(0, Rational(5)) == QPolynomial::one());
    const Rational q(3, 4);
    CHECK(gauss_expand(2, q) ==
          QPolynomial({Rational(1), -(Rational(1) + q), q}));
    // (1-x)(1-2x)(1-4x) = 1 - 7x + 14x^2 - 8x^3
    CHECK(gauss_expand(3, Rational(2)) ==
          QPolynomial({Rational(1), Rational(-7), Rational(14), Rational(-8)}));

    Rng rng(17);
    for (int t = 0; t < 20; ++t) {
        const Rational qq = rng.generic_lambda();
        for (std::int64_t n = 0; n <= 10; ++n)
            CHECK(gauss_expand(n, qq) == q_pochhammer_poly(n, qq));
    }
}

TEST_CASE("pascal recurrence as an independent q_binomial oracle") {
    Rng rng(23);
    for (int t = 0; t < 50; ++t) {
        const Rational q = rng.generic_lambda();
        for (std::int64_t n = 1; n <= 8; ++n)
            for (std::int64_t k = 0; k <= n; ++k)
                CHECK(q_binomial(n, k, q) ==
                      q_binomial(n - 1, k - 1, q) + q.pow(k) * q_binomial(n - 1, k, q));
    }
}

TEST_CASE("q-exponentials") {
    TruncationConfig cfg;
    const unsigned d = cfg.precision_digits;
    const ComplexApprox zero(Rational(0), d);

    // e_0(z) = 1/(1-z)
    CHECK(abs_diff(e_q(ComplexApprox(Rational(1, 2), d), zero, cfg),
                   ComplexApprox(Rational(2), d)) < BigFloat(1e-30));
    CHECK(e_q(zero, ComplexApprox(Rational(1, 3), d), cfg).re() == 1);

    // E_0(z) = 1 + z
    CHECK(abs_diff(big_e_q(ComplexApprox(Rational(2, 5), d), zero, cfg),
                   ComplexApprox(Rational(7, 5), d)) == 0);
    CHECK(big_e_q(zero, ComplexApprox(Rational(1, 3), d), cfg).re() == 1);

    // series vs product forms at the pinned points
    {
        const ComplexApprox z(Rational(1, 3), d);
        const ComplexApprox q(Rational(1, 2), d);
        const ComplexApprox one(Rational(1), d);
        CHECK(abs_diff(e_q(z, q, cfg), one / q_pochhammer_inf(z, q, cfg)) <
              BigFloat(1e-25));
        CHECK(abs_diff(big_e_q(z, q, cfg), q_pochhammer_inf(-z, q, cfg)) <
              BigFloat(1e-25));
    }
    {
        const ComplexApprox z(Rational(1, 2), d);
        const ComplexApprox q(Rational(1, 3), d);
        const ComplexApprox one(Rational(1), d);
        CHECK(abs_diff(e_q(z, q, cfg), one / q_pochhammer_inf(z, q, cfg)) <
              BigFloat(1e-25));
        CHECK(abs_diff(big_e_q(z, q, cfg), q_pochhammer_inf(-z, q, cfg)) <
              BigFloat(1e-25));
        CHECK(abs_diff(e_q(z, q, cfg) * big_e_q(-z, q, cfg), one) < BigFloat(1e-29));
    }

    CHECK_THROWS_AS(
        e_q(ComplexApprox(Rational(2), d), ComplexApprox(Rational(1, 2), d), cfg),
        std::domain_error);
    CHECK_THROWS_AS(
        big_e_q(ComplexApprox(Rational(1, 2), d), ComplexApprox(Rational(2), d), cfg),
        std::domain_error);
}

TEST_CASE("rogers-szego and stieltjes-wigert coefficients") {
    const Rational q(5, 3);
    CHECK(rogers_szego(0, q) == QPolynomial::one());
    CHECK(rogers_szego(1, q) == QPolynomial({Rational(1), Rational(1)}));
    CHECK(rogers_szego(2, q) ==
          QPolynomial({Rational(1), Rational(1) + q, Rational(1)}));

    CHECK(stieltjes_wigert(0, q) == QPolynomial::one());
    // S_1 = (1 + qx)/(1-q)
    const Rational iq = (Rational(1) - q).inverse();
    CHECK(stieltjes_wigert(1, q) == QPolynomial({iq, q * iq}));
    CHECK(stieltjes_wigert(1, Rational(1, 2)) ==
          QPolynomial({Rational(2), Rational(1)}));
    CHECK_THROWS_AS(stieltjes_wigert(1, Rational(1)), std::domain_error);
}

TEST_CASE("proportional equation solutions") {
    TruncationConfig cfg;
    const unsigned d = cfg.precision_digits;
    const ComplexApprox one(Rational(1), d);

    // a = 0 solves trivially with f = 1
    CHECK(solution_E(Rational(0), Rational(2), one, cfg).re() == 1);
    CHECK(solution_e(Rational(0), Rational(2), one, cfg).re() == 1);

    // boundary value at a huge argument
    const ComplexApprox far = ComplexApprox::parse_decimal("1e30", d);
    CHECK(abs_diff(solution_E(Rational(1), Rational(2), far, cfg), one) <
          BigFloat(1e-29));

    // residuals of the defining functional equations
    const ComplexApprox x(Rational(3), d);
    CHECK(solution_E_residual(Rational(1), Rational(2), x, cfg).abs() <
          BigFloat(1e-25));
    CHECK(solution_e_residual(Rational(1), Rational(2), x, cfg).abs() <
          BigFloat(1e-25));

    // reciprocal pairing
    CHECK(abs_diff(solution_e(Rational(1), Rational(2), x, cfg) *
                       solution_E(Rational(1), Rational(2), x, cfg),
                   one) < BigFloat(1e-29));

    CHECK_THROWS_AS(solution_E(Rational(1), Rational(1, 2), x, cfg), std::domain_error);
    CHECK_THROWS_AS(solution_E(Rational(1), Rational(2), ComplexApprox(Rational(0), d), cfg),
                    std::domain_error);
    // a/x = 2 = lambda^1 zeroes a factor of the product
    CHECK_THROWS_AS(solution_e(Rational(2), Rational(2), one, cfg), std::domain_error);
}

TEST_CASE("frozen cross-library reference values") {
    // computed independently with mpmath's qp() at 60 digits
    TruncationConfig cfg;
    cfg.tol = 1e-45;
    const unsigned d = cfg.precision_digits;
    const ComplexApprox solE =
        solution_E(Rational(1), Rational(2), ComplexApprox(Rational(3), d), cfg);
    const ComplexApprox solE_want = ComplexApprox::parse_decimal(
        "0.4679858724686192124848829642989564750623", d);
    CHECK(abs_diff(solE, solE_want) < BigFloat(1e-39));

    const ComplexApprox eq = e_q(ComplexApprox(Rational(1, 3), d),
                                 ComplexApprox(Rational(1, 2), d), cfg);
    const ComplexApprox eq_want = ComplexApprox::parse_decimal(
        "2.136816640906302121261249841949583604682", d);
    CHECK(abs_diff(eq, eq_want) < BigFloat(1e-38));

    const ComplexApprox Eq = big_e_q(ComplexApprox(Rational(1, 2), d),
                                     ComplexApprox(Rational(1, 3), d), cfg);
    const ComplexApprox Eq_want = ComplexApprox::parse_decimal(
        "1.89889104398531887372547698339427717881", d);
    CHECK(abs_diff(Eq, Eq_want) < BigFloat(1e-37));
}

TEST_CASE("residuals across the lambda/a/x acceptance grid") {
    TruncationConfig cfg;
    const unsigned d = cfg.precision_digits;
    for (const Rational& lambda : {Rational(3, 2), Rational(2)})
        for (const Rational& a : {Rational(1, 2), Rational(1)})
            for (long xv : {1L, 5L}) {
                const ComplexApprox x(Rational(xv), d);
                CHECK(solution_E_residual(a, lambda, x, cfg).abs() < BigFloat(1e-25));
                if (a == Rational(xv)) {
                    // a/x = 1 zeroes the k=0 factor: outside solution_e's domain
                    CHECK_THROWS_AS(solution_e_residual(a, lambda, x, cfg),
                                    std::domain_error);
                } else {
                    CHECK(solution_e_residual(a, lambda, x, cfg).abs() <
                          BigFloat(1e-25));
                }
            }
}

TEST_CASE("qpolynomial plumbing") {
    const QPolynomial p({Rational(1), Rational(0), Rational(3)});
    CHECK(p.degree() == 2);
    CHECK(p.eval(Rational(2)) == Rational(13));
    CHECK(p.substitute_inverse() == LaurentPoly::parse("0:1,-2:3"));
    CHECK(QPolynomial({Rational(0)}).is_zero());
    CHECK(QPolynomial({Rational(1), Rational(0)}).degree() == 0);
    TruncationConfig bad;
    bad.tol = 0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}
