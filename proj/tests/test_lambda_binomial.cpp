#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "lamcalc/lambda_binomial.hpp"
#include "lamcalc/rng.hpp"

using namespace lamcalc;

TEST_CASE("lb_expand worked values") {
    const BasisSpec spec(Rational(1), Rational(2));
    CHECK(lb_expand(spec, 0) == LaurentPoly::constant(Rational(1)));
    // (1 - 1/x)(1 - 1/(2x)) = 1 - (3/2)x^-1 + (1/2)x^-2
    CHECK(lb_expand(spec, 2) == LaurentPoly::parse("0:1,-1:-3/2,-2:1/2"));
    const BasisSpec g(Rational(5, 3), Rational(7));
    CHECK(lb_expand(g, 1) == LaurentPoly::parse("0:1,-1:-5/3"));
    CHECK_THROWS_AS(BasisSpec(Rational(1), Rational(0)), std::domain_error);
}

TEST_CASE("expansion shape invariants") {
    Rng rng(31);
    for (int t = 0; t < 100; ++t) {
        const Rational a = rng.nonzero_rational();
        const Rational lambda = rng.generic_lambda();
        const BasisSpec spec(a, lambda);
        const std::int64_t n = rng.uniform(0, 8);
        const LaurentPoly e = lb_expand(spec, n);
        CHECK(e.term_count() == static_cast<std::size_t>(n) + 1);
        CHECK(e.coeff(0) == Rational(1));
        CHECK(e.min_exp() == -n);
        CHECK(e.coeff(-n) == (-a).pow(n) * lambda.pow(-binom2(n)));
    }
}

TEST_CASE("lb_eval against the expansion and the negative-power definition") {
    const BasisSpec spec(Rational(1), Rational(2));
    // 1/(1 - 2*1/4) = 2
    CHECK(lb_eval(spec, -1, Rational(4)) == Rational(2));
    CHECK(lb_eval(spec, 0, Rational(9, 7)) == Rational(1));
    // (1 - 1/2)(1 - 1/4) = 3/8
    CHECK(lb_eval(spec, 2, Rational(2)) == Rational(3, 8));
    CHECK_THROWS_AS(lb_eval(spec, 1, Rational(0)), std::domain_error);
    // pole: denominator factor 1 - 2x^-1... at x = 2: (2^-1*2 - 1) term
    CHECK_THROWS_AS(lb_eval(spec, -1, Rational(2)), std::domain_error);

    Rng rng(77);
    for (int t = 0; t < 200; ++t) {
        const BasisSpec s(rng.nonzero_rational(), rng.generic_lambda());
        const std::int64_t n = rng.uniform(0, 8);
        const Rational x0 = rng.nonzero_rational();
        CHECK(lb_eval(s, n, x0) == lb_expand(s, n).eval(x0));
    }
}

TEST_CASE("useful identities") {
    Rng rng(88);
    for (int t = 0; t < 50; ++t) {
        const Rational a = rng.nonzero_rational();
        const Rational lambda = rng.generic_lambda();
        const BasisSpec spec(a, lambda);
        for (std::int64_t i = 0; i <= 10; ++i) {
            const Rational qq = q_pochhammer(lambda, lambda, i);
            // (lambda^-i a - a)_l^i = (lambda;lambda)_i
            CHECK(lb_eval(spec, i, lambda.pow(-i) * a) == qq);
            // (a - a)_l^-i = 1/(lambda;lambda)_i
            CHECK(lb_eval(spec, -i, a) == qq.inverse());
            // (a - a)_l^i = 0 for i >= 1
            if (i >= 1) CHECK(lb_eval(spec, i, a) == Rational(0));
        }
    }
}

TEST_CASE("lb_general at integer orders") {
    TruncationConfig cfg;
    const unsigned d = cfg.precision_digits;
    const BasisSpec spec(Rational(1), Rational(2));

    CHECK(lb_general(spec, ComplexApprox(Rational(0), d),
                     ComplexApprox(Rational(5, 7), d), cfg)
              .re() == 1);
    // alpha = 2, x = 3 -> (2/3)(5/6) = 5/9
    CHECK(abs_diff(lb_general(spec, ComplexApprox(Rational(2), d),
                              ComplexApprox(Rational(3), d), cfg),
                   ComplexApprox(Rational(5, 9), d)) < BigFloat(1e-29));
    // alpha = -1, x = 4 -> 2
    CHECK(abs_diff(lb_general(spec, ComplexApprox(Rational(-1), d),
                              ComplexApprox(Rational(4), d), cfg),
                   ComplexApprox(Rational(2), d)) < BigFloat(1e-29));

    CHECK_THROWS_AS(lb_general(BasisSpec(Rational(1), Rational(1, 2)),
                               ComplexApprox(Rational(1), d),
                               ComplexApprox(Rational(3), d), cfg),
                    std::domain_error);
    CHECK_THROWS_AS(lb_general(spec, ComplexApprox(Rational(1), d),
                               ComplexApprox(Rational(0), d), cfg),
                    std::domain_error);
    // negative lambda with |lambda| > 1 works only for integer alpha
    const BasisSpec neg(Rational(1), Rational(-2));
    CHECK(lb_general(neg, ComplexApprox(Rational(1), d),
                     ComplexApprox(Rational(3), d), cfg)
              .digits() == d);
    CHECK_THROWS_AS(lb_general(neg, ComplexApprox(Rational(1, 2), d),
                               ComplexApprox(Rational(3), d), cfg),
                    std::domain_error);

    Rng rng(3);
    for (int done = 0; done < 20;) {
        const std::int64_t alpha = rng.uniform(-3, 3);
        const Rational a(rng.uniform(-2, 2), rng.uniform(1, 3));
        const Rational x(rng.uniform(3, 9));
        if (a.is_zero()) continue;
        bool pole = false;
        const Rational lam = rng.coin() ? Rational(2) : Rational(3, 2);
        for (int m = -3; m <= -1; ++m)
            if (a / x == lam.pow(m)) pole = true;
        if (pole) continue;
        const BasisSpec s(a, lam);
        const ComplexApprox got =
            lb_general(s, ComplexApprox(Rational(alpha), d), ComplexApprox(x, d), cfg);
        CHECK(abs_diff(got, ComplexApprox(lb_eval(s, alpha, x), d)) < BigFloat(1e-25));
        ++done;
    }
}

TEST_CASE("lb_dk certificates") {
    Rng rng(61);
    // exact branch
    const BasisSpec spec(Rational(1), Rational(2));
    auto cert = lb_dk(spec, 2, 0, rng);
    CHECK(cert.holds);
    CHECK(cert.exact);
    cert = lb_dk(spec, 1, 1, rng);
    CHECK(cert.holds);
    CHECK(cert.exact);
    // pointwise branch
    cert = lb_dk(spec, -1, 1, rng);
    CHECK(cert.holds);
    CHECK(!cert.exact);
    CHECK(cert.points == 4);  // max(1,1)+1+2

    for (int t = 0; t < 30; ++t) {
        const BasisSpec s(rng.nonzero_rational(), rng.generic_lambda());
        const std::int64_t n = rng.uniform(-6, 8);
        const std::int64_t k = rng.uniform(0, 6);
        const auto c = lb_dk(s, n, k, rng);
        INFO("a=", s.a.str(), " lambda=", s.lambda.str(), " n=", n, " k=", k, " ",
             c.detail);
        CHECK(c.holds);
    }
}

TEST_CASE("lb_ik certificates") {
    Rng rng(62);
    const BasisSpec spec(Rational(1), Rational(2));
    // I^2 applied to 1 gives x^2/8
    auto cert = lb_ik(spec, 0, 2, rng);
    CHECK(cert.holds);
    CHECK(cert.exact);
    CHECK(cert.lhs == "2:1/8");
    cert = lb_ik(spec, 2, 1, rng);
    CHECK(cert.holds);
    CHECK(cert.exact);
    // k > n switches to the pointwise branch
    cert = lb_ik(spec, 1, 3, rng);
    CHECK(cert.holds);
    CHECK(!cert.exact);

    for (int t = 0; t < 30; ++t) {
        const BasisSpec s(rng.nonzero_rational(), rng.generic_lambda());
        const std::int64_t n = rng.uniform(-6, 8);
        const std::int64_t k = rng.uniform(0, 6);
        const auto c = lb_ik(s, n, k, rng);
        INFO("a=", s.a.str(), " lambda=", s.lambda.str(), " n=", n, " k=", k, " ",
             c.detail);
        CHECK(c.holds);
    }
}

TEST_CASE("lb_dk_reciprocal certificates") {
    Rng rng(63);
    const BasisSpec spec(Rational(1), Rational(2));
    auto cert = lb_dk_reciprocal(spec, 0, 1, rng);
    CHECK(cert.holds);
    cert = lb_dk_reciprocal(spec, 1, 1, rng);
    CHECK(cert.holds);
    CHECK(cert.points == 5);
    const BasisSpec s3(Rational(1), Rational(3));
    cert = lb_dk_reciprocal(s3, 2, 2, rng);
    CHECK(cert.holds);
    CHECK(cert.points == 8);

    for (int t = 0; t < 30; ++t) {
        const BasisSpec s(rng.nonzero_rational(), rng.generic_lambda());
        const auto c = lb_dk_reciprocal(s, rng.uniform(0, 8), rng.uniform(0, 6), rng);
        INFO(c.detail);
        CHECK(c.holds);
    }
}

TEST_CASE("lb_addition certificates") {
    Rng rng(64);
    const BasisSpec spec(Rational(1), Rational(2));
    auto cert = lb_addition(spec, 0, 3);
    CHECK(cert.holds);
    cert = lb_addition(spec, 1, 1);
    CHECK(cert.holds);
    CHECK(cert.lhs == lb_expand(spec, 2).str());

    for (int t = 0; t < 50; ++t) {
        const BasisSpec s(rng.nonzero_rational(), rng.generic_lambda());
        CHECK(lb_addition(s, rng.uniform(0, 6), rng.uniform(0, 6)).holds);
    }
}

TEST_CASE("general-power numeric identities") {
    TruncationConfig cfg;
    const unsigned d = cfg.precision_digits;
    const BasisSpec spec(Rational(1), Rational(2));
    const ComplexApprox x3(Rational(3), d);

    // k = 0 is the trivial identity
    CHECK(lb_general_dk(spec, ComplexApprox(Rational(1, 2), d), 0, x3, cfg) == 0);
    // alpha = 1/2, k = 1 from the worked example set
    CHECK(lb_general_dk(spec, ComplexApprox(Rational(1, 2), d), 1, x3, cfg) <
          BigFloat(1e-29));
    CHECK(lb_general_dk(spec, ComplexApprox(Rational(1, 2), d), 1, x3, cfg, true) <
          BigFloat(1e-29));
    // integer alpha cross-checks the exact path
    CHECK(lb_general_dk(spec, ComplexApprox(Rational(2), d), 2, x3, cfg) <
          BigFloat(1e-29));

    // addition formula, complex exponents
    CHECK(lb_addition_general(spec, ComplexApprox(Rational(1, 2), d),
                              ComplexApprox(Rational(3, 2), d), x3, cfg) <
          BigFloat(1e-29));
    CHECK(lb_addition_general(spec, ComplexApprox(Rational(0), Rational(1, 3), d),
                              ComplexApprox(Rational(1, 2), Rational(-1, 3), d), x3,
                              cfg) < BigFloat(1e-28));
}
