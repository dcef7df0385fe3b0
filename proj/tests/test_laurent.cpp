#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>
#include <stdexcept>

#include "lamcalc/laurent_poly.hpp"
#include "lamcalc/rng.hpp"

using lamcalc::LaurentPoly;
using lamcalc::Rational;
using lamcalc::Rng;

namespace {

LaurentPoly random_poly(Rng& rng, int lo, int hi, int max_terms) {
    LaurentPoly p;
    const auto n = rng.uniform(1, max_terms);
    for (std::int64_t i = 0; i < n; ++i)
        p += LaurentPoly::monomial(rng.uniform(lo, hi), rng.rational());
    return p;
}

// term-by-term convolution oracle, independent of operator*
LaurentPoly naive_mul(const LaurentPoly& a, const LaurentPoly& b) {
    std::map<std::int64_t, Rational> acc;
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms()) acc[ea + eb] += ca * cb;
    LaurentPoly r;
    for (const auto& [e, c] : acc) r += LaurentPoly::monomial(e, c);
    return r;
}

}  // namespace

TEST_CASE("basic arithmetic") {
    const LaurentPoly x = LaurentPoly::monomial(1, Rational(1));
    const LaurentPoly one = LaurentPoly::constant(Rational(1));
    CHECK((x + one) * (x - one) == LaurentPoly::parse("2:1,0:-1"));
    CHECK(LaurentPoly::parse("-1:1,0:2") * x == LaurentPoly::parse("0:1,1:2"));

    const LaurentPoly f = LaurentPoly::parse("3:2,-2:1/3");
    CHECK(f + LaurentPoly() == f);
    CHECK(f - f == LaurentPoly());
    CHECK(f * LaurentPoly() == LaurentPoly());
}

TEST_CASE("zero coefficients are never stored") {
    LaurentPoly f = LaurentPoly::parse("2:1,0:3");
    f += LaurentPoly::monomial(2, Rational(-1));
    CHECK(f.term_count() == 1);
    CHECK(f.coeff(2) == Rational(0));
    CHECK(f == LaurentPoly::constant(Rational(3)));
}

TEST_CASE("scaled_arg substitutes c*x") {
    // f(x) = x^2 + 3 at 2x -> 4x^2 + 3
    CHECK(LaurentPoly::parse("2:1,0:3").scaled_arg(Rational(2)) ==
          LaurentPoly::parse("2:4,0:3"));
    // x^-1 at 2x -> (1/2) x^-1
    CHECK(LaurentPoly::parse("-1:1").scaled_arg(Rational(2)) ==
          LaurentPoly::parse("-1:1/2"));
    const LaurentPoly f = LaurentPoly::parse("5:1,-3:2/7,0:1");
    CHECK(f.scaled_arg(Rational(1)) == f);
    CHECK_THROWS_AS(f.scaled_arg(Rational(0)), std::domain_error);
}

TEST_CASE("evaluation") {
    CHECK(LaurentPoly::parse("2:1,0:-1").eval(Rational(3)) == Rational(8));
    CHECK(LaurentPoly::parse("-1:1").eval(Rational(1, 2)) == Rational(2));
    CHECK_THROWS_AS(LaurentPoly::parse("-1:1").eval(Rational(0)), std::domain_error);
    CHECK(LaurentPoly::parse("3:1,0:5").eval(Rational(0)) == Rational(5));
    CHECK(LaurentPoly().eval(Rational(0)) == Rational(0));
}

TEST_CASE("exponent overflow is detected") {
    const LaurentPoly huge = LaurentPoly::monomial(INT64_MAX - 1, Rational(1));
    CHECK_THROWS_AS(huge.shifted(10), std::overflow_error);
    CHECK_THROWS_AS(huge * huge, std::overflow_error);
    CHECK(huge.shifted(1).max_exp() == INT64_MAX);
}

TEST_CASE("text format") {
    const LaurentPoly f = LaurentPoly::parse("2:1,0:3,-1:1/2");
    CHECK(f.str() == "2:1,0:3,-1:1/2");  // descending exponents
    CHECK(LaurentPoly::parse("-1:1/2,0:3,2:1") == f);
    CHECK(LaurentPoly().str() == "0:0");
    CHECK(LaurentPoly::parse("0:0") == LaurentPoly());
    CHECK_THROWS_AS(LaurentPoly::parse("2:1,2:3"), std::invalid_argument);
    CHECK_THROWS_AS(LaurentPoly::parse("a:1"), std::invalid_argument);
    CHECK_THROWS_AS(LaurentPoly::parse("1:"), std::invalid_argument);
    CHECK_THROWS_AS(LaurentPoly::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(LaurentPoly::parse("1:1,"), std::invalid_argument);
}

TEST_CASE("text round-trip on random polys") {
    Rng rng(7);
    for (int i = 0; i < 200; ++i) {
        const LaurentPoly f = random_poly(rng, -12, 12, 9);
        CHECK(LaurentPoly::parse(f.str()) == f);
    }
}

TEST_CASE("ring laws on random triples") {
    Rng rng(42);
    for (int i = 0; i < 100; ++i) {
        const LaurentPoly f = random_poly(rng, -6, 6, 6);
        const LaurentPoly g = random_poly(rng, -6, 6, 6);
        const LaurentPoly h = random_poly(rng, -6, 6, 6);
        CHECK((f + g) + h == f + (g + h));
        CHECK(f + g == g + f);
        CHECK(f * g == g * f);
        CHECK((f * g) * h == f * (g * h));
        CHECK(f * (g + h) == f * g + f * h);
        CHECK(f * g == naive_mul(f, g));
    }
}

TEST_CASE("scaled_arg inverse and eval homomorphism") {
    Rng rng(11);
    for (int i = 0; i < 100; ++i) {
        const LaurentPoly f = random_poly(rng, -8, 8, 8);
        const Rational c = rng.nonzero_rational();
        CHECK(f.scaled_arg(c).scaled_arg(c.inverse()) == f);
        const LaurentPoly g = random_poly(rng, -4, 4, 5);
        const Rational x0 = rng.nonzero_rational();
        CHECK((f * g).eval(x0) == f.eval(x0) * g.eval(x0));
    }
}

TEST_CASE("polys agreeing on enough points are equal") {
    // two distinct polys of total support <= m can agree on at most m points,
    // so m+1 distinct agreements pin them
    Rng rng(5);
    for (int it = 0; it < 50; ++it) {
        const LaurentPoly f = random_poly(rng, -5, 5, 4);
        const LaurentPoly g = random_poly(rng, -5, 5, 4);
        if (f == g) continue;
        const std::size_t m = f.term_count() + g.term_count();
        std::set<Rational> points;
        while (points.size() < m + 1) {
            const Rational x0(rng.uniform(-40, 40), rng.uniform(1, 9));
            if (!x0.is_zero()) points.insert(x0);
        }
        bool all_agree = true;
        for (const auto& x0 : points)
            if (f.eval(x0) != g.eval(x0)) all_agree = false;
        CHECK(!all_agree);
    }
}
