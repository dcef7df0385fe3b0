#pragma once

/**
 * @file taylor.hpp
 * @brief Expansion of f(x^-1) in the basis (x-a)_lambda^k, two independent
 *        coefficient routes, and the five connection-formula families.
 *
 * Route 1 (system): apply I_lambda i times, evaluate at a, and solve the
 * lower-triangular linear system by forward substitution.
 * Route 2 (connection): re-expand each monomial x^-i through the Gaussian
 * binomial sum. The two must agree coefficient for coefficient.
 *
 * The connect_* functions always return ground-truth coefficients (the
 * reconstruct oracle holds exactly). The printed_* functions evaluate the
 * classical closed-form summands literally so callers can compare; the
 * two-point and Stieltjes-Wigert closed forms are known to deviate from the
 * exact expansion and are reported, never asserted.
 */

#include <cstdint>
#include <vector>

#include "lamcalc/lambda_binomial.hpp"
#include "lamcalc/laurent_poly.hpp"
#include "lamcalc/qsymbols.hpp"
#include "lamcalc/rational.hpp"

namespace lamcalc {

struct BasisExpansion {
    Rational a;
    Rational lambda;
    std::vector<Rational> coeffs;  // c_0 .. c_n

    BasisExpansion(Rational a_, Rational lambda_, std::vector<Rational> coeffs_);
};

/// sum_k c_k (x-a)_lambda^k, exact.
LaurentPoly reconstruct(const BasisExpansion& e);

/// Triangular-system route; f must have only non-positive exponents,
/// a != 0, lambda not in {0, 1, -1}.
BasisExpansion taylor_via_system(const LaurentPoly& f, const Rational& a,
                                 const Rational& lambda);

/// Closed-form route: coeff k = (-1)^k lambda^binom(k,2)
/// sum_{i>=k} (f_i/a^i) [i k]_lambda where f_i is the x^-i coefficient.
BasisExpansion taylor_via_connection(const LaurentPoly& f, const Rational& a,
                                     const Rational& lambda);

BasisExpansion connect_monomial(std::int64_t n, const Rational& a, const Rational& lambda);
BasisExpansion connect_two_point(std::int64_t n, const Rational& a, const Rational& b,
                                 const Rational& lambda);
BasisExpansion connect_pochhammer(std::int64_t n, const Rational& a, const Rational& lambda);
BasisExpansion connect_rogers_szego(std::int64_t n, const Rational& a,
                                    const Rational& lambda);
BasisExpansion connect_stieltjes_wigert(std::int64_t n, const Rational& a,
                                        const Rational& lambda);

/// Literal closed-form coefficient sums, for side-by-side comparison.
std::vector<Rational> printed_monomial(std::int64_t n, const Rational& a,
                                       const Rational& lambda);
/// with_sign=false drops the printed (-1)^k factor, which is the variant
/// that matches the exact expansion.
std::vector<Rational> printed_two_point(std::int64_t n, const Rational& a,
                                        const Rational& b, const Rational& lambda,
                                        bool with_sign = true);
std::vector<Rational> printed_pochhammer(std::int64_t n, const Rational& a,
                                         const Rational& lambda);
std::vector<Rational> printed_rogers_szego(std::int64_t n, const Rational& a,
                                           const Rational& lambda);
std::vector<Rational> printed_stieltjes_wigert(std::int64_t n, const Rational& a,
                                               const Rational& lambda);

enum class ConnectionFamily { monomial, twopoint, pochhammer, rogers_szego, stieltjes_wigert };

/// The function each family expands: x^-n, (x-b)_l^n, (x^-1;l)_n,
/// h_n(x^-1|l), S_n(x^-1|l).
LaurentPoly connection_target(ConnectionFamily family, std::int64_t n, const Rational& b,
                              const Rational& lambda);

}  // namespace lamcalc
