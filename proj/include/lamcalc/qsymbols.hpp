#pragma once

/**
 * @file qsymbols.hpp
 * @brief q-shifted factorials, Gaussian binomials, q-exponentials,
 *        Rogers-Szego / Stieltjes-Wigert polynomials, and the solutions of
 *        the two proportional functional equations.
 *
 * Exact pieces use Rational throughout. Infinite products and series are
 * truncated under TruncationConfig with a certified stopping rule:
 * (a;q)_infinity stops at the first N with |a||q|^N/(1-|q|) < tol.
 */

#include <cstdint>
#include <vector>

#include "lamcalc/complex_approx.hpp"
#include "lamcalc/laurent_poly.hpp"
#include "lamcalc/rational.hpp"

namespace lamcalc {

/// Ordinary polynomial in one variable; coeffs[k] multiplies z^k.
/// The last stored coefficient is nonzero unless the polynomial is zero.
class QPolynomial {
public:
    QPolynomial() = default;
    explicit QPolynomial(std::vector<Rational> coeffs);

    static QPolynomial one();

    bool is_zero() const { return coeffs_.empty(); }
    std::size_t size() const { return coeffs_.size(); }
    std::int64_t degree() const;  // -1 for the zero polynomial
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational coeff(std::size_t k) const;

    Rational eval(const Rational& z0) const;

    /// Coefficient list "[c0, c1, ...]".
    std::string str() const;

    friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);
    friend bool operator==(const QPolynomial& a, const QPolynomial& b) = default;

    /// Substitutes z = x^-1: coefficient of z^k becomes the x^-k term.
    LaurentPoly substitute_inverse() const;

private:
    std::vector<Rational> coeffs_;
};

struct TruncationConfig {
    unsigned precision_digits = 50;
    double tol = 1e-30;
    std::int64_t max_terms = 10000;

    void validate() const;
};

/// (a;q)_n = prod_{k=0}^{n-1} (1 - q^k a); empty product for n = 0.
Rational q_pochhammer(const Rational& a, const Rational& q, std::int64_t n);

/// (a;q)_infinity for |q| < 1, truncated under cfg.
ComplexApprox q_pochhammer_inf(const ComplexApprox& a, const ComplexApprox& q,
                               const TruncationConfig& cfg);

/// Gaussian binomial (q;q)_n / ((q;q)_k (q;q)_{n-k}); 0 outside 0 <= k <= n.
Rational q_binomial(std::int64_t n, std::int64_t k, const Rational& q);

/// Coefficients of (x;q)_n by the Gauss binomial sum
/// sum_k [n k]_q q^binom(k,2) (-1)^k x^k.
QPolynomial gauss_expand(std::int64_t n, const Rational& q);

/// Direct product expansion of (x;q)_n; the independent route to gauss_expand.
QPolynomial q_pochhammer_poly(std::int64_t n, const Rational& q);

/// e_q(z) = sum z^n/(q;q)_n = 1/(z;q)_inf; needs |z| < 1, |q| < 1.
ComplexApprox e_q(const ComplexApprox& z, const ComplexApprox& q,
                  const TruncationConfig& cfg);

/// E_q(z) = sum q^binom(n,2) z^n/(q;q)_n = (-z;q)_inf; needs |q| < 1.
ComplexApprox big_e_q(const ComplexApprox& z, const ComplexApprox& q,
                      const TruncationConfig& cfg);

/// Rogers-Szego h_n(x|q): coeffs[k] = [n k]_q.
QPolynomial rogers_szego(std::int64_t n, const Rational& q);

/// Stieltjes-Wigert S_n(x|q): coeffs[k] = [n k]_q q^{k^2} / (q;q)_n.
QPolynomial stieltjes_wigert(std::int64_t n, const Rational& q);

/// f(x) = (a/x; 1/lambda)_inf, the solution of
/// x f(lambda x) = x f(x) + a f(lambda x) with f(inf) = 1; lambda > 1.
ComplexApprox solution_E(const Rational& a, const Rational& lambda,
                         const ComplexApprox& x, const TruncationConfig& cfg);

/// f(x) = 1/(a/x; 1/lambda)_inf, the solution of
/// a f(x) = x f(x) - x f(lambda x) with f(inf) = 1; lambda > 1.
ComplexApprox solution_e(const Rational& a, const Rational& lambda,
                         const ComplexApprox& x, const TruncationConfig& cfg);

/// x f(lambda x) - x f(x) - a f(lambda x) with f = solution_E.
ComplexApprox solution_E_residual(const Rational& a, const Rational& lambda,
                                  const ComplexApprox& x, const TruncationConfig& cfg);

/// a f(x) - x f(x) + x f(lambda x) with f = solution_e.
ComplexApprox solution_e_residual(const Rational& a, const Rational& lambda,
                                  const ComplexApprox& x, const TruncationConfig& cfg);

}  // namespace lamcalc
