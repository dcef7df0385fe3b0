#include "lamcalc/qsymbols.hpp"

#include <stdexcept>

namespace lamcalc {

QPolynomial::QPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

QPolynomial QPolynomial::one() {
    return QPolynomial({Rational(1)});
}

std::int64_t QPolynomial::degree() const {
    return static_cast<std::int64_t>(coeffs_.size()) - 1;
}

Rational QPolynomial::coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

Rational QPolynomial::eval(const Rational& z0) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z0 + *it;
    return acc;
}

std::string QPolynomial::str() const {
    return lamcalc::str(coeffs_);
}

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return QPolynomial();
    std::vector<Rational> r(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return QPolynomial(std::move(r));
}

LaurentPoly QPolynomial::substitute_inverse() const {
    LaurentPoly p;
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        p += LaurentPoly::monomial(-static_cast<std::int64_t>(k), coeffs_[k]);
    return p;
}

void TruncationConfig::validate() const {
    if (precision_digits < ComplexApprox::kMinDigits)
        throw std::invalid_argument("TruncationConfig: precision_digits must be >= 15");
    if (!(tol > 0)) throw std::invalid_argument("TruncationConfig: tol must be positive");
    if (max_terms < 1) throw std::invalid_argument("TruncationConfig: max_terms must be >= 1");
}

Rational q_pochhammer(const Rational& a, const Rational& q, std::int64_t n) {
    if (n < 0) throw std::domain_error("q_pochhammer: n must be non-negative");
    Rational prod(1);
    Rational qk(1);
    for (std::int64_t k = 0; k < n; ++k) {
        prod *= Rational(1) - qk * a;
        qk *= q;
    }
    return prod;
}

ComplexApprox q_pochhammer_inf(const ComplexApprox& a, const ComplexApprox& q,
                               const TruncationConfig& cfg) {
    cfg.validate();
    const unsigned d = cfg.precision_digits;
    const BigFloat qa = q.abs();
    if (qa >= 1) throw std::domain_error("q_pochhammer_inf: requires |q| < 1");
    const BigFloat tol(cfg.tol);
    const BigFloat one_minus_q = 1 - qa;
    const ComplexApprox one(Rational(1), d);
    ComplexApprox prod = one;
    ComplexApprox aqk = a;  // a * q^k
    // tail bound after N factors: sum_{k>=N} |a q^k| = |a||q|^N/(1-|q|)
    BigFloat bound = a.abs() / one_minus_q;
    std::int64_t k = 0;
    while (bound >= tol) {
        if (k >= cfg.max_terms)
            throw std::overflow_error("q_pochhammer_inf: max_terms exceeded");
        prod = prod * (one - aqk);
        aqk = aqk * q;
        bound = bound * qa;
        ++k;
    }
    return prod;
}

namespace {

void check_q_admissible(std::int64_t n, const Rational& q) {
    // Rational roots of unity are only +-1; those make (q;q)_j vanish.
    if (q == Rational(1) && n >= 1)
        throw std::domain_error("q_binomial: (q;q)_n vanishes at q = 1");
    if (q == Rational(-1) && n >= 2)
        throw std::domain_error("q_binomial: (q;q)_n vanishes at q = -1 for n >= 2");
}

}  // namespace

Rational q_binomial(std::int64_t n, std::int64_t k, const Rational& q) {
    if (n < 0) throw std::domain_error("q_binomial: n must be non-negative");
    if (k < 0 || k > n) return Rational(0);
    check_q_admissible(n, q);
    // (q;q)_n / ((q;q)_k (q;q)_{n-k})
    const Rational num = q_pochhammer(q, q, n);
    const Rational den = q_pochhammer(q, q, k) * q_pochhammer(q, q, n - k);
    return num / den;
}

QPolynomial gauss_expand(std::int64_t n, const Rational& q) {
    if (n < 0) throw std::domain_error("gauss_expand: n must be non-negative");
    check_q_admissible(n, q);
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    for (std::int64_t k = 0; k <= n; ++k) {
        Rational v = q_binomial(n, k, q) * q.pow(binom2(k));
        if (k & 1) v = -v;
        c[static_cast<std::size_t>(k)] = v;
    }
    return QPolynomial(std::move(c));
}

QPolynomial q_pochhammer_poly(std::int64_t n, const Rational& q) {
    if (n < 0) throw std::domain_error("q_pochhammer_poly: n must be non-negative");
    QPolynomial prod = QPolynomial::one();
    Rational qk(1);
    for (std::int64_t k = 0; k < n; ++k) {
        prod = prod * QPolynomial({Rational(1), -qk});
        qk *= q;
    }
    return prod;
}

ComplexApprox e_q(const ComplexApprox& z, const ComplexApprox& q,
                  const TruncationConfig& cfg) {
    cfg.validate();
    const unsigned d = cfg.precision_digits;
    const BigFloat za = z.abs();
    const BigFloat qa = q.abs();
    if (za >= 1 || qa >= 1) throw std::domain_error("e_q: requires |z| < 1 and |q| < 1");
    const BigFloat tol(cfg.tol);
    const ComplexApprox one(Rational(1), d);
    ComplexApprox sum = one;
    ComplexApprox term = one;  // z^n / (q;q)_n
    ComplexApprox qn = q;      // q^n
    // geometric majorant: remaining tail <= |term| * |z|/(1-|z|) once the
    // term ratio has settled to ~|z|
    std::int64_t n = 0;
    while (term.abs() * za / (1 - za) >= tol) {
        if (n >= cfg.max_terms) throw std::overflow_error("e_q: max_terms exceeded");
        ++n;
        term = term * z / (one - qn);
        qn = qn * q;
        sum = sum + term;
    }
    return sum;
}

ComplexApprox big_e_q(const ComplexApprox& z, const ComplexApprox& q,
                      const TruncationConfig& cfg) {
    cfg.validate();
    const unsigned d = cfg.precision_digits;
    const BigFloat qa = q.abs();
    if (qa >= 1) throw std::domain_error("big_e_q: requires |q| < 1");
    const BigFloat tol(cfg.tol);
    const ComplexApprox one(Rational(1), d);
    ComplexApprox sum = one;
    ComplexApprox term = one;       // q^binom(n,2) z^n / (q;q)_n
    ComplexApprox qn = q;           // q^n
    ComplexApprox qpow(Rational(1), d);  // q^{n-1} factor entering term n
    const BigFloat za = z.abs();
    for (std::int64_t n = 1;; ++n) {
        if (n > cfg.max_terms) throw std::overflow_error("big_e_q: max_terms exceeded");
        term = term * qpow * z / (one - qn);
        sum = sum + term;
        qpow = qpow * q;
        qn = qn * q;
        // every later ratio is bounded by rho = |q|^n |z| / (1-|q|)
        const BigFloat rho = qpow.abs() * za / (1 - qa);
        if (rho < 1 && term.abs() * rho / (1 - rho) < tol) break;
    }
    return sum;
}

QPolynomial rogers_szego(std::int64_t n, const Rational& q) {
    if (n < 0) throw std::domain_error("rogers_szego: n must be non-negative");
    check_q_admissible(n, q);
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    for (std::int64_t k = 0; k <= n; ++k)
        c[static_cast<std::size_t>(k)] = q_binomial(n, k, q);
    return QPolynomial(std::move(c));
}

QPolynomial stieltjes_wigert(std::int64_t n, const Rational& q) {
    if (n < 0) throw std::domain_error("stieltjes_wigert: n must be non-negative");
    check_q_admissible(n, q);
    const Rational norm = q_pochhammer(q, q, n);
    if (norm.is_zero())
        throw std::domain_error("stieltjes_wigert: (q;q)_n vanishes");
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    for (std::int64_t k = 0; k <= n; ++k)
        c[static_cast<std::size_t>(k)] = q_binomial(n, k, q) * q.pow(k * k) / norm;
    return QPolynomial(std::move(c));
}

namespace {

void check_solution_domain(const Rational& lambda, const ComplexApprox& x) {
    if (lambda <= Rational(1))
        throw std::domain_error("proportional solution: requires lambda > 1");
    if (x.is_zero()) throw std::domain_error("proportional solution: x must be nonzero");
}

}  // namespace

ComplexApprox solution_E(const Rational& a, const Rational& lambda,
                         const ComplexApprox& x, const TruncationConfig& cfg) {
    check_solution_domain(lambda, x);
    const unsigned d = cfg.precision_digits;
    const ComplexApprox arg = ComplexApprox(a, d) / x;
    const ComplexApprox q(lambda.inverse(), d);
    return q_pochhammer_inf(arg, q, cfg);
}

ComplexApprox solution_e(const Rational& a, const Rational& lambda,
                         const ComplexApprox& x, const TruncationConfig& cfg) {
    const ComplexApprox p = solution_E(a, lambda, x, cfg);
    if (p.is_zero())
        throw std::domain_error("solution_e: the infinite product vanishes");
    return ComplexApprox(Rational(1), cfg.precision_digits) / p;
}

ComplexApprox solution_E_residual(const Rational& a, const Rational& lambda,
                                  const ComplexApprox& x, const TruncationConfig& cfg) {
    const ComplexApprox fx = solution_E(a, lambda, x, cfg);
    const ComplexApprox flx = solution_E(a, lambda, x * lambda, cfg);
    return x * flx - x * fx - ComplexApprox(a, cfg.precision_digits) * flx;
}

ComplexApprox solution_e_residual(const Rational& a, const Rational& lambda,
                                  const ComplexApprox& x, const TruncationConfig& cfg) {
    const ComplexApprox fx = solution_e(a, lambda, x, cfg);
    const ComplexApprox flx = solution_e(a, lambda, x * lambda, cfg);
    return ComplexApprox(a, cfg.precision_digits) * fx - x * fx + x * flx;
}

}  // namespace lamcalc
