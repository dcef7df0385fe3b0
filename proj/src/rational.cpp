#include "lamcalc/rational.hpp"

#include <cctype>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace lamcalc {

Rational::Rational(long n, long d) {
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rational::Rational(mpq_class q) : v_(std::move(q)) {
    v_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
    // strict grammar: -?digits(/digits)?
    const auto bad = [&] {
        throw std::invalid_argument("Rational: malformed text '" + text + "'");
    };
    std::size_t i = 0;
    if (i < text.size() && text[i] == '-') ++i;
    std::size_t num_begin = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == num_begin) bad();
    std::string num = text.substr(0, i);
    std::string den = "1";
    if (i < text.size()) {
        if (text[i] != '/') bad();
        ++i;
        std::size_t den_begin = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == den_begin || i != text.size()) bad();
        den = text.substr(den_begin);
    }
    mpz_class n(num), d(den);
    if (d == 0) throw std::domain_error("Rational: zero denominator in '" + text + "'");
    mpq_class q(n, d);
    q.canonicalize();
    return Rational(std::move(q));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    mpq_class q(v_.get_den(), v_.get_num());
    q.canonicalize();  // moves the sign back into the numerator
    return Rational(std::move(q));
}

Rational Rational::pow(std::int64_t k) const {
    if (k == 0) return Rational(1);
    if (is_zero()) {
        if (k < 0) throw std::domain_error("Rational: 0 raised to negative power");
        return Rational(0);
    }
    if (k == INT64_MIN) throw std::overflow_error("Rational: pow exponent overflow");
    const bool neg = k < 0;
    const auto e = static_cast<unsigned long>(neg ? -k : k);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), v_.get_num().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), v_.get_den().get_mpz_t(), e);
    mpq_class q = neg ? mpq_class(den, num) : mpq_class(num, den);
    q.canonicalize();
    return Rational(std::move(q));
}

std::string Rational::str() const {
    std::string s = v_.get_num().get_str();
    if (v_.get_den() != 1) {
        s += '/';
        s += v_.get_den().get_str();
    }
    return s;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

std::string str(const std::vector<Rational>& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += v[i].str();
    }
    out += ']';
    return out;
}

std::int64_t binom2(std::int64_t n) {
    if (n < 2) return 0;
    if (n > 3037000499LL) throw std::overflow_error("binom2: exponent overflow");
    return n * (n - 1) / 2;
}

}  // namespace lamcalc
