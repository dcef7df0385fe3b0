#include "lamcalc/laurent_poly.hpp"

#include <ostream>
#include <stdexcept>

namespace lamcalc {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("LaurentPoly: exponent overflow");
    return r;
}

}  // namespace

LaurentPoly LaurentPoly::constant(const Rational& c) {
    return monomial(0, c);
}

LaurentPoly LaurentPoly::monomial(std::int64_t exp, const Rational& c) {
    LaurentPoly p;
    p.add_term(exp, c);
    return p;
}

LaurentPoly LaurentPoly::parse(const std::string& text) {
    LaurentPoly p;
    if (text.empty())
        throw std::invalid_argument("LaurentPoly: empty text");
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = text.find(',', pos);
        const std::string item =
            text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        const std::size_t colon = item.find(':');
        if (colon == std::string::npos || colon == 0 || colon + 1 >= item.size())
            throw std::invalid_argument("LaurentPoly: malformed term '" + item + "'");
        std::int64_t e;
        try {
            std::size_t used = 0;
            e = std::stoll(item.substr(0, colon), &used);
            if (used != colon) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw std::invalid_argument("LaurentPoly: malformed exponent in '" + item + "'");
        }
        if (p.terms_.count(e))
            throw std::invalid_argument("LaurentPoly: duplicate exponent " + std::to_string(e));
        const Rational c = Rational::parse(item.substr(colon + 1));
        if (!c.is_zero()) p.terms_.emplace(e, c);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return p;
}

std::int64_t LaurentPoly::min_exp() const {
    if (is_zero()) throw std::domain_error("LaurentPoly: min_exp of zero polynomial");
    return terms_.begin()->first;
}

std::int64_t LaurentPoly::max_exp() const {
    if (is_zero()) throw std::domain_error("LaurentPoly: max_exp of zero polynomial");
    return terms_.rbegin()->first;
}

Rational LaurentPoly::coeff(std::int64_t e) const {
    const auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly::add_term(std::int64_t e, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            r.add_term(checked_add(ea, eb), ca * cb);
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
    if (c.is_zero()) return LaurentPoly();
    LaurentPoly r;
    for (const auto& [e, coef] : terms_) r.terms_.emplace(e, coef * c);
    return r;
}

LaurentPoly LaurentPoly::scaled_arg(const Rational& c) const {
    if (c.is_zero()) throw std::domain_error("LaurentPoly: scaled_arg with c = 0");
    LaurentPoly r;
    for (const auto& [e, coef] : terms_) r.terms_.emplace(e, coef * c.pow(e));
    return r;
}

LaurentPoly LaurentPoly::shifted(std::int64_t k) const {
    LaurentPoly r;
    for (const auto& [e, coef] : terms_) r.terms_.emplace(checked_add(e, k), coef);
    return r;
}

Rational LaurentPoly::eval(const Rational& x0) const {
    if (x0.is_zero() && !is_zero() && min_exp() < 0)
        throw std::domain_error("LaurentPoly: pole at 0");
    Rational acc(0);
    for (const auto& [e, c] : terms_) acc += c * x0.pow(e);
    return acc;
}

ComplexApprox LaurentPoly::eval(const ComplexApprox& z) const {
    if (is_zero()) return ComplexApprox(Rational(0), z.digits());
    if (z.is_zero() && min_exp() < 0)
        throw std::domain_error("LaurentPoly: pole at 0");
    // Walk terms in ascending exponent order, advancing the running power.
    ComplexApprox acc(Rational(0), z.digits());
    ComplexApprox power = z.pow_int(min_exp());
    std::int64_t cur = min_exp();
    for (const auto& [e, c] : terms_) {
        if (e != cur) {
            power = power * z.pow_int(e - cur);
            cur = e;
        }
        acc = acc + power * c;
    }
    return acc;
}

std::string LaurentPoly::str() const {
    if (is_zero()) return "0:0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!out.empty()) out += ',';
        out += std::to_string(it->first);
        out += ':';
        out += it->second.str();
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) {
    return os << p.str();
}

}  // namespace lamcalc
