#include "adic/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace adic {

Monomial Monomial::var(std::uint32_t idx, std::uint32_t exp) {
    if (idx == 0) throw std::invalid_argument("variable index must be >= 1");
    Monomial m;
    if (exp > 0) m.exps.emplace_back(idx, exp);
    return m;
}

std::uint32_t Monomial::total_degree() const {
    std::uint32_t d = 0;
    for (auto& [v, e] : exps) d += e;
    return d;
}

std::uint32_t Monomial::degree_in(const std::set<std::uint32_t>& vars) const {
    std::uint32_t d = 0;
    for (auto& [v, e] : exps)
        if (vars.count(v)) d += e;
    return d;
}

std::uint32_t Monomial::exponent_of(std::uint32_t idx) const {
    for (auto& [v, e] : exps)
        if (v == idx) return e;
    return 0;
}

bool Monomial::involves_any(const std::set<std::uint32_t>& vars) const {
    for (auto& [v, e] : exps)
        if (vars.count(v)) return true;
    return false;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    auto a = exps.begin(), b = o.exps.begin();
    while (a != exps.end() || b != o.exps.end()) {
        if (b == o.exps.end() || (a != exps.end() && a->first < b->first)) {
            r.exps.push_back(*a++);
        } else if (a == exps.end() || b->first < a->first) {
            r.exps.push_back(*b++);
        } else {
            r.exps.emplace_back(a->first, a->second + b->second);
            ++a, ++b;
        }
    }
    return r;
}

bool Monomial::divide_by(const Monomial& o, Monomial& quotient) const {
    Monomial r;
    auto a = exps.begin();
    for (auto& [v, e] : o.exps) {
        while (a != exps.end() && a->first < v) r.exps.push_back(*a++);
        if (a == exps.end() || a->first != v || a->second < e) return false;
        if (a->second > e) r.exps.emplace_back(v, a->second - e);
        ++a;
    }
    while (a != exps.end()) r.exps.push_back(*a++);
    quotient = std::move(r);
    return true;
}

std::string Monomial::str() const {
    if (is_one()) return "1";
    std::string s;
    for (auto& [v, e] : exps) {
        if (!s.empty()) s += "*";
        s += "t" + std::to_string(v);
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

int grlex_cmp(const Monomial& a, const Monomial& b) {
    std::uint32_t da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db ? -1 : 1;
    // Lex with t1 > t2 > ...: walk ascending indices; at the first index
    // where exponents differ the larger exponent wins.
    auto i = a.exps.begin(), j = b.exps.begin();
    while (i != a.exps.end() && j != b.exps.end()) {
        if (i->first != j->first) {
            // The monomial owning the lower index has positive exponent
            // there, the other has zero: the lower index side is larger.
            return i->first < j->first ? 1 : -1;
        }
        if (i->second != j->second) return i->second > j->second ? 1 : -1;
        ++i, ++j;
    }
    if (i != a.exps.end()) return 1;
    if (j != b.exps.end()) return -1;
    return 0;
}

Polynomial Polynomial::constant(const Coeff& c) {
    Polynomial p(c.domain());
    if (!c.is_zero()) p.terms_.emplace(Monomial::one(), c);
    return p;
}

Polynomial Polynomial::variable(Domain d, std::uint32_t idx) {
    return term(Monomial::var(idx), Coeff::one(d));
}

Polynomial Polynomial::term(const Monomial& m, const Coeff& c) {
    Polynomial p(c.domain());
    if (!c.is_zero()) p.terms_.emplace(m, c);
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Coeff Polynomial::coeff_of(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Coeff::zero(dom_) : it->second;
}

const Monomial& Polynomial::leading_monomial() const {
    if (terms_.empty())
        throw std::logic_error("leading monomial of zero polynomial");
    return terms_.begin()->first;
}

Coeff Polynomial::leading_coeff() const {
    if (terms_.empty())
        throw std::logic_error("leading coefficient of zero polynomial");
    return terms_.begin()->second;
}

std::uint32_t Polynomial::total_degree() const {
    return terms_.empty() ? 0 : terms_.begin()->first.total_degree();
}

std::set<std::uint32_t> Polynomial::variables() const {
    std::set<std::uint32_t> vs;
    for (auto& [m, c] : terms_)
        for (auto& [v, e] : m.exps) vs.insert(v);
    return vs;
}

void Polynomial::add_term(const Monomial& m, const Coeff& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check(o);
    Polynomial r = *this;
    for (auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    check(o);
    Polynomial r = *this;
    for (auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check(o);
    Polynomial r(dom_);
    for (auto& [m1, c1] : terms_)
        for (auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, c1 * c2);
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(dom_);
    for (auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial Polynomial::scaled(const Coeff& c) const {
    Polynomial r(dom_);
    if (c.is_zero()) return r;
    for (auto& [m, k] : terms_) r.add_term(m, k * c);
    return r;
}

Polynomial Polynomial::times_monomial(const Monomial& m) const {
    Polynomial r(dom_);
    for (auto& [m1, c] : terms_) r.terms_.emplace(m1 * m, c);
    return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
    return dom_ == o.dom_ && terms_ == o.terms_;
}

Polynomial Polynomial::substitute_zero(
    const std::set<std::uint32_t>& kill) const {
    Polynomial r(dom_);
    for (auto& [m, c] : terms_)
        if (!m.involves_any(kill)) r.terms_.emplace(m, c);
    return r;
}

Polynomial Polynomial::drop_terms_if(
    const std::function<bool(const Monomial&)>& pred) const {
    Polynomial r(dom_);
    for (auto& [m, c] : terms_)
        if (!pred(m)) r.terms_.emplace(m, c);
    return r;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto& [m, c] : terms_) {
        Coeff a = c;
        if (first) {
            if (c.is_negative()) {
                s += "-";
                a = -c;
            }
        } else {
            if (c.is_negative()) {
                s += " - ";
                a = -c;
            } else {
                s += " + ";
            }
        }
        if (m.is_one()) {
            s += a.str();
        } else if (a.is_one()) {
            s += m.str();
        } else {
            s += a.str() + "*" + m.str();
        }
        first = false;
    }
    return s;
}

}  // namespace adic
