#include "adic/coeff.hpp"

namespace adic {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    while (e) {
        if (e & 1) r = mod_mul(r, a, p);
        a = mod_mul(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p) {
    if (a == 0) throw std::domain_error("division by zero in F_p");
    return mod_pow(a, p - 2, p);
}

std::uint64_t reduce_integer(const Integer& n, std::uint64_t p) {
    Integer m = n % Integer(p);
    if (m < 0) m += p;
    return m.convert_to<std::uint64_t>();
}

}  // namespace

Coeff Coeff::one(Domain d) {
    Coeff c(d);
    if (d.is_rational())
        c.q_ = 1;
    else
        c.r_ = 1 % d.p;
    return c;
}

Coeff Coeff::from_rational(Rational q) {
    Coeff c(Domain{0});
    c.q_ = std::move(q);
    return c;
}

Coeff Coeff::from_integer(Domain d, const Integer& n) {
    Coeff c(d);
    if (d.is_rational())
        c.q_ = Rational(n);
    else
        c.r_ = reduce_integer(n, d.p);
    return c;
}

Coeff Coeff::from_long(Domain d, long long n) {
    return from_integer(d, Integer(n));
}

bool Coeff::is_zero() const {
    return dom_.is_rational() ? q_.is_zero() : r_ == 0;
}

bool Coeff::is_one() const {
    return dom_.is_rational() ? q_ == 1 : r_ == 1 % dom_.p;
}

Coeff Coeff::operator+(const Coeff& o) const {
    check(o);
    Coeff c(dom_);
    if (dom_.is_rational())
        c.q_ = q_ + o.q_;
    else {
        c.r_ = r_ + o.r_;
        if (c.r_ >= dom_.p) c.r_ -= dom_.p;
    }
    return c;
}

Coeff Coeff::operator-(const Coeff& o) const { return *this + (-o); }

Coeff Coeff::operator*(const Coeff& o) const {
    check(o);
    Coeff c(dom_);
    if (dom_.is_rational())
        c.q_ = q_ * o.q_;
    else
        c.r_ = mod_mul(r_, o.r_, dom_.p);
    return c;
}

Coeff Coeff::operator/(const Coeff& o) const { return *this * o.inverse(); }

Coeff Coeff::operator-() const {
    Coeff c(dom_);
    if (dom_.is_rational())
        c.q_ = -q_;
    else
        c.r_ = r_ == 0 ? 0 : dom_.p - r_;
    return c;
}

Coeff Coeff::inverse() const {
    Coeff c(dom_);
    if (dom_.is_rational()) {
        if (q_.is_zero()) throw std::domain_error("division by zero");
        c.q_ = 1 / q_;
    } else {
        c.r_ = mod_inv(r_, dom_.p);
    }
    return c;
}

bool Coeff::operator==(const Coeff& o) const {
    if (dom_ != o.dom_) return false;
    return dom_.is_rational() ? q_ == o.q_ : r_ == o.r_;
}

bool Coeff::is_negative() const {
    return dom_.is_rational() && q_ < 0;
}

Coeff Coeff::abs() const { return is_negative() ? -*this : *this; }

std::string Coeff::str() const {
    if (!dom_.is_rational()) return std::to_string(r_);
    std::string s = numerator(q_).str();
    if (denominator(q_) != 1) s += "/" + denominator(q_).str();
    return s;
}

}  // namespace adic
