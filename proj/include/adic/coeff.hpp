#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace adic {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Coefficient domain tag: p == 0 is the rationals, otherwise the prime
// field F_p.
struct Domain {
    std::uint64_t p = 0;

    bool is_rational() const { return p == 0; }
    friend bool operator==(const Domain&, const Domain&) = default;

    std::string str() const {
        return is_rational() ? "Q" : ("F" + std::to_string(p));
    }
};

class DomainMismatch : public std::runtime_error {
public:
    DomainMismatch(const Domain& a, const Domain& b)
        : std::runtime_error("coefficient domain mismatch: " + a.str() +
                             " vs " + b.str()) {}
};

bool is_prime(std::uint64_t n);

// An exact field element, either a rational in lowest terms or a reduced
// residue mod a prime.
class Coeff {
public:
    Coeff() = default;  // zero of Q
    explicit Coeff(Domain d) : dom_(d) {}

    static Coeff zero(Domain d) { return Coeff(d); }
    static Coeff one(Domain d);
    static Coeff from_rational(Rational q);
    static Coeff from_integer(Domain d, const Integer& n);
    static Coeff from_long(Domain d, long long n);

    Domain domain() const { return dom_; }
    bool is_zero() const;
    bool is_one() const;

    Coeff operator+(const Coeff& o) const;
    Coeff operator-(const Coeff& o) const;
    Coeff operator*(const Coeff& o) const;
    Coeff operator/(const Coeff& o) const;
    Coeff operator-() const;
    Coeff inverse() const;

    Coeff& operator+=(const Coeff& o) { return *this = *this + o; }
    Coeff& operator-=(const Coeff& o) { return *this = *this - o; }
    Coeff& operator*=(const Coeff& o) { return *this = *this * o; }

    bool operator==(const Coeff& o) const;
    bool operator!=(const Coeff& o) const { return !(*this == o); }

    // Sign for printing; residues are never negative.
    bool is_negative() const;
    Coeff abs() const;

    const Rational& rational() const { return q_; }
    std::uint64_t residue() const { return r_; }

    std::string str() const;

private:
    void check(const Coeff& o) const {
        if (dom_ != o.dom_) throw DomainMismatch(dom_, o.dom_);
    }

    Domain dom_{};
    Rational q_{0};
    std::uint64_t r_ = 0;
};

}  // namespace adic
