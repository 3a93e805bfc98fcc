#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "adic/polynomial.hpp"

namespace adic {

// ord value: exact natural, a lower bound when the inspection cap was
// exhausted, or infinity (provably zero element only).
struct OrderValue {
    enum class Kind { Finite, AtLeast, Infinity };
    Kind kind = Kind::Finite;
    std::uint32_t n = 0;

    static OrderValue finite(std::uint32_t n) { return {Kind::Finite, n}; }
    static OrderValue at_least(std::uint32_t n) { return {Kind::AtLeast, n}; }
    static OrderValue infinity() { return {Kind::Infinity, 0}; }

    bool is_finite() const { return kind == Kind::Finite; }
    bool is_infinity() const { return kind == Kind::Infinity; }
    friend bool operator==(const OrderValue&, const OrderValue&) = default;

    std::string str() const;
};

// 0, (1/2)^e, or an upper bound (1/2)^e mirroring OrderValue::AtLeast.
struct DyadicDistance {
    enum class Kind { Zero, Exact, AtMost };
    Kind kind = Kind::Zero;
    std::uint32_t e = 0;

    static DyadicDistance zero() { return {Kind::Zero, 0}; }
    static DyadicDistance exact(std::uint32_t e) { return {Kind::Exact, e}; }
    static DyadicDistance at_most(std::uint32_t e) {
        return {Kind::AtMost, e};
    }
    static DyadicDistance from_order(const OrderValue& o);

    friend bool operator==(const DyadicDistance&,
                           const DyadicDistance&) = default;

    std::string str() const;
};

class DegreeCapExceeded : public std::runtime_error {
public:
    explicit DegreeCapExceeded(const std::string& m)
        : std::runtime_error(m) {}
};

struct GroebnerResult {
    std::vector<Polynomial> basis;
    bool complete = true;            // false if the cap cut pairs off
    std::uint32_t achieved_degree = 0;
};

// Degree-capped Buchberger w.r.t. graded-lex; the returned basis is
// inter-reduced, so normal forms against it are canonical.
GroebnerResult groebner_basis(std::vector<Polynomial> gens,
                              std::uint32_t degree_cap);

// Remainder of full multivariate division by `basis` (graded-lex).
Polynomial division_remainder(Polynomial f,
                              const std::vector<Polynomial>& basis);

// The ideal a. Variable-generated ideals (possibly all variables) get
// exact combinatorial membership; general ideals go through degree-capped
// Groebner machinery.
class AdicIdeal {
public:
    enum class Kind { Variables, AllVariables, General };

    static AdicIdeal all_variables();
    static AdicIdeal variables(std::set<std::uint32_t> vars);
    static AdicIdeal general(std::vector<Polynomial> gens,
                             std::uint32_t degree_cap);

    Kind kind() const { return kind_; }
    bool is_variable_kind() const { return kind_ != Kind::General; }
    bool contains_var(std::uint32_t v) const;
    const std::set<std::uint32_t>& variable_set() const { return vars_; }
    const std::vector<Polynomial>& generators() const { return gens_; }
    std::uint32_t degree_cap() const { return degree_cap_; }
    Domain generator_domain() const;

    // Degree of a monomial counted in the ideal's variables (total degree
    // for AllVariables). Variable kinds only.
    std::uint32_t ideal_degree(const Monomial& m) const;

    // Inter-reduced degree-capped Groebner basis of a^power (cached).
    const GroebnerResult& power_basis(std::uint32_t power) const;

    std::string str() const;
    friend bool operator==(const AdicIdeal& a, const AdicIdeal& b);

private:
    AdicIdeal() = default;

    Kind kind_ = Kind::AllVariables;
    std::set<std::uint32_t> vars_;
    std::vector<Polynomial> gens_;
    std::uint32_t degree_cap_ = 1;

    struct Cache {
        std::mutex mu;
        std::map<std::uint32_t, GroebnerResult> powers;
    };
    std::shared_ptr<Cache> cache_;
};

// f in a^i?
bool power_membership(const Polynomial& f, const AdicIdeal& a,
                      std::uint32_t i);

// Canonical representative of f mod a^{i+1}.
Polynomial normal_form(const Polynomial& f, const AdicIdeal& a,
                       std::uint32_t i);

// Eq-(18) order of a ring element, exact up to cap.
OrderValue ord_ring(const Polynomial& f, const AdicIdeal& a,
                    std::uint32_t cap);

DyadicDistance dist_ring(const Polynomial& f, const Polynomial& g,
                         const AdicIdeal& a, std::uint32_t cap);

}  // namespace adic
