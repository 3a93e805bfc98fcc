#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "adic/coeff.hpp"

namespace adic {

// A monomial in the variables t_1, t_2, ...: a strictly ascending list of
// (variable index, positive exponent) pairs. The empty list is 1.
struct Monomial {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> exps;

    static Monomial one() { return {}; }
    static Monomial var(std::uint32_t idx, std::uint32_t exp = 1);

    bool is_one() const { return exps.empty(); }
    std::uint32_t total_degree() const;
    std::uint32_t degree_in(const std::set<std::uint32_t>& vars) const;
    std::uint32_t exponent_of(std::uint32_t idx) const;
    bool involves_any(const std::set<std::uint32_t>& vars) const;

    Monomial operator*(const Monomial& o) const;
    // Exact division; returns false if o does not divide *this.
    bool divide_by(const Monomial& o, Monomial& quotient) const;

    friend bool operator==(const Monomial&, const Monomial&) = default;

    std::string str() const;
};

// Graded lexicographic comparison with t1 > t2 > ...: total degree first,
// ties broken so that a higher exponent on a lower-indexed variable wins.
// Returns <0, 0, >0.
int grlex_cmp(const Monomial& a, const Monomial& b);

struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return grlex_cmp(a, b) > 0;
    }
};

// Sparse exact-coefficient polynomial. Terms are kept in descending
// graded-lex order, never with a zero coefficient.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Coeff, GrlexGreater>;

    explicit Polynomial(Domain d = {}) : dom_(d) {}

    static Polynomial zero(Domain d) { return Polynomial(d); }
    static Polynomial constant(const Coeff& c);
    static Polynomial one(Domain d) { return constant(Coeff::one(d)); }
    static Polynomial variable(Domain d, std::uint32_t idx);
    static Polynomial term(const Monomial& m, const Coeff& c);

    Domain domain() const { return dom_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    // Coefficient of m (zero Coeff if absent).
    Coeff coeff_of(const Monomial& m) const;
    const Monomial& leading_monomial() const;
    Coeff leading_coeff() const;

    std::uint32_t total_degree() const;  // 0 for the zero polynomial
    std::set<std::uint32_t> variables() const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial scaled(const Coeff& c) const;
    Polynomial times_monomial(const Monomial& m) const;

    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    // Kill every term involving any of the given variables.
    Polynomial substitute_zero(const std::set<std::uint32_t>& kill) const;

    // Keep only terms whose degree in `vars` is <= bound (AllVariables
    // truncation passes total degree via vars = {} + all flag; see ideal.hpp).
    Polynomial drop_terms_if(
        const std::function<bool(const Monomial&)>& pred) const;

    void add_term(const Monomial& m, const Coeff& c);

    std::string str() const;

private:
    void check(const Polynomial& o) const {
        if (dom_ != o.dom_) throw DomainMismatch(dom_, o.dom_);
    }

    Domain dom_{};
    TermMap terms_;
};

}  // namespace adic
