#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <vector>

#include "adic/ideal.hpp"
#include "adic/linalg.hpp"
#include "adic/polynomial.hpp"

namespace adic {

// All monomials in `vars` of total degree <= deg, graded-lex ascending.
std::vector<Monomial> monomials_up_to(const std::vector<std::uint32_t>& vars,
                                      std::uint32_t deg);

class UnsupportedPresentation : public std::runtime_error {
public:
    explicit UnsupportedPresentation(const std::string& m)
        : std::runtime_error(m) {}
};

class LevelMismatch : public std::runtime_error {
public:
    explicit LevelMismatch(const std::string& m) : std::runtime_error(m) {}
};

class ModulePresentation;
using ModulePtr = std::shared_ptr<const ModulePresentation>;

// An element of M_i = A_i tensor M: a level and a coordinate vector of
// normal forms. Equality is by zero-testing the difference, never by
// comparing representatives.
struct TruncatedElement {
    std::uint32_t level = 0;
    std::vector<Polynomial> coords;
};

// The finite-dimensional K-model of M at one truncation level: monomials
// of ideal-degree <= level in a fixed variable set, with the relation
// submodule's image as a row space.
struct TruncationSpace {
    std::uint32_t level = 0;
    std::uint32_t rank = 1;
    std::vector<std::uint32_t> vars;
    std::vector<Monomial> basis;  // graded-lex ascending
    std::map<Monomial, std::size_t, GrlexGreater> index;
    RowSpace relation_rows;

    std::size_t dim_free() const { return rank * basis.size(); }
    std::size_t quotient_dim() const {
        return dim_free() - relation_rows.rank();
    }
    Vec expand(const std::vector<Polynomial>& coords) const;
    std::vector<Polynomial> collapse(const Vec& v, Domain d) const;
};

// A finitely presented A-module: `rank` generators and relation vectors.
class ModulePresentation
    : public std::enable_shared_from_this<ModulePresentation> {
public:
    static ModulePtr make(Domain field, AdicIdeal ideal, std::uint32_t rank,
                          std::vector<std::vector<Polynomial>> relations);
    static ModulePtr ring(Domain field, AdicIdeal ideal) {
        return make(field, std::move(ideal), 1, {});
    }
    static ModulePtr free_of_rank(Domain field, AdicIdeal ideal,
                                  std::uint32_t rank) {
        return make(field, std::move(ideal), rank, {});
    }

    Domain field() const { return field_; }
    const AdicIdeal& ideal() const { return ideal_; }
    std::uint32_t rank() const { return rank_; }
    const std::vector<std::vector<Polynomial>>& relations() const {
        return relations_;
    }
    bool is_free() const { return relations_.empty(); }
    const std::set<std::uint32_t>& relation_vars() const {
        return relation_vars_;
    }

    // Model of level i over the union of relation vars and extra_vars
    // (all of which must lie in a variable-generated ideal). Cached.
    std::shared_ptr<const TruncationSpace> space(
        std::uint32_t level, const std::set<std::uint32_t>& extra_vars) const;

    TruncatedElement truncate(const std::vector<Polynomial>& coords,
                              std::uint32_t level) const;
    TruncatedElement project(const TruncatedElement& v,
                             std::uint32_t lower_level) const;
    std::vector<Polynomial> zero_vector() const;

    bool structurally_equal(const ModulePresentation& o) const;

private:
    ModulePresentation() = default;

    Domain field_;
    AdicIdeal ideal_ = AdicIdeal::all_variables();
    std::uint32_t rank_ = 1;
    std::vector<std::vector<Polynomial>> relations_;
    std::set<std::uint32_t> relation_vars_;

    mutable std::mutex cache_mu_;
    mutable std::map<std::pair<std::uint32_t, std::vector<std::uint32_t>>,
                     std::shared_ptr<const TruncationSpace>>
        space_cache_;
};

// True iff v is the zero class of M_i (relations plus a^{i+1}).
bool module_zero_test(const TruncatedElement& v, const ModulePresentation& M);

bool truncated_equal(const TruncatedElement& u, const TruncatedElement& v,
                     const ModulePresentation& M);

// Optional constraint on which coefficient monomials a solve may use.
struct MonomialFilter {
    std::optional<std::uint32_t> exact_degree;  // ideal-degree == d
    std::optional<std::uint32_t> min_degree;    // ideal-degree >= d
    bool admits(std::uint32_t d) const {
        if (exact_degree && d != *exact_degree) return false;
        if (min_degree && d < *min_degree) return false;
        return true;
    }
};

// Coefficients c_k with sum c_k * gens_k = target in M_i, or nullopt.
std::optional<std::vector<Polynomial>> module_solve(
    const TruncatedElement& target, const std::vector<TruncatedElement>& gens,
    const ModulePresentation& M, const MonomialFilter& filter = {});

// Eq-(18) order of a module element given by exact coordinates.
OrderValue ord_module(const std::vector<Polynomial>& v,
                      const ModulePresentation& M, std::uint32_t cap);

// Exact (untruncated) witness: coefficients p_j with v = sum p_j * gens_j
// as polynomial identities, searching multiplier monomials of total degree
// <= degree_bound. Used by the Theorem-6 checker and ord_module.
std::optional<std::vector<Polynomial>> exact_submodule_witness(
    const std::vector<Polynomial>& v,
    const std::vector<std::vector<Polynomial>>& gens, Domain field,
    std::uint32_t degree_bound);

}  // namespace adic
