#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>

#include "adic/truncate.hpp"

namespace adic {

class CoherenceError : public std::runtime_error {
public:
    CoherenceError(std::uint32_t lower, std::uint32_t higher)
        : std::runtime_error("tower incoherent between levels " +
                             std::to_string(lower) + " and " +
                             std::to_string(higher)),
          lower_level(lower),
          higher_level(higher) {}
    std::uint32_t lower_level, higher_level;
};

// An element of the completion: a lazy level oracle i -> class in M_i,
// memoized, with coherence checked whenever a new level is evaluated.
class TowerElement {
public:
    using Oracle = std::function<TruncatedElement(std::uint32_t)>;

    TowerElement(ModulePtr module, Oracle oracle);

    static TowerElement from_element(std::vector<Polynomial> coords,
                                     ModulePtr module);
    static TowerElement zero(ModulePtr module);

    const ModulePtr& module() const { return module_; }

    // pi_i: evaluate, normalize, memoize, and cross-check coherence with
    // the neighbouring levels already evaluated.
    TruncatedElement project(std::uint32_t i) const;

    bool is_zero_at(std::uint32_t i) const;

    TowerElement operator+(const TowerElement& o) const;
    TowerElement operator-(const TowerElement& o) const;
    TowerElement scaled_by(const Polynomial& c) const;
    // Scale by a tower over the ring (rank-1 presentation with the same
    // ideal); uses the scalar's level-i representative at level i.
    TowerElement scaled_by(const TowerElement& c) const;

private:
    struct Memo {
        std::mutex mu;
        std::map<std::uint32_t, TruncatedElement> levels;
    };

    ModulePtr module_;
    Oracle oracle_;
    std::shared_ptr<Memo> memo_;
};

inline TowerElement tower_from_element(std::vector<Polynomial> coords,
                                       ModulePtr module) {
    return TowerElement::from_element(std::move(coords), std::move(module));
}

inline TruncatedElement tower_project(const TowerElement& x,
                                      std::uint32_t i) {
    return x.project(i);
}

// ord' — the filtration order: the least level at which the projection of
// x is nonzero (equivalently the largest i with pi_{i-1}(x) = 0). Exact up
// to cap; AtLeast(cap+1) if every inspected level vanishes.
OrderValue ord_prime(const TowerElement& x, std::uint32_t cap);

DyadicDistance dist_prime(const TowerElement& x, const TowerElement& y,
                          std::uint32_t cap);

// How an upper bound on the adic order of a completion element may be
// certified when the ambient ring has infinitely many variables.
enum class WitnessStrategy { None, SubstitutionKill };

// Bounds (lower, upper) on the adic order sup{ i : x in a^i * completion }.
// For finitely presented modules over finitely many variables the adic and
// filtration orders agree, so both bounds equal ord'. Over the
// all-variables ideal on a free module, the substitution-kill strategy can
// certify ord_adic = 0: if killing t_1..t_n leaves the level-cap
// representative nonzero for every n <= cap-1, then x avoids every finite
// combination sum t_k * y_k at the inspected precision.
std::pair<OrderValue, OrderValue> ord_adic_bounds(
    const TowerElement& x, std::uint32_t cap,
    WitnessStrategy strategy = WitnessStrategy::None);

struct Theorem6Report {
    std::uint32_t level = 0;
    bool surjective_tau = false;
    bool kernel_equals_power = false;
    std::optional<std::vector<Polynomial>> witness;

    bool passed() const { return surjective_tau && kernel_equals_power; }
};

// Finite-level check of the completeness criterion for a finitely
// presented module over finitely many variables: (a) the truncation map
// from M onto M_i is surjective (rank computation), and (b) membership in
// Ker(pi_i) coincides with exact membership in relations + a^{i+1}M on a
// deterministic family of sample elements. Rejects the all-variables
// ideal: infinite-variable refutations live in the gallery.
Theorem6Report theorem6_check(const ModulePresentation& M, std::uint32_t i);

}  // namespace adic
