#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "adic/tower.hpp"

namespace adic {

// Cantor pairing and its iterated form: bijections between tuples of
// naturals and naturals, used to index multi-dimensional families.
std::uint64_t cantor_pair(std::uint64_t x, std::uint64_t y);
std::pair<std::uint64_t, std::uint64_t> cantor_unpair(std::uint64_t z);
std::uint64_t encode_tuple(const std::vector<std::uint64_t>& t);
std::vector<std::uint64_t> decode_tuple(std::uint64_t z, std::size_t n);

// A finitely supported function into one truncation level. Zero classes
// are never stored.
struct FinFn {
    std::uint32_t level = 0;
    std::map<std::uint64_t, TruncatedElement> entries;
};

FinFn fin_delta(std::uint64_t z, std::uint32_t level, const ModulePtr& M);

class DecayFailure : public std::runtime_error {
public:
    explicit DecayFailure(const std::string& m) : std::runtime_error(m) {}
};

// A function from the naturals into a completion, given by a term oracle
// together with declared per-threshold support bounds: support_bound(i)
// must be a finite superset of { z : ord'(f(z)) <= i }, or nullopt when no
// finite bound is claimed (the function is then not decaying at i).
// decay_check verifies the declaration on the probe universe it spans.
class DecayStream {
public:
    using TermOracle = std::function<TowerElement(std::uint64_t)>;
    using SupportBound =
        std::function<std::optional<std::vector<std::uint64_t>>(
            std::uint32_t)>;

    DecayStream(ModulePtr module, TermOracle term, SupportBound bound);

    static DecayStream zero(ModulePtr module);
    static DecayStream delta(std::uint64_t z, ModulePtr module);
    // Finitely many explicit terms.
    static DecayStream finite(
        std::vector<std::pair<std::uint64_t, TowerElement>> terms,
        ModulePtr module);

    const ModulePtr& module() const { return module_; }
    TowerElement term(std::uint64_t z) const { return term_(z); }
    std::optional<std::vector<std::uint64_t>> support_bound(
        std::uint32_t threshold) const {
        return bound_(threshold);
    }

    DecayStream operator+(const DecayStream& o) const;
    DecayStream scaled_by(const Polynomial& c) const;

private:
    ModulePtr module_;
    TermOracle term_;
    SupportBound bound_;
};

struct DecayReport {
    bool pass = false;
    std::uint32_t cap = 0;
    // Verified threshold supports (pass case), per threshold <= cap.
    std::map<std::uint32_t, std::vector<std::uint64_t>> support;
    // Failure data: first bad threshold and a witness prefix of indices
    // whose terms sit at or below it without being covered by the bound.
    std::uint32_t fail_threshold = 0;
    std::vector<std::uint64_t> witnesses;

    std::string str() const;
};

DecayReport decay_check(const DecayStream& f, std::uint32_t cap);

// Sum of the series: level-i value is the sum of level-i truncations over
// the threshold-i support. Throws DecayFailure when decay_check fails.
TowerElement series_sum(const DecayStream& f, std::uint32_t cap);

// A coherent tower of finitely supported functions (the inverse-limit side
// of the finite/decaying correspondence).
class LevelStream {
public:
    using Oracle = std::function<FinFn(std::uint32_t)>;

    LevelStream(ModulePtr module, Oracle oracle);

    const ModulePtr& module() const { return module_; }
    // Evaluate with memoization and neighbour coherence checks.
    FinFn project(std::uint32_t i) const;

private:
    struct Memo {
        std::mutex mu;
        std::map<std::uint32_t, FinFn> levels;
    };
    ModulePtr module_;
    Oracle oracle_;
    std::shared_ptr<Memo> memo_;
};

LevelStream to_level_stream(const DecayStream& f, std::uint32_t cap);
DecayStream from_level_stream(const LevelStream& s, std::uint32_t cap);

// The unique continuous extension determined by values on deltas: the sum
// of g(z) * family(z). `family` must be total on g's declared supports.
TowerElement hom_apply(const DecayStream& g,
                       const std::function<TowerElement(std::uint64_t)>& family,
                       const ModulePtr& target, std::uint32_t cap);

// <f, g> = sum of f(z) * g(z) for a polynomial-valued bounded family f.
TowerElement pairing(const std::function<Polynomial(std::uint64_t)>& f,
                     const DecayStream& g, std::uint32_t cap);

// Composition with a reindexing map h.
template <class F>
auto pullback(std::function<std::uint64_t(std::uint64_t)> h, F f) {
    return [h = std::move(h), f = std::move(f)](std::uint64_t z) {
        return f(h(z));
    };
}

// (h_* g)(z) = sum of g over the fiber h^{-1}(z); at each level only the
// finitely many fiber members inside g's threshold support contribute.
DecayStream pushforward(const std::function<std::uint64_t(std::uint64_t)>& h,
                        const DecayStream& g);

}  // namespace adic
