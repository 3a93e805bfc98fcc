#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "adic/decay.hpp"

namespace adic {

// One layer of a module system: the presentation whose level-i truncation
// is M_i, and (above level 0) the transition matrix into the previous
// layer. psi_to_previous has rank(previous) rows and rank(this) columns;
// it sends v to psi * v, evaluated at the previous layer's level.
struct SystemLevel {
    ModulePtr module;
    std::vector<std::vector<Polynomial>> psi_to_previous;
};

// A tower of truncation-level modules M_i with transition maps, as used by
// the basis-lifting algorithm. Levels are materialized up front.
struct AdicSystem {
    std::vector<SystemLevel> levels;

    std::uint32_t depth() const {
        return static_cast<std::uint32_t>(levels.size());
    }
};

// Checks that the transition map of level i+1 induces an isomorphism from
// M_{i+1}/a^{i+1}M_{i+1} onto M_i (dimension count plus surjectivity).
bool system_transition_iso(const AdicSystem& sys, std::uint32_t i);

struct LiftReport {
    bool success = false;
    std::vector<std::string> checks;  // per-level residual notes
    std::uint32_t fail_level = 0;
    std::string failure;  // "NotGenerating", "NotSurjective", "NotFlat", ...
    std::vector<Polynomial> witness;
};

struct NakayamaResult {
    LiftReport report;
    // Coefficient polynomials per family index; Sum c_z * family_z matches
    // the target modulo a^{i+1} for every i <= cap.
    std::vector<std::pair<std::uint64_t, Polynomial>> coefficients;
    std::optional<DecayStream> coefficient_stream;  // over the ring
};

// Constructive Nakayama: if the family generates at level 0, build
// coefficients level-by-level (solving each graded correction in the
// homogeneous piece of that degree). Fails with NotGenerating exactly when
// the level-0 solve fails.
NakayamaResult nakayama_lift(
    const TowerElement& m,
    const std::vector<std::pair<std::uint64_t, TowerElement>>& family,
    std::uint32_t cap);

struct SurjectionLift {
    LiftReport report;
    std::optional<DecayStream> lift;  // into the source module
    // Orders of image term and chosen preimage per support index.
    std::vector<std::tuple<std::uint64_t, OrderValue, OrderValue>> orders;
};

// Lifts a decaying stream through the map source -> target given by a
// polynomial matrix (rank(target) rows, rank(source) columns). Preimages
// are chosen with coefficients as deep in the ideal as feasible, so the
// lift preserves each term's order.
SurjectionLift lift_along_surjection(
    const std::vector<std::vector<Polynomial>>& phi, const ModulePtr& source,
    const ModulePtr& target, const DecayStream& f, std::uint32_t cap);

struct BasisLiftResult {
    LiftReport report;
    // basis[i][j] is the j-th basis vector of M_i (coordinates in the
    // level-i presentation); successive levels are compatible under psi.
    std::vector<std::vector<std::vector<Polynomial>>> basis;
};

// Lifts a field basis of M_0 through the transition maps, verifying at
// every level that the lifted family is a basis (generation solve plus
// exact dimension count). Requires the local case: a variable-generated
// ideal whose level-0 quotient is the base field. Fails with NotFlat when
// some level cannot be lifted or has the wrong dimension.
BasisLiftResult basis_lift(const AdicSystem& sys, std::uint32_t cap);

struct FreeCoverResult {
    LiftReport report;
    std::size_t index_count = 0;  // size of the covering delta family
    // Nonzero kernel elements found by linear algebra at `kernel_level`
    // (coefficient vectors over the cover's indices).
    std::uint32_t kernel_level = 0;
    std::vector<std::vector<Polynomial>> kernel_samples;
};

// The canonical surjection from decaying functions on the generator
// indices onto M: delta_k maps to the k-th generator. Verifies levelwise
// surjectivity and samples its kernel.
FreeCoverResult free_cover(const ModulePtr& M, std::uint32_t cap);

}  // namespace adic
