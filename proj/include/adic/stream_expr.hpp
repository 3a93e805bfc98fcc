#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "adic/decay.hpp"
#include "adic/parse.hpp"

namespace adic {

// a*k + b with natural coefficients.
struct Affine {
    std::uint64_t a = 0, b = 0;

    std::uint64_t eval(std::uint64_t k) const { return a * k + b; }
    bool constant() const { return a == 0; }
    Affine operator+(const Affine& o) const { return {a + o.a, b + o.b}; }
};

// One multiplicative factor t[index(k)]^exponent(k).
struct StreamFactor {
    Affine var_index;
    Affine exponent{0, 1};
};

// coeff * product of factors, optionally placed at position delta(k).
struct StreamTerm {
    Coeff coeff;
    std::vector<StreamFactor> factors;
    std::optional<Affine> delta;
};

// A parsed stream definition `<k> : <sexpr>`: for each natural k the
// expression yields a ring element, either directly (no deltas) or as a
// contribution at index delta(k).
struct StreamExpr {
    std::string index_name;
    std::vector<StreamTerm> terms;

    bool has_delta() const {
        return !terms.empty() && terms[0].delta.has_value();
    }
};

StreamExpr stream_parse(const std::string& text, Domain d);

// Compiles a parsed stream over a rank-1 presentation of the ring. The
// declared support bounds come from a per-term lower bound on the order as
// an affine function of k; slope-zero terms yield no finite bound past
// their constant offset, which decay_check then reports.
DecayStream stream_to_decay(const StreamExpr& e, ModulePtr ring);

// `text` is either a builtin name (@bseries: k -> t_k^k for k >= 1;
// @geom: k -> t1^k at position k) or a stream definition.
DecayStream stream_compile(const std::string& text, ModulePtr ring);

}  // namespace adic
