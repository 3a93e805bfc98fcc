#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace adic {

struct GalleryClaim {
    std::string name;
    bool pass = false;
    std::string witness;
};

struct GalleryReport {
    std::string example;
    std::uint32_t cap = 0;
    std::vector<GalleryClaim> claims;

    void add(std::string name, bool pass, std::string witness);
    void merge(const GalleryReport& sub);
    bool overall() const;
    // One PASS/FAIL line per claim; appends OVERALL when requested.
    std::string render(bool with_overall) const;
};

// The infinite-variable ring whose completion is not complete: the sum of
// t_k^k survives killing any finite batch of variables, pinning its adic
// distance from 0 to 1 while the filtration distance is 1/2.
GalleryReport verify_example7(std::uint32_t n_max, std::uint32_t cap);

// The non-closed image of delta_i -> t^i * delta_i on decaying functions:
// partial preimages approximate the target ever better, but the forced
// full preimage is the non-decaying all-ones function. Setting
// inject_faulty_decay_bound pretends that function is decaying, which must
// flip the corresponding claim (mutation sanity).
GalleryReport verify_example5(std::uint32_t cap,
                              bool inject_faulty_decay_bound = false);

// Inverting t kills every truncation: the certificate 1 = t^{i+1} *
// t^{-(i+1)} puts 1 in a^{i+1} of the localized ring, so its completion
// vanishes and completion does not preserve injections.
GalleryReport verify_example6(std::uint32_t cap);

// Restricted power series in n variables are decaying coefficient
// functions; truncated convolution agrees with polynomial multiplication.
GalleryReport verify_restricted_series(std::uint32_t n, std::uint32_t cap);

// Everything above plus the completeness-criterion suite on sample
// finitely presented modules, round trips between decaying streams and
// level streams, the randomized Nakayama equivalence, and delta-basis
// shadows. Deterministic for a fixed (cap, seed).
GalleryReport run_all(std::uint32_t cap, std::uint64_t seed);

}  // namespace adic
