#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "adic/coeff.hpp"

namespace adic {

using Vec = std::vector<Coeff>;

bool vec_is_zero(const Vec& v);

// Incremental row space in echelon form, for exact span membership and
// canonical coset representatives.
class RowSpace {
public:
    explicit RowSpace(Domain d) : dom_(d) {}

    // Reduces v against the current rows (echelon, pivots scaled to 1).
    Vec reduce(Vec v) const;

    // Inserts v's reduction; returns true if the rank grew.
    bool insert(Vec v);

    bool contains(const Vec& v) const { return vec_is_zero(reduce(v)); }
    std::size_t rank() const { return rows_.size(); }
    const std::vector<Vec>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

private:
    Domain dom_;
    std::vector<Vec> rows_;
    std::vector<std::size_t> pivots_;  // pivot column of each row
};

// Solves sum_j x_j * cols[j] = target exactly. Every column (and the
// target) must have the same length. Returns one solution or nullopt.
std::optional<Vec> solve_columns(const std::vector<Vec>& cols,
                                 const Vec& target, Domain d);

// Basis of the kernel {x : sum_j x_j * cols[j] = 0}.
std::vector<Vec> kernel_columns(const std::vector<Vec>& cols, Domain d);

}  // namespace adic
