#include "adic/linalg.hpp"

#include <stdexcept>

namespace adic {

bool vec_is_zero(const Vec& v) {
    for (auto& c : v)
        if (!c.is_zero()) return false;
    return true;
}

Vec RowSpace::reduce(Vec v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Coeff& c = v[pivots_[i]];
        if (c.is_zero()) continue;
        Coeff f = c;  // pivot entries are 1
        for (std::size_t j = 0; j < v.size(); ++j)
            if (!rows_[i][j].is_zero()) v[j] -= f * rows_[i][j];
    }
    return v;
}

bool RowSpace::insert(Vec v) {
    v = reduce(std::move(v));
    std::size_t p = v.size();
    for (std::size_t j = 0; j < v.size(); ++j)
        if (!v[j].is_zero()) {
            p = j;
            break;
        }
    if (p == v.size()) return false;
    Coeff inv = v[p].inverse();
    for (auto& c : v) c *= inv;
    // Back-eliminate the new pivot from existing rows.
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        Coeff f = rows_[i][p];
        if (f.is_zero()) continue;
        for (std::size_t j = 0; j < v.size(); ++j)
            if (!v[j].is_zero()) rows_[i][j] -= f * v[j];
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
}

namespace {

// Gauss-Jordan on [A | b] where A's columns are `cols`.
struct Elim {
    std::vector<Vec> mat;  // rows of the augmented matrix
    std::size_t n;         // number of unknowns
    std::vector<std::size_t> pivot_col_of_row;

    Elim(const std::vector<Vec>& cols, const Vec* target, Domain d) {
        std::size_t m = target ? target->size()
                               : (cols.empty() ? 0 : cols[0].size());
        n = cols.size();
        for (auto& c : cols)
            if (c.size() != m)
                throw std::invalid_argument("column length mismatch");
        mat.assign(m, Vec(n + 1, Coeff::zero(d)));
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < m; ++i) mat[i][j] = cols[j][i];
        if (target)
            for (std::size_t i = 0; i < m; ++i) mat[i][n] = (*target)[i];
        run();
    }

    void run() {
        std::size_t row = 0;
        for (std::size_t col = 0; col < n && row < mat.size(); ++col) {
            std::size_t piv = mat.size();
            for (std::size_t i = row; i < mat.size(); ++i)
                if (!mat[i][col].is_zero()) {
                    piv = i;
                    break;
                }
            if (piv == mat.size()) continue;
            std::swap(mat[row], mat[piv]);
            Coeff inv = mat[row][col].inverse();
            for (auto& c : mat[row]) c *= inv;
            for (std::size_t i = 0; i < mat.size(); ++i) {
                if (i == row) continue;
                Coeff f = mat[i][col];
                if (f.is_zero()) continue;
                for (std::size_t j = col; j <= n; ++j)
                    if (!mat[row][j].is_zero()) mat[i][j] -= f * mat[row][j];
            }
            pivot_col_of_row.push_back(col);
            ++row;
        }
    }

    bool consistent() const {
        for (std::size_t i = pivot_col_of_row.size(); i < mat.size(); ++i)
            if (!mat[i][n].is_zero()) return false;
        return true;
    }
};

}  // namespace

std::optional<Vec> solve_columns(const std::vector<Vec>& cols,
                                 const Vec& target, Domain d) {
    Elim e(cols, &target, d);
    if (!e.consistent()) return std::nullopt;
    Vec x(cols.size(), Coeff::zero(d));
    for (std::size_t r = 0; r < e.pivot_col_of_row.size(); ++r)
        x[e.pivot_col_of_row[r]] = e.mat[r][cols.size()];
    return x;
}

std::vector<Vec> kernel_columns(const std::vector<Vec>& cols, Domain d) {
    Elim e(cols, nullptr, d);
    std::vector<bool> is_pivot(cols.size(), false);
    for (auto c : e.pivot_col_of_row) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t free = 0; free < cols.size(); ++free) {
        if (is_pivot[free]) continue;
        Vec x(cols.size(), Coeff::zero(d));
        x[free] = Coeff::one(d);
        for (std::size_t r = 0; r < e.pivot_col_of_row.size(); ++r)
            x[e.pivot_col_of_row[r]] = -e.mat[r][free];
        basis.push_back(std::move(x));
    }
    return basis;
}

}  // namespace adic
