#include "suzree/matrix.hpp"

#include <algorithm>
#include <numeric>

namespace suzree {

MatrixRF MatrixRF::inverse(const std::vector<std::size_t>& row_order) const {
    if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
    const std::size_t n = rows_;
    std::vector<std::size_t> pref(row_order);
    if (pref.empty()) {
        pref.resize(n);
        std::iota(pref.begin(), pref.end(), 0);
    }
    if (pref.size() != n) throw std::invalid_argument("row_order size mismatch");

    MatrixRF a = *this;
    MatrixRF inv = MatrixRF::identity(n, d_);
    std::vector<bool> used(n, false);
    std::vector<std::size_t> pivot_row_of_col(n);

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = n;
        for (std::size_t cand : pref) {
            if (!used[cand] && !a.at(cand, col).is_zero()) {
                pivot = cand;
                break;
            }
        }
        if (pivot == n) throw std::domain_error("singular matrix in inverse()");
        used[pivot] = true;
        pivot_row_of_col[col] = pivot;
        const RatFunc scale = RatFunc::one(d_) / a.at(pivot, col);
        for (std::size_t j = 0; j < n; ++j) {
            a.at(pivot, j) = a.at(pivot, j) * scale;
            inv.at(pivot, j) = inv.at(pivot, j) * scale;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == pivot || a.at(r, col).is_zero()) continue;
            const RatFunc f = a.at(r, col);
            for (std::size_t j = 0; j < n; ++j) {
                a.at(r, j) = a.at(r, j) - f * a.at(pivot, j);
                inv.at(r, j) = inv.at(r, j) - f * inv.at(pivot, j);
            }
        }
    }
    MatrixRF out(n, n, d_);
    for (std::size_t col = 0; col < n; ++col)
        for (std::size_t j = 0; j < n; ++j) out.at(col, j) = inv.at(pivot_row_of_col[col], j);
    return out;
}

}  // namespace suzree
