#pragma once

#include "suzree/ratfunc.hpp"

#include <cstddef>
#include <vector>

namespace suzree {

/// Dense row-major matrix of rational functions sharing one base field d.
class MatrixRF {
public:
    MatrixRF() : rows_(0), cols_(0), d_(1) {}
    MatrixRF(std::size_t rows, std::size_t cols, int d)
        : rows_(rows), cols_(cols), d_(d), entries_(rows * cols, RatFunc::zero(d)) {}

    static MatrixRF identity(std::size_t n, int d) {
        MatrixRF m(n, n, d);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = RatFunc::one(d);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    int d() const { return d_; }

    RatFunc& at(std::size_t i, std::size_t j) {
        check(i, j);
        return entries_[i * cols_ + j];
    }
    const RatFunc& at(std::size_t i, std::size_t j) const {
        check(i, j);
        return entries_[i * cols_ + j];
    }

    MatrixRF transpose() const {
        MatrixRF t(cols_, rows_, d_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    friend MatrixRF operator*(const MatrixRF& a, const MatrixRF& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix dimension mismatch in *");
        MatrixRF r(a.rows_, b.cols_, a.d_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a.at(i, k).is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    if (b.at(k, j).is_zero()) continue;
                    r.at(i, j) += a.at(i, k) * b.at(k, j);
                }
            }
        return r;
    }
    friend MatrixRF operator-(const MatrixRF& a, const MatrixRF& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("matrix dimension mismatch in -");
        MatrixRF r(a.rows_, a.cols_, a.d_);
        for (std::size_t i = 0; i < a.entries_.size(); ++i)
            r.entries_[i] = a.entries_[i] - b.entries_[i];
        return r;
    }

    friend bool operator==(const MatrixRF& a, const MatrixRF& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const MatrixRF& a, const MatrixRF& b) { return !(a == b); }

    bool is_zero() const {
        for (const auto& e : entries_)
            if (!e.is_zero()) return false;
        return true;
    }
    bool is_symmetric() const {
        if (rows_ != cols_) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if (at(i, j) != at(j, i)) return false;
        return true;
    }

    /// Gauss-Jordan inverse over the rational-function field; `row_order`
    /// selects the pivot-row processing order (any permutation gives the
    /// same exact result). Throws on singular input.
    MatrixRF inverse(const std::vector<std::size_t>& row_order = {}) const;

private:
    void check(std::size_t i, std::size_t j) const {
        if (i >= rows_ || j >= cols_) throw std::out_of_range("matrix index");
    }

    std::size_t rows_, cols_;
    int d_;
    std::vector<RatFunc> entries_;
};

}  // namespace suzree
