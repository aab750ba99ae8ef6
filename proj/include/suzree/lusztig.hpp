#pragma once

#include "suzree/coset_data.hpp"
#include "suzree/matrix.hpp"
#include "suzree/weyl.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace suzree::lusztig {

struct TargetTable {
    std::vector<std::string> row_labels;
    MatrixRF values;
};

/// Everything defining one run of the algorithm.
struct CaseBundle {
    std::string name;
    int d = 1;
    Poly group_order;
    weyl::RootDatum datum;
    std::vector<coset::SpringerPair> springer;
    coset::CosetCharTable coset_chars;
    std::map<std::string, std::string> extension_choices;  // pair key -> selector
    coset::UnipotentLayout layout;
    TargetTable target;
    bool conjectural = false;
    std::optional<MatrixRF> expected_omega, expected_p, expected_lambda;

    std::vector<int> block_ids() const;
    std::vector<int> d_exponents() const;
};

struct CellMismatch {
    std::size_t row = 0, col = 0;
    std::string row_label, col_label;
    std::string expected, actual;
};

struct ComparisonReport {
    bool pass = false;
    std::size_t cells = 0;
    std::vector<CellMismatch> mismatches;
};

struct FClassSummary {
    std::string column_label;
    std::string representative_word;  // generator word, "1" for the identity
    std::size_t size = 0;
    std::string torus_order;
};

struct LusztigResult {
    std::string case_name;
    std::vector<std::string> pair_labels;        // row/column labels of Omega, P, Lambda
    std::vector<std::string> column_labels;      // split-class labels (columns of Y, X)
    std::vector<std::string> weyl_column_labels; // F-class columns of the extension table
    std::vector<FClassSummary> f_classes;        // per column, in column order
    MatrixRF omega, p_matrix, lambda_matrix, y_table, x_table;
    ComparisonReport verdict;  // vs the target table
    bool conjectural = false;
    std::optional<ComparisonReport> omega_check, p_check, lambda_check;
    std::vector<std::size_t> fclass_sizes_by_column;
    double seconds = 0.0;
};

/// Omega[(u,phi),(v,psi)] = (|G|/|W|) sum over F-classes of
/// size * rho_u(wF0) rho_v(wF0) / (|T_w| q^{d_u+d_v}).
/// Every entry must reduce to a surd-free polynomial.
MatrixRF build_omega(const CaseBundle& bundle, const weyl::WeylGroup& group,
                     const std::vector<weyl::FClass>& classes);

/// Unique solution of tP Lambda P = Omega with P unit upper triangular,
/// identity on the diagonal blocks, Lambda block diagonal. Computed by block
/// forward elimination; `elimination_order` only permutes the pivot order
/// inside the local block solves and never changes the result.
std::pair<MatrixRF, MatrixRF> solve_block_factorization(
    const MatrixRF& omega, const std::vector<int>& block_ids,
    const std::vector<std::size_t>& elimination_order = {});

/// X row for pair u: q^{d_u} * sum_v P[v][u] * Y[v].
MatrixRF compute_X(const MatrixRF& p, const MatrixRF& y, const std::vector<int>& d_exponents);

ComparisonReport compare_with_target(const MatrixRF& computed, const MatrixRF& target,
                                     const std::vector<std::string>& row_labels,
                                     const std::vector<std::string>& col_labels);

/// Full pipeline: weyl generation, F-classes, column matching, Y, Omega,
/// factorization, X, comparisons (target and, when present, the expected
/// Omega/P/Lambda).
LusztigResult run_case(const CaseBundle& bundle);

}  // namespace suzree::lusztig
