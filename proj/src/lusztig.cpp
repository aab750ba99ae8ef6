#include "suzree/lusztig.hpp"

#include <chrono>
#include <stdexcept>

namespace suzree::lusztig {

std::vector<int> CaseBundle::block_ids() const {
    std::vector<int> ids;
    ids.reserve(springer.size());
    for (const auto& p : springer) ids.push_back(p.block_id);
    return ids;
}

std::vector<int> CaseBundle::d_exponents() const {
    std::vector<int> ds;
    ds.reserve(springer.size());
    for (const auto& p : springer) ds.push_back(p.d_u);
    return ds;
}

MatrixRF build_omega(const CaseBundle& bundle, const weyl::WeylGroup& group,
                     const std::vector<weyl::FClass>& classes) {
    const int d = bundle.d;
    const std::size_t n = bundle.springer.size();
    const std::size_t ncols = bundle.coset_chars.column_labels.size();
    if (bundle.coset_chars.values.size() != n)
        throw std::invalid_argument("coset character table row count != pair count");

    // per column: F-class size and torus order
    std::vector<std::size_t> size_of_col(ncols, 0);
    for (const auto& cl : classes) {
        if (cl.column_index < 0) throw std::invalid_argument("F-classes not matched to columns");
        size_of_col[static_cast<std::size_t>(cl.column_index)] = cl.size;
    }

    const Poly weyl_order = Poly::constant(static_cast<long>(group.order()), d);

    MatrixRF omega(n, n, d);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            // accumulate the sum over F-classes as one raw fraction; the
            // entry is divided out exactly at the end
            Poly num = Poly::zero(d);
            Poly den = Poly::one(d);
            for (std::size_t k = 0; k < ncols; ++k) {
                const QuadRational prod = bundle.coset_chars.values[i][k] *
                                          bundle.coset_chars.values[j][k] *
                                          QuadRational(static_cast<long>(size_of_col[k]), d);
                const Poly& torus = bundle.coset_chars.column_torus_orders[k];
                num = num * torus + Poly(prod) * den;
                den = den * torus;
            }
            const std::size_t dexp = static_cast<std::size_t>(bundle.springer[i].d_u) +
                                     static_cast<std::size_t>(bundle.springer[j].d_u);
            num = num * bundle.group_order;
            den = den * weyl_order.shifted_up(dexp);
            auto [entry, rem] = poly_divmod(num, den);
            if (!rem.is_zero())
                throw std::runtime_error("Omega entry (" + std::to_string(i) + "," +
                                         std::to_string(j) +
                                         ") is not a polynomial (data inconsistency)");
            for (const auto& c : entry.coefficients())
                if (!c.is_rational())
                    throw std::runtime_error("Omega entry (" + std::to_string(i) + "," +
                                             std::to_string(j) + ") has a surd part left over");
            omega.at(i, j) = RatFunc(entry);
            omega.at(j, i) = RatFunc(std::move(entry));
        }
    }
    return omega;
}

namespace {

std::vector<std::vector<std::size_t>> group_blocks(const std::vector<int>& block_ids) {
    std::vector<std::vector<std::size_t>> blocks;
    for (std::size_t i = 0; i < block_ids.size(); ++i) {
        if (!blocks.empty() && block_ids[i] == block_ids[blocks.back().front()]) {
            blocks.back().push_back(i);
            continue;
        }
        for (const auto& b : blocks)
            if (block_ids[b.front()] == block_ids[i])
                throw std::invalid_argument("block ids are not contiguous");
        blocks.push_back({i});
    }
    return blocks;
}

MatrixRF submatrix(const MatrixRF& m, const std::vector<std::size_t>& rows,
                   const std::vector<std::size_t>& cols) {
    MatrixRF s(rows.size(), cols.size(), m.d());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) s.at(i, j) = m.at(rows[i], cols[j]);
    return s;
}

void emplace(MatrixRF& m, const std::vector<std::size_t>& rows,
             const std::vector<std::size_t>& cols, const MatrixRF& block) {
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) m.at(rows[i], cols[j]) = block.at(i, j);
}

}  // namespace

std::pair<MatrixRF, MatrixRF> solve_block_factorization(
    const MatrixRF& omega, const std::vector<int>& block_ids,
    const std::vector<std::size_t>& elimination_order) {
    if (omega.rows() != omega.cols()) throw std::invalid_argument("Omega must be square");
    if (block_ids.size() != omega.rows())
        throw std::invalid_argument("block id count != matrix size");
    if (!omega.is_symmetric()) throw std::invalid_argument("Omega is not symmetric");
    const std::size_t n = omega.rows();
    const int d = omega.d();
    const auto blocks = group_blocks(block_ids);

    // relative pivot order within a block, induced by elimination_order
    auto local_order = [&](const std::vector<std::size_t>& block) {
        std::vector<std::size_t> order;
        if (elimination_order.empty()) return order;
        for (std::size_t global : elimination_order)
            for (std::size_t local = 0; local < block.size(); ++local)
                if (block[local] == global) order.push_back(local);
        return order;
    };

    MatrixRF p = MatrixRF::identity(n, d);
    MatrixRF lambda(n, n, d);
    for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
        const auto& I = blocks[bi];
        MatrixRF lam_block = submatrix(omega, I, I);
        for (std::size_t ki = 0; ki < bi; ++ki) {
            const auto& K = blocks[ki];
            const MatrixRF pki = submatrix(p, K, I);
            lam_block = lam_block - pki.transpose() * submatrix(lambda, K, K) * pki;
        }
        emplace(lambda, I, I, lam_block);
        MatrixRF lam_inv;
        try {
            lam_inv = lam_block.inverse(local_order(I));
        } catch (const std::domain_error&) {
            throw std::runtime_error("singular Lambda block " + std::to_string(bi) +
                                     " (factorization inapplicable to this data)");
        }
        for (std::size_t bj = bi + 1; bj < blocks.size(); ++bj) {
            const auto& J = blocks[bj];
            MatrixRF rhs = submatrix(omega, I, J);
            for (std::size_t ki = 0; ki < bi; ++ki) {
                const auto& K = blocks[ki];
                rhs = rhs - submatrix(p, K, I).transpose() * submatrix(lambda, K, K) *
                                submatrix(p, K, J);
            }
            emplace(p, I, J, lam_inv * rhs);
        }
    }
    if (!(p.transpose() * lambda * p - omega).is_zero())
        throw std::logic_error("factorization residual is nonzero");
    return {std::move(p), std::move(lambda)};
}

MatrixRF compute_X(const MatrixRF& p, const MatrixRF& y, const std::vector<int>& d_exponents) {
    const std::size_t n = p.rows();
    if (p.cols() != n || y.rows() != n || d_exponents.size() != n)
        throw std::invalid_argument("dimension mismatch in compute_X");
    const int d = p.d();
    MatrixRF x(n, y.cols(), d);
    for (std::size_t u = 0; u < n; ++u) {
        const RatFunc qd{Poly::q_power(static_cast<std::size_t>(d_exponents[u]), d)};
        for (std::size_t c = 0; c < y.cols(); ++c) {
            RatFunc acc = RatFunc::zero(d);
            for (std::size_t v = 0; v < n; ++v) {
                if (p.at(v, u).is_zero() || y.at(v, c).is_zero()) continue;
                acc += p.at(v, u) * y.at(v, c);
            }
            x.at(u, c) = qd * acc;
        }
    }
    return x;
}

ComparisonReport compare_with_target(const MatrixRF& computed, const MatrixRF& target,
                                     const std::vector<std::string>& row_labels,
                                     const std::vector<std::string>& col_labels) {
    if (computed.rows() != target.rows() || computed.cols() != target.cols())
        throw std::invalid_argument("comparison shape mismatch");
    ComparisonReport report;
    report.cells = computed.rows() * computed.cols();
    for (std::size_t i = 0; i < computed.rows(); ++i)
        for (std::size_t j = 0; j < computed.cols(); ++j)
            if (computed.at(i, j) != target.at(i, j)) {
                CellMismatch m;
                m.row = i;
                m.col = j;
                m.row_label = i < row_labels.size() ? row_labels[i] : std::to_string(i);
                m.col_label = j < col_labels.size() ? col_labels[j] : std::to_string(j);
                m.expected = target.at(i, j).to_string();
                m.actual = computed.at(i, j).to_string();
                report.mismatches.push_back(std::move(m));
            }
    report.pass = report.mismatches.empty();
    return report;
}

LusztigResult run_case(const CaseBundle& bundle) {
    const auto start = std::chrono::steady_clock::now();
    LusztigResult result;
    result.case_name = bundle.name;
    result.conjectural = bundle.conjectural;
    for (const auto& p : bundle.springer) result.pair_labels.push_back(p.pair_label());
    for (const auto& c : bundle.layout.columns) result.column_labels.push_back(c.label);
    result.weyl_column_labels = bundle.coset_chars.column_labels;

    const auto group = weyl::generate_weyl(bundle.datum);
    auto classes = weyl::f_classes(group, bundle.datum);
    weyl::match_fclasses_to_columns(classes, bundle.coset_chars.column_torus_orders);
    result.fclass_sizes_by_column.assign(bundle.coset_chars.column_labels.size(), 0);
    result.f_classes.resize(classes.size());
    for (const auto& cl : classes) {
        const auto col = static_cast<std::size_t>(cl.column_index);
        result.fclass_sizes_by_column[col] = cl.size;
        FClassSummary summary;
        summary.column_label = bundle.coset_chars.column_labels[col];
        summary.size = cl.size;
        summary.torus_order = cl.torus_order.to_string();
        const auto& word = group.words[static_cast<std::size_t>(cl.representative)];
        if (word.empty()) {
            summary.representative_word = "1";
        } else {
            for (std::size_t k = 0; k < word.size(); ++k)
                summary.representative_word +=
                    (k ? "*s" : "s") + std::to_string(static_cast<int>(word[k]) + 1);
        }
        result.f_classes[col] = std::move(summary);
    }

    result.y_table =
        coset::build_Y_table(bundle.layout, bundle.springer, bundle.extension_choices, bundle.d);
    result.omega = build_omega(bundle, group, classes);
    auto [p, lambda] = solve_block_factorization(result.omega, bundle.block_ids());
    result.p_matrix = std::move(p);
    result.lambda_matrix = std::move(lambda);
    for (std::size_t i = 0; i < result.p_matrix.rows(); ++i)
        for (std::size_t j = 0; j < result.p_matrix.cols(); ++j) {
            if (!result.p_matrix.at(i, j).as_polynomial())
                throw std::runtime_error("P entry is not a polynomial");
            if (!result.lambda_matrix.at(i, j).as_polynomial())
                throw std::runtime_error("Lambda entry is not a polynomial");
        }
    result.x_table = compute_X(result.p_matrix, result.y_table, bundle.d_exponents());
    for (std::size_t i = 0; i < result.x_table.rows(); ++i)
        for (std::size_t j = 0; j < result.x_table.cols(); ++j)
            if (!result.x_table.at(i, j).as_polynomial())
                throw std::runtime_error("X entry is not a polynomial");

    result.verdict = compare_with_target(result.x_table, bundle.target.values,
                                         bundle.target.row_labels, result.column_labels);
    if (bundle.expected_omega)
        result.omega_check = compare_with_target(result.omega, *bundle.expected_omega,
                                                 result.pair_labels, result.pair_labels);
    if (bundle.expected_p)
        result.p_check = compare_with_target(result.p_matrix, *bundle.expected_p,
                                             result.pair_labels, result.pair_labels);
    if (bundle.expected_lambda)
        result.lambda_check = compare_with_target(result.lambda_matrix, *bundle.expected_lambda,
                                                  result.pair_labels, result.pair_labels);
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

}  // namespace suzree::lusztig
