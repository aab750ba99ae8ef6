#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "suzree/case_io.hpp"
#include "suzree/disconnected.hpp"
#include "suzree/lusztig.hpp"

#include <random>

using namespace suzree;
using namespace suzree::lusztig;

namespace {

const char* kDataDir = SUZREE_DATA_DIR;

Poly ipoly(std::initializer_list<long> coeffs, int d) {
    std::vector<QuadRational> c;
    for (long v : coeffs) c.emplace_back(v, d);
    return Poly(std::move(c), d);
}

CaseBundle load(const char* name) {
    return io::load_case(std::string(kDataDir) + "/" + name + ".json");
}

}  // namespace

TEST_CASE("B2 run reproduces the theorem matrices and the target table") {
    const auto result = run_case(load("b2"));
    CHECK(result.verdict.pass);
    CHECK(result.verdict.cells == 12);
    REQUIRE(result.omega_check);
    CHECK(result.omega_check->pass);
    REQUIRE(result.p_check);
    CHECK(result.p_check->pass);
    REQUIRE(result.lambda_check);
    CHECK(result.lambda_check->pass);

    // the printed Omega, entry by entry
    MatrixRF omega(3, 3, 2);
    omega.at(0, 0) = RatFunc(ipoly({1}, 2));
    omega.at(0, 1) = omega.at(1, 0) = RatFunc(ipoly({-1, 0, 1}, 2));
    omega.at(0, 2) = omega.at(2, 0) = RatFunc(ipoly({1}, 2));
    omega.at(1, 1) = RatFunc(ipoly({0, 0, -1, 0, 0, 0, 1}, 2));
    omega.at(1, 2) = omega.at(2, 1) = RatFunc(ipoly({0, 0, 0, 0, 1, 0, -1}, 2));
    omega.at(2, 2) = RatFunc(ipoly({0, 0, 0, 0, 0, 0, 0, 0, 1}, 2));
    CHECK(result.omega == omega);

    // Omega is symmetric, polynomial and surd-free by construction; the
    // trivial/sign structural rows of X
    CHECK(result.omega.is_symmetric());
    for (std::size_t j = 0; j < 4; ++j) {
        CHECK(result.x_table.at(2, j) == RatFunc(Poly::one(2)));
        CHECK(result.x_table.at(0, j) ==
              (j == 0 ? RatFunc(Poly::q_power(4, 2)) : RatFunc::zero(2)));
    }
}

TEST_CASE("G2 run: Lambda = diag(1, p1, q^2 p1, q^4 p1)") {
    const auto result = run_case(load("g2"));
    CHECK(result.verdict.pass);
    CHECK(result.verdict.cells == 28);
    REQUIRE(result.lambda_check);
    CHECK(result.lambda_check->pass);
    const Poly p1 = ipoly({-1, 0, 0, 0, 1}, 3) * ipoly({1, 0, -1, 0, 1}, 3);
    CHECK(result.lambda_matrix.at(1, 1) == RatFunc(p1));
    CHECK(result.lambda_matrix.at(2, 2) == RatFunc(p1.shifted_up(2)));
    CHECK(result.lambda_matrix.at(3, 3) == RatFunc(p1.shifted_up(4)));
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            if (i != j) CHECK(result.lambda_matrix.at(i, j).is_zero());
}

TEST_CASE("factorization residual is identically zero") {
    for (const char* name : {"b2", "g2"}) {
        const auto result = run_case(load(name));
        const auto residual =
            result.p_matrix.transpose() * result.lambda_matrix * result.p_matrix - result.omega;
        CHECK(residual.is_zero());
    }
}

TEST_CASE("identity Omega factors trivially") {
    const auto eye = MatrixRF::identity(4, 2);
    const auto [p, lam] = solve_block_factorization(eye, {0, 1, 2, 3});
    CHECK(p == eye);
    CHECK(lam == eye);
}

TEST_CASE("build_omega rejects data whose entries are not polynomials") {
    auto bundle = load("b2");
    const auto group = weyl::generate_weyl(bundle.datum);
    auto classes = weyl::f_classes(group, bundle.datum);
    weyl::match_fclasses_to_columns(classes, bundle.coset_chars.column_torus_orders);
    CHECK_NOTHROW(build_omega(bundle, group, classes));
    bundle.coset_chars.values[1][0] = QuadRational(1, 2);  // breaks the cancellation
    CHECK_THROWS_AS(build_omega(bundle, group, classes), std::runtime_error);
}

TEST_CASE("compute_X and compare_with_target reject shape mismatches") {
    const auto eye = MatrixRF::identity(3, 2);
    CHECK_THROWS_AS(compute_X(eye, MatrixRF(2, 4, 2), {1, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(compute_X(eye, MatrixRF(3, 4, 2), {1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(compare_with_target(eye, MatrixRF(2, 3, 2), {}, {}), std::invalid_argument);
}

TEST_CASE("solver rejects bad inputs") {
    MatrixRF asym(2, 2, 2);
    asym.at(0, 1) = RatFunc(Poly::one(2));
    CHECK_THROWS_AS(solve_block_factorization(asym, {0, 1}), std::invalid_argument);

    MatrixRF singular(2, 2, 2);  // zero leading block
    singular.at(0, 1) = RatFunc(Poly::one(2));
    singular.at(1, 0) = RatFunc(Poly::one(2));
    CHECK_THROWS_AS(solve_block_factorization(singular, {0, 1}), std::runtime_error);

    CHECK_THROWS_AS(solve_block_factorization(MatrixRF::identity(3, 2), {0, 1, 0}),
                    std::invalid_argument);  // non-contiguous blocks
}

TEST_CASE("F4: solver invariance, the x17 block, and the Lambda entry list") {
    const auto bundle = load("f4");
    const auto group = weyl::generate_weyl(bundle.datum);
    auto classes = weyl::f_classes(group, bundle.datum);
    weyl::match_fclasses_to_columns(classes, bundle.coset_chars.column_torus_orders);
    const auto omega = build_omega(bundle, group, classes);

    const auto base = solve_block_factorization(omega, bundle.block_ids());
    std::mt19937_64 rng(99);
    std::vector<std::size_t> order(bundle.springer.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    for (int trial = 0; trial < 3; ++trial) {
        std::shuffle(order.begin(), order.end(), rng);
        const auto shuffled = solve_block_factorization(omega, bundle.block_ids(), order);
        CHECK(shuffled.first == base.first);
        CHECK(shuffled.second == base.second);
    }

    // corner entries of Omega: 1 for the sign pair, and for the trivial pair
    // the weighted torus-order sum (|G|/|W|) sum size/|T_w| = q^48
    CHECK(omega.at(0, 0) == RatFunc(Poly::one(2)));
    CHECK(omega.at(10, 10) == RatFunc(Poly::q_power(48, 2)));

    const auto& [p, lambda] = base;
    // the pairs sharing the x17 class: zero P entry between them, and the
    // 2x2 Lambda block is diagonal with equal entries q^12 f3
    CHECK(p.at(6, 7).is_zero());
    CHECK(lambda.at(6, 7).is_zero());
    CHECK(lambda.at(7, 6).is_zero());
    CHECK(lambda.at(6, 6) == lambda.at(7, 7));

    // Lambda = diag(1, f1, q^4 f2, q^10 f1, q^8 f3, q^10 f3, q^12 f3,
    //               q^12 f3, q^16 f3, q^18 f3, q^20 f3), rebuilt from factors
    const int d = 2;
    const Poly qq_m1 = ipoly({-1, 0, 1}, d), qq_p1 = ipoly({1, 0, 1}, d);
    const Poly q4_m1 = ipoly({-1, 0, 0, 0, 1}, d), q4_p1 = ipoly({1, 0, 0, 0, 1}, d);
    const Poly q4_mq2_p1 = ipoly({1, 0, -1, 0, 1}, d);
    const Poly q8_mq4_p1 = ipoly({1, 0, 0, 0, -1, 0, 0, 0, 1}, d);
    const Poly f1 = qq_m1 * qq_p1 * qq_p1 * q4_p1 * q4_mq2_p1 * q8_mq4_p1;
    const Poly f2 = q4_m1 * q4_p1 * q4_p1 * q4_mq2_p1 * q8_mq4_p1;
    const Poly f3 = qq_m1 * qq_m1 * qq_p1 * qq_p1 * q4_p1 * q4_p1 * q4_mq2_p1 * q8_mq4_p1;
    const Poly expected[11] = {Poly::one(d),      f1,
                               f2.shifted_up(4),  f1.shifted_up(10),
                               f3.shifted_up(8),  f3.shifted_up(10),
                               f3.shifted_up(12), f3.shifted_up(12),
                               f3.shifted_up(16), f3.shifted_up(18),
                               f3.shifted_up(20)};
    for (std::size_t i = 0; i < 11; ++i) CHECK(lambda.at(i, i) == RatFunc(expected[i]));
}

TEST_CASE("X scales linearly when a Y row is rescaled") {
    const auto bundle = load("b2");
    const auto group = weyl::generate_weyl(bundle.datum);
    auto classes = weyl::f_classes(group, bundle.datum);
    weyl::match_fclasses_to_columns(classes, bundle.coset_chars.column_torus_orders);
    const auto omega = build_omega(bundle, group, classes);
    const auto [p, lam] = solve_block_factorization(omega, bundle.block_ids());
    auto y = coset::build_Y_table(bundle.layout, bundle.springer, bundle.extension_choices,
                                  bundle.d);
    const auto x0 = compute_X(p, y, bundle.d_exponents());

    const RatFunc c{Poly(QuadRational(Rational(3, 2), Rational(0), 2))};
    const std::size_t scaled_row = 1;
    auto y2 = y;
    for (std::size_t j = 0; j < y2.cols(); ++j)
        y2.at(scaled_row, j) = c * y2.at(scaled_row, j);
    const auto x1 = compute_X(p, y2, bundle.d_exponents());
    // X' - X = (c-1) * q^{d_u} * P[r][u] * Y[r] for every pair u
    const RatFunc cm1 = c - RatFunc::one(2);
    for (std::size_t u = 0; u < x0.rows(); ++u) {
        const RatFunc qd{Poly::q_power(static_cast<std::size_t>(bundle.springer[u].d_u), 2)};
        for (std::size_t j = 0; j < x0.cols(); ++j)
            CHECK(x1.at(u, j) - x0.at(u, j) == cm1 * qd * p.at(scaled_row, u) * y.at(scaled_row, j));
    }
}

TEST_CASE("comparison verdict names the perturbed cell") {
    const auto bundle = load("b2");
    auto result = run_case(bundle);
    auto target = bundle.target.values;
    target.at(1, 1) = target.at(1, 1) + RatFunc(Poly::one(2));
    const auto verdict = compare_with_target(result.x_table, target, bundle.target.row_labels,
                                             result.column_labels);
    CHECK(!verdict.pass);
    REQUIRE(verdict.mismatches.size() == 1);
    CHECK(verdict.mismatches[0].row_label == "R_chi");
    CHECK(verdict.mismatches[0].col_label == "u4");
}

TEST_CASE("disconnected B2 is numerically identical to connected B2") {
    const auto base = load("b2");
    const auto connected = run_case(base);
    const auto disc = disconnected::run_disconnected(base);
    CHECK(disc.case_name == "b2-disconnected");
    CHECK(!disc.conjectural);
    CHECK(disc.verdict.pass);
    CHECK(disc.omega == connected.omega);
    CHECK(disc.p_matrix == connected.p_matrix);
    CHECK(disc.lambda_matrix == connected.lambda_matrix);
    CHECK(disc.x_table == connected.x_table);
    CHECK(disc.column_labels ==
          std::vector<std::string>{"(1,sigma)", "(x_{a+b},sigma)", "(x_a,sigma)",
                                   "(x_a x_{a+b},sigma)"});
    // trivial row stays all ones
    for (std::size_t j = 0; j < disc.x_table.cols(); ++j)
        CHECK(disc.x_table.at(2, j) == RatFunc(Poly::one(2)));
}

TEST_CASE("disconnected layout is only defined for b2 and f4") {
    const auto g2 = load("g2");
    CHECK_THROWS_AS(disconnected::disconnected_layout(g2), std::invalid_argument);
    const auto f4 = load("f4");
    const auto layout = disconnected::disconnected_layout(f4);
    CHECK(layout.columns.front().label == "N(u0)");
    CHECK(layout.columns.back().label == "N(u18)");
    CHECK(disconnected::disconnected_bundle(f4).conjectural);
}
