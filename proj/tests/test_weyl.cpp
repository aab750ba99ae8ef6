#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "suzree/weyl.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

using namespace suzree;
using namespace suzree::weyl;

namespace {

RootDatum b2_datum() {
    return {2, {{2, -1}, {-2, 2}}, {{0, 2}, {1, 0}}, 2, 2};
}
RootDatum g2_datum() {
    return {2, {{2, -1}, {-3, 2}}, {{0, 3}, {1, 0}}, 3, 3};
}
RootDatum f4_datum() {
    return {4,
            {{2, -1, 0, 0}, {-1, 2, -2, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}},
            {{0, 0, 0, 1}, {0, 0, 1, 0}, {0, 2, 0, 0}, {2, 0, 0, 0}},
            2,
            2};
}

Poly ipoly(std::initializer_list<long> coeffs, int d) {
    std::vector<QuadRational> c;
    for (long v : coeffs) c.emplace_back(v, d);
    return Poly(std::move(c), d);
}

Poly surd_quadratic(long a0, long b1, long a2, int d) {
    // a0 + b1*sqrt(d)*q + a2*q^2
    std::vector<QuadRational> c{QuadRational(a0, d), QuadRational(Rational(0), Rational(b1), d),
                                QuadRational(a2, d)};
    return Poly(std::move(c), d);
}

int det_int(const Element& m, int n) {
    if (n == 1) return m[0];
    int acc = 0;
    for (int k = 0; k < n; ++k) {
        if (m[k] == 0) continue;
        Element minor;
        for (int i = 1; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (j != k) minor.push_back(m[i * n + j]);
        acc += (k % 2 ? -1 : 1) * m[k] * det_int(minor, n - 1);
    }
    return acc;
}

}  // namespace

TEST_CASE("group orders 8, 12, 1152") {
    CHECK(generate_weyl(b2_datum()).order() == 8);
    CHECK(generate_weyl(g2_datum()).order() == 12);
    CHECK(generate_weyl(f4_datum()).order() == 1152);
}

TEST_CASE("closure bound rejects malformed data") {
    CHECK_THROWS(generate_weyl(f4_datum(), 100));
    RootDatum bad = b2_datum();
    bad.cartan = {{2, -4}, {-4, 2}};  // bond too heavy for finite type
    CHECK_THROWS(generate_weyl(bad));
}

TEST_CASE("twist exchanges the B2 generators and fixes the identity") {
    const auto datum = b2_datum();
    const auto w = generate_weyl(datum);
    const auto sa = w.elements[w.generator_index[0]];
    const auto sb = w.elements[w.generator_index[1]];
    CHECK(twist_apply(datum, w, sa) == sb);
    CHECK(twist_apply(datum, w, sb) == sa);
    CHECK(twist_apply(datum, w, datum.identity()) == datum.identity());
}

TEST_CASE("a wrong twist matrix is caught when its image leaves W") {
    RootDatum datum = b2_datum();
    datum.twist_matrix = {{0, 1}, {1, 0}};  // M^2 = I but not the isogeny action
    datum.twist_scale = 1;
    const auto w = generate_weyl(datum);
    const auto sa = w.elements[w.generator_index[0]];
    CHECK_THROWS_AS(twist_apply(datum, w, sa), std::runtime_error);
}

TEST_CASE("twist is an involution on all of W(F4)") {
    const auto datum = f4_datum();
    const auto w = generate_weyl(datum);
    for (const auto& el : w.elements) CHECK(twist_apply(datum, w, twist_apply(datum, w, el)) == el);
}

TEST_CASE("every element preserves the root system with determinant +-1") {
    for (const auto& datum : {b2_datum(), g2_datum(), f4_datum()}) {
        const auto w = generate_weyl(datum);
        const auto roots = root_system(w, datum);
        const std::set<std::vector<int>> root_set(roots.begin(), roots.end());
        const std::size_t expected = datum.rank == 4 ? 48 : (datum.cartan[1][0] == -3 ? 12 : 8);
        CHECK(roots.size() == expected);
        for (const auto& el : w.elements) {
            const int det = det_int(el, datum.rank);
            CHECK((det == 1 || det == -1));
            for (int i = 0; i < datum.rank; ++i) {
                std::vector<int> img(datum.rank, 0);
                for (int r = 0; r < datum.rank; ++r) img[r] = el[r * datum.rank + i];
                CHECK(root_set.count(img) == 1);
            }
        }
    }
}

TEST_CASE("F-class counts and size multisets") {
    const auto db = b2_datum();
    auto cb = f_classes(generate_weyl(db), db);
    REQUIRE(cb.size() == 3);
    std::multiset<std::size_t> sb;
    for (const auto& c : cb) sb.insert(c.size);
    CHECK(sb == std::multiset<std::size_t>{4, 2, 2});

    const auto dg = g2_datum();
    auto cg = f_classes(generate_weyl(dg), dg);
    REQUIRE(cg.size() == 4);
    std::multiset<std::size_t> sg;
    for (const auto& c : cg) sg.insert(c.size);
    CHECK(sg == std::multiset<std::size_t>{6, 2, 2, 2});

    const auto df = f4_datum();
    auto cf = f_classes(generate_weyl(df), df);
    CHECK(cf.size() == 11);
    std::size_t total = 0;
    for (const auto& c : cf) total += c.size;
    CHECK(total == 1152);
}

TEST_CASE("w and x^{-1} w twist(x) always share an F-class") {
    const auto datum = g2_datum();
    const auto w = generate_weyl(datum);
    const auto classes = f_classes(w, datum);
    auto class_of = [&](int idx) {
        for (std::size_t c = 0; c < classes.size(); ++c)
            if (std::binary_search(classes[c].members.begin(), classes[c].members.end(), idx))
                return c;
        FAIL("uncovered element");
        return std::size_t(0);
    };
    for (const auto& el : w.elements)
        for (const auto& x : w.elements) {
            const auto inv =
                std::find_if(w.elements.begin(), w.elements.end(), [&](const Element& y) {
                    return mat_mul(x, y, 2) == datum.identity();
                });
            REQUIRE(inv != w.elements.end());
            const auto moved = mat_mul(mat_mul(*inv, el, 2), twist_apply(datum, w, x), 2);
            CHECK(class_of(w.index(el)) == class_of(w.index(moved)));
        }
}

TEST_CASE("torus orders reproduce the published lists") {
    const auto db = b2_datum();
    auto cb = f_classes(generate_weyl(db), db);
    std::multiset<std::string> got;
    for (const auto& c : cb) got.insert(c.torus_order.to_string());
    CHECK(got == std::multiset<std::string>{ipoly({-1, 0, 1}, 2).to_string(),
                                            surd_quadratic(1, -1, 1, 2).to_string(),
                                            surd_quadratic(1, 1, 1, 2).to_string()});

    const auto dg = g2_datum();
    auto cg = f_classes(generate_weyl(dg), dg);
    got.clear();
    for (const auto& c : cg) got.insert(c.torus_order.to_string());
    CHECK(got == std::multiset<std::string>{
                     ipoly({-1, 0, 1}, 3).to_string(), surd_quadratic(1, -1, 1, 3).to_string(),
                     ipoly({1, 0, 1}, 3).to_string(), surd_quadratic(1, 1, 1, 3).to_string()});

    const auto df = f4_datum();
    auto cf = f_classes(generate_weyl(df), df);
    std::map<std::string, std::size_t> size_by_order;
    for (const auto& c : cf) size_by_order[c.torus_order.to_string()] = c.size;
    REQUIRE(size_by_order.size() == 11);  // 11 distinct orders
    CHECK(size_by_order.at(ipoly({1, 0, -2, 0, 1}, 2).to_string()) == 72);   // (q^2-1)^2
    CHECK(size_by_order.at(ipoly({-1, 0, 0, 0, 1}, 2).to_string()) == 288);  // q^4-1
    CHECK(size_by_order.at(ipoly({1, 0, 0, 0, 1}, 2).to_string()) == 72);    // q^4+1
    CHECK(size_by_order.at(ipoly({1, 0, -1, 0, 1}, 2).to_string()) == 192);  // q^4-q^2+1
    CHECK(size_by_order.at(ipoly({1, 0, 2, 0, 1}, 2).to_string()) == 24);    // (q^2+1)^2
    // the two Coxeter-like quartics with surd coefficients, sizes 96 each
    std::vector<QuadRational> c10{QuadRational(1, 2), QuadRational(Rational(0), Rational(-1), 2),
                                  QuadRational(1, 2), QuadRational(Rational(0), Rational(-1), 2),
                                  QuadRational(1, 2)};
    CHECK(size_by_order.at(Poly(c10, 2).to_string()) == 96);
}

TEST_CASE("torus order is constant along an F-class") {
    for (const auto& datum : {b2_datum(), g2_datum()}) {
        const auto w = generate_weyl(datum);
        for (const auto& cl : f_classes(w, datum))
            for (int idx : cl.members)
                CHECK(torus_order(datum, w.elements[idx]) == cl.torus_order);
    }
    const auto datum = f4_datum();
    const auto w = generate_weyl(datum);
    std::mt19937_64 rng(7);
    for (const auto& cl : f_classes(w, datum)) {
        std::uniform_int_distribution<std::size_t> pick(0, cl.members.size() - 1);
        for (int s = 0; s < 200; ++s) {
            const int idx = cl.members[pick(rng)];
            CHECK(torus_order(datum, w.elements[idx]) == cl.torus_order);
        }
    }
}

TEST_CASE("B2 identity-class torus order is q^2-1 as a determinant") {
    CHECK(torus_order(b2_datum(), b2_datum().identity()) == ipoly({-1, 0, 1}, 2));
    CHECK(torus_order(g2_datum(), g2_datum().identity()) == ipoly({-1, 0, 1}, 3));
}

TEST_CASE("column matching by torus order") {
    const auto datum = b2_datum();
    const auto w = generate_weyl(datum);
    auto classes = f_classes(w, datum);
    const std::vector<Poly> columns{ipoly({-1, 0, 1}, 2), surd_quadratic(1, -1, 1, 2),
                                    surd_quadratic(1, 1, 1, 2)};
    match_fclasses_to_columns(classes, columns);
    for (const auto& cl : classes) {
        REQUIRE(cl.column_index >= 0);
        CHECK(cl.torus_order == columns[static_cast<std::size_t>(cl.column_index)]);
        if (cl.size == 4) CHECK(cl.column_index == 0);
    }

    const std::vector<Poly> dup{ipoly({-1, 0, 1}, 2), ipoly({-1, 0, 1}, 2),
                                surd_quadratic(1, 1, 1, 2)};
    CHECK_THROWS_AS(match_fclasses_to_columns(classes, dup), std::invalid_argument);

    const std::vector<Poly> wrong{ipoly({-1, 0, 1}, 2), surd_quadratic(1, -1, 1, 2),
                                  ipoly({5, 0, 1}, 2)};
    CHECK_THROWS_AS(match_fclasses_to_columns(classes, wrong), std::invalid_argument);
}
