#include "suzree/finite_group.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <stdexcept>

namespace suzree::models {

void FiniteGroupModel::finalize() {
    const std::size_t n = size;
    if (table.size() != n * n) throw std::logic_error("group table size mismatch");
    for (std::size_t a = 0; a < n; ++a)
        if (mul(0, a) != a || mul(a, 0) != a)
            throw std::logic_error("element 0 is not the identity");
    inverse.assign(n, 0);
    for (std::size_t a = 0; a < n; ++a) {
        bool found = false;
        for (std::size_t b = 0; b < n; ++b)
            if (mul(a, b) == 0 && mul(b, a) == 0) {
                inverse[a] = static_cast<std::uint16_t>(b);
                found = true;
                break;
            }
        if (!found) throw std::logic_error("element without inverse");
    }
    element_order.assign(n, 0);
    for (std::size_t a = 0; a < n; ++a) {
        int ord = 1;
        std::uint16_t x = static_cast<std::uint16_t>(a);
        while (x != 0) {
            x = mul(x, static_cast<std::uint16_t>(a));
            ++ord;
        }
        element_order[a] = ord;
    }
    if (element_names.empty()) {
        element_names.resize(n);
        for (std::size_t a = 0; a < n; ++a) element_names[a] = "e" + std::to_string(a);
    }
}

void FiniteGroupModel::check_axioms() const {
    const std::size_t n = size;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (mul(a, b) >= n) throw std::logic_error("table not closed");
            for (std::size_t c = 0; c < n; ++c)
                if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                    throw std::logic_error("associativity fails");
        }
}

std::size_t FiniteGroupModel::centralizer_order(std::uint16_t x) const {
    std::size_t count = 0;
    for (std::size_t y = 0; y < size; ++y)
        if (mul(static_cast<std::uint16_t>(y), x) == mul(x, static_cast<std::uint16_t>(y))) ++count;
    return count;
}

Automorphism identity_automorphism(const FiniteGroupModel& g) {
    Automorphism a(g.size);
    for (std::size_t i = 0; i < g.size; ++i) a[i] = static_cast<std::uint16_t>(i);
    return a;
}

void validate_automorphism(const FiniteGroupModel& g, const Automorphism& sigma) {
    if (sigma.size() != g.size) throw std::invalid_argument("automorphism size mismatch");
    std::vector<bool> hit(g.size, false);
    for (auto v : sigma) {
        if (v >= g.size || hit[v]) throw std::invalid_argument("automorphism not a bijection");
        hit[v] = true;
    }
    if (sigma[0] != 0) throw std::invalid_argument("automorphism moves the identity");
    for (std::size_t a = 0; a < g.size; ++a)
        for (std::size_t b = 0; b < g.size; ++b)
            if (sigma[g.mul(static_cast<std::uint16_t>(a), static_cast<std::uint16_t>(b))] !=
                g.mul(sigma[a], sigma[b]))
                throw std::invalid_argument("map does not respect multiplication");
}

std::vector<TwistedClass> twisted_classes(const FiniteGroupModel& g, const Automorphism& sigma) {
    const std::size_t n = g.size;
    std::vector<char> seen(n, 0);
    std::vector<TwistedClass> classes;
    for (std::size_t start = 0; start < n; ++start) {
        if (seen[start]) continue;
        std::set<std::uint16_t> orbit;
        std::vector<std::uint16_t> frontier{static_cast<std::uint16_t>(start)};
        orbit.insert(static_cast<std::uint16_t>(start));
        while (!frontier.empty()) {
            std::vector<std::uint16_t> next;
            for (auto e : frontier)
                for (std::size_t x = 0; x < n; ++x) {
                    const std::uint16_t y =
                        g.mul(g.mul(g.inv(static_cast<std::uint16_t>(x)), e), sigma[x]);
                    if (orbit.insert(y).second) next.push_back(y);
                }
            frontier = std::move(next);
        }
        TwistedClass cl;
        cl.members.assign(orbit.begin(), orbit.end());
        cl.representative = cl.members.front();
        for (auto m : cl.members) seen[m] = 1;
        classes.push_back(std::move(cl));
    }
    std::sort(classes.begin(), classes.end(), [&](const TwistedClass& a, const TwistedClass& b) {
        const int oa = g.element_order[a.representative];
        const int ob = g.element_order[b.representative];
        if (oa != ob) return oa < ob;
        return a.representative < b.representative;
    });
    return classes;
}

// ---------------------------------------------------------------- builders

namespace {

FiniteGroupModel from_table(std::string name, std::size_t n, std::vector<std::uint16_t> table,
                            std::vector<std::string> names, std::vector<std::uint16_t> gens) {
    FiniteGroupModel g;
    g.name = std::move(name);
    g.size = n;
    g.table = std::move(table);
    g.element_names = std::move(names);
    g.generators = std::move(gens);
    g.finalize();
    return g;
}

using Perm = std::vector<std::uint8_t>;

Perm pcompose(const Perm& a, const Perm& b) {  // (a*b)(x) = a(b(x))
    Perm c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
    return c;
}

FiniteGroupModel from_permutations(std::string name, int points, std::vector<Perm> gens,
                                   std::size_t expected_order) {
    Perm id(points);
    for (int i = 0; i < points; ++i) id[i] = static_cast<std::uint8_t>(i);
    std::vector<Perm> elements{id};
    std::map<Perm, std::uint16_t> index{{id, 0}};
    std::size_t head = 0;
    while (head < elements.size()) {
        const Perm cur = elements[head++];
        for (const auto& s : gens) {
            Perm nxt = pcompose(cur, s);
            if (!index.count(nxt)) {
                index[nxt] = static_cast<std::uint16_t>(elements.size());
                elements.push_back(std::move(nxt));
            }
        }
    }
    if (expected_order && elements.size() != expected_order)
        throw std::logic_error("permutation group closure has unexpected order");
    const std::size_t n = elements.size();
    std::vector<std::uint16_t> table(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            table[a * n + b] = index.at(pcompose(elements[a], elements[b]));
    std::vector<std::string> names;
    names.reserve(n);
    for (const auto& p : elements) {
        std::string s = "[";
        for (std::size_t i = 0; i < p.size(); ++i) s += std::to_string(int(p[i]));
        s += "]";
        names.push_back(std::move(s));
    }
    std::vector<std::uint16_t> gidx;
    for (const auto& s : gens) gidx.push_back(index.at(s));
    return from_table(std::move(name), n, std::move(table), std::move(names), std::move(gidx));
}

}  // namespace

FiniteGroupModel trivial_group() {
    return from_table("1", 1, {0}, {"1"}, {});
}

FiniteGroupModel cyclic_group(int n) {
    if (n < 1 || n > 64) throw std::invalid_argument("cyclic_group: bad n");
    const std::size_t s = static_cast<std::size_t>(n);
    std::vector<std::uint16_t> table(s * s);
    for (std::size_t a = 0; a < s; ++a)
        for (std::size_t b = 0; b < s; ++b) table[a * s + b] = static_cast<std::uint16_t>((a + b) % s);
    std::vector<std::string> names;
    for (int k = 0; k < n; ++k)
        names.push_back(k == 0 ? "1" : (k == 1 ? "g" : "g^" + std::to_string(k)));
    return from_table("Z" + std::to_string(n), s, std::move(table), std::move(names),
                      n > 1 ? std::vector<std::uint16_t>{1} : std::vector<std::uint16_t>{});
}

FiniteGroupModel symmetric3() {
    Perm t{1, 0, 2};  // (01)
    Perm c{1, 2, 0};  // (012)
    auto g = from_permutations("S3", 3, {t, c}, 6);
    return g;
}

FiniteGroupModel dihedral8() {
    // elements r^j s^e with index j + 4e; s r s = r^{-1}
    auto idx = [](int j, int e) { return static_cast<std::uint16_t>(((j % 4) + 4) % 4 + 4 * e); };
    std::vector<std::uint16_t> table(64);
    for (int j1 = 0; j1 < 4; ++j1)
        for (int e1 = 0; e1 < 2; ++e1)
            for (int j2 = 0; j2 < 4; ++j2)
                for (int e2 = 0; e2 < 2; ++e2)
                    table[idx(j1, e1) * 8 + idx(j2, e2)] =
                        idx(j1 + (e1 ? -j2 : j2), e1 ^ e2);
    std::vector<std::string> names{"1", "r", "r^2", "r^3", "s", "rs", "r^2*s", "r^3*s"};
    return from_table("D8", 8, std::move(table), std::move(names), {1, 4});
}

FiniteGroupModel quaternion8() {
    // 0:1 1:-1 2:i 3:-i 4:j 5:-j 6:k 7:-k
    auto neg = [](int a) { return a == 0 ? 1 : a == 1 ? 0 : (a % 2 ? a - 1 : a + 1); };
    std::vector<std::uint16_t> table(64, 0);
    auto set = [&](int a, int b, int c) { table[a * 8 + b] = static_cast<std::uint16_t>(c); };
    for (int a = 0; a < 8; ++a) {
        set(0, a, a);
        set(a, 0, a);
        set(1, a, neg(a));
        set(a, 1, neg(a));
    }
    // i*i = j*j = k*k = -1; i*j = k, j*k = i, k*i = j
    int I = 2, J = 4, K = 6;
    auto setsigned = [&](int a, int b, int c) {
        set(a, b, c);
        set(neg(a), b, neg(c));
        set(a, neg(b), neg(c));
        set(neg(a), neg(b), c);
    };
    setsigned(I, I, 1);
    setsigned(J, J, 1);
    setsigned(K, K, 1);
    setsigned(I, J, K);
    setsigned(J, K, I);
    setsigned(K, I, J);
    setsigned(J, I, neg(K));
    setsigned(K, J, neg(I));
    setsigned(I, K, neg(J));
    std::vector<std::string> names{"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
    return from_table("Q8", 8, std::move(table), std::move(names), {2, 4});
}

FiniteGroupModel alternating4() {
    Perm a{1, 2, 0, 3};  // (012)
    Perm b{1, 0, 3, 2};  // (01)(23)
    return from_permutations("A4", 4, {a, b}, 12);
}

Automorphism cyclic_inversion(const FiniteGroupModel& zn) {
    Automorphism sig(zn.size);
    for (std::size_t a = 0; a < zn.size; ++a) sig[a] = zn.inv(static_cast<std::uint16_t>(a));
    validate_automorphism(zn, sig);
    return sig;
}

Automorphism conjugation_by(const FiniteGroupModel& g, std::uint16_t t) {
    Automorphism sig(g.size);
    for (std::size_t a = 0; a < g.size; ++a)
        sig[a] = g.mul(g.mul(t, static_cast<std::uint16_t>(a)), g.inv(t));
    validate_automorphism(g, sig);
    return sig;
}

Automorphism d8_swap(const FiniteGroupModel& d8) {
    // r^j s^e -> r^{j+e} s^e
    Automorphism sig(8);
    for (int j = 0; j < 4; ++j)
        for (int e = 0; e < 2; ++e)
            sig[j + 4 * e] = static_cast<std::uint16_t>((j + e) % 4 + 4 * e);
    validate_automorphism(d8, sig);
    return sig;
}

Automorphism q8_swap(const FiniteGroupModel& q8) {
    // 1,-1 fixed; i <-> j; k -> -k
    Automorphism sig{0, 1, 4, 5, 2, 3, 7, 6};
    validate_automorphism(q8, sig);
    return sig;
}

Automorphism a4_outer(const FiniteGroupModel& a4) {
    // conjugation by the transposition (0 1) of S4 acting on the stored
    // permutations; realized elementwise by locating the conjugate
    Automorphism sig(a4.size);
    // element names encode the permutation images: "[abcd]"
    auto decode = [](const std::string& s) {
        Perm p;
        for (char c : s)
            if (c >= '0' && c <= '9') p.push_back(static_cast<std::uint8_t>(c - '0'));
        return p;
    };
    std::map<Perm, std::uint16_t> index;
    for (std::size_t i = 0; i < a4.size; ++i) index[decode(a4.element_names[i])] = static_cast<std::uint16_t>(i);
    Perm t{1, 0, 2, 3};
    for (std::size_t i = 0; i < a4.size; ++i) {
        Perm p = decode(a4.element_names[i]);
        sig[i] = index.at(pcompose(pcompose(t, p), t));
    }
    validate_automorphism(a4, sig);
    return sig;
}

}  // namespace suzree::models
