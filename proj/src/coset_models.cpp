#include "suzree/coset_models.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>

namespace suzree::models {

namespace {

// ambient element (a, b, t) = (a, b) tau^t; tau (c, d) tau = (d, c)
struct Ambient {
    const FiniteGroupModel& h;
    std::size_t n;

    struct Elt {
        std::uint16_t a, b;
        int t;
        bool operator==(const Elt& o) const = default;
    };

    explicit Ambient(const FiniteGroupModel& base) : h(base), n(base.size) {}

    std::size_t coset_id(std::uint16_t a, std::uint16_t b) const { return a * n + b; }

    Elt mul(const Elt& x, const Elt& y) const {
        if (x.t == 0) return {h.mul(x.a, y.a), h.mul(x.b, y.b), y.t};
        return {h.mul(x.a, y.b), h.mul(x.b, y.a), 1 ^ y.t};
    }
    Elt inv(const Elt& x) const {
        if (x.t == 0) return {h.inv(x.a), h.inv(x.b), 0};
        return {h.inv(x.b), h.inv(x.a), 1};
    }
    Elt conj(const Elt& x, const Elt& by) const { return mul(mul(by, x), inv(by)); }

    // conjugation of (a,b)tau by (x,y): (x a y^{-1}, y b x^{-1}) tau
    std::pair<std::uint16_t, std::uint16_t> conj_pair(std::uint16_t a, std::uint16_t b,
                                                      std::uint16_t x, std::uint16_t y) const {
        return {h.mul(h.mul(x, a), h.inv(y)), h.mul(h.mul(y, b), h.inv(x))};
    }
};

std::size_t class_index_of(const std::vector<TwistedClass>& classes, std::uint16_t e) {
    for (std::size_t i = 0; i < classes.size(); ++i)
        if (std::binary_search(classes[i].members.begin(), classes[i].members.end(), e)) return i;
    throw std::logic_error("element not in any class");
}

}  // namespace

ClassReport verify_coset_conjugacy(const CosetModel& model) {
    const auto& h = model.base;
    validate_automorphism(h, model.twist);
    if (h.size > 1000) throw std::invalid_argument("base group too large for brute force");
    const std::size_t n = h.size;
    Ambient amb(h);

    ClassReport report;
    report.model_name = model.name;

    const auto base_classes = twisted_classes(h, identity_automorphism(h));
    report.base_class_count = base_classes.size();

    // coset classes: orbit closure under conjugation by (g,1), (1,g) for
    // generators g, and by tau ((a,b) -> (b,a))
    std::vector<int> coset_class(n * n, -1);
    std::vector<std::uint16_t> gens = h.generators;
    if (gens.empty())
        for (std::size_t e = 1; e < n; ++e) gens.push_back(static_cast<std::uint16_t>(e));
    int next_class = 0;
    for (std::size_t start = 0; start < n * n; ++start) {
        if (coset_class[start] >= 0) continue;
        const int id = next_class++;
        std::vector<std::size_t> frontier{start};
        coset_class[start] = id;
        while (!frontier.empty()) {
            std::vector<std::size_t> nf;
            for (std::size_t cur : frontier) {
                const auto a = static_cast<std::uint16_t>(cur / n);
                const auto b = static_cast<std::uint16_t>(cur % n);
                auto push = [&](std::pair<std::uint16_t, std::uint16_t> p) {
                    const std::size_t idx = amb.coset_id(p.first, p.second);
                    if (coset_class[idx] < 0) {
                        coset_class[idx] = id;
                        nf.push_back(idx);
                    }
                };
                for (auto g : gens) {
                    push(amb.conj_pair(a, b, g, 0));
                    push(amb.conj_pair(a, b, 0, g));
                }
                push({b, a});  // conjugation by tau
            }
            frontier = std::move(nf);
        }
    }
    report.coset_class_count = static_cast<std::size_t>(next_class);

    // bijection: coset class of (a,b)tau <-> base class of a*b
    std::vector<int> image_class(next_class, -1);
    bool bijection = report.coset_class_count == report.base_class_count;
    for (std::size_t idx = 0; idx < n * n && bijection; ++idx) {
        const auto a = static_cast<std::uint16_t>(idx / n);
        const auto b = static_cast<std::uint16_t>(idx % n);
        const int base_cl = static_cast<int>(class_index_of(base_classes, h.mul(a, b)));
        int& slot = image_class[coset_class[idx]];
        if (slot < 0)
            slot = base_cl;
        else if (slot != base_cl)
            bijection = false;  // class map not well defined
    }
    if (bijection) {
        std::set<int> hit(image_class.begin(), image_class.end());
        bijection = hit.size() == report.base_class_count;
    }
    report.bijection_ok = bijection;

    // centralizer doubling for f(x) = (x,1)tau over base class representatives
    report.centralizer_ok = true;
    for (const auto& cl : base_classes) {
        const std::uint16_t x = cl.representative;
        const Ambient::Elt fx{x, 0, 1};
        std::size_t camb = 0;
        for (std::size_t xi = 0; xi < n; ++xi)
            for (std::size_t yi = 0; yi < n; ++yi)
                for (int t = 0; t < 2; ++t) {
                    const Ambient::Elt by{static_cast<std::uint16_t>(xi),
                                          static_cast<std::uint16_t>(yi), t};
                    if (amb.conj(fx, by) == fx) ++camb;
                }
        const std::size_t ch = h.centralizer_order(x);
        report.centralizer_pairs.emplace_back(camb, ch);
        if (camb != 2 * ch) report.centralizer_ok = false;
    }

    // order doubling over all coset elements, through the literal ambient
    // multiplication rule
    report.order_ok = true;
    auto ambient_order = [&](std::uint16_t a, std::uint16_t b) {
        const Ambient::Elt e{a, b, 1};
        Ambient::Elt cur = e;
        int ord = 1;
        while (!(cur.a == 0 && cur.b == 0 && cur.t == 0)) {
            cur = amb.mul(cur, e);
            ++ord;
            if (ord > static_cast<int>(4 * n)) throw std::logic_error("runaway order computation");
        }
        return ord;
    };
    for (std::size_t idx = 0; idx < n * n; ++idx) {
        const auto a = static_cast<std::uint16_t>(idx / n);
        const auto b = static_cast<std::uint16_t>(idx % n);
        if (ambient_order(a, b) != 2 * h.element_order[h.mul(a, b)]) report.order_ok = false;
    }
    for (const auto& cl : base_classes) {
        const std::uint16_t x = cl.representative;
        report.order_pairs.emplace_back(ambient_order(x, 0), h.element_order[x]);
    }

    // construction identity: tau (g1,g2)tau tau^{-1} = (g2,g1)tau
    report.tau_conjugation_ok = true;
    const Ambient::Elt tau{0, 0, 1};
    for (std::size_t idx = 0; idx < n * n; ++idx) {
        const auto a = static_cast<std::uint16_t>(idx / n);
        const auto b = static_cast<std::uint16_t>(idx % n);
        const Ambient::Elt got = amb.conj(Ambient::Elt{a, b, 1}, tau);
        if (!(got == Ambient::Elt{b, a, 1})) report.tau_conjugation_ok = false;
    }

    // F-stability counts: F((a,b)tau) = (sigma(b), sigma(a)) tau maps the coset
    // class of (a,b)tau to the class of sigma(ab)'s fiber; compare counts.
    std::size_t base_stable = 0;
    for (const auto& cl : base_classes)
        if (class_index_of(base_classes, model.twist[cl.representative]) ==
            class_index_of(base_classes, cl.representative))
            ++base_stable;
    std::size_t coset_stable = 0;
    for (int c = 0; c < next_class; ++c) {
        // find one member, apply F, compare class ids
        std::size_t member = 0;
        while (coset_class[member] != c) ++member;
        const auto a = static_cast<std::uint16_t>(member / n);
        const auto b = static_cast<std::uint16_t>(member % n);
        const std::size_t image = amb.coset_id(model.twist[b], model.twist[a]);
        if (coset_class[image] == c) ++coset_stable;
    }
    report.fstable_base_classes = base_stable;
    report.fstable_coset_classes = coset_stable;
    report.fstable_ok = base_stable == coset_stable;
    return report;
}

// ------------------------------------------------------------------ Sp4(2)

namespace {

// 4x4 matrix over GF(2) packed into 16 bits, row-major; bit (i*4+j) = m[i][j]
using Mat16 = std::uint16_t;

int get(Mat16 m, int i, int j) { return (m >> (i * 4 + j)) & 1; }

Mat16 set_bit(Mat16 m, int i, int j, int v) {
    const Mat16 mask = static_cast<Mat16>(1u << (i * 4 + j));
    return v ? (m | mask) : (m & ~mask);
}

Mat16 mat_mul2(Mat16 a, Mat16 b) {
    Mat16 c = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            int v = 0;
            for (int k = 0; k < 4; ++k) v ^= get(a, i, k) & get(b, k, j);
            c = set_bit(c, i, j, v);
        }
    return c;
}

int apply_vec(Mat16 m, int x, int row) {  // (m x)_row for column vector x in bits 0..3
    int v = 0;
    for (int j = 0; j < 4; ++j) v ^= get(m, row, j) & ((x >> j) & 1);
    return v;
}

int mat_apply(Mat16 m, int x) {
    int y = 0;
    for (int i = 0; i < 4; ++i) y |= apply_vec(m, x, i) << i;
    return y;
}

// symplectic form <x,y> = x1 y3 + x3 y1 + x2 y4 + x4 y2 (1-based), bits 0..3
int symp(int x, int y) {
    auto bit = [](int v, int k) { return (v >> k) & 1; };
    return (bit(x, 0) & bit(y, 2)) ^ (bit(x, 2) & bit(y, 0)) ^ (bit(x, 1) & bit(y, 3)) ^
           (bit(x, 3) & bit(y, 1));
}

Mat16 identity_mat() {
    Mat16 m = 0;
    for (int i = 0; i < 4; ++i) m = set_bit(m, i, i, 1);
    return m;
}

// transvection t_v : x -> x + <x,v> v
Mat16 transvection(int v) {
    Mat16 m = 0;
    for (int j = 0; j < 4; ++j) {
        int col = (1 << j);
        int img = col ^ (symp(col, v) ? v : 0);
        for (int i = 0; i < 4; ++i) m = set_bit(m, i, j, (img >> i) & 1);
    }
    return m;
}

using Perm6 = std::array<std::uint8_t, 6>;

Perm6 p6_compose(const Perm6& a, const Perm6& b) {  // (a*b)(x) = a(b(x))
    Perm6 c{};
    for (int i = 0; i < 6; ++i) c[i] = a[b[i]];
    return c;
}

}  // namespace

std::tuple<FiniteGroupModel, Automorphism, Sp42Report> sp4_2_model() {
    // 1. generate Sp4(2) from the 15 symplectic transvections
    std::vector<Mat16> elements{identity_mat()};
    std::map<Mat16, std::uint16_t> index{{elements[0], 0}};
    std::vector<Mat16> gens;
    for (int v = 1; v < 16; ++v) gens.push_back(transvection(v));
    std::size_t head = 0;
    while (head < elements.size()) {
        const Mat16 cur = elements[head++];
        for (const Mat16 g : gens) {
            const Mat16 nxt = mat_mul2(cur, g);
            if (!index.count(nxt)) {
                index[nxt] = static_cast<std::uint16_t>(elements.size());
                elements.push_back(nxt);
            }
        }
    }
    const std::size_t n = elements.size();
    if (n != 720) throw std::logic_error("Sp4(2) closure produced " + std::to_string(n));
    // symplectic sanity: every element preserves the form
    for (const Mat16 m : elements)
        for (int x = 0; x < 16; ++x)
            for (int y = 0; y < 16; ++y)
                if (symp(mat_apply(m, x), mat_apply(m, y)) != symp(x, y))
                    throw std::logic_error("generated matrix does not preserve the form");

    FiniteGroupModel g;
    g.name = "Sp4(2)";
    g.size = n;
    g.table.assign(n * n, 0);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            g.table[a * n + b] = index.at(mat_mul2(elements[a], elements[b]));
    for (const Mat16 t : gens) g.generators.push_back(index.at(t));
    g.element_names.resize(n);
    for (std::size_t i = 0; i < n; ++i) g.element_names[i] = "m" + std::to_string(i);
    g.finalize();

    // 2. the 6 elliptic quadratic forms with the symplectic polarization:
    //    Q_l(x) = x1 x3 + x2 x4 + <l, x>, l in F_2^4; elliptic = 6 zeros
    auto qform = [](int l, int x) {
        auto bit = [](int v, int k) { return (v >> k) & 1; };
        int quad = (bit(x, 0) & bit(x, 2)) ^ (bit(x, 1) & bit(x, 3));
        int lin = std::popcount(static_cast<unsigned>(l & x)) & 1;
        return quad ^ lin;
    };
    std::vector<int> elliptic;
    for (int l = 0; l < 16; ++l) {
        int zeros = 0;
        for (int x = 0; x < 16; ++x) zeros += qform(l, x) == 0;
        if (zeros == 6) elliptic.push_back(l);
    }
    if (elliptic.size() != 6) throw std::logic_error("expected 6 elliptic forms");

    // 3. permutation action on the elliptic forms -> isomorphism onto S6
    std::vector<Perm6> all_perms;
    {
        Perm6 p{0, 1, 2, 3, 4, 5};
        do all_perms.push_back(p);
        while (std::next_permutation(p.begin(), p.end()));
    }
    std::map<Perm6, std::uint16_t> perm_index;
    for (std::size_t i = 0; i < all_perms.size(); ++i)
        perm_index[all_perms[i]] = static_cast<std::uint16_t>(i);

    auto action = [&](std::uint16_t gi) {
        const Mat16 ginv = elements[g.inv(gi)];
        Perm6 p{};
        for (int a = 0; a < 6; ++a) {
            // g.Q = Q o g^{-1}; find the matching form index
            int found = -1;
            for (int b = 0; b < 6 && found < 0; ++b) {
                bool same = true;
                for (int x = 0; x < 16 && same; ++x)
                    same = qform(elliptic[b], x) == qform(elliptic[a], mat_apply(ginv, x));
                if (same) found = b;
            }
            if (found < 0) throw std::logic_error("form action not closed");
            p[a] = static_cast<std::uint8_t>(found);
        }
        return p;
    };
    std::vector<std::uint16_t> to_s6(n);
    std::vector<std::uint16_t> from_s6(720, 0xffff);
    for (std::size_t gi = 0; gi < n; ++gi) {
        const auto p = action(static_cast<std::uint16_t>(gi));
        to_s6[gi] = perm_index.at(p);
        if (from_s6[to_s6[gi]] != 0xffff) throw std::logic_error("form action not faithful");
        from_s6[to_s6[gi]] = static_cast<std::uint16_t>(gi);
    }

    // 4. an outer automorphism of S6 through the coset action on a
    //    point-transitive PGL2(5) subgroup (the exotic S5)
    Perm6 shift{1, 2, 3, 4, 0, 5};                     // x -> x+1 on F5, fixes infinity
    Perm6 scale{0, 2, 4, 1, 3, 5};                     // x -> 2x
    Perm6 invp{5, 1, 3, 2, 4, 0};                      // x -> 1/x, 0 <-> infinity
    std::vector<std::uint16_t> subgroup;
    {
        std::set<std::uint16_t> seen{perm_index.at(Perm6{0, 1, 2, 3, 4, 5})};
        std::vector<Perm6> frontier{Perm6{0, 1, 2, 3, 4, 5}};
        while (!frontier.empty()) {
            std::vector<Perm6> nf;
            for (const auto& cur : frontier)
                for (const auto& s : {shift, scale, invp}) {
                    const auto nxt = p6_compose(cur, s);
                    if (seen.insert(perm_index.at(nxt)).second) nf.push_back(nxt);
                }
            frontier = std::move(nf);
        }
        subgroup.assign(seen.begin(), seen.end());
    }
    if (subgroup.size() != 120) throw std::logic_error("PGL2(5) closure has wrong order");

    // left cosets of the subgroup, labeled by their minimal member
    std::vector<int> coset_of(720, -1);
    std::vector<std::uint16_t> coset_label;
    for (std::uint16_t pi = 0; pi < 720; ++pi) {
        if (coset_of[pi] >= 0) continue;
        const int c = static_cast<int>(coset_label.size());
        coset_label.push_back(pi);
        for (const std::uint16_t s : subgroup) {
            const auto prod = p6_compose(all_perms[pi], all_perms[s]);
            coset_of[perm_index.at(prod)] = c;
        }
    }
    if (coset_label.size() != 6) throw std::logic_error("expected 6 cosets");
    auto theta = [&](std::uint16_t pi) {
        Perm6 p{};
        for (int c = 0; c < 6; ++c) {
            const auto moved = p6_compose(all_perms[pi], all_perms[coset_label[c]]);
            p[c] = static_cast<std::uint8_t>(coset_of[perm_index.at(moved)]);
        }
        return perm_index.at(p);
    };

    Automorphism psi0(n);
    for (std::size_t gi = 0; gi < n; ++gi) psi0[gi] = from_s6[theta(to_s6[gi])];
    validate_automorphism(g, psi0);

    // 5. search the outer coset {inn_h o psi0} for an involution whose fixed
    //    subgroup has order 20
    Automorphism psi;
    bool found = false;
    for (std::size_t hi = 0; hi < n && !found; ++hi) {
        Automorphism cand(n);
        const auto h = static_cast<std::uint16_t>(hi);
        for (std::size_t a = 0; a < n; ++a) cand[a] = g.mul(g.mul(h, psi0[a]), g.inv(h));
        bool involution = true;
        for (std::size_t a = 0; a < n && involution; ++a)
            involution = cand[cand[a]] == static_cast<std::uint16_t>(a);
        if (!involution) continue;
        std::size_t fixed = 0;
        for (std::size_t a = 0; a < n; ++a) fixed += cand[a] == a;
        if (fixed == 20) {
            psi = std::move(cand);
            found = true;
        }
    }
    if (!found)
        throw std::runtime_error("no order-2 outer automorphism with a 20-element fixed subgroup");
    validate_automorphism(g, psi);

    Sp42Report report;
    report.group_order = n;

    // fixed subgroup = Sz(2)
    std::vector<std::uint16_t> fixed;
    for (std::size_t a = 0; a < n; ++a)
        if (psi[a] == a) fixed.push_back(static_cast<std::uint16_t>(a));
    report.fixed_subgroup_order = fixed.size();
    {
        std::map<std::uint16_t, std::uint16_t> sub_index;
        for (std::size_t i = 0; i < fixed.size(); ++i) sub_index[fixed[i]] = static_cast<std::uint16_t>(i);
        FiniteGroupModel s;
        s.name = "Sz(2)";
        s.size = fixed.size();
        s.table.assign(fixed.size() * fixed.size(), 0);
        for (std::size_t a = 0; a < fixed.size(); ++a)
            for (std::size_t b = 0; b < fixed.size(); ++b) {
                const auto prod = g.mul(fixed[a], fixed[b]);
                const auto it = sub_index.find(prod);
                if (it == sub_index.end()) throw std::logic_error("fixed set is not a subgroup");
                s.table[a * s.size + b] = it->second;
            }
        s.finalize();
        const auto classes = twisted_classes(s, identity_automorphism(s));
        report.fixed_class_count = classes.size();
        for (const auto& c : classes) {
            report.fixed_class_sizes.push_back(c.members.size());
            report.fixed_class_orders.push_back(s.element_order[c.representative]);
        }
    }

    // conjugacy classes of the order-1440 extension in the outer coset:
    // conjugating (x, psi) by (h, eps) sends x to h psi^eps(x) psi(h)^{-1}
    {
        std::vector<int> cls(n, -1);
        int next_id = 0;
        for (std::size_t start = 0; start < n; ++start) {
            if (cls[start] >= 0) continue;
            const int id = next_id++;
            std::vector<std::uint16_t> frontier{static_cast<std::uint16_t>(start)};
            cls[start] = id;
            while (!frontier.empty()) {
                std::vector<std::uint16_t> nf;
                for (const auto x : frontier) {
                    auto push = [&](std::uint16_t y) {
                        if (cls[y] < 0) {
                            cls[y] = id;
                            nf.push_back(y);
                        }
                    };
                    for (const auto h : g.generators)
                        push(g.mul(g.mul(h, x), psi[g.inv(h)]));
                    push(psi[x]);  // conjugation by (1, psi)
                }
                frontier = std::move(nf);
            }
        }
        report.outer_coset_class_count = static_cast<std::size_t>(next_id);
    }
    return {std::move(g), std::move(psi), std::move(report)};
}

ModelSuiteResult run_model_suite(const std::vector<std::string>& names) {
    ModelSuiteResult out;
    auto add = [&](const std::string& label, FiniteGroupModel h, Automorphism a) {
        CosetModel m{label, std::move(h), std::move(a)};
        auto rep = verify_coset_conjugacy(m);
        out.all_ok = out.all_ok && rep.all_ok();
        out.coset_reports.push_back(std::move(rep));
    };
    for (const auto& name : names) {
        if (name == "z4") {
            auto h = cyclic_group(4);
            add("z4/id", h, identity_automorphism(h));
            add("z4/inv", h, cyclic_inversion(h));
        } else if (name == "s3") {
            auto h = symmetric3();
            add("s3/id", h, identity_automorphism(h));
            add("s3/conj", h, conjugation_by(h, h.generators.at(0)));
        } else if (name == "d8") {
            auto h = dihedral8();
            add("d8/id", h, identity_automorphism(h));
            add("d8/swap", h, d8_swap(h));
        } else if (name == "q8") {
            auto h = quaternion8();
            add("q8/id", h, identity_automorphism(h));
            add("q8/swap", h, q8_swap(h));
        } else if (name == "a4") {
            auto h = alternating4();
            add("a4/id", h, identity_automorphism(h));
            add("a4/outer", h, a4_outer(h));
        } else if (name == "sp42") {
            auto [g, psi, rep] = sp4_2_model();
            (void)g;
            (void)psi;
            out.sp42 = rep;
            out.sp42_ran = true;
            const bool ok = rep.group_order == 720 && rep.fixed_subgroup_order == 20 &&
                            rep.fixed_class_count == 5 && rep.outer_coset_class_count == 5;
            out.all_ok = out.all_ok && ok;
        } else {
            throw std::invalid_argument("unknown model \"" + name + "\"");
        }
    }
    return out;
}

}  // namespace suzree::models
