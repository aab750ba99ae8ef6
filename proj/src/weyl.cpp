#include "suzree/weyl.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace suzree::weyl {

Element mat_mul(const Element& a, const Element& b, int rank) {
    Element c(static_cast<std::size_t>(rank) * rank, 0);
    for (int i = 0; i < rank; ++i)
        for (int k = 0; k < rank; ++k) {
            const int aik = a[i * rank + k];
            if (aik == 0) continue;
            for (int j = 0; j < rank; ++j) c[i * rank + j] += aik * b[k * rank + j];
        }
    return c;
}

Element RootDatum::identity() const {
    Element e(static_cast<std::size_t>(rank) * rank, 0);
    for (int i = 0; i < rank; ++i) e[i * rank + i] = 1;
    return e;
}

Element RootDatum::reflection(int i) const {
    // column j of s_i is the image of a_j: a_j - C[j][i] a_i
    Element m = identity();
    for (int j = 0; j < rank; ++j) m[i * rank + j] -= cartan[j][i];
    return m;
}

void RootDatum::validate() const {
    if (rank <= 0 || rank > 8) throw std::invalid_argument("root datum: bad rank");
    auto square = [&](const std::vector<std::vector<int>>& m, const char* what) {
        if (static_cast<int>(m.size()) != rank)
            throw std::invalid_argument(std::string("root datum: ") + what + " row count");
        for (const auto& row : m)
            if (static_cast<int>(row.size()) != rank)
                throw std::invalid_argument(std::string("root datum: ") + what + " col count");
    };
    square(cartan, "cartan");
    square(twist_matrix, "twist_matrix");
    for (int i = 0; i < rank; ++i) {
        if (cartan[i][i] != 2) throw std::invalid_argument("cartan: diagonal must be 2");
        for (int j = 0; j < rank; ++j) {
            if (i == j) continue;
            if (cartan[i][j] > 0) throw std::invalid_argument("cartan: positive off-diagonal");
            if ((cartan[i][j] == 0) != (cartan[j][i] == 0))
                throw std::invalid_argument("cartan: asymmetric zero pattern");
            const int prod = cartan[i][j] * cartan[j][i];
            if (prod > 3) throw std::invalid_argument("cartan: bond too heavy (not finite type)");
        }
    }
    if (twist_scale != 1 && twist_scale != 2 && twist_scale != 3)
        throw std::invalid_argument("twist_scale must be 1, 2 or 3");
    if (twist_scale != 1 && twist_scale != d)
        throw std::invalid_argument("base surd d must match twist_scale");
    // M^2 = delta I
    Element m(static_cast<std::size_t>(rank) * rank, 0);
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) m[i * rank + j] = twist_matrix[i][j];
    const Element m2 = mat_mul(m, m, rank);
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j)
            if (m2[i * rank + j] != (i == j ? twist_scale : 0))
                throw std::invalid_argument("twist_matrix: M^2 != twist_scale * I");
}

int WeylGroup::index(const Element& w) const {
    auto it = index_of.find(w);
    if (it == index_of.end()) throw std::invalid_argument("element not in the Weyl group");
    return it->second;
}

WeylGroup generate_weyl(const RootDatum& datum, std::size_t bound) {
    datum.validate();
    WeylGroup g;
    g.rank = datum.rank;
    std::vector<Element> gens;
    for (int i = 0; i < datum.rank; ++i) gens.push_back(datum.reflection(i));

    g.elements.push_back(datum.identity());
    g.words.push_back({});
    g.index_of[g.elements[0]] = 0;
    std::size_t head = 0;
    while (head < g.elements.size()) {
        const Element w = g.elements[head];
        const auto word = g.words[head];
        ++head;
        for (std::size_t i = 0; i < gens.size(); ++i) {
            Element wg = mat_mul(w, gens[i], datum.rank);
            if (g.index_of.count(wg)) continue;
            if (g.elements.size() >= bound)
                throw std::runtime_error("Weyl closure exceeded bound (malformed Cartan matrix?)");
            g.index_of[wg] = static_cast<int>(g.elements.size());
            g.elements.push_back(std::move(wg));
            auto w2 = word;
            w2.push_back(static_cast<std::uint8_t>(i));
            g.words.push_back(std::move(w2));
        }
    }
    g.generator_index.resize(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) g.generator_index[i] = g.index(gens[i]);
    return g;
}

namespace {

Element twist_raw(const RootDatum& datum, const Element& w) {
    const int n = datum.rank;
    Element m(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i * n + j] = datum.twist_matrix[i][j];
    Element mwm = mat_mul(mat_mul(m, w, n), m, n);  // M w M = delta * (M w M^{-1})
    for (auto& v : mwm) {
        if (v % datum.twist_scale != 0)
            throw std::runtime_error("twist_apply: M w M^{-1} not integral (wrong twist matrix)");
        v /= datum.twist_scale;
    }
    return mwm;
}

}  // namespace

Element twist_apply(const RootDatum& datum, const WeylGroup& group, const Element& w) {
    if (!group.contains(w)) throw std::invalid_argument("twist_apply: element not in W");
    Element t = twist_raw(datum, w);
    if (!group.contains(t))
        throw std::runtime_error("twist_apply: image not in W (wrong twist matrix)");
    return t;
}

std::vector<FClass> f_classes(const WeylGroup& group, const RootDatum& datum) {
    const int n = datum.rank;
    std::vector<std::pair<Element, Element>> moves;  // (g, twist(g)) for generators g
    for (int gi : group.generator_index) {
        const Element& s = group.elements[gi];
        moves.emplace_back(s, twist_apply(datum, group, s));
    }
    std::vector<char> seen(group.order(), 0);
    std::vector<FClass> classes;
    for (std::size_t start = 0; start < group.order(); ++start) {
        if (seen[start]) continue;
        FClass cl;
        cl.representative = static_cast<int>(start);
        std::vector<int> frontier{static_cast<int>(start)};
        seen[start] = 1;
        std::set<int> members{static_cast<int>(start)};
        while (!frontier.empty()) {
            std::vector<int> next;
            for (int wi : frontier) {
                const Element& w = group.elements[wi];
                for (const auto& [s, ts] : moves) {
                    // s^{-1} w twist(s) with s an involution
                    const Element y = mat_mul(mat_mul(s, w, n), ts, n);
                    const int yi = group.index(y);
                    if (!members.count(yi)) {
                        members.insert(yi);
                        seen[yi] = 1;
                        next.push_back(yi);
                    }
                }
            }
            frontier = std::move(next);
        }
        cl.members.assign(members.begin(), members.end());
        cl.size = cl.members.size();
        cl.torus_order = torus_order(datum, group.elements[start]);
        classes.push_back(std::move(cl));
    }
    std::size_t total = 0;
    for (const auto& c : classes) total += c.size;
    if (total != group.order()) throw std::logic_error("F-class sizes do not sum to |W|");
    return classes;
}

namespace {

Poly det_laplace(const std::vector<Poly>& m, std::vector<int> cols, int row, int n, int d) {
    if (static_cast<int>(cols.size()) == 1) return m[row * n + cols[0]];
    Poly acc(d);
    for (std::size_t k = 0; k < cols.size(); ++k) {
        const Poly& pivot = m[row * n + cols[k]];
        if (pivot.is_zero()) continue;
        std::vector<int> rest;
        rest.reserve(cols.size() - 1);
        for (std::size_t j = 0; j < cols.size(); ++j)
            if (j != k) rest.push_back(cols[j]);
        Poly minor = det_laplace(m, rest, row + 1, n, d);
        Poly term = pivot * minor;
        if (k % 2 == 1) term = -term;
        acc += term;
    }
    return acc;
}

}  // namespace

Poly torus_order(const RootDatum& datum, const Element& w) {
    const int n = datum.rank;
    const int d = datum.d;
    QuadRational inv_sqrt =
        datum.twist_scale == 1
            ? QuadRational::one(d)
            : QuadRational(Rational(0), Rational(1, datum.twist_scale), d);  // 1/sqrt(delta)
    Element m(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i * n + j] = datum.twist_matrix[i][j];
    const Element mw = mat_mul(m, w, n);
    std::vector<Poly> mat;
    mat.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Poly entry = Poly::monomial(inv_sqrt * QuadRational(mw[i * n + j], d), 1);
            if (i == j) entry -= Poly::one(d);
            mat.push_back(std::move(entry));
        }
    std::vector<int> cols(n);
    for (int j = 0; j < n; ++j) cols[j] = j;
    Poly det = det_laplace(mat, cols, 0, n, d);
    if (det.is_zero() || det.degree() != n)
        throw std::logic_error("torus order: determinant degree != rank");
    const QuadRational& lc = det.leading();
    const bool negative = lc.rational_part() < 0 || (lc.rational_part() == 0 && lc.surd_part() < 0);
    if (negative) det = -det;
    if (!det.is_monic()) throw std::logic_error("torus order: leading coefficient not +-1");
    return det;
}

void match_fclasses_to_columns(std::vector<FClass>& classes,
                               const std::vector<Poly>& column_torus_orders) {
    if (classes.size() != column_torus_orders.size())
        throw std::invalid_argument("F-class count differs from column count");
    for (std::size_t i = 0; i < column_torus_orders.size(); ++i)
        for (std::size_t j = i + 1; j < column_torus_orders.size(); ++j)
            if (column_torus_orders[i] == column_torus_orders[j])
                throw std::invalid_argument("ambiguous match: duplicate column torus orders");
    std::vector<bool> taken(column_torus_orders.size(), false);
    for (auto& cl : classes) {
        cl.column_index = -1;
        for (std::size_t c = 0; c < column_torus_orders.size(); ++c) {
            if (cl.torus_order == column_torus_orders[c]) {
                cl.column_index = static_cast<int>(c);
                taken[c] = true;
                break;
            }
        }
        if (cl.column_index < 0)
            throw std::invalid_argument("no column matches torus order " +
                                        cl.torus_order.to_string());
    }
    for (bool t : taken)
        if (!t) throw std::invalid_argument("column left unmatched by F-classes");
}

std::vector<std::vector<int>> root_system(const WeylGroup& group, const RootDatum& datum) {
    const int n = datum.rank;
    std::set<std::vector<int>> roots;
    std::vector<std::vector<int>> frontier;
    for (int i = 0; i < n; ++i) {
        std::vector<int> e(n, 0);
        e[i] = 1;
        roots.insert(e);
        frontier.push_back(e);
    }
    std::vector<Element> gens;
    for (int gi : group.generator_index) gens.push_back(group.elements[gi]);
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& r : frontier)
            for (const auto& s : gens) {
                std::vector<int> img(n, 0);
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) img[i] += s[i * n + j] * r[j];
                if (roots.insert(img).second) next.push_back(img);
            }
        frontier = std::move(next);
    }
    return {roots.begin(), roots.end()};
}

}  // namespace suzree::weyl
