#pragma once

#include "suzree/polynomial.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace suzree::weyl {

/// Integer matrix acting on the root lattice, row-major rank x rank.
using Element = std::vector<int>;

/// Cartan matrix plus the lattice action M of the special isogeny, with
/// M^2 = twist_scale * I. Reflections act by s_i(a_j) = a_j - C[j][i] a_i.
struct RootDatum {
    int rank = 0;
    std::vector<std::vector<int>> cartan;
    std::vector<std::vector<int>> twist_matrix;
    int twist_scale = 1;  // delta
    int d = 1;            // base surd; equals delta for the twisted cases

    void validate() const;
    Element reflection(int i) const;
    Element identity() const;
};

struct WeylGroup {
    int rank = 0;
    std::vector<Element> elements;  // index 0 = identity, BFS order
    std::vector<std::vector<std::uint8_t>> words;
    std::vector<int> generator_index;
    std::map<Element, int> index_of;

    std::size_t order() const { return elements.size(); }
    bool contains(const Element& w) const { return index_of.count(w) != 0; }
    int index(const Element& w) const;
};

struct FClass {
    int representative = -1;       // element index
    std::vector<int> members;      // element indices, sorted
    std::size_t size = 0;
    Poly torus_order;
    int column_index = -1;         // assigned by match_fclasses_to_columns
};

Element mat_mul(const Element& a, const Element& b, int rank);

/// Breadth-first closure over the simple reflections. Throws when the
/// closure exceeds `bound` (malformed Cartan data).
WeylGroup generate_weyl(const RootDatum& datum, std::size_t bound = 8192);

/// M w M^{-1}; throws when the result is not integral or not in W.
Element twist_apply(const RootDatum& datum, const WeylGroup& group, const Element& w);

/// Partition of W into orbits of x.w = x^{-1} w twist(x), each with its
/// torus-order polynomial attached.
std::vector<FClass> f_classes(const WeylGroup& group, const RootDatum& datum);

/// +-det((q/sqrt(delta)) M w - I), sign-normalized to a positive leading
/// coefficient; monic of degree = rank.
Poly torus_order(const RootDatum& datum, const Element& w);

/// Match enumerated F-classes to table columns by torus order. The column
/// orders must be pairwise distinct and in bijection with the classes.
void match_fclasses_to_columns(std::vector<FClass>& classes,
                               const std::vector<Poly>& column_torus_orders);

/// All roots (orbit of the simple roots under W), as lattice coordinate
/// vectors. Used by the structural tests.
std::vector<std::vector<int>> root_system(const WeylGroup& group, const RootDatum& datum);

}  // namespace suzree::weyl
