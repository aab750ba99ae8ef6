#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace suzree::models {

/// Small finite group given by its full multiplication table. Index 0 is the
/// identity. Enumerable equality, brute-force friendly; sizes up to ~1000.
struct FiniteGroupModel {
    std::string name;
    std::size_t size = 0;
    std::vector<std::uint16_t> table;   // size x size, row-major: table[a*size+b] = a*b
    std::vector<std::uint16_t> inverse;
    std::vector<int> element_order;
    std::vector<std::string> element_names;
    std::vector<std::uint16_t> generators;

    std::uint16_t mul(std::uint16_t a, std::uint16_t b) const { return table[a * size + b]; }
    std::uint16_t inv(std::uint16_t a) const { return inverse[a]; }

    /// Fills inverse/element_order/default names from the table; throws if
    /// the table is not a group (missing identity or inverses).
    void finalize();

    /// Exhaustive associativity/closure check, O(n^3); intended for n <= 24.
    void check_axioms() const;

    std::size_t centralizer_order(std::uint16_t x) const;
};

/// Elementwise automorphism (image per element index).
using Automorphism = std::vector<std::uint16_t>;

Automorphism identity_automorphism(const FiniteGroupModel& g);

/// Throws unless sigma is a bijection fixing 1 and respecting the table.
void validate_automorphism(const FiniteGroupModel& g, const Automorphism& sigma);

struct TwistedClass {
    std::uint16_t representative;        // minimal element index in the orbit
    std::vector<std::uint16_t> members;  // sorted
};

/// Orbits of g under x.g = x^{-1} g sigma(x), exhaustively. Classes come in
/// canonical order: by (order of representative, representative index), so
/// the identity class is first. With sigma = id these are the ordinary
/// conjugacy classes.
std::vector<TwistedClass> twisted_classes(const FiniteGroupModel& g, const Automorphism& sigma);

// -- concrete models ---------------------------------------------------------

FiniteGroupModel trivial_group();
FiniteGroupModel cyclic_group(int n);
FiniteGroupModel symmetric3();
FiniteGroupModel dihedral8();
FiniteGroupModel quaternion8();
FiniteGroupModel alternating4();

/// x -> -x on Z/n.
Automorphism cyclic_inversion(const FiniteGroupModel& zn);
/// Conjugation by the element with index t (inner, but a valid twist choice).
Automorphism conjugation_by(const FiniteGroupModel& g, std::uint16_t t);
/// The outer automorphism of D8 fixing r and sending s -> rs; it exchanges
/// the two non-central reflection classes.
Automorphism d8_swap(const FiniteGroupModel& d8);
/// i -> j, j -> i, k -> -k on the quaternion group.
Automorphism q8_swap(const FiniteGroupModel& q8);
/// Conjugation by the transposition (0 1) inside S4, outer for A4.
Automorphism a4_outer(const FiniteGroupModel& a4);

}  // namespace suzree::models
