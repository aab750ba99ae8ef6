#pragma once

#include "suzree/finite_group.hpp"
#include "suzree/matrix.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace suzree::coset {

enum class GroupKind { Trivial, Z2, Z3, Z4, S3, D8 };
enum class FAction { Identity, Swap };

GroupKind group_kind_from_string(const std::string& s);
FAction f_action_from_string(const std::string& s);
std::string to_string(GroupKind k);
std::string to_string(FAction a);

/// Component group A(u) together with the action of F0 on it.
struct ComponentGroup {
    GroupKind kind = GroupKind::Trivial;
    FAction f_action = FAction::Identity;

    models::FiniteGroupModel model() const;
    models::Automorphism action(const models::FiniteGroupModel& m) const;
};

/// One row of the Springer table: an F-stable pair (unipotent class,
/// character of its component group) with its Weyl-character correspondent.
struct SpringerPair {
    std::string class_label;
    ComponentGroup component;
    std::string character_label;
    std::string weyl_char_label;
    int d_u = 0;
    int order_index = 0;
    int block_id = 0;

    std::string key() const { return class_label + ":" + character_label; }
    std::string pair_label() const { return "(" + class_label + "," + character_label + ")"; }
};

/// Ordered split unipotent classes of G^F (the columns of the value tables),
/// each assigned to an F-stable class and one F-class of its component group.
struct UnipotentLayout {
    struct Column {
        std::string label;
        std::string class_label;
        int f_class_index = 0;
    };
    std::vector<Column> columns;
};

/// Extension values of the F-stable Irr(W) on the coset W.F0, with the torus
/// order attached to every column.
struct CosetCharTable {
    std::vector<std::string> column_labels;
    std::vector<Poly> column_torus_orders;
    std::vector<std::string> row_labels;  // Weyl character labels
    std::vector<std::vector<QuadRational>> values;

    std::size_t row_index(const std::string& weyl_char_label) const;
};

/// Twisted-conjugacy classes of the concrete component group under its
/// F-action, as (representative name, size), in canonical order (identity
/// class first, then by increasing representative order).
std::vector<std::pair<std::string, std::size_t>> component_f_classes(const ComponentGroup& g);

/// Values of the chosen extension of `character` on the F-classes.
/// choice is "trivial" (zeta = 1) or "negative" (zeta = -1); the value on the
/// class of a is zeta * phi(a) for identity action, and constantly zeta for
/// the trivial character under a nontrivial action.
/// Throws when the character is not F-stable (e.g. eps' of D8 under swap).
std::vector<QuadRational> extension_values(const ComponentGroup& g, const std::string& character,
                                           const std::string& choice, int d);

/// Row per Springer pair, column per split class; the pair's extension
/// values sit in the columns of its class, zero elsewhere.
MatrixRF build_Y_table(const UnipotentLayout& layout, const std::vector<SpringerPair>& pairs,
                       const std::map<std::string, std::string>& choices, int d);

/// (1/|W|) sum_k size_k rho(w_k F0) rho'(w_k F0) - delta_{rho rho'} for all
/// row pairs; all-zero defect means the table passes coset orthogonality.
std::vector<std::vector<QuadRational>> coset_orthogonality_defect(
    const CosetCharTable& table, const std::vector<std::size_t>& sizes, std::size_t weyl_order);

struct OrthogonalityReport {
    bool pass = false;
    std::vector<std::vector<QuadRational>> defect;
};

/// Report-only wrapper around the defect matrix.
OrthogonalityReport coset_orthogonality_check(const CosetCharTable& table,
                                              const std::vector<std::size_t>& sizes,
                                              std::size_t weyl_order);

/// Second-orthogonality oracle: size_k = |W| / sum_rho rho(w_k F0)^2.
/// Throws on a non-integral result (table transcription error).
std::vector<std::size_t> derive_sizes_from_columns(const CosetCharTable& table,
                                                   std::size_t weyl_order);

}  // namespace suzree::coset
