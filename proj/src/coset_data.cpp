#include "suzree/coset_data.hpp"

#include <algorithm>
#include <stdexcept>

namespace suzree::coset {

GroupKind group_kind_from_string(const std::string& s) {
    if (s == "trivial") return GroupKind::Trivial;
    if (s == "Z2") return GroupKind::Z2;
    if (s == "Z3") return GroupKind::Z3;
    if (s == "Z4") return GroupKind::Z4;
    if (s == "S3") return GroupKind::S3;
    if (s == "D8") return GroupKind::D8;
    throw std::invalid_argument("unknown component group kind \"" + s + "\"");
}

FAction f_action_from_string(const std::string& s) {
    if (s == "identity") return FAction::Identity;
    if (s == "swap") return FAction::Swap;
    throw std::invalid_argument("unknown F-action \"" + s + "\"");
}

std::string to_string(GroupKind k) {
    switch (k) {
        case GroupKind::Trivial: return "trivial";
        case GroupKind::Z2: return "Z2";
        case GroupKind::Z3: return "Z3";
        case GroupKind::Z4: return "Z4";
        case GroupKind::S3: return "S3";
        case GroupKind::D8: return "D8";
    }
    return "?";
}

std::string to_string(FAction a) { return a == FAction::Identity ? "identity" : "swap"; }

models::FiniteGroupModel ComponentGroup::model() const {
    switch (kind) {
        case GroupKind::Trivial: return models::trivial_group();
        case GroupKind::Z2: return models::cyclic_group(2);
        case GroupKind::Z3: return models::cyclic_group(3);
        case GroupKind::Z4: return models::cyclic_group(4);
        case GroupKind::S3: return models::symmetric3();
        case GroupKind::D8: return models::dihedral8();
    }
    throw std::logic_error("unreachable");
}

models::Automorphism ComponentGroup::action(const models::FiniteGroupModel& m) const {
    if (f_action == FAction::Identity) return models::identity_automorphism(m);
    if (kind != GroupKind::D8)
        throw std::invalid_argument("swap F-action is only defined for D8");
    return models::d8_swap(m);
}

std::size_t CosetCharTable::row_index(const std::string& weyl_char_label) const {
    for (std::size_t i = 0; i < row_labels.size(); ++i)
        if (row_labels[i] == weyl_char_label) return i;
    throw std::invalid_argument("weyl character \"" + weyl_char_label +
                                "\" missing from the coset character table");
}

namespace {

// Character values per ordinary class in canonical class order (identity
// class first, then by increasing representative order / index). Only the
// rational-valued characters the case data needs are listed; asking for a
// complex-valued one is an error.
std::vector<long> character_values(GroupKind kind, const std::string& character) {
    switch (kind) {
        case GroupKind::Trivial:
            if (character == "1") return {1};
            break;
        case GroupKind::Z2:
            if (character == "1") return {1, 1};
            if (character == "eps") return {1, -1};
            break;
        case GroupKind::Z3:
            if (character == "1") return {1, 1, 1};
            break;
        case GroupKind::Z4:
            // class order: 1, g^2, g, g^3
            if (character == "1") return {1, 1, 1, 1};
            if (character == "sign") return {1, 1, -1, -1};
            break;
        case GroupKind::S3:
            // class order: 1, transpositions, 3-cycles
            if (character == "1") return {1, 1, 1};
            if (character == "sign") return {1, -1, 1};
            if (character == "theta") return {2, 0, -1};
            break;
        case GroupKind::D8:
            // class order: 1, r^2, {s}, {rs}, {r}
            if (character == "1") return {1, 1, 1, 1, 1};
            if (character == "eps1") return {1, 1, 1, -1, -1};
            if (character == "eps2") return {1, 1, -1, 1, -1};
            if (character == "sign") return {1, 1, -1, -1, 1};
            if (character == "rho2") return {2, -2, 0, 0, 0};
            break;
    }
    throw std::invalid_argument("character \"" + character + "\" of " + to_string(kind) +
                                " is unknown or not rational-valued");
}

// index of the ordinary class containing element e
std::size_t class_of(const std::vector<models::TwistedClass>& classes, std::uint16_t e) {
    for (std::size_t i = 0; i < classes.size(); ++i)
        if (std::binary_search(classes[i].members.begin(), classes[i].members.end(), e)) return i;
    throw std::logic_error("element not covered by classes");
}

}  // namespace

std::vector<std::pair<std::string, std::size_t>> component_f_classes(const ComponentGroup& g) {
    const auto m = g.model();
    const auto sigma = g.action(m);
    const auto classes = models::twisted_classes(m, sigma);
    std::vector<std::pair<std::string, std::size_t>> out;
    out.reserve(classes.size());
    for (const auto& c : classes)
        out.emplace_back(m.element_names[c.representative], c.members.size());
    return out;
}

std::vector<QuadRational> extension_values(const ComponentGroup& g, const std::string& character,
                                           const std::string& choice, int d) {
    long zeta;
    if (choice == "trivial")
        zeta = 1;
    else if (choice == "negative")
        zeta = -1;
    else
        throw std::invalid_argument("unknown extension choice \"" + choice + "\"");

    const auto values = character_values(g.kind, character);
    const auto m = g.model();
    const auto sigma = g.action(m);
    const auto ordinary = models::twisted_classes(m, models::identity_automorphism(m));
    if (ordinary.size() != values.size())
        throw std::logic_error("character table row length mismatch");

    // F-stability: phi(sigma(rep)) == phi(rep) for every ordinary class
    for (std::size_t i = 0; i < ordinary.size(); ++i) {
        const std::size_t j = class_of(ordinary, sigma[ordinary[i].representative]);
        if (values[j] != values[i])
            throw std::invalid_argument("character \"" + character + "\" of " + to_string(g.kind) +
                                        " is not F-stable under the " + to_string(g.f_action) +
                                        " action");
    }

    const long degree = values[0];
    std::vector<QuadRational> out;
    if (g.f_action == FAction::Identity) {
        out.reserve(values.size());
        for (long v : values) out.emplace_back(zeta * v, d);
    } else {
        if (character != "1")
            throw std::invalid_argument(
                "only the trivial character is supported under a nontrivial F-action");
        const auto fclasses = models::twisted_classes(m, sigma);
        out.assign(fclasses.size(), QuadRational(zeta, d));
    }
    for (const auto& v : out) {
        if (!v.is_rational()) throw std::logic_error("irrational extension value");
        const Rational a = v.rational_part() < 0 ? Rational(-v.rational_part()) : v.rational_part();
        if (a > degree) throw std::logic_error("extension value exceeds the character degree");
    }
    return out;
}

MatrixRF build_Y_table(const UnipotentLayout& layout, const std::vector<SpringerPair>& pairs,
                       const std::map<std::string, std::string>& choices, int d) {
    MatrixRF y(pairs.size(), layout.columns.size(), d);
    for (std::size_t r = 0; r < pairs.size(); ++r) {
        const auto& pair = pairs[r];
        const auto it = choices.find(pair.key());
        if (it == choices.end())
            throw std::invalid_argument("no extension choice for pair " + pair.key());
        const auto values = extension_values(pair.component, pair.character_label, it->second, d);
        std::size_t hit = 0;
        for (std::size_t c = 0; c < layout.columns.size(); ++c) {
            const auto& col = layout.columns[c];
            if (col.class_label != pair.class_label) continue;
            if (col.f_class_index < 0 || static_cast<std::size_t>(col.f_class_index) >= values.size())
                throw std::invalid_argument("layout F-class index out of range for class " +
                                            col.class_label);
            y.at(r, c) = RatFunc(Poly(values[col.f_class_index]));
            ++hit;
        }
        if (hit != values.size())
            throw std::invalid_argument("layout gives " + std::to_string(hit) + " columns to class " +
                                        pair.class_label + " but its component group has " +
                                        std::to_string(values.size()) + " F-classes");
    }
    return y;
}

std::vector<std::vector<QuadRational>> coset_orthogonality_defect(
    const CosetCharTable& table, const std::vector<std::size_t>& sizes, std::size_t weyl_order) {
    if (sizes.size() != table.column_labels.size())
        throw std::invalid_argument("size vector does not match column count");
    const std::size_t nrows = table.values.size();
    const int d = nrows && !table.values[0].empty() ? table.values[0][0].d() : 1;
    std::vector<std::vector<QuadRational>> defect(
        nrows, std::vector<QuadRational>(nrows, QuadRational::zero(d)));
    for (std::size_t i = 0; i < nrows; ++i)
        for (std::size_t j = 0; j < nrows; ++j) {
            QuadRational acc = QuadRational::zero(d);
            for (std::size_t k = 0; k < sizes.size(); ++k)
                acc += QuadRational(static_cast<long>(sizes[k]), d) * table.values[i][k] *
                       table.values[j][k];
            acc = acc * QuadRational(Rational(1, static_cast<long>(weyl_order)), Rational(0), d);
            if (i == j) acc -= QuadRational::one(d);
            defect[i][j] = acc;
        }
    return defect;
}

OrthogonalityReport coset_orthogonality_check(const CosetCharTable& table,
                                              const std::vector<std::size_t>& sizes,
                                              std::size_t weyl_order) {
    OrthogonalityReport report;
    report.defect = coset_orthogonality_defect(table, sizes, weyl_order);
    report.pass = true;
    for (const auto& row : report.defect)
        for (const auto& v : row)
            if (!v.is_zero()) report.pass = false;
    return report;
}

std::vector<std::size_t> derive_sizes_from_columns(const CosetCharTable& table,
                                                   std::size_t weyl_order) {
    std::vector<std::size_t> sizes;
    const std::size_t ncols = table.column_labels.size();
    const int d = !table.values.empty() && !table.values[0].empty() ? table.values[0][0].d() : 1;
    for (std::size_t k = 0; k < ncols; ++k) {
        QuadRational acc = QuadRational::zero(d);
        for (const auto& row : table.values) {
            if (row.size() != ncols) throw std::invalid_argument("ragged coset character table");
            acc += row[k] * row[k];
        }
        if (!acc.is_rational())
            throw std::invalid_argument("column norm not rational in column " +
                                        table.column_labels[k]);
        const Rational norm = acc.rational_part();
        if (norm <= 0) throw std::invalid_argument("non-positive column norm");
        const Rational size = Rational(weyl_order) / norm;
        if (denominator(size) != 1)
            throw std::invalid_argument("non-integral class size from column " +
                                        table.column_labels[k] + " (table transcription error)");
        sizes.push_back(static_cast<std::size_t>(numerator(size)));
    }
    return sizes;
}

}  // namespace suzree::coset
