#include "suzree/case_io.hpp"

#include "suzree/disconnected.hpp"

#include <fstream>
#include <set>

namespace suzree::io {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw CaseLoadError(where + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& where) {
    const auto it = j.find(key);
    if (it == j.end()) fail(where, std::string("missing field \"") + key + "\"");
    return *it;
}

Rational rational_from(const Json& j, const std::string& where) {
    if (!j.is_string()) fail(where, "rational must be a \"num/den\" string");
    try {
        return rational_from_string(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        fail(where, e.what());
    }
}

}  // namespace

Json quad_to_json(const QuadRational& x) {
    return Json::array({rational_to_string(x.rational_part()), rational_to_string(x.surd_part())});
}

QuadRational quad_from_json(const Json& j, int d, const std::string& where) {
    if (!j.is_array() || j.size() != 2)
        fail(where, "value must be a [rational_part, surd_part] pair");
    return QuadRational(rational_from(j[0], where), rational_from(j[1], where), d);
}

Json poly_to_json(const Poly& p) {
    Json j = Json::array();
    for (const auto& c : p.coefficients()) j.push_back(quad_to_json(c));
    return j;
}

Poly poly_from_json(const Json& j, int d, const std::string& where) {
    if (!j.is_array()) fail(where, "polynomial must be an array of coefficient pairs");
    std::vector<QuadRational> coeffs;
    coeffs.reserve(j.size());
    for (std::size_t k = 0; k < j.size(); ++k)
        coeffs.push_back(quad_from_json(j[k], d, where + "[" + std::to_string(k) + "]"));
    return Poly(std::move(coeffs), d);
}

Json matrix_to_json(const MatrixRF& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const auto p = m.at(i, j).as_polynomial();
            row.push_back(p ? poly_to_json(*p)
                            : Json{{"num", poly_to_json(m.at(i, j).numerator())},
                                   {"den", poly_to_json(m.at(i, j).denominator())}});
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace {

MatrixRF matrix_from_json(const Json& j, int d, std::size_t rows, std::size_t cols,
                          const std::string& where) {
    if (!j.is_array() || j.size() != rows) fail(where, "expected " + std::to_string(rows) + " rows");
    MatrixRF m(rows, cols, d);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols)
            fail(where + " row " + std::to_string(i), "expected " + std::to_string(cols) + " columns");
        for (std::size_t c = 0; c < cols; ++c)
            m.at(i, c) = RatFunc(poly_from_json(
                j[i][c], d, where + "[" + std::to_string(i) + "][" + std::to_string(c) + "]"));
    }
    return m;
}

std::vector<std::vector<int>> int_matrix(const Json& j, int rank, const std::string& where) {
    if (!j.is_array() || static_cast<int>(j.size()) != rank) fail(where, "bad row count");
    std::vector<std::vector<int>> m;
    for (const auto& row : j) {
        if (!row.is_array() || static_cast<int>(row.size()) != rank) fail(where, "bad column count");
        m.push_back(row.get<std::vector<int>>());
    }
    return m;
}

}  // namespace

lusztig::CaseBundle load_case(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CaseLoadError("cannot open case file " + path);
    Json j;
    try {
        in >> j;
    } catch (const Json::parse_error& e) {
        throw CaseLoadError("parse error in " + path + ": " + e.what());
    }

    lusztig::CaseBundle bundle;
    bundle.name = field(j, "name", path).get<std::string>();
    const std::string where = "case " + bundle.name;
    bundle.d = field(j, "d", where).get<int>();
    if (bundle.d != 1 && bundle.d != 2 && bundle.d != 3) fail(where, "d must be 1, 2 or 3");

    bundle.group_order = poly_from_json(field(j, "group_order", where), bundle.d, where + ".group_order");
    if (bundle.group_order.is_zero()) fail(where, "zero group order");

    {
        const Json& rd = field(j, "root_datum", where);
        bundle.datum.rank = field(rd, "rank", where + ".root_datum").get<int>();
        bundle.datum.cartan =
            int_matrix(field(rd, "cartan", where), bundle.datum.rank, where + ".cartan");
        bundle.datum.twist_matrix = int_matrix(field(rd, "twist_matrix", where), bundle.datum.rank,
                                               where + ".twist_matrix");
        bundle.datum.twist_scale = field(rd, "twist_scale", where).get<int>();
        bundle.datum.d = bundle.d;
        try {
            bundle.datum.validate();
        } catch (const std::exception& e) {
            fail(where + ".root_datum", e.what());
        }
    }

    // springer table + component groups
    const Json& comps = field(j, "component_groups", where);
    const Json& sp = field(j, "springer_table", where);
    if (!sp.is_array() || sp.empty()) fail(where, "springer_table must be a non-empty array");
    std::set<std::string> weyl_labels;
    std::map<std::string, int> block_of_class;
    std::map<int, std::string> class_of_block;
    int prev_du = -1;
    for (std::size_t i = 0; i < sp.size(); ++i) {
        const std::string w = where + ".springer_table[" + std::to_string(i) + "]";
        coset::SpringerPair pair;
        pair.class_label = field(sp[i], "class", w).get<std::string>();
        pair.character_label = field(sp[i], "character", w).get<std::string>();
        pair.weyl_char_label = field(sp[i], "weyl_char", w).get<std::string>();
        pair.d_u = field(sp[i], "d_u", w).get<int>();
        pair.block_id = field(sp[i], "block", w).get<int>();
        pair.order_index = static_cast<int>(i);
        if (pair.d_u < 0) fail(w, "negative d_u");
        if (i > 0 && pair.d_u > prev_du)
            fail(w, "d_u increases along the order (" + std::to_string(pair.d_u) + " after " +
                        std::to_string(prev_du) + ")");
        prev_du = pair.d_u;
        if (!weyl_labels.insert(pair.weyl_char_label).second)
            fail(w, "duplicate weyl character " + pair.weyl_char_label);
        // the relation ~: same class <=> same block
        if (auto it = block_of_class.find(pair.class_label); it != block_of_class.end()) {
            if (it->second != pair.block_id)
                fail(w, "class " + pair.class_label + " spans blocks " +
                            std::to_string(it->second) + " and " + std::to_string(pair.block_id));
        } else {
            block_of_class[pair.class_label] = pair.block_id;
        }
        if (auto it = class_of_block.find(pair.block_id); it != class_of_block.end()) {
            if (it->second != pair.class_label)
                fail(w, "block " + std::to_string(pair.block_id) + " contains classes " +
                            it->second + " and " + pair.class_label);
        } else {
            class_of_block[pair.block_id] = pair.class_label;
        }
        const auto cit = comps.find(pair.class_label);
        if (cit == comps.end()) fail(w, "no component group for class " + pair.class_label);
        const std::string cw = where + ".component_groups." + pair.class_label;
        try {
            pair.component.kind =
                coset::group_kind_from_string(field(*cit, "kind", cw).get<std::string>());
            pair.component.f_action =
                coset::f_action_from_string(field(*cit, "f_action", cw).get<std::string>());
        } catch (const std::invalid_argument& e) {
            fail(cw, e.what());
        }
        bundle.springer.push_back(std::move(pair));
    }
    const std::size_t n = bundle.springer.size();

    // coset character table
    {
        const Json& ct = field(j, "coset_char_table", where);
        const Json& cols = field(ct, "columns", where + ".coset_char_table");
        const Json& rows = field(ct, "rows", where + ".coset_char_table");
        if (!cols.is_array() || cols.empty()) fail(where, "coset_char_table.columns empty");
        if (!rows.is_array() || rows.size() != cols.size())
            fail(where + ".coset_char_table",
                 "need as many extension rows as F-class columns (complete set of extensions)");
        for (std::size_t k = 0; k < cols.size(); ++k) {
            const std::string cw = where + ".coset_char_table.columns[" + std::to_string(k) + "]";
            bundle.coset_chars.column_labels.push_back(field(cols[k], "label", cw).get<std::string>());
            bundle.coset_chars.column_torus_orders.push_back(
                poly_from_json(field(cols[k], "torus_order", cw), bundle.d, cw + ".torus_order"));
        }
        std::map<std::string, std::vector<QuadRational>> by_label;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const std::string rw = where + ".coset_char_table.rows[" + std::to_string(r) + "]";
            const std::string label = field(rows[r], "weyl_char", rw).get<std::string>();
            const Json& vals = field(rows[r], "values", rw);
            if (!vals.is_array() || vals.size() != cols.size()) fail(rw, "wrong value count");
            std::vector<QuadRational> v;
            for (std::size_t k = 0; k < vals.size(); ++k)
                v.push_back(quad_from_json(vals[k], bundle.d, rw + ".values[" + std::to_string(k) + "]"));
            if (!by_label.emplace(label, std::move(v)).second) fail(rw, "duplicate row " + label);
        }
        // reorder rows to the springer order
        for (const auto& pair : bundle.springer) {
            const auto it = by_label.find(pair.weyl_char_label);
            if (it == by_label.end())
                fail(where + ".coset_char_table",
                     "no extension row for weyl character " + pair.weyl_char_label);
            bundle.coset_chars.row_labels.push_back(pair.weyl_char_label);
            bundle.coset_chars.values.push_back(it->second);
            by_label.erase(it);
        }
        if (!by_label.empty())
            fail(where + ".coset_char_table",
                 "extension row " + by_label.begin()->first + " matches no Springer pair");
        // structural rows: trivial character row all ones, sign row +-1
        for (const auto& v : bundle.coset_chars.values.back())
            if (!v.is_one()) fail(where + ".coset_char_table", "trivial-character row is not all 1");
        for (const auto& v : bundle.coset_chars.values.front())
            if (!(v == QuadRational(1, bundle.d) || v == QuadRational(-1, bundle.d)))
                fail(where + ".coset_char_table", "sign-character row has a value outside {1,-1}");
    }

    // extension choices
    {
        const Json& ch = field(j, "extension_choices", where);
        for (const auto& pair : bundle.springer) {
            const auto it = ch.find(pair.key());
            if (it == ch.end()) fail(where + ".extension_choices", "no choice for pair " + pair.key());
            bundle.extension_choices[pair.key()] = it->get<std::string>();
            // raises on an unknown selector or a non-F-stable character
            try {
                coset::extension_values(pair.component, pair.character_label,
                                        bundle.extension_choices[pair.key()], bundle.d);
            } catch (const std::exception& e) {
                fail(where + ".extension_choices." + pair.key(), e.what());
            }
        }
    }

    // layout
    {
        const Json& lay = field(j, "layout", where);
        if (!lay.is_array() || lay.empty()) fail(where, "layout must be a non-empty array");
        std::set<std::string> labels;
        for (std::size_t c = 0; c < lay.size(); ++c) {
            const std::string lw = where + ".layout[" + std::to_string(c) + "]";
            coset::UnipotentLayout::Column col;
            col.label = field(lay[c], "label", lw).get<std::string>();
            col.class_label = field(lay[c], "class", lw).get<std::string>();
            col.f_class_index = field(lay[c], "f_class", lw).get<int>();
            if (!labels.insert(col.label).second) fail(lw, "duplicate split-class label " + col.label);
            bundle.layout.columns.push_back(std::move(col));
        }
        // per class: consecutive columns, f_class indices 0..k-1, count = F-class count
        std::vector<std::string> class_sequence;
        for (std::size_t c = 0; c < bundle.layout.columns.size(); ++c) {
            const auto& col = bundle.layout.columns[c];
            if (class_sequence.empty() || class_sequence.back() != col.class_label)
                class_sequence.push_back(col.class_label);
        }
        std::vector<std::string> springer_classes;
        for (const auto& p : bundle.springer)
            if (springer_classes.empty() || springer_classes.back() != p.class_label)
                springer_classes.push_back(p.class_label);
        if (class_sequence != springer_classes)
            fail(where + ".layout", "split-class blocks do not follow the Springer class order");
        for (const auto& cls : class_sequence) {
            std::vector<int> idx;
            for (const auto& col : bundle.layout.columns)
                if (col.class_label == cls) idx.push_back(col.f_class_index);
            for (std::size_t k = 0; k < idx.size(); ++k)
                if (idx[k] != static_cast<int>(k))
                    fail(where + ".layout", "class " + cls + " F-class indices are not 0..k-1");
            // count must match the component group's F-class count
            for (const auto& p : bundle.springer)
                if (p.class_label == cls) {
                    const auto fc = coset::component_f_classes(p.component);
                    if (fc.size() != idx.size())
                        fail(where + ".layout", "class " + cls + " has " + std::to_string(idx.size()) +
                                                    " columns but " + std::to_string(fc.size()) +
                                                    " F-classes");
                    break;
                }
        }
    }

    // target table
    {
        const Json& tt = field(j, "target_table", where);
        const Json& rows = field(tt, "rows", where + ".target_table");
        if (!rows.is_array() || rows.size() != n)
            fail(where + ".target_table", "expected " + std::to_string(n) + " rows");
        bundle.target.values = MatrixRF(n, bundle.layout.columns.size(), bundle.d);
        for (std::size_t r = 0; r < n; ++r) {
            const std::string rw = where + ".target_table.rows[" + std::to_string(r) + "]";
            bundle.target.row_labels.push_back(field(rows[r], "label", rw).get<std::string>());
            const Json& vals = field(rows[r], "values", rw);
            if (!vals.is_array() || vals.size() != bundle.layout.columns.size())
                fail(rw, "wrong value count");
            for (std::size_t c = 0; c < vals.size(); ++c)
                bundle.target.values.at(r, c) = RatFunc(
                    poly_from_json(vals[c], bundle.d, rw + ".values[" + std::to_string(c) + "]"));
        }
    }

    if (j.contains("expected_omega"))
        bundle.expected_omega = matrix_from_json(j["expected_omega"], bundle.d, n, n,
                                                 where + ".expected_omega");
    if (j.contains("expected_p"))
        bundle.expected_p = matrix_from_json(j["expected_p"], bundle.d, n, n, where + ".expected_p");
    if (j.contains("expected_lambda"))
        bundle.expected_lambda =
            matrix_from_json(j["expected_lambda"], bundle.d, n, n, where + ".expected_lambda");
    return bundle;
}

lusztig::CaseBundle load_case_by_name(const std::string& data_dir, const std::string& case_name) {
    const std::string suffix = "-disconnected";
    if (case_name.size() > suffix.size() &&
        case_name.compare(case_name.size() - suffix.size(), suffix.size(), suffix) == 0) {
        const std::string base = case_name.substr(0, case_name.size() - suffix.size());
        return disconnected::disconnected_bundle(load_case(data_dir + "/" + base + ".json"));
    }
    return load_case(data_dir + "/" + case_name + ".json");
}

}  // namespace suzree::io
