#include "suzree/report.hpp"

#include "suzree/case_io.hpp"

#include <ostream>

namespace suzree::io {

Format format_from_string(const std::string& s) {
    if (s == "text") return Format::Text;
    if (s == "json") return Format::JsonFmt;
    if (s == "csv") return Format::Csv;
    if (s == "latex") return Format::Latex;
    throw std::invalid_argument("unknown format \"" + s + "\"");
}

std::string extension_for(Format f) {
    switch (f) {
        case Format::Text: return "txt";
        case Format::JsonFmt: return "json";
        case Format::Csv: return "csv";
        case Format::Latex: return "tex";
    }
    return "txt";
}

namespace {

bool is_diagonal(const MatrixRF& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (i != j && !m.at(i, j).is_zero()) return false;
    return true;
}

std::string verdict_line(const lusztig::LusztigResult& r) {
    if (r.conjectural) return "CONJECTURAL (" + std::to_string(r.verdict.cells) + " cells emitted)";
    if (r.verdict.pass)
        return "PASS (" + std::to_string(r.verdict.cells) + "/" + std::to_string(r.verdict.cells) +
               " cells)";
    return "FAIL (" + std::to_string(r.verdict.mismatches.size()) + " of " +
           std::to_string(r.verdict.cells) + " cells differ)";
}

void print_matrix(std::ostream& os, const std::string& name, const MatrixRF& m,
                  const std::vector<std::string>& row_labels,
                  const std::vector<std::string>& col_labels) {
    os << name << " (rows: ";
    for (std::size_t i = 0; i < row_labels.size(); ++i) os << (i ? " " : "") << row_labels[i];
    os << "; columns: ";
    for (std::size_t i = 0; i < col_labels.size(); ++i) os << (i ? " " : "") << col_labels[i];
    os << ")\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << "  [";
        for (std::size_t j = 0; j < m.cols(); ++j)
            os << (j ? ", " : " ") << m.at(i, j).to_string();
        os << " ]\n";
    }
}

void print_check(std::ostream& os, const char* name,
                 const std::optional<lusztig::ComparisonReport>& check) {
    if (!check) return;
    os << name << ": " << (check->pass ? "match" : "MISMATCH") << "\n";
    for (const auto& mm : check->mismatches)
        os << "    " << mm.row_label << " / " << mm.col_label << ": computed " << mm.actual
           << ", expected " << mm.expected << "\n";
}

void emit_text(const lusztig::LusztigResult& r, std::ostream& os) {
    os << "case " << r.case_name << ": " << verdict_line(r) << "\n";
    os << "F-classes (column: representative word, size, torus order):\n";
    for (const auto& fc : r.f_classes)
        os << "  " << fc.column_label << ": " << fc.representative_word << ", " << fc.size << ", "
           << fc.torus_order << "\n";
    print_check(os, "expected Omega", r.omega_check);
    print_check(os, "expected P", r.p_check);
    print_check(os, "expected Lambda", r.lambda_check);
    print_matrix(os, "Omega", r.omega, r.pair_labels, r.pair_labels);
    print_matrix(os, "P", r.p_matrix, r.pair_labels, r.pair_labels);
    if (is_diagonal(r.lambda_matrix)) {
        os << "Lambda = diag(";
        for (std::size_t i = 0; i < r.lambda_matrix.rows(); ++i)
            os << (i ? ", " : "") << r.lambda_matrix.at(i, i).to_string();
        os << ")\n";
    } else {
        print_matrix(os, "Lambda", r.lambda_matrix, r.pair_labels, r.pair_labels);
    }
    print_matrix(os, "Y", r.y_table, r.pair_labels, r.column_labels);
    print_matrix(os, "X", r.x_table, r.pair_labels, r.column_labels);
    if (!r.verdict.pass)
        for (const auto& mm : r.verdict.mismatches)
            os << "mismatch " << mm.row_label << " / " << mm.col_label << ": computed " << mm.actual
               << ", expected " << mm.expected << "\n";
}

Json check_to_json(const std::optional<lusztig::ComparisonReport>& check) {
    if (!check) return nullptr;
    Json mm = Json::array();
    for (const auto& m : check->mismatches)
        mm.push_back({{"row", m.row_label}, {"col", m.col_label}, {"expected", m.expected},
                      {"actual", m.actual}});
    return Json{{"pass", check->pass}, {"cells", check->cells}, {"mismatches", mm}};
}

void emit_json(const lusztig::LusztigResult& r, std::ostream& os) {
    Json j;
    j["case"] = r.case_name;
    j["status"] = r.conjectural ? "CONJECTURAL" : (r.verdict.pass ? "PASS" : "FAIL");
    j["pair_labels"] = r.pair_labels;
    j["split_class_labels"] = r.column_labels;
    j["weyl_column_labels"] = r.weyl_column_labels;
    j["fclass_sizes_by_column"] = r.fclass_sizes_by_column;
    Json fclasses = Json::array();
    for (const auto& fc : r.f_classes)
        fclasses.push_back({{"column", fc.column_label},
                            {"representative_word", fc.representative_word},
                            {"size", fc.size},
                            {"torus_order", fc.torus_order}});
    j["f_classes"] = fclasses;
    j["omega"] = matrix_to_json(r.omega);
    j["p"] = matrix_to_json(r.p_matrix);
    j["lambda"] = matrix_to_json(r.lambda_matrix);
    j["y"] = matrix_to_json(r.y_table);
    j["x"] = matrix_to_json(r.x_table);
    j["target_verdict"] = check_to_json(r.verdict);
    j["omega_check"] = check_to_json(r.omega_check);
    j["p_check"] = check_to_json(r.p_check);
    j["lambda_check"] = check_to_json(r.lambda_check);
    os << j.dump(1) << "\n";
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

void csv_matrix(std::ostream& os, const std::string& name, const MatrixRF& m,
                const std::vector<std::string>& row_labels,
                const std::vector<std::string>& col_labels) {
    os << csv_field(name);
    for (const auto& c : col_labels) os << "," << csv_field(c);
    os << "\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << csv_field(row_labels[i]);
        for (std::size_t j = 0; j < m.cols(); ++j) os << "," << m.at(i, j).to_string();
        os << "\n";
    }
}

void emit_csv(const lusztig::LusztigResult& r, std::ostream& os) {
    os << "case," << r.case_name << "\n";
    os << "status," << (r.conjectural ? "CONJECTURAL" : (r.verdict.pass ? "PASS" : "FAIL")) << "\n";
    csv_matrix(os, "Omega", r.omega, r.pair_labels, r.pair_labels);
    csv_matrix(os, "P", r.p_matrix, r.pair_labels, r.pair_labels);
    csv_matrix(os, "Lambda", r.lambda_matrix, r.pair_labels, r.pair_labels);
    csv_matrix(os, "X", r.x_table, r.pair_labels, r.column_labels);
}

// latex rendering of a polynomial: sqrt d -> \sqrt{d}, q^10 -> q^{10}
std::string latex_poly(const RatFunc& rf) {
    std::string s = rf.to_string();
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s.compare(i, 5, "sqrt2") == 0) {
            out += "\\sqrt{2}";
            i += 4;
        } else if (s.compare(i, 5, "sqrt3") == 0) {
            out += "\\sqrt{3}";
            i += 4;
        } else if (s[i] == '*') {
            // implicit multiplication in latex
        } else if (s[i] == '^') {
            std::size_t k = i + 1;
            while (k < s.size() && isdigit(static_cast<unsigned char>(s[k]))) ++k;
            const std::string exp = s.substr(i + 1, k - i - 1);
            out += exp.size() == 1 ? "^" + exp : "^{" + exp + "}";
            i = k - 1;
        } else {
            out += s[i];
        }
    }
    return out;
}

void latex_matrix(std::ostream& os, const MatrixRF& m) {
    os << "\\begin{bmatrix}\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? "&" : "") << latex_poly(m.at(i, j));
        os << "\\\\\n";
    }
    os << "\\end{bmatrix}\n";
}

void emit_latex(const lusztig::LusztigResult& r, std::ostream& os) {
    os << "% case " << r.case_name << " ("
       << (r.conjectural ? "CONJECTURAL" : (r.verdict.pass ? "PASS" : "FAIL")) << ")\n";
    os << "% Omega\n";
    latex_matrix(os, r.omega);
    os << "% P\n";
    latex_matrix(os, r.p_matrix);
    os << "% Lambda\n";
    latex_matrix(os, r.lambda_matrix);
    os << "% X: rows ";
    for (std::size_t i = 0; i < r.pair_labels.size(); ++i) os << (i ? " " : "") << r.pair_labels[i];
    os << "; columns ";
    for (std::size_t i = 0; i < r.column_labels.size(); ++i)
        os << (i ? " " : "") << r.column_labels[i];
    os << "\n\\begin{array}{" << std::string(r.column_labels.size() + 1, 'l') << "}\n";
    for (std::size_t i = 0; i < r.x_table.rows(); ++i) {
        os << r.pair_labels[i];
        for (std::size_t j = 0; j < r.x_table.cols(); ++j)
            os << "&" << latex_poly(r.x_table.at(i, j));
        os << "\\\\\n";
    }
    os << "\\end{array}\n";
}

}  // namespace

void emit(const lusztig::LusztigResult& result, Format format, std::ostream& os) {
    switch (format) {
        case Format::Text: emit_text(result, os); return;
        case Format::JsonFmt: emit_json(result, os); return;
        case Format::Csv: emit_csv(result, os); return;
        case Format::Latex: emit_latex(result, os); return;
    }
}

void emit_model_suite(const models::ModelSuiteResult& result, Format format, std::ostream& os) {
    if (format == Format::JsonFmt) {
        Json j;
        j["status"] = result.all_ok ? "PASS" : "FAIL";
        Json reports = Json::array();
        for (const auto& r : result.coset_reports) {
            Json pairs = Json::array();
            for (const auto& [camb, ch] : r.centralizer_pairs) pairs.push_back({camb, ch});
            Json orders = Json::array();
            for (const auto& [oamb, oh] : r.order_pairs) orders.push_back({oamb, oh});
            reports.push_back({{"model", r.model_name},
                               {"base_classes", r.base_class_count},
                               {"coset_classes", r.coset_class_count},
                               {"bijection_ok", r.bijection_ok},
                               {"centralizer_ok", r.centralizer_ok},
                               {"order_ok", r.order_ok},
                               {"tau_conjugation_ok", r.tau_conjugation_ok},
                               {"fstable_base", r.fstable_base_classes},
                               {"fstable_coset", r.fstable_coset_classes},
                               {"centralizer_pairs", pairs},
                               {"order_pairs", orders}});
        }
        j["coset_models"] = reports;
        if (result.sp42_ran) {
            j["sp42"] = {{"group_order", result.sp42.group_order},
                         {"fixed_subgroup_order", result.sp42.fixed_subgroup_order},
                         {"fixed_class_count", result.sp42.fixed_class_count},
                         {"fixed_class_sizes", result.sp42.fixed_class_sizes},
                         {"fixed_class_orders", result.sp42.fixed_class_orders},
                         {"outer_coset_class_count", result.sp42.outer_coset_class_count}};
        }
        os << j.dump(1) << "\n";
        return;
    }
    os << "model suite: " << (result.all_ok ? "PASS" : "FAIL") << "\n";
    for (const auto& r : result.coset_reports) {
        os << "  " << r.model_name << ": base classes " << r.base_class_count << ", coset classes "
           << r.coset_class_count << ", bijection " << (r.bijection_ok ? "ok" : "FAIL")
           << ", centralizer doubling " << (r.centralizer_ok ? "ok" : "FAIL") << ", order doubling "
           << (r.order_ok ? "ok" : "FAIL") << ", tau rule "
           << (r.tau_conjugation_ok ? "ok" : "FAIL") << ", F-stable " << r.fstable_base_classes
           << "=" << r.fstable_coset_classes << (r.fstable_ok ? "" : " FAIL") << "\n";
        os << "    centralizers (ambient,base):";
        for (const auto& [camb, ch] : r.centralizer_pairs) os << " (" << camb << "," << ch << ")";
        os << "\n    orders (ambient,base):";
        for (const auto& [oa, ob] : r.order_pairs) os << " (" << oa << "," << ob << ")";
        os << "\n";
    }
    if (result.sp42_ran) {
        os << "  sp42: |Sp4(2)|=" << result.sp42.group_order
           << ", fixed subgroup order=" << result.sp42.fixed_subgroup_order << " with "
           << result.sp42.fixed_class_count << " classes (sizes";
        for (auto s : result.sp42.fixed_class_sizes) os << " " << s;
        os << "; element orders";
        for (auto o : result.sp42.fixed_class_orders) os << " " << o;
        os << "), outer-coset classes in the order-1440 extension: "
           << result.sp42.outer_coset_class_count << "\n";
    }
}

}  // namespace suzree::io
