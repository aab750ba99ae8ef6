#pragma once

#include "suzree/lusztig.hpp"

#include <string>

// vendored single-header nlohmann/json
#include "json.hpp"

namespace suzree::io {

using Json = nlohmann::json;

// Poly wire format: [[rational_part, surd_part], ...] low degree first,
// rationals as "num/den" strings ("n" when the denominator is 1).
Json poly_to_json(const Poly& p);
Poly poly_from_json(const Json& j, int d, const std::string& where);

Json quad_to_json(const QuadRational& x);
QuadRational quad_from_json(const Json& j, int d, const std::string& where);

Json matrix_to_json(const MatrixRF& m);

/// Load error carrying the offending file/field.
struct CaseLoadError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parses and fully validates one case file; throws CaseLoadError with the
/// failing table and cell on any structural violation.
lusztig::CaseBundle load_case(const std::string& path);

/// Convenience: data_dir + "/" + name + ".json" for connected case names;
/// the *-disconnected names load their base file and derive the bundle.
lusztig::CaseBundle load_case_by_name(const std::string& data_dir, const std::string& case_name);

}  // namespace suzree::io
