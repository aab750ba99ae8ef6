#pragma once

#include "suzree/coset_models.hpp"
#include "suzree/lusztig.hpp"

#include <iosfwd>
#include <string>

namespace suzree::io {

enum class Format { Text, JsonFmt, Csv, Latex };

Format format_from_string(const std::string& s);
std::string extension_for(Format f);

/// Deterministic, byte-stable rendering of one case result.
void emit(const lusztig::LusztigResult& result, Format format, std::ostream& os);

/// Per-model counts and centralizer/order pair tables (text or json).
void emit_model_suite(const models::ModelSuiteResult& result, Format format, std::ostream& os);

}  // namespace suzree::io
