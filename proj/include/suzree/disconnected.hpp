#pragma once

#include "suzree/lusztig.hpp"

namespace suzree::disconnected {

/// Rewrites the connected case's split-class labels for the run on the outer
/// coset of (G x G) x| <tau>: the numeric data is reused unchanged, only the
/// class names move to their coset / Shintani counterparts.
/// Supported base cases: "b2", "f4".
coset::UnipotentLayout disconnected_layout(const lusztig::CaseBundle& base_case);

/// Derives the disconnected bundle from the connected one: relabeled layout
/// and target columns, same Springer table, torus data and choices. For
/// "f4-disconnected" the result is flagged conjectural.
lusztig::CaseBundle disconnected_bundle(const lusztig::CaseBundle& base_case);

/// Runs the connected pipeline on the disconnected bundle.
/// case_name is "b2-disconnected" or "f4-disconnected".
lusztig::LusztigResult run_disconnected(const lusztig::CaseBundle& base_case);

}  // namespace suzree::disconnected
