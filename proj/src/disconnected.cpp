#include "suzree/disconnected.hpp"

#include <stdexcept>

namespace suzree::disconnected {

coset::UnipotentLayout disconnected_layout(const lusztig::CaseBundle& base_case) {
    coset::UnipotentLayout layout = base_case.layout;
    if (base_case.name == "b2") {
        if (layout.columns.size() != 4)
            throw std::invalid_argument("b2 layout expected 4 split classes");
        layout.columns[0].label = "(1,sigma)";
        layout.columns[1].label = "(x_{a+b},sigma)";
        layout.columns[2].label = "(x_a,sigma)";
        layout.columns[3].label = "(x_a x_{a+b},sigma)";
    } else if (base_case.name == "f4") {
        for (auto& col : layout.columns) col.label = "N(" + col.label + ")";
    } else {
        throw std::invalid_argument("no disconnected construction for case \"" + base_case.name +
                                    "\"");
    }
    return layout;
}

lusztig::CaseBundle disconnected_bundle(const lusztig::CaseBundle& base_case) {
    lusztig::CaseBundle bundle = base_case;
    bundle.layout = disconnected_layout(base_case);
    bundle.name = base_case.name + "-disconnected";
    bundle.conjectural = base_case.name == "f4";
    return bundle;
}

lusztig::LusztigResult run_disconnected(const lusztig::CaseBundle& base_case) {
    return lusztig::run_case(disconnected_bundle(base_case));
}

}  // namespace suzree::disconnected
