#pragma once

#include "suzree/finite_group.hpp"

#include <string>
#include <utility>
#include <vector>

namespace suzree::models {

/// Finite shadow of the wreath-coset construction: the ambient group is
/// (H x H) x| <tau> with tau (g1,g2) tau = (g2,g1), and the base
/// automorphism plays the Frobenius.
struct CosetModel {
    std::string name;
    FiniteGroupModel base;
    Automorphism twist;
};

struct ClassReport {
    std::string model_name;
    std::size_t base_class_count = 0;
    std::size_t coset_class_count = 0;
    // per base class representative x: (|C_ambient(f(x))|, |C_H(x)|)
    std::vector<std::pair<std::size_t, std::size_t>> centralizer_pairs;
    // per base class representative: (order of f(x) in the ambient group, order of x)
    std::vector<std::pair<int, int>> order_pairs;
    std::size_t fstable_base_classes = 0;
    std::size_t fstable_coset_classes = 0;
    bool bijection_ok = false;
    bool centralizer_ok = false;   // |C_ambient(f(x))| == 2 |C_H(x)|
    bool order_ok = false;         // order((x1,x2)tau) == 2 order(x1 x2), all coset elements
    bool tau_conjugation_ok = false;
    bool fstable_ok = false;

    bool all_ok() const {
        return bijection_ok && centralizer_ok && order_ok && tau_conjugation_ok && fstable_ok;
    }
};

/// Exhaustive verification of the class bijection between conjugacy classes
/// of H and classes of the ambient group in the coset (HxH)tau, centralizer
/// doubling and element-order doubling. |H| is expected to stay small
/// (everything is O(|H|^2) to O(|H|^3)).
ClassReport verify_coset_conjugacy(const CosetModel& model);

struct Sp42Report {
    std::size_t group_order = 0;        // expected 720
    std::size_t fixed_subgroup_order = 0;  // expected 20
    std::size_t fixed_class_count = 0;     // expected 5
    std::vector<std::size_t> fixed_class_sizes;   // expected {1,4,5,5,5}
    std::vector<int> fixed_class_orders;          // expected {1,2,4,4,5}
    std::size_t outer_coset_class_count = 0;      // expected 5, in the order-1440 extension
};

/// Builds Sp4(2) as 4x4 matrices over GF(2) from symplectic transvections,
/// finds an outer involution with a fixed subgroup of order 20 (the Suzuki
/// group Sz(2), Frobenius of order 20), and counts the conjugacy classes of
/// the order-1440 extension lying in the outer coset.
/// Returns the group, the automorphism and the report.
std::tuple<FiniteGroupModel, Automorphism, Sp42Report> sp4_2_model();

/// The named small-model suite: for each listed H, runs
/// verify_coset_conjugacy with at least two automorphism choices.
/// Known names: z4, s3, d8, q8, a4, sp42.
struct ModelSuiteResult {
    std::vector<ClassReport> coset_reports;
    bool sp42_ran = false;
    Sp42Report sp42;
    bool all_ok = true;
};
ModelSuiteResult run_model_suite(const std::vector<std::string>& names);

}  // namespace suzree::models
