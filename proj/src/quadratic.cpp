#include "suzree/quadratic.hpp"

#include <ostream>

namespace suzree {

namespace {

std::string surd_term(const Rational& b, int d) {
    const std::string root = "sqrt" + std::to_string(d);
    if (b == 1) return root;
    if (b == -1) return "-" + root;
    return rational_to_string(b) + "*" + root;
}

}  // namespace

std::string QuadRational::to_string() const {
    if (is_zero()) return "0";
    if (surd_ == 0) return rational_to_string(rat_);
    if (rat_ == 0) return surd_term(surd_, d_);
    std::string s = rational_to_string(rat_);
    if (surd_ > 0) s += "+";
    return s + surd_term(surd_, d_);
}

std::ostream& operator<<(std::ostream& os, const QuadRational& x) {
    return os << x.to_string();
}

}  // namespace suzree
