#include "suzree/ratfunc.hpp"

#include <ostream>

namespace suzree {

void RatFunc::reduce() {
    num_.require_same_d(den_);
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = Poly::one(num_.d());
        return;
    }
    if (den_.degree() == 0) {
        num_ = num_.scaled(den_.leading().inverse());
        den_ = Poly::one(num_.d());
        return;
    }
    // fast path: most values downstream reduce to polynomials, and one trial
    // division is far cheaper than a full Euclid chain
    if (num_.degree() >= den_.degree()) {
        auto [quo, rem] = poly_divmod(num_, den_);
        if (rem.is_zero()) {
            num_ = std::move(quo);
            den_ = Poly::one(num_.d());
            return;
        }
    }
    Poly g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = poly_divexact(num_, g);
        den_ = poly_divexact(den_, g);
    }
    if (!den_.is_monic()) {
        const QuadRational inv = den_.leading().inverse();
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

std::string RatFunc::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

std::ostream& operator<<(std::ostream& os, const RatFunc& r) { return os << r.to_string(); }

}  // namespace suzree
