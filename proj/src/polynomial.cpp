#include "suzree/polynomial.hpp"

#include <ostream>

namespace suzree {

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
    a.require_same_d(b);
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    const int d = a.d();
    Poly quo(d);
    Poly rem = a;
    const QuadRational lead_inv = b.leading().inverse();
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        const std::size_t shift = static_cast<std::size_t>(rem.degree() - b.degree());
        const QuadRational c = rem.leading() * lead_inv;
        const Poly term = Poly::monomial(c, shift);
        quo += term;
        rem -= term * b;
    }
    return {quo, rem};
}

Poly poly_divexact(const Poly& a, const Poly& b) {
    auto [quo, rem] = poly_divmod(a, b);
    if (!rem.is_zero()) throw std::domain_error("inexact polynomial division");
    return quo;
}

Poly poly_gcd(Poly a, Poly b) {
    a.require_same_d(b);
    while (!b.is_zero()) {
        Poly r = poly_divmod(a, b).second;
        a = std::move(b);
        b = r.is_zero() ? std::move(r) : r.monic();
    }
    return a.is_zero() ? a : a.monic();
}

namespace {

void append_term(std::string& out, const QuadRational& c, std::size_t k) {
    std::string coeff;
    bool negative = false;
    if (c.surd_part() == 0) {
        Rational a = c.rational_part();
        negative = a < 0;
        Rational mag = negative ? Rational(-a) : a;
        if (mag != 1 || k == 0) coeff = rational_to_string(mag);
    } else if (c.rational_part() == 0) {
        Rational b = c.surd_part();
        negative = b < 0;
        Rational mag = negative ? Rational(-b) : b;
        coeff = (mag == 1 ? std::string() : rational_to_string(mag) + "*") + "sqrt" +
                std::to_string(c.d());
    } else {
        coeff = "(" + c.to_string() + ")";
    }
    if (out.empty())
        out += negative ? "-" : "";
    else
        out += negative ? "-" : "+";
    out += coeff;
    if (k > 0) {
        if (!coeff.empty()) out += "*";
        out += "q";
        if (k > 1) out += "^" + std::to_string(k);
    }
}

}  // namespace

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        if (coeffs_[k].is_zero()) continue;
        append_term(out, coeffs_[k], k);
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

}  // namespace suzree
