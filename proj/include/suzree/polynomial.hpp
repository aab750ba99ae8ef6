#pragma once

#include "suzree/quadratic.hpp"

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace suzree {

/// Univariate polynomial in q over Q(sqrt(d)), dense, low degree first.
/// The zero polynomial is the empty coefficient sequence; otherwise the
/// leading coefficient is nonzero.
class Poly {
public:
    Poly() : d_(1) {}
    explicit Poly(int d) : d_(d) {}
    explicit Poly(QuadRational constant) : d_(constant.d()) {
        if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
    }
    Poly(std::vector<QuadRational> coeffs, int d) : coeffs_(std::move(coeffs)), d_(d) {
        for (const auto& c : coeffs_)
            if (c.d() != d_) throw std::invalid_argument("coefficient field mismatch in Poly");
        trim();
    }

    static Poly zero(int d) { return Poly(d); }
    static Poly one(int d) { return constant(1, d); }
    static Poly constant(long v, int d) { return Poly(QuadRational(v, d)); }
    /// c * q^k
    static Poly monomial(QuadRational c, std::size_t k) {
        Poly p(c.d());
        if (!c.is_zero()) {
            p.coeffs_.assign(k + 1, QuadRational::zero(c.d()));
            p.coeffs_[k] = std::move(c);
        }
        return p;
    }
    static Poly q_power(std::size_t k, int d) { return monomial(QuadRational::one(d), k); }

    int d() const { return d_; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<QuadRational>& coefficients() const { return coeffs_; }
    QuadRational coeff(std::size_t k) const {
        return k < coeffs_.size() ? coeffs_[k] : QuadRational::zero(d_);
    }
    const QuadRational& leading() const {
        if (is_zero()) throw std::domain_error("zero polynomial has no leading coefficient");
        return coeffs_.back();
    }
    bool is_monic() const { return !is_zero() && leading().is_one(); }

    Poly operator-() const {
        Poly r(d_);
        r.coeffs_.reserve(coeffs_.size());
        for (const auto& c : coeffs_) r.coeffs_.push_back(-c);
        return r;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        a.require_same_d(b);
        Poly r(a.d_);
        const std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
        r.coeffs_.reserve(n);
        for (std::size_t i = 0; i < n; ++i) r.coeffs_.push_back(a.coeff(i) + b.coeff(i));
        r.trim();
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    friend Poly operator*(const Poly& a, const Poly& b) {
        a.require_same_d(b);
        if (a.is_zero() || b.is_zero()) return Poly(a.d_);
        Poly r(a.d_);
        r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, QuadRational::zero(a.d_));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        r.trim();
        return r;
    }
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly& a, const Poly& b) {
        a.require_same_d(b);
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly scaled(const QuadRational& c) const { return *this * Poly(c); }
    Poly shifted_up(std::size_t k) const {
        if (is_zero() || k == 0) return *this;
        Poly r(d_);
        r.coeffs_.assign(k, QuadRational::zero(d_));
        r.coeffs_.insert(r.coeffs_.end(), coeffs_.begin(), coeffs_.end());
        return r;
    }
    Poly monic() const {
        if (is_zero()) return *this;
        return scaled(leading().inverse());
    }

    QuadRational evaluate(const QuadRational& x) const {
        QuadRational acc = QuadRational::zero(d_);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    std::string to_string() const;

    void require_same_d(const Poly& o) const {
        if (d_ != o.d_)
            throw std::invalid_argument("mixed coefficient fields in Poly arithmetic");
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::vector<QuadRational> coeffs_;
    int d_;
};

/// Exact Euclidean division: a = quotient * b + remainder, deg r < deg b.
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);

/// Quotient of an exact division; throws if the remainder is nonzero.
Poly poly_divexact(const Poly& a, const Poly& b);

/// Monic gcd by the Euclidean algorithm over Q(sqrt(d)); gcd(0,0) = 0.
/// Remainders are re-normalized to monic at every step to keep the rational
/// coefficients from ballooning.
Poly poly_gcd(Poly a, Poly b);

std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace suzree
