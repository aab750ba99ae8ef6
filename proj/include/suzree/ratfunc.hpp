#pragma once

#include "suzree/polynomial.hpp"

#include <iosfwd>
#include <optional>
#include <string>

namespace suzree {

/// Reduced rational function num/den over Q(sqrt(d))[q].
///
/// Normal form: gcd(num, den) = 1 and den monic; zero is 0/1. Equality is
/// therefore plain componentwise comparison, which everything downstream
/// relies on.
class RatFunc {
public:
    RatFunc() : num_(1), den_(Poly::one(1)) {}
    explicit RatFunc(int d) : num_(d), den_(Poly::one(d)) {}
    /*implicit*/ RatFunc(Poly p) : num_(std::move(p)), den_(Poly::one(num_.d())) {}
    RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { reduce(); }

    static RatFunc zero(int d) { return RatFunc(d); }
    static RatFunc one(int d) { return RatFunc(Poly::one(d)); }

    const Poly& numerator() const { return num_; }
    const Poly& denominator() const { return den_; }
    int d() const { return num_.d(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    /// The reduced value as a polynomial when the denominator is 1.
    std::optional<Poly> as_polynomial() const {
        if (den_.is_one()) return num_;
        return std::nullopt;
    }

    RatFunc operator-() const {
        RatFunc r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw std::domain_error("division by the zero rational function");
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    std::string to_string() const;

private:
    void reduce();

    Poly num_;
    Poly den_;
};

/// Builds the fully reduced fraction num/den.
inline RatFunc ratfunc_reduce(Poly num, Poly den) {
    return RatFunc(std::move(num), std::move(den));
}

/// Returns the polynomial value when the reduced denominator is 1.
inline std::optional<Poly> is_polynomial(const RatFunc& r) { return r.as_polynomial(); }

std::ostream& operator<<(std::ostream& os, const RatFunc& r);

}  // namespace suzree
