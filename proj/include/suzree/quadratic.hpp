#pragma once

#include "suzree/rational.hpp"

#include <iosfwd>
#include <string>

namespace suzree {

/// Exact element of the quadratic field Q(sqrt(d)), stored as
/// rational_part + surd_part * sqrt(d) with d in {1, 2, 3}.
///
/// d = 1 degenerates to Q; such values fold the surd into the rational part
/// so each element has a unique representation. Values carrying different d
/// never mix: arithmetic between them throws instead of coercing.
class QuadRational {
public:
    QuadRational() : d_(1) {}
    explicit QuadRational(int d) : d_(check_d(d)) {}
    QuadRational(Rational rational_part, Rational surd_part, int d)
        : rat_(std::move(rational_part)), surd_(std::move(surd_part)), d_(check_d(d)) {
        canonicalize();
    }
    QuadRational(long value, int d) : rat_(value), d_(check_d(d)) {}

    static QuadRational zero(int d) { return QuadRational(d); }
    static QuadRational one(int d) { return QuadRational(1, d); }
    static QuadRational sqrt_d(int d) { return QuadRational(0, 1, d); }

    const Rational& rational_part() const { return rat_; }
    const Rational& surd_part() const { return surd_; }
    int d() const { return d_; }

    bool is_zero() const { return rat_ == 0 && surd_ == 0; }
    bool is_one() const { return rat_ == 1 && surd_ == 0; }
    bool is_rational() const { return surd_ == 0; }

    QuadRational operator-() const { return QuadRational(-rat_, -surd_, d_); }

    QuadRational& operator+=(const QuadRational& o) {
        require_same_d(o);
        rat_ += o.rat_;
        surd_ += o.surd_;
        return *this;
    }
    QuadRational& operator-=(const QuadRational& o) {
        require_same_d(o);
        rat_ -= o.rat_;
        surd_ -= o.surd_;
        return *this;
    }
    QuadRational& operator*=(const QuadRational& o) {
        require_same_d(o);
        // (a + b s)(c + e s) = ac + be d + (ae + bc) s
        Rational a = rat_ * o.rat_ + surd_ * o.surd_ * d_;
        Rational b = rat_ * o.surd_ + surd_ * o.rat_;
        rat_ = std::move(a);
        surd_ = std::move(b);
        return *this;
    }
    QuadRational& operator/=(const QuadRational& o) { return *this *= o.inverse(); }

    friend QuadRational operator+(QuadRational a, const QuadRational& b) { return a += b; }
    friend QuadRational operator-(QuadRational a, const QuadRational& b) { return a -= b; }
    friend QuadRational operator*(QuadRational a, const QuadRational& b) { return a *= b; }
    friend QuadRational operator/(QuadRational a, const QuadRational& b) { return a /= b; }

    // Field inverse via the norm a^2 - d b^2, nonzero for nonzero elements
    // because sqrt(2), sqrt(3) are irrational (for d = 1 the surd is folded).
    QuadRational inverse() const {
        if (is_zero()) throw std::domain_error("division by zero in Q(sqrt(d))");
        Rational norm = rat_ * rat_ - Rational(d_) * surd_ * surd_;
        return QuadRational(rat_ / norm, -surd_ / norm, d_);
    }

    friend bool operator==(const QuadRational& a, const QuadRational& b) {
        a.require_same_d(b);
        return a.rat_ == b.rat_ && a.surd_ == b.surd_;
    }
    friend bool operator!=(const QuadRational& a, const QuadRational& b) { return !(a == b); }

    /// "3", "-1/2", "sqrt2", "-2*sqrt3", "1/2+3/2*sqrt3", "0"
    std::string to_string() const;

    void require_same_d(const QuadRational& o) const {
        if (d_ != o.d_)
            throw std::invalid_argument("mixed quadratic fields: d=" + std::to_string(d_) +
                                        " vs d=" + std::to_string(o.d_));
    }

private:
    static int check_d(int d) {
        if (d != 1 && d != 2 && d != 3)
            throw std::invalid_argument("d must be one of {1,2,3}, got " + std::to_string(d));
        return d;
    }
    void canonicalize() {
        if (d_ == 1 && surd_ != 0) {
            rat_ += surd_;
            surd_ = 0;
        }
    }

    Rational rat_;
    Rational surd_;
    int d_;
};

std::ostream& operator<<(std::ostream& os, const QuadRational& x);

enum class QuadOp { add, sub, mul, div };

/// Dispatch form of the four field operations; preconditions as the
/// operators (same d, nonzero divisor).
inline QuadRational quad_arith(const QuadRational& x, const QuadRational& y, QuadOp op) {
    switch (op) {
        case QuadOp::add: return x + y;
        case QuadOp::sub: return x - y;
        case QuadOp::mul: return x * y;
        case QuadOp::div: return x / y;
    }
    throw std::logic_error("unreachable");
}

}  // namespace suzree
