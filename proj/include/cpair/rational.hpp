#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>

#include "cpair/errors.hpp"

namespace cpair {

using Int = boost::multiprecision::cpp_int;

/// Exact rational number over arbitrary-precision integers.  Always stored
/// normalized: gcd(num, den) = 1 and den > 0.  There is no floating point
/// anywhere in the engine.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(int n) : num_(n), den_(1) {}       // NOLINT: implicit by design
    Rational(Int n) : num_(std::move(n)), den_(1) {}

    Rational(Int num, Int den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_ == 0)
            throw UndefinedArithmetic("rational with zero denominator");
        normalize();
    }

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    /// ⌊p/q⌋ with the mathematician's convention (floor, not truncation).
    Int floor() const {
        Int q = num_ / den_;
        if (num_ % den_ != 0 && num_ < 0) --q;
        return q;
    }

    Int ceil() const { return -(-*this).floor(); }

    /// Fractional part x − ⌊x⌋, always in [0, 1).
    Rational frac() const { return *this - Rational(floor()); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0)
            throw UndefinedArithmetic("division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }
    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    /// Canonical form "p/q", or just "p" for integers.
    std::string str() const {
        std::ostringstream os;
        os << num_;
        if (den_ != 1)
            os << "/" << den_;
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.str();
    }

private:
    void normalize() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        Int g = boost::multiprecision::gcd(num_ < 0 ? Int(-num_) : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0)
            den_ = 1;
    }

    Int num_;
    Int den_;
};

/// A rational extended by the single symbol ∞, used for multiplicity
/// bookkeeping only.  Arithmetic follows the conventions
///   ∞·(positive finite) = ∞,  ∞ − finite = ∞,  ∞/∞ = 1,  finite/∞ = 0;
/// anything else involving ∞ (∞·0, ∞−∞, …) is rejected.
class ExtRational {
public:
    ExtRational() : finite_(true), value_(0) {}
    ExtRational(Rational v) : finite_(true), value_(std::move(v)) {}
    ExtRational(int v) : finite_(true), value_(v) {}

    static ExtRational infinity() {
        ExtRational e;
        e.finite_ = false;
        return e;
    }

    bool is_infinite() const { return !finite_; }
    bool is_finite() const { return finite_; }

    const Rational& value() const {
        if (!finite_)
            throw UndefinedArithmetic("no finite value: ∞");
        return value_;
    }

    friend ExtRational operator*(const ExtRational& a, const ExtRational& b) {
        if (a.is_infinite() && b.is_infinite())
            return infinity();
        if (a.is_infinite() || b.is_infinite()) {
            const Rational& f = a.is_infinite() ? b.value_ : a.value_;
            if (!(f > Rational(0)))
                throw UndefinedArithmetic("∞ times a non-positive value");
            return infinity();
        }
        return ExtRational(a.value_ * b.value_);
    }

    friend ExtRational operator-(const ExtRational& a, const ExtRational& b) {
        if (b.is_infinite())
            throw UndefinedArithmetic("subtraction of ∞");
        if (a.is_infinite())
            return infinity();
        return ExtRational(a.value_ - b.value_);
    }

    friend ExtRational operator/(const ExtRational& a, const ExtRational& b) {
        if (a.is_infinite() && b.is_infinite())
            return ExtRational(1);
        if (b.is_infinite())
            return ExtRational(0);
        if (a.is_infinite())
            throw UndefinedArithmetic("∞ divided by a finite value");
        return ExtRational(a.value_ / b.value_);
    }

    /// Total order with finite < ∞.
    friend bool operator==(const ExtRational& a, const ExtRational& b) {
        if (a.finite_ != b.finite_)
            return false;
        return a.finite_ ? a.value_ == b.value_ : true;
    }
    friend bool operator!=(const ExtRational& a, const ExtRational& b) { return !(a == b); }
    friend bool operator<(const ExtRational& a, const ExtRational& b) {
        if (a.is_infinite())
            return false;
        if (b.is_infinite())
            return true;
        return a.value_ < b.value_;
    }
    friend bool operator>=(const ExtRational& a, const ExtRational& b) { return !(a < b); }

    std::string str() const { return finite_ ? value_.str() : "inf"; }

    friend std::ostream& operator<<(std::ostream& os, const ExtRational& e) {
        return os << e.str();
    }

private:
    bool finite_;
    Rational value_;
};

inline Int lcm_int(const Int& a, const Int& b) {
    return boost::multiprecision::lcm(a, b);
}

/// ⌈a/b⌉ for integers, b > 0.
inline Int ceil_div(const Int& a, const Int& b) {
    return Rational(a, b).ceil();
}

} // namespace cpair
