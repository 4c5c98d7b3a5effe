#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "cpair/rational.hpp"

namespace cpair {

/// A prime Weil divisor, identified by name.  Coordinate-hyperplane primes
/// remember which chart axis they cut out; abstract primes are just names
/// (strict transforms, exceptional curves, ...).
struct PrimeDivisor {
    std::string id;
    std::string chart;  // empty for abstract primes
    int axis = 0;       // 1-based; 0 for abstract primes

    bool is_coordinate() const { return !chart.empty(); }

    static PrimeDivisor abstract(std::string name) { return {std::move(name), "", 0}; }
    static PrimeDivisor coordinate(std::string chart, int axis) {
        return {"{" + chart + ":x" + std::to_string(axis) + "=0}", std::move(chart), axis};
    }

    friend bool operator==(const PrimeDivisor& a, const PrimeDivisor& b) { return a.id == b.id; }
    friend bool operator<(const PrimeDivisor& a, const PrimeDivisor& b) { return a.id < b.id; }
};

/// Exact formal sum of prime divisors with finite rational coefficients.
/// Canonical form: zero terms are dropped, so structural equality is
/// mathematical equality.  ∞ never enters a QDivisor coefficient; it lives
/// only in multiplicity positions (CPairBoundary, ExtRational).
class QDivisor {
public:
    QDivisor() = default;

    static QDivisor zero() { return QDivisor(); }

    static QDivisor term(const PrimeDivisor& p, const Rational& c) {
        QDivisor d;
        d.add(p, c);
        return d;
    }

    const std::map<PrimeDivisor, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coefficient(const PrimeDivisor& p) const {
        auto it = terms_.find(p);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add(const PrimeDivisor& p, const Rational& c) {
        if (c.is_zero())
            return;
        auto [it, inserted] = terms_.emplace(p, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    friend QDivisor operator+(const QDivisor& a, const QDivisor& b) {
        QDivisor r = a;
        for (const auto& [p, c] : b.terms_)
            r.add(p, c);
        return r;
    }
    friend QDivisor operator-(const QDivisor& a, const QDivisor& b) {
        return a + (Rational(-1) * b);
    }
    friend QDivisor operator*(const Rational& s, const QDivisor& d) {
        QDivisor r;
        for (const auto& [p, c] : d.terms_)
            r.add(p, s * c);
        return r;
    }

    friend bool operator==(const QDivisor& a, const QDivisor& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const QDivisor& a, const QDivisor& b) { return !(a == b); }

    /// Termwise comparison over the union of primes (missing terms count
    /// as zero).  This is the order behind the identity-morphism tests.
    friend bool operator>=(const QDivisor& a, const QDivisor& b) {
        for (const auto& [p, c] : a.terms_)
            if (c < b.coefficient(p))
                return false;
        for (const auto& [p, c] : b.terms_)
            if (a.coefficient(p) < c)
                return false;
        return true;
    }
    friend bool operator<=(const QDivisor& a, const QDivisor& b) { return b >= a; }

    bool is_effective() const { return *this >= QDivisor(); }
    bool is_integral() const {
        for (const auto& [p, c] : terms_)
            if (!c.is_integer())
                return false;
        return true;
    }
    bool is_reduced() const {
        for (const auto& [p, c] : terms_)
            if (c != Rational(1))
                return false;
        return true;
    }

    /// Deterministic serialization: terms sorted by prime id, coefficients
    /// normalized "p/q".
    std::string str() const {
        if (terms_.empty())
            return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [p, c] : terms_) {
            if (!first)
                os << " + ";
            os << "(" << c.str() << ")*" << p.id;
            first = false;
        }
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const QDivisor& d) { return os << d.str(); }

private:
    std::map<PrimeDivisor, Rational> terms_;
};

inline QDivisor floor_div(const QDivisor& d) {
    QDivisor r;
    for (const auto& [p, c] : d.terms())
        r.add(p, Rational(c.floor()));
    return r;
}

inline QDivisor ceil_div(const QDivisor& d) {
    QDivisor r;
    for (const auto& [p, c] : d.terms())
        r.add(p, Rational(c.ceil()));
    return r;
}

/// {D} := D − ⌊D⌋.
inline QDivisor frac_part(const QDivisor& d) { return d - floor_div(d); }

/// D_red: set every non-vanishing coefficient to one.
inline QDivisor reduce_div(const QDivisor& d) {
    QDivisor r;
    for (const auto& [p, c] : d.terms()) {
        (void)c;
        r.add(p, Rational(1));
    }
    return r;
}

/// Boundary of a C-pair: prime divisors with multiplicities m ∈ {2,3,…,∞}.
/// The induced Q-divisor has coefficient (m−1)/m, with (∞−1)/∞ = 1.
class CPairBoundary {
public:
    CPairBoundary() = default;

    /// Throws NotStandardCoefficient unless m is an integer ≥ 2 or ∞.
    void set(const PrimeDivisor& p, const ExtRational& m) {
        if (m.is_finite() && (!m.value().is_integer() || m.value() < Rational(2)))
            throw NotStandardCoefficient("multiplicity " + m.str() + " at " + p.id +
                                         " is not in {2,3,...} ∪ {inf}");
        terms_.insert_or_assign(p, m);
    }

    const std::map<PrimeDivisor, ExtRational>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    /// C-multiplicity of the boundary along H: the stored m, or 1 off the
    /// boundary.
    ExtRational c_multiplicity(const PrimeDivisor& h) const {
        auto it = terms_.find(h);
        return it == terms_.end() ? ExtRational(1) : it->second;
    }

    /// The induced Q-divisor Σ (m−1)/m · D_i; ∞ contributes coefficient 1.
    QDivisor induced_qdivisor() const {
        QDivisor d;
        for (const auto& [p, m] : terms_) {
            if (m.is_infinite())
                d.add(p, Rational(1));
            else
                d.add(p, (m.value() - Rational(1)) / m.value());
        }
        return d;
    }

    /// D_orb := Σ over finite multiplicities of (1/m_i)·D_i.
    QDivisor d_orb() const {
        QDivisor d;
        for (const auto& [p, m] : terms_)
            if (m.is_finite())
                d.add(p, Rational(1) / m.value());
        return d;
    }

    /// Support of ⌊D⌋: exactly the ∞-multiplicity components.
    std::vector<PrimeDivisor> log_support() const {
        std::vector<PrimeDivisor> v;
        for (const auto& [p, m] : terms_)
            if (m.is_infinite())
                v.push_back(p);
        return v;
    }

    bool contains(const PrimeDivisor& p) const { return terms_.count(p) > 0; }

    friend bool operator==(const CPairBoundary& a, const CPairBoundary& b) {
        return a.terms_ == b.terms_;
    }

    std::string str() const {
        if (terms_.empty())
            return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [p, m] : terms_) {
            if (!first)
                os << " + ";
            os << "(m=" << m.str() << ")*" << p.id;
            first = false;
        }
        return os.str();
    }

private:
    std::map<PrimeDivisor, ExtRational> terms_;
};

/// Recovers the multiplicity presentation from a Q-divisor whose
/// coefficients are all standard, i.e. of the form (m−1)/m.  Coefficient 1
/// maps to m = ∞.  Throws NotStandardCoefficient otherwise.
inline CPairBoundary as_cpair(const QDivisor& d) {
    CPairBoundary b;
    for (const auto& [p, c] : d.terms()) {
        if (c == Rational(1)) {
            b.set(p, ExtRational::infinity());
            continue;
        }
        // c = (m−1)/m  ⇔  m = 1/(1−c), and m must be an integer ≥ 2.
        if (!(c > Rational(0)) || !(c < Rational(1)))
            throw NotStandardCoefficient("coefficient " + c.str() + " at " + p.id);
        Rational m = Rational(1) / (Rational(1) - c);
        if (!m.is_integer() || m < Rational(2))
            throw NotStandardCoefficient("coefficient " + c.str() + " at " + p.id);
        b.set(p, ExtRational(m));
    }
    return b;
}

} // namespace cpair
