#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "cpair/divisor.hpp"

namespace cpair {

/// An affine chart 𝔸^dim with named coordinate axes x1..x_dim.
struct Chart {
    std::string name;
    int dim = 1;

    Chart() = default;
    Chart(std::string n, int d) : name(std::move(n)), dim(d) {
        if (d < 1)
            throw InvalidDivisor("chart dimension must be ≥ 1");
    }

    PrimeDivisor hyperplane(int axis) const {
        if (axis < 1 || axis > dim)
            throw AxisOutOfRange("axis " + std::to_string(axis) + " of chart " + name +
                                 " (dim " + std::to_string(dim) + ")");
        return PrimeDivisor::coordinate(name, axis);
    }

    friend bool operator==(const Chart& a, const Chart& b) {
        return a.name == b.name && a.dim == b.dim;
    }
};

/// A monomial morphism between equal-dimensional charts,
///   y_j = Π_i x_i^{e[i][j]},
/// given by its exponent matrix (rows = source axes, columns = target axes).
/// Entries are non-negative integers and det ≠ 0, so the map is a dominant
/// quasi-finite morphism; the pull-back of the target hyperplane {y_j = 0}
/// is Σ_i e[i][j]·{x_i = 0}.
class MonomialCover {
public:
    MonomialCover(Chart source, Chart target, std::vector<std::vector<Int>> exponents)
        : source_(std::move(source)), target_(std::move(target)), e_(std::move(exponents)) {
        if (source_.dim != target_.dim)
            throw ChartMismatch("monomial cover between charts of different dimension");
        int d = source_.dim;
        if ((int)e_.size() != d)
            throw InvalidMorphism("exponent matrix has wrong number of rows");
        for (const auto& row : e_) {
            if ((int)row.size() != d)
                throw InvalidMorphism("exponent matrix has wrong number of columns");
            for (const Int& x : row)
                if (x < 0)
                    throw InvalidMorphism("negative exponent: only morphisms, not rational maps");
        }
        if (determinant() == 0)
            throw InvalidMorphism("exponent matrix is singular");
    }

    /// Diagonal cover x_i ↦ x_i^{c_i} on a single chart.
    static MonomialCover diagonal(const Chart& chart, const std::vector<Int>& c) {
        int d = chart.dim;
        if ((int)c.size() != d)
            throw InvalidMorphism("diagonal exponent vector has wrong length");
        std::vector<std::vector<Int>> e(d, std::vector<Int>(d, 0));
        for (int i = 0; i < d; ++i)
            e[i][i] = c[i];
        return MonomialCover(chart, chart, std::move(e));
    }

    static MonomialCover identity(const Chart& chart) {
        return diagonal(chart, std::vector<Int>(chart.dim, 1));
    }

    const Chart& source() const { return source_; }
    const Chart& target() const { return target_; }
    int dim() const { return source_.dim; }
    const Int& exponent(int src_axis, int tgt_axis) const {
        return e_[src_axis - 1][tgt_axis - 1];
    }
    const std::vector<std::vector<Int>>& matrix() const { return e_; }

    bool is_diagonal() const {
        for (int i = 0; i < dim(); ++i)
            for (int j = 0; j < dim(); ++j)
                if (i != j && e_[i][j] != 0)
                    return false;
        return true;
    }

    Int determinant() const { return det(e_); }

    /// Divisor of the Jacobian determinant: Σ_i (Σ_j e[i][j] − 1)·{x_i = 0}.
    QDivisor jacobian_divisor() const {
        QDivisor d;
        for (int i = 1; i <= dim(); ++i) {
            Int s = 0;
            for (int j = 1; j <= dim(); ++j)
                s += exponent(i, j);
            d.add(source_.hyperplane(i), Rational(s - 1));
        }
        return d;
    }

    /// Codimension-one branch divisor, read off the exponent matrix: the
    /// target hyperplanes with some column entry > 1.  Codimension-two
    /// branching is invisible at this level and intentionally ignored.
    std::set<PrimeDivisor> branch_support() const {
        std::set<PrimeDivisor> s;
        for (int j = 1; j <= dim(); ++j)
            for (int i = 1; i <= dim(); ++i)
                if (exponent(i, j) > 1)
                    s.insert(target_.hyperplane(j));
        return s;
    }

private:
    static Int det(const std::vector<std::vector<Int>>& m) {
        int n = (int)m.size();
        if (n == 1)
            return m[0][0];
        Int acc = 0;
        for (int k = 0; k < n; ++k) {
            if (m[0][k] == 0)
                continue;
            std::vector<std::vector<Int>> minor;
            for (int r = 1; r < n; ++r) {
                std::vector<Int> row;
                for (int c = 0; c < n; ++c)
                    if (c != k)
                        row.push_back(m[r][c]);
                minor.push_back(std::move(row));
            }
            Int term = m[0][k] * det(minor);
            acc += (k % 2 == 0) ? term : -term;
        }
        return acc;
    }

    Chart source_;
    Chart target_;
    std::vector<std::vector<Int>> e_;
};

/// compose(f, g) = g∘f, for f : A → B and g : B → C.  The exponent matrix
/// is the product, so pulling back through the composite equals pulling
/// back through g and then through f.
inline MonomialCover compose(const MonomialCover& f, const MonomialCover& g) {
    if (!(f.target() == g.source()))
        throw ChartMismatch("compose: target of first map is not source of second");
    int d = f.dim();
    std::vector<std::vector<Int>> m(d, std::vector<Int>(d, 0));
    for (int i = 0; i < d; ++i)
        for (int k = 0; k < d; ++k)
            for (int j = 0; j < d; ++j)
                m[i][k] += f.matrix()[i][j] * g.matrix()[j][k];
    return MonomialCover(f.source(), g.target(), std::move(m));
}

/// A morphism presented purely by its divisor tables: per target prime the
/// pull-back as a non-negative integral divisor on source primes, plus the
/// set of exceptional source primes (those not dominating any target
/// prime).  This is the escape hatch for non-monomial geometry such as
/// blow-ups of plane curves; the engine trusts the table but validates
/// integrality and non-negativity.
class DivisorialMorphism {
public:
    DivisorialMorphism(std::string name,
                       std::map<PrimeDivisor, QDivisor> pullback,
                       std::set<PrimeDivisor> exceptional)
        : name_(std::move(name)), pullback_(std::move(pullback)),
          exceptional_(std::move(exceptional)) {
        for (const auto& [t, d] : pullback_) {
            if (d.is_zero())
                throw InvalidMorphism(name_ + ": pull-back of " + t.id + " is zero");
            for (const auto& [s, c] : d.terms())
                if (!c.is_integer() || c < Rational(0))
                    throw InvalidMorphism(name_ + ": pull-back multiplicity " + c.str() +
                                          " of " + t.id + " at " + s.id +
                                          " is not a non-negative integer");
        }
    }

    const std::string& name() const { return name_; }
    const std::map<PrimeDivisor, QDivisor>& pullback_table() const { return pullback_; }
    const std::set<PrimeDivisor>& exceptional() const { return exceptional_; }
    bool is_exceptional(const PrimeDivisor& p) const { return exceptional_.count(p) > 0; }

    const QDivisor& pullback_of(const PrimeDivisor& target_prime) const {
        auto it = pullback_.find(target_prime);
        if (it == pullback_.end())
            throw UnknownPrime(name_ + ": no pull-back row for " + target_prime.id);
        return it->second;
    }

    /// mult_{Δ_X} φ*Δ_Y.
    Int multiplicity(const PrimeDivisor& source_prime, const PrimeDivisor& target_prime) const {
        return pullback_of(target_prime).coefficient(source_prime).num();
    }

    /// Strict transform of a target prime: the unique non-exceptional
    /// source prime in its pull-back.  It must carry multiplicity ≥ 1 and
    /// exceptional primes never occupy this position.
    PrimeDivisor strict_transform(const PrimeDivisor& target_prime) const {
        const QDivisor& pb = pullback_of(target_prime);
        const PrimeDivisor* found = nullptr;
        for (const auto& [s, c] : pb.terms()) {
            (void)c;
            if (!is_exceptional(s)) {
                if (found)
                    throw InvalidMorphism(name_ + ": pull-back of " + target_prime.id +
                                          " has several non-exceptional components");
                found = &s;
            }
        }
        if (!found)
            throw InvalidMorphism(name_ + ": pull-back of " + target_prime.id +
                                  " has no non-exceptional component");
        return *found;
    }

    /// Push-forward of a divisor on source primes: exceptional terms drop,
    /// every other prime maps to the target prime it is the strict
    /// transform of.
    QDivisor pushforward(const QDivisor& d) const {
        QDivisor r;
        for (const auto& [s, c] : d.terms()) {
            if (is_exceptional(s))
                continue;
            const PrimeDivisor* target = nullptr;
            for (const auto& [t, pb] : pullback_) {
                if (!pb.coefficient(s).is_zero()) {
                    if (target)
                        throw InvalidMorphism(name_ + ": source prime " + s.id +
                                              " appears in several pull-back rows");
                    target = &t;
                }
            }
            if (!target)
                throw UnknownPrime(name_ + ": source prime " + s.id +
                                   " dominates no target prime and is not exceptional");
            r.add(*target, c);
        }
        return r;
    }

private:
    std::string name_;
    std::map<PrimeDivisor, QDivisor> pullback_;
    std::set<PrimeDivisor> exceptional_;
};

/// Q-linear extension of the per-prime pull-back of a monomial cover.
inline QDivisor pullback_qdiv(const MonomialCover& f, const QDivisor& d) {
    QDivisor r;
    for (const auto& [p, c] : d.terms()) {
        if (!p.is_coordinate() || p.chart != f.target().name)
            throw UnknownPrime("pull-back of " + p.id + " along a monomial cover into chart " +
                               f.target().name);
        for (int i = 1; i <= f.dim(); ++i) {
            const Int& e = f.exponent(i, p.axis);
            if (e != 0)
                r.add(f.source().hyperplane(i), c * Rational(e));
        }
    }
    return r;
}

inline QDivisor pullback_qdiv(const DivisorialMorphism& f, const QDivisor& d) {
    QDivisor r;
    for (const auto& [p, c] : d.terms())
        r = r + c * f.pullback_of(p);
    return r;
}

/// Restriction of a coordinate-hyperplane pair to the hyperplane Y =
/// {x_axis = 0}: boundary components other than Y restrict axis-by-axis;
/// if Y itself is a boundary component it is removed first.  Returns the
/// smaller chart and the restricted boundary.
inline std::pair<Chart, CPairBoundary> restrict_pair(const Chart& chart, const CPairBoundary& b,
                                                     int axis) {
    if (axis < 1 || axis > chart.dim)
        throw AxisOutOfRange("restrict_pair: axis " + std::to_string(axis));
    if (chart.dim < 2)
        throw AxisOutOfRange("restrict_pair: chart of dimension 1 has no divisorial restriction");
    Chart sub(chart.name + "|x" + std::to_string(axis), chart.dim - 1);
    CPairBoundary rb;
    for (const auto& [p, m] : b.terms()) {
        if (!p.is_coordinate() || p.chart != chart.name)
            throw UnknownPrime("restrict_pair: boundary component " + p.id +
                               " is not a coordinate hyperplane of " + chart.name);
        if (p.axis == axis)
            continue;  // the restricted-to component drops out
        int new_axis = p.axis < axis ? p.axis : p.axis - 1;
        rb.set(sub.hyperplane(new_axis), m);
    }
    return {sub, rb};
}

} // namespace cpair
