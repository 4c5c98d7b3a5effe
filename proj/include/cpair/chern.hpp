#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "cpair/rational.hpp"

namespace cpair {

/// A truncated polynomial in named degree-one symbols (divisor classes and
/// Chern-class slots), with exact rational coefficients.  Multiplication
/// truncates above total degree = dim; the ring is commutative.
class GradedClass {
public:
    // monomial = sorted symbol → exponent map
    using Monomial = std::map<std::string, int>;

    explicit GradedClass(int dim) : dim_(dim) {
        if (dim < 0)
            throw DegreeOutOfRange("graded ring with negative truncation degree");
    }

    static GradedClass constant(int dim, const Rational& c) {
        GradedClass g(dim);
        g.add(Monomial{}, c);
        return g;
    }

    static GradedClass symbol(int dim, const std::string& name, int power = 1) {
        GradedClass g(dim);
        if (power <= dim)
            g.add(Monomial{{name, power}}, Rational(1));
        return g;
    }

    int dim() const { return dim_; }
    const std::map<Monomial, Rational>& terms() const { return terms_; }

    void add(const Monomial& m, const Rational& c) {
        if (c.is_zero() || degree_of(m) > dim_)
            return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    /// Homogeneous part of the given total degree.
    GradedClass degree_part(int degree) const {
        GradedClass g(dim_);
        for (const auto& [m, c] : terms_)
            if (degree_of(m) == degree)
                g.add(m, c);
        return g;
    }

    friend GradedClass operator+(const GradedClass& a, const GradedClass& b) {
        GradedClass g(a.dim_);
        g.terms_ = a.terms_;
        for (const auto& [m, c] : b.terms_)
            g.add(m, c);
        return g;
    }

    friend GradedClass operator*(const Rational& s, const GradedClass& a) {
        GradedClass g(a.dim_);
        for (const auto& [m, c] : a.terms_)
            g.add(m, s * c);
        return g;
    }

    friend GradedClass operator-(const GradedClass& a, const GradedClass& b) {
        return a + Rational(-1) * b;
    }

    friend GradedClass operator*(const GradedClass& a, const GradedClass& b) {
        GradedClass g(a.dim_);
        for (const auto& [ma, ca] : a.terms_) {
            int da = degree_of(ma);
            for (const auto& [mb, cb] : b.terms_) {
                if (da + degree_of(mb) > a.dim_)
                    continue;
                Monomial m = ma;
                for (const auto& [sym, e] : mb)
                    m[sym] += e;
                g.add(m, ca * cb);
            }
        }
        return g;
    }

    friend bool operator==(const GradedClass& a, const GradedClass& b) {
        return a.dim_ == b.dim_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const GradedClass& a, const GradedClass& b) { return !(a == b); }

    /// Deterministic form: terms ordered by (degree, monomial), exact
    /// coefficients.
    std::string str() const {
        if (terms_.empty())
            return "0";
        std::vector<std::pair<Monomial, Rational>> sorted(terms_.begin(), terms_.end());
        std::stable_sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) {
            return degree_of(x.first) < degree_of(y.first);
        });
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : sorted) {
            if (!first)
                os << " + ";
            first = false;
            if (m.empty()) {
                os << c.str();
                continue;
            }
            os << "(" << c.str() << ")";
            for (const auto& [sym, e] : m) {
                os << "*" << sym;
                if (e > 1)
                    os << "^" << e;
            }
        }
        return os.str();
    }

    static int degree_of(const Monomial& m) {
        int d = 0;
        for (const auto& [sym, e] : m)
            d += e;
        return d;
    }

private:
    int dim_;
    std::map<Monomial, Rational> terms_;
};

/// One boundary component of the Chern computation: a class symbol, the
/// multiplicity m ∈ {1, 2, …, ∞}, and optionally a caller-supplied class
/// of the structure sheaf.  The default is the Whitney-formula convention
/// c(O_D) = c(O(−D))⁻¹ = 1 + D + D² + … truncated.
struct ChernComponent {
    std::string symbol;
    ExtRational multiplicity;
    std::optional<GradedClass> structure_class;
};

inline GradedClass default_structure_class(int dim, const std::string& symbol) {
    GradedClass g = GradedClass::constant(dim, 1);
    for (int k = 1; k <= dim; ++k)
        g = g + GradedClass::symbol(dim, symbol, k);
    return g;
}

/// Total C-Chern class of the C-cotangent bundle:
///   c(Ω¹_X) · Π_i ((m_i−1)/m_i · c(O_{D_i}) + 1/m_i),
/// with (∞−1)/∞ = 1 and 1/∞ = 0.  The degree-one part is
/// c₁(Ω¹_X) + Σ (m_i−1)/m_i·[D_i] = c₁(K_X + D), independent of the
/// structure-class convention.
inline GradedClass total_c_chern(const GradedClass& c_omega,
                                 const std::vector<ChernComponent>& components) {
    int dim = c_omega.dim();
    GradedClass result = c_omega;
    for (const ChernComponent& comp : components) {
        if (comp.multiplicity.is_finite() &&
            (!comp.multiplicity.value().is_integer() || comp.multiplicity.value() < Rational(1)))
            throw NotStandardCoefficient("chern multiplicity " + comp.multiplicity.str());
        GradedClass c_od = comp.structure_class ? *comp.structure_class
                                                : default_structure_class(dim, comp.symbol);
        Rational weight, rest;
        if (comp.multiplicity.is_infinite()) {
            weight = 1;
            rest = 0;
        } else {
            const Rational& m = comp.multiplicity.value();
            weight = (m - Rational(1)) / m;
            rest = Rational(1) / m;
        }
        GradedClass factor = weight * c_od + GradedClass::constant(dim, rest);
        result = result * factor;
    }
    return result;
}

} // namespace cpair
