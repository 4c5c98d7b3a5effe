#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cpair/rational.hpp"

namespace cpair {

/// An orbifold curve: genus plus the multiplicities at the marked points.
struct OrbifoldCurve {
    Int genus = 0;
    std::vector<ExtRational> multiplicities;  // each in {2,3,…} ∪ {∞}

    OrbifoldCurve(Int g, std::vector<ExtRational> mults)
        : genus(std::move(g)), multiplicities(std::move(mults)) {
        if (genus < 0)
            throw InvalidDivisor("negative genus");
        for (const auto& m : multiplicities)
            if (m.is_finite() && (!m.value().is_integer() || m.value() < Rational(2)))
                throw NotStandardCoefficient("curve multiplicity " + m.str());
    }
};

/// deg(K + D) = 2g − 2 + Σ (m_j−1)/m_j, exactly; ∞-points contribute 1.
inline Rational curve_degree(const OrbifoldCurve& c) {
    Rational deg = Rational(2) * Rational(c.genus) - 2;
    for (const auto& m : c.multiplicities) {
        if (m.is_infinite())
            deg += 1;
        else
            deg += (m.value() - 1) / m.value();
    }
    return deg;
}

/// A cover of curves: degree, ramification profiles over the marked points
/// (one partition of d per marked point, aligned with the curve's
/// multiplicity list), extra profiles over unmarked points, and no
/// ramification elsewhere.
struct CurveCover {
    Int degree = 1;
    std::vector<std::vector<Int>> profiles_at_marked;
    std::vector<std::vector<Int>> profiles_elsewhere;

    static CurveCover etale(Int d, size_t marked_points) {
        CurveCover c;
        c.degree = d;
        c.profiles_at_marked.assign(marked_points, trivial(d));
        return c;
    }

    static std::vector<Int> trivial(const Int& d) {
        std::vector<Int> p;
        for (Int i = 0; i < d; ++i)
            p.push_back(1);
        return p;
    }

    void validate() const {
        auto check = [&](const std::vector<Int>& prof) {
            Int s = 0;
            for (const Int& e : prof) {
                if (e < 1)
                    throw NonIntegralGenus("ramification index must be ≥ 1");
                s += e;
            }
            if (s != degree)
                throw NonIntegralGenus("profile does not sum to the degree");
        };
        for (const auto& p : profiles_at_marked)
            check(p);
        for (const auto& p : profiles_elsewhere)
            check(p);
    }
};

/// Genus of the total space by Riemann–Hurwitz:
///   2ĝ − 2 = d(2g − 2) + Σ_points Σ_parts (e − 1).
inline Int riemann_hurwitz_genus(const Int& base_genus, const CurveCover& cover) {
    cover.validate();
    Int ram = 0;
    for (const auto& prof : cover.profiles_at_marked)
        for (const Int& e : prof)
            ram += e - 1;
    for (const auto& prof : cover.profiles_elsewhere)
        for (const Int& e : prof)
            ram += e - 1;
    Int twice = cover.degree * (Int(2) * base_genus - 2) + ram;
    if ((twice % 2) != 0)
        throw NonIntegralGenus("2ĝ−2 = " + twice.str() + " is odd");
    Int g = (twice + 2) / 2;
    if (g < 0)
        throw NonIntegralGenus("negative genus from inconsistent profile data");
    return g;
}

struct IrregularityResult {
    Int value = 0;
    bool exact = true;  // false when only the Riemann–Roch lower bound is known
};

/// Irregularity q(X, D, γ) = h⁰ of the adapted cotangent sheaf on the
/// cover.  The sheaf is Ω¹ of the cover twisted by the per-point
/// allowances: 1 − e/m over finite marked points (requires m | e), +1 over
/// ∞-points, −(e−1) over unmarked ramification.  Exact degree bookkeeping
/// covers the untwisted case, genus zero, and reduced effective twists;
/// otherwise the Riemann–Roch lower bound is reported.
inline IrregularityResult curve_irregularity(const OrbifoldCurve& c, const CurveCover& cover) {
    cover.validate();
    if (cover.profiles_at_marked.size() != c.multiplicities.size())
        throw NotAdapted("cover does not assign a profile to every marked point");

    std::vector<Int> allowances;
    for (size_t j = 0; j < c.multiplicities.size(); ++j) {
        const ExtRational& m = c.multiplicities[j];
        for (const Int& e : cover.profiles_at_marked[j]) {
            if (m.is_infinite()) {
                allowances.push_back(1);
            } else {
                const Int& mv = m.value().num();
                if (e % mv != 0)
                    throw NotAdapted("ramification index " + e.str() +
                                     " is not a multiple of the multiplicity " + mv.str());
                allowances.push_back(Int(1) - e / mv);
            }
        }
    }
    for (const auto& prof : cover.profiles_elsewhere)
        for (const Int& e : prof)
            allowances.push_back(Int(1) - e);

    Int cover_genus = riemann_hurwitz_genus(c.genus, cover);

    Int twist = 0;
    bool all_zero = true, reduced_effective = true;
    Int positive_points = 0;
    for (const Int& a : allowances) {
        twist += a;
        if (a != 0)
            all_zero = false;
        if (a < 0 || a > 1)
            reduced_effective = false;
        if (a == 1)
            ++positive_points;
    }

    IrregularityResult r;
    if (all_zero) {
        r.value = cover_genus;  // plain Ω¹ on the cover
        return r;
    }
    if (cover_genus == 0) {
        Int deg = Int(-2) + twist;
        r.value = deg >= 0 ? deg + 1 : Int(0);
        return r;
    }
    if (reduced_effective && positive_points >= 1) {
        // log forms with poles at k distinct points: h⁰ = ĝ + k − 1
        r.value = cover_genus + positive_points - 1;
        return r;
    }
    Int lower = cover_genus - 1 + twist;  // deg − ĝ + 1
    r.value = lower > 0 ? lower : Int(0);
    r.exact = false;
    return r;
}

enum class CurveKappa { MinusInfinity = -1, Zero = 0, One = 1 };

inline std::string kappa_str(CurveKappa k) {
    switch (k) {
    case CurveKappa::MinusInfinity:
        return "-inf";
    case CurveKappa::Zero:
        return "0";
    case CurveKappa::One:
        return "1";
    }
    return "?";
}

/// deg ⌊m(K + D)⌋ = m(2g−2) + Σ_j ⌊m·(m_j−1)/m_j⌋.
inline Int kappa_floor_degree(const OrbifoldCurve& c, const Int& m) {
    Int deg = m * (Int(2) * c.genus - 2);
    for (const auto& mult : c.multiplicities) {
        Rational coeff = mult.is_infinite() ? Rational(1)
                                            : (mult.value() - 1) / mult.value();
        deg += (Rational(m) * coeff).floor();
    }
    return deg;
}

/// Scan bound for the section-count oracle: floor degrees are periodic in
/// m with period lcm of the finite multiplicities.
inline Int kappa_scan_bound(const OrbifoldCurve& c) {
    Int l = 1;
    for (const auto& m : c.multiplicities)
        if (m.is_finite())
            l = lcm_int(l, m.value().num());
    return 2 * l;
}

/// Section count h⁰(⌊m(K+D)⌋) where exact degree bookkeeping decides it:
/// genus 0 (rational curve), or genus ≥ 1 with trivial floor divisor.
inline std::optional<Int> kappa_section_count(const OrbifoldCurve& c, const Int& m) {
    Int deg = kappa_floor_degree(c, m);
    if (c.genus == 0)
        return deg >= 0 ? deg + 1 : Int(0);
    bool floor_trivial = true;
    for (const auto& mult : c.multiplicities) {
        Rational coeff = mult.is_infinite() ? Rational(1) : (mult.value() - 1) / mult.value();
        if ((Rational(m) * coeff).floor() != 0)
            floor_trivial = false;
    }
    if (c.genus == 1 && floor_trivial)
        return 1;  // trivial bundle
    if (deg < 0)
        return 0;
    return std::nullopt;
}

/// C-Kodaira dimension of the full adapted cotangent sheaf of the curve:
/// the sign trichotomy of deg(K + D), confirmed by the m-scan of floor
/// degrees (κ = 1 growth, κ = 0 bounded sections, κ = −∞ no sections).
inline CurveKappa curve_kappa(const OrbifoldCurve& c) {
    Rational deg = curve_degree(c);
    if (deg > Rational(0))
        return CurveKappa::One;
    if (deg == Rational(0))
        return CurveKappa::Zero;
    return CurveKappa::MinusInfinity;
}

/// A curve pair is special iff it carries no Bogomolov sheaf; on a curve
/// the only saturated rank-one subsheaf of the adapted cotangent sheaf is
/// the sheaf itself, so special ⇔ κ_C < 1.
inline bool curve_is_special(const OrbifoldCurve& c) {
    return curve_kappa(c) != CurveKappa::One;
}

} // namespace cpair
