#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cpair/geometry.hpp"

namespace cpair {

/// Result of a multiplicity-inequality check.  Every failure carries the
/// witnessing prime pair with both sides of the inequality, lhs < rhs in
/// the extended order (finite < ∞).
struct MorphismVerdict {
    struct Witness {
        std::string source_prime;
        std::string target_prime;
        ExtRational lhs;
        ExtRational rhs;

        std::string str() const {
            return "(" + source_prime + ", " + target_prime + "): " + lhs.str() + " < " +
                   rhs.str();
        }
    };

    bool pass = true;
    std::vector<Witness> witnesses;

    void fail(std::string src, std::string tgt, ExtRational lhs, ExtRational rhs) {
        pass = false;
        witnesses.push_back({std::move(src), std::move(tgt), std::move(lhs), std::move(rhs)});
    }
};

/// Campana's orbifold-morphism criterion: for every pair of primes
/// (Δ_X, Δ_Y) with Δ_X carrying positive multiplicity in φ*Δ_Y,
///   (mult_{Δ_X} φ*Δ_Y) · (mult_{C,Δ_X} D_X) ≥ mult_{C,Δ_Y} D_Y,
/// with ∞-arithmetic: an ∞ right-hand side passes only against an ∞
/// left-hand side.  The hypothesis that the image is not contained in
/// supp D_Y is the caller's assertion.
inline MorphismVerdict orbifold_morphism(const DivisorialMorphism& phi, const CPairBoundary& b_x,
                                         const CPairBoundary& b_y) {
    MorphismVerdict v;
    for (const auto& [delta_y, pb] : phi.pullback_table()) {
        ExtRational rhs = b_y.c_multiplicity(delta_y);
        for (const auto& [delta_x, mult] : pb.terms()) {
            if (!(mult > Rational(0)))
                continue;
            ExtRational lhs = ExtRational(mult) * b_x.c_multiplicity(delta_x);
            if (!(lhs >= rhs))
                v.fail(delta_x.id, delta_y.id, lhs, rhs);
        }
    }
    return v;
}

/// The nc normal form of the C-morphism criterion: a single source
/// boundary component of multiplicity n, coordinate target boundaries of
/// multiplicities n_i, pull-back exponents a_i.  Pass iff a_i·n ≥ n_i for
/// every i; indices with a_i = 0 impose nothing (the morphism misses that
/// component divisorially).
inline MorphismVerdict nc_cmorphism(const std::vector<Int>& a, const ExtRational& n,
                                    const std::vector<ExtRational>& targets) {
    if (a.size() != targets.size())
        throw InvalidMorphism("nc_cmorphism: exponent and multiplicity lists differ in length");
    MorphismVerdict v;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] < 0)
            throw InvalidMorphism("nc_cmorphism: negative exponent");
        if (a[i] == 0)
            continue;
        ExtRational lhs = ExtRational(Rational(a[i])) * n;
        if (!(lhs >= targets[i]))
            v.fail("x1", "y" + std::to_string(i + 1), lhs, targets[i]);
    }
    return v;
}

/// Identity-morphism criterion of divisor comparison: pass iff the induced
/// Q-divisor of B₁ dominates that of B₂ termwise.
inline MorphismVerdict compare_boundaries(const CPairBoundary& b1, const CPairBoundary& b2) {
    MorphismVerdict v;
    QDivisor d1 = b1.induced_qdivisor();
    QDivisor d2 = b2.induced_qdivisor();
    if (d1 >= d2)
        return v;
    for (const auto& [p, c] : d2.terms()) {
        if (d1.coefficient(p) < c)
            v.fail(p.id, p.id, ExtRational(d1.coefficient(p)), ExtRational(c));
    }
    return v;
}

/// Existence test for the pluricanonical pull-back map
///   φ* O(m·K_Y + ⌊m·B_Y⌋) → O(m·K_X + ⌊m·B_X⌋):
/// the defect Δ := (m·K_X + ⌊m·B_X⌋) − φ*(m·K_Y + ⌊m·B_Y⌋) must be
/// effective.  Returns the verdict together with the defect divisor.
struct PluricanonicalResult {
    bool pass = false;
    QDivisor defect;
};

inline PluricanonicalResult pluricanonical_pullback(const DivisorialMorphism& phi,
                                                    const QDivisor& k_x, const CPairBoundary& b_x,
                                                    const QDivisor& k_y, const CPairBoundary& b_y,
                                                    const Int& m) {
    if (m < 1)
        throw DegreeOutOfRange("pluricanonical_pullback: m must be ≥ 1");
    QDivisor up = Rational(m) * k_x + floor_div(Rational(m) * b_x.induced_qdivisor());
    QDivisor down = Rational(m) * k_y + floor_div(Rational(m) * b_y.induced_qdivisor());
    PluricanonicalResult r;
    r.defect = up - pullback_qdiv(phi, down);
    r.pass = r.defect.is_effective();
    return r;
}

/// Discrepancy data of a resolution-style presentation: per exceptional
/// prime E the coefficient a(E) of K_X̃ + strict transform of B against the
/// pull-back of K_X + B.
struct LogCanonicalResult {
    bool pass = false;
    std::vector<std::pair<PrimeDivisor, Rational>> discrepancies;
};

/// Log-canonicity via a resolution: a(E) := mult_E[(K_X̃ + π^{-1}_*B) −
/// π*(K_X + B)]; pass iff every a(E) ≥ −1 (ties at −1 pass).
inline LogCanonicalResult log_canonical_check(const DivisorialMorphism& pi,
                                              const QDivisor& k_up, const QDivisor& k_down,
                                              const CPairBoundary& b_down) {
    QDivisor b = b_down.induced_qdivisor();
    QDivisor strict;
    for (const auto& [p, c] : b.terms())
        strict.add(pi.strict_transform(p), c);
    QDivisor diff = (k_up + strict) - pullback_qdiv(pi, k_down + b);
    LogCanonicalResult r;
    r.pass = true;
    for (const PrimeDivisor& e : pi.exceptional()) {
        Rational a = diff.coefficient(e);
        r.discrepancies.emplace_back(e, a);
        if (a < Rational(-1))
            r.pass = false;
    }
    // the comparison must be supported on exceptional primes only
    for (const auto& [p, c] : diff.terms())
        if (!pi.is_exceptional(p) && !c.is_zero())
            throw InvalidMorphism("log_canonical_check: non-exceptional defect at " + p.id +
                                  " (inconsistent K-data)");
    return r;
}

/// Fujino's B-birationality: for two resolutions α, β of a common model Z,
///   α*(α_*K_Z + D_X) = β*(β_*K_Z + D_Y).
/// Push-forwards drop exceptional terms.  Returns the two pull-backs for
/// reporting.
struct BBirationalResult {
    bool pass = false;
    QDivisor lhs;
    QDivisor rhs;
};

inline BBirationalResult b_birational(const DivisorialMorphism& alpha,
                                      const DivisorialMorphism& beta, const QDivisor& k_z,
                                      const CPairBoundary& b_x, const CPairBoundary& b_y) {
    BBirationalResult r;
    r.lhs = pullback_qdiv(alpha, alpha.pushforward(k_z) + b_x.induced_qdivisor());
    r.rhs = pullback_qdiv(beta, beta.pushforward(k_z) + b_y.induced_qdivisor());
    r.pass = r.lhs == r.rhs;
    return r;
}

} // namespace cpair
