#pragma once

#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cpair/adapted.hpp"
#include "cpair/chern.hpp"
#include "cpair/covers.hpp"
#include "cpair/curves.hpp"
#include "cpair/morphisms.hpp"

namespace cpair::sweeps {

struct SweepResult {
    std::string name;
    long instances = 0;
    long failures = 0;
    std::string first_failure;

    bool ok() const { return failures == 0; }

    void record(bool pass, const std::function<std::string()>& describe) {
        ++instances;
        if (!pass) {
            ++failures;
            if (first_failure.empty())
                first_failure = describe();
        }
    }
};

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) {
    return (int)std::uniform_int_distribution<int>(lo, hi)(rng);
}

/// Random multiplicity from {2, 3, 4, ∞}.
inline ExtRational random_mult(Rng& rng) {
    int k = uniform(rng, 0, 3);
    if (k == 3)
        return ExtRational::infinity();
    return ExtRational(Rational(k + 2));
}

/// Random rational with small numerator/denominator.
inline Rational random_rational(Rng& rng) {
    return Rational(uniform(rng, -12, 12), uniform(rng, 1, 8));
}

inline QDivisor random_qdivisor(Rng& rng, int max_primes = 4) {
    QDivisor d;
    int k = uniform(rng, 0, max_primes);
    for (int i = 0; i < k; ++i)
        d.add(PrimeDivisor::abstract("P" + std::to_string(uniform(rng, 1, 6))),
              random_rational(rng));
    return d;
}

/// Random diagonal cover setup: d ≤ 3, c_i ≤ 6, m ∈ {2,3,4,∞} or no
/// boundary per axis.  When `adapted` is set, finite-multiplicity axes get
/// c = k·m, and roughly a third of the draws are uniformizations.
inline CoverSetup random_setup(Rng& rng, bool adapted) {
    int d = uniform(rng, 1, 3);
    Chart chart("X", d);
    CPairBoundary b;
    std::vector<Int> c(d, 1);
    bool uniformizing = adapted && uniform(rng, 0, 2) == 0;
    for (int i = 1; i <= d; ++i) {
        int has_boundary = uniform(rng, 0, 2);  // 2/3 of axes carry boundary
        if (has_boundary < 2) {
            ExtRational m = random_mult(rng);
            b.set(chart.hyperplane(i), m);
            if (m.is_infinite()) {
                c[i - 1] = uniform(rng, 1, 6);
            } else {
                int mv = (int)m.value().num();
                if (adapted) {
                    int k = uniformizing ? 1 : uniform(rng, 1, std::max(1, 6 / mv));
                    c[i - 1] = k * mv;
                } else {
                    c[i - 1] = uniform(rng, 1, 6);
                }
            }
        } else {
            c[i - 1] = (adapted && uniformizing) ? 1 : uniform(rng, 1, 3);
        }
    }
    return CoverSetup(chart, b, c);
}

inline std::string describe_setup(const CoverSetup& s) {
    std::ostringstream os;
    os << "setup dim=" << s.dim() << " B=" << s.boundary.str() << " c=(";
    for (int i = 1; i <= s.dim(); ++i)
        os << (i > 1 ? "," : "") << s.c(i);
    os << ")";
    return os.str();
}

// ------------------------------------------------------ divisor properties

/// Floor/fractional identities, ceil−floor ∈ {0,1}, floor superadditivity
/// ⌊n₁{D}⌋+⌊n₂{D}⌋ ≤ ⌊(n₁+n₂){D}⌋, and the as_cpair round-trip.
inline SweepResult sweep_floor_props(unsigned long seed, long count) {
    Rng rng(seed);
    SweepResult r;
    r.name = "floor-props";
    for (long it = 0; it < count; ++it) {
        QDivisor d = random_qdivisor(rng);
        bool ok = (floor_div(d) + frac_part(d)) == d;
        QDivisor diff = ceil_div(d) - floor_div(d);
        for (const auto& [p, c] : diff.terms()) {
            (void)p;
            ok = ok && (c == Rational(0) || c == Rational(1));
        }
        int n1 = uniform(rng, 0, 5), n2 = uniform(rng, 0, 5);
        QDivisor f = frac_part(d);
        ok = ok && (floor_div(Rational(n1) * f) + floor_div(Rational(n2) * f)) <=
                       floor_div(Rational(n1 + n2) * f);

        CPairBoundary b;
        int k = uniform(rng, 0, 3);
        for (int i = 0; i < k; ++i)
            b.set(PrimeDivisor::abstract("Q" + std::to_string(i)), random_mult(rng));
        ok = ok && as_cpair(b.induced_qdivisor()) == b;

        r.record(ok, [&] { return "D = " + d.str(); });
    }
    return r;
}

// ------------------------------------------------- pull-back functoriality

inline MonomialCover random_monomial(Rng& rng, const Chart& src, const Chart& tgt) {
    int d = src.dim;
    while (true) {
        std::vector<std::vector<Int>> m(d, std::vector<Int>(d));
        for (auto& row : m)
            for (auto& x : row)
                x = uniform(rng, 0, 3);
        try {
            return MonomialCover(src, tgt, std::move(m));
        } catch (const InvalidMorphism&) {
            // singular draw, retry
        }
    }
}

/// pullback ∘ compose = compose of pullbacks; additivity; scaling; support.
inline SweepResult sweep_pullback_functoriality(unsigned long seed, long count) {
    Rng rng(seed);
    SweepResult r;
    r.name = "pullback-functoriality";
    for (long it = 0; it < count; ++it) {
        int d = uniform(rng, 2, 3);
        Chart a("A", d), bch("B", d), cch("C", d);
        MonomialCover f = random_monomial(rng, a, bch);
        MonomialCover g = random_monomial(rng, bch, cch);
        QDivisor dv, dv2;
        for (int j = 1; j <= d; ++j) {
            dv.add(cch.hyperplane(j), random_rational(rng));
            dv2.add(cch.hyperplane(j), random_rational(rng));
        }
        bool ok = pullback_qdiv(compose(f, g), dv) == pullback_qdiv(f, pullback_qdiv(g, dv));
        ok = ok && pullback_qdiv(f, pullback_qdiv(g, dv + dv2)) ==
                       pullback_qdiv(f, pullback_qdiv(g, dv)) +
                           pullback_qdiv(f, pullback_qdiv(g, dv2));
        Rational s(uniform(rng, 1, 9), uniform(rng, 1, 4));
        ok = ok && pullback_qdiv(g, s * dv) == s * pullback_qdiv(g, dv);

        // support of the pull-back of a full reduced divisor
        QDivisor full;
        for (int j = 1; j <= d; ++j)
            full.add(cch.hyperplane(j), Rational(1));
        QDivisor pulled = pullback_qdiv(g, full);
        for (int i = 1; i <= d; ++i) {
            bool nonzero_row = false;
            for (int j = 1; j <= d; ++j)
                if (g.exponent(i, j) != 0)
                    nonzero_row = true;
            bool in_support = !pulled.coefficient(bch.hyperplane(i)).is_zero();
            ok = ok && (nonzero_row == in_support);
        }
        r.record(ok, [&] { return "matrices drawn at iteration " + std::to_string(it); });
    }
    return r;
}

/// Adaptedness is stable under precomposition: if γ₂ is adapted then
/// γ₂∘γ₁ is adapted.
inline SweepResult sweep_adapted_composition(unsigned long seed, long count) {
    Rng rng(seed);
    SweepResult r;
    r.name = "adapted-composition";
    for (long it = 0; it < count; ++it) {
        CoverSetup s = random_setup(rng, /*adapted=*/true);
        Chart up("Up", s.dim());
        MonomialCover gamma2 = s.cover();
        MonomialCover gamma1 = random_monomial(rng, up, gamma2.source());
        if (!classify_cover(gamma2, s.boundary).is_adapted) {
            r.record(false, [&] { return "generator produced a non-adapted cover"; });
            continue;
        }
        CoverClassification comp = classify_cover(compose(gamma1, gamma2), s.boundary);
        r.record(comp.is_adapted, [&] { return describe_setup(s); });
    }
    return r;
}

// ------------------------------------------------------- adapted sheaves

/// Oracle equivalence: membership thresholds from substitution bookkeeping
/// equal the closed-form allowances, per tensor and axis; exhaustive box
/// scan in low dimension.
inline SweepResult sweep_oracle(unsigned long seed, long count) {
    Rng rng(seed);
    SweepResult r;
    r.name = "oracle-equivalence";
    for (long it = 0; it < count; ++it) {
        CoverSetup s = random_setup(rng, false);
        int d = s.dim();
        int n = uniform(rng, 1, 3);
        int p = uniform(rng, 1, d);
        PoleAllowanceSheaf sheaf = compute_adapted(s, n, p);
        Int big = 0;
        for (int i = 1; i <= d; ++i)
            big = std::max(big, Int(n) * s.c(i));
        big += 2;
        bool ok = true;
        for (const auto& [t, allow] : sheaf.allowance) {
            // per-axis threshold scan with the other coordinates saturated
            for (int i = 0; i < d && ok; ++i) {
                std::vector<Int> e(d, big);
                for (Int v = -big; v <= big; ++v) {
                    e[i] = v;
                    bool member = membership_oracle(s, n, p, t, e);
                    if (member != (v >= -allow[i])) {
                        ok = false;
                        break;
                    }
                }
            }
            // joint sample points
            for (int probe = 0; probe < 20 && ok; ++probe) {
                std::vector<Int> e(d);
                for (int i = 0; i < d; ++i)
                    e[i] = uniform(rng, -(int)big, (int)big);
                bool member = membership_oracle(s, n, p, t, e);
                bool expect = true;
                for (int i = 0; i < d; ++i)
                    expect = expect && e[i] >= -allow[i];
                ok = member == expect;
            }
            if (!ok)
                break;
        }
        r.record(ok, [&] {
            return describe_setup(s) + " n=" + std::to_string(n) + " p=" + std::to_string(p);
        });
    }
    return r;
}

/// The residue-kernel computation of the C-cotangent sheaf equals
/// compute_adapted(·, 1, 1).
inline SweepResult sweep_residue(unsigned long seed, long count) {
    Rng rng(seed);
    SweepResult r;
    r.name = "residue-kernel";
    for (long it = 0; it < count; ++it) {
        CoverSetup s = random_setup(rng, false);
        PoleAllowanceSheaf lhs = residue_kernel_p1(s);
        PoleAllowanceSheaf rhs = compute_adapted(s, 1, 1);
        r.record(lhs == rhs, [&] { return describe_setup(s); });
    }
    return r;
}

/// Three-way equivalence on adapted covers:
/// (∃ (n,p): ι equality) ⇔ (∀ tested (n,p): equality) ⇔ uniformization.
inline SweepResult sweep_uniformization(unsigned long seed, long count) {
    Rng rng(seed);
    SweepResult r;
    r.name = "uniformization-equivalence";
    for (long it = 0; it < count; ++it) {
        CoverSetup s = random_setup(rng, /*adapted=*/true);
        bool any_eq = false, all_eq = true, chain_ok = true;
        for (int n = 1; n <= 3; ++n)
            for (int p = 1; p <= s.dim(); ++p) {
                InclusionReport rep = check_inclusions(s, n, p);
                chain_ok = chain_ok && rep.chain_ok;
                if (rep.iota_equality)
                    any_eq = true;
                else
                    all_eq = false;
            }
        bool flag = s.classification().is_uniformization;
        bool ok = chain_ok && (any_eq == all_eq) && (all_eq == flag);
        r.record(ok, [&] { return describe_setup(s); });
    }
    return r;
}

/// Superadditivity of allowances under symmetric products,
/// and equality with the plain symmetric power on adapted covers.
inline SweepResult sweep_sym_product(unsigned long seed, long count) {
    Rng rng(seed);
    SweepResult r;
    r.name = "sym-product";
    for (long it = 0; it < count; ++it) {
        bool adapted_draw = it % 2 == 0;
        CoverSetup s = random_setup(rng, adapted_draw);
        int p = uniform(rng, 1, s.dim());
        SymProductReport rep = sym_product_degree(s, uniform(rng, 1, 2), uniform(rng, 1, 2), p);
        bool ok = rep.superadditive_ok && (!rep.cover_adapted || rep.sym_equals_adapted);
        r.record(ok, [&] { return describe_setup(s); });
    }
    return r;
}

/// Monotonicity: enlarging one multiplicity weakly enlarges every pole
/// allowance.
inline SweepResult sweep_monotonicity(unsigned long seed, long count) {
    Rng rng(seed);
    SweepResult r;
    r.name = "allowance-monotonicity";
    for (long it = 0; it < count; ++it) {
        CoverSetup s = random_setup(rng, false);
        // pick a finite-multiplicity axis to enlarge, if any
        int axis = 0;
        for (int i = 1; i <= s.dim(); ++i)
            if (s.mult(i) && s.mult(i)->is_finite())
                axis = i;
        if (axis == 0) {
            r.record(true, [] { return std::string(); });
            continue;
        }
        CPairBoundary larger;
        for (const auto& [p, m] : s.boundary.terms())
            larger.set(p, p.axis == axis ? ExtRational(m.value() + 1) : m);
        CoverSetup s2(s.chart, larger, s.exponents);
        int n = uniform(rng, 1, 3), p = uniform(rng, 1, s.dim());
        bool ok = compute_adapted(s, n, p) <= compute_adapted(s2, n, p);
        r.record(ok, [&] { return describe_setup(s); });
    }
    return r;
}

/// Example 3.6: d(x^v) is adapted iff v clears the per-axis ramification
/// bound, tested in both directions over a scan box.
inline SweepResult sweep_differential_criterion(unsigned long seed, long count) {
    Rng rng(seed);
    SweepResult r;
    r.name = "differential-criterion";
    for (long it = 0; it < count; ++it) {
        CoverSetup s = random_setup(rng, false);
        int d = s.dim();
        bool ok = true;
        for (int probe = 0; probe < 40 && ok; ++probe) {
            std::vector<Int> v(d);
            for (int i = 0; i < d; ++i)
                v[i] = uniform(rng, 0, 8);
            bool adapted = differential_is_adapted(s, v);
            bool expected = true;
            for (int i = 1; i <= d; ++i)
                if (v[i - 1] != 0 && v[i - 1] < differential_bound(s, i))
                    expected = false;
            ok = adapted == expected;
        }
        r.record(ok, [&] { return describe_setup(s); });
    }
    return r;
}

/// Quotient invariance at divisor level: allowances agree when a pair is presented
/// upstairs or through a monomial quotient.
inline SweepResult sweep_quotient_presentation(unsigned long seed, long count) {
    Rng rng(seed);
    SweepResult r;
    r.name = "quotient-presentation";
    for (long it = 0; it < count; ++it) {
        CoverSetup s = random_setup(rng, /*adapted=*/true);
        int d = s.dim();
        Chart quot("Q", d);
        std::vector<Int> rexp(d), qc(d);
        CPairBoundary dq;
        for (int i = 1; i <= d; ++i) {
            rexp[i - 1] = uniform(rng, 1, 3);
            qc[i - 1] = rexp[i - 1] * s.c(i);
            auto m = s.mult(i);
            ExtRational ram{Rational(rexp[i - 1])};
            ExtRational m_h = m ? ram * *m : ram;
            if (!(m_h == ExtRational(1)))
                dq.set(quot.hyperplane(i), m_h);
        }
        CoverSetup s_q(quot, dq, qc);
        bool ok = true;
        for (int n = 1; n <= 3 && ok; ++n)
            for (int p = 1; p <= d && ok; ++p) {
                PoleAllowanceSheaf up = compute_adapted(s, n, p);
                PoleAllowanceSheaf down = compute_adapted(s_q, n, p);
                ok = up.allowance == down.allowance;
            }
        r.record(ok, [&] { return describe_setup(s); });
    }
    return r;
}

// ------------------------------------------------------- morphism checks

/// The nc normal-form criterion agrees with the orbifold
/// criterion evaluated on the same data presented as divisor tables.
inline SweepResult sweep_nc_chain(unsigned long seed, long count) {
    Rng rng(seed);
    SweepResult r;
    r.name = "nc-chain";
    for (long it = 0; it < count; ++it) {
        int k = uniform(rng, 1, 4);
        std::vector<Int> a;
        std::vector<ExtRational> targets;
        for (int i = 0; i < k; ++i) {
            a.push_back(uniform(rng, 1, 5));
            int m = uniform(rng, 1, 5);
            targets.push_back(m == 5 ? ExtRational::infinity() : ExtRational(Rational(m)));
        }
        int nm = uniform(rng, 1, 5);
        ExtRational n = nm == 5 ? ExtRational::infinity() : ExtRational(Rational(nm));

        MorphismVerdict direct = nc_cmorphism(a, n, targets);

        PrimeDivisor x1 = PrimeDivisor::abstract("x1");
        std::map<PrimeDivisor, QDivisor> table;
        CPairBoundary by;
        for (int i = 0; i < k; ++i) {
            PrimeDivisor yi = PrimeDivisor::abstract("y" + std::to_string(i + 1));
            table.emplace(yi, QDivisor::term(x1, Rational(a[i])));
            if (!(targets[i] == ExtRational(1)))
                by.set(yi, targets[i]);
        }
        DivisorialMorphism phi("phi", table, {});
        CPairBoundary bx;
        if (!(n == ExtRational(1)))
            bx.set(x1, n);
        MorphismVerdict tabled = orbifold_morphism(phi, bx, by);

        bool ok = direct.pass == tabled.pass &&
                  direct.witnesses.size() == tabled.witnesses.size();
        r.record(ok, [&] {
            std::ostringstream os;
            os << "n=" << n.str() << " k=" << k;
            return os.str();
        });
    }
    return r;
}

/// Monotonicity of the orbifold criterion in the source boundary.
inline SweepResult sweep_orbifold_monotone(unsigned long seed, long count) {
    Rng rng(seed);
    SweepResult r;
    r.name = "orbifold-monotone";
    for (long it = 0; it < count; ++it) {
        int k = uniform(rng, 1, 3);
        std::map<PrimeDivisor, QDivisor> table;
        CPairBoundary by, bx_small, bx_big;
        std::vector<PrimeDivisor> sources;
        for (int i = 0; i < 2; ++i)
            sources.push_back(PrimeDivisor::abstract("s" + std::to_string(i)));
        for (int i = 0; i < k; ++i) {
            PrimeDivisor yi = PrimeDivisor::abstract("t" + std::to_string(i));
            QDivisor pb;
            for (const auto& s : sources)
                pb.add(s, Rational(uniform(rng, 0, 3)));
            if (pb.is_zero())
                pb.add(sources[0], Rational(1));
            table.emplace(yi, pb);
            ExtRational m = random_mult(rng);
            if (uniform(rng, 0, 1))
                by.set(yi, m);
        }
        for (const auto& s : sources) {
            if (uniform(rng, 0, 1)) {
                Rational m(uniform(rng, 2, 4));
                bx_small.set(s, ExtRational(m));
                bx_big.set(s, uniform(rng, 0, 1) ? ExtRational(m + 2) : ExtRational::infinity());
            } else if (uniform(rng, 0, 2) == 0) {
                bx_big.set(s, ExtRational(Rational(2)));
            }
        }
        DivisorialMorphism phi("phi", table, {});
        bool small_pass = orbifold_morphism(phi, bx_small, by).pass;
        bool big_pass = orbifold_morphism(phi, bx_big, by).pass;
        r.record(!small_pass || big_pass, [&] { return "instance " + std::to_string(it); });
    }
    return r;
}

/// Linearity of the pluricanonical defect in the integral case.
inline SweepResult sweep_pluricanonical_linear(unsigned long seed, long count) {
    Rng rng(seed);
    SweepResult r;
    r.name = "pluricanonical-linearity";
    for (long it = 0; it < count; ++it) {
        PrimeDivisor strict = PrimeDivisor::abstract("S"), exc = PrimeDivisor::abstract("E"),
                     target = PrimeDivisor::abstract("T");
        QDivisor pb = QDivisor::term(strict, 1) + QDivisor::term(exc, Rational(uniform(rng, 1, 4)));
        DivisorialMorphism phi("phi", {{target, pb}}, {exc});
        QDivisor kx = QDivisor::term(exc, Rational(uniform(rng, -2, 2))) +
                      QDivisor::term(strict, Rational(uniform(rng, -2, 2)));
        QDivisor ky = QDivisor::term(target, Rational(uniform(rng, -2, 2)));
        // integral boundaries so that ⌊m·B⌋ = m·B exactly
        CPairBoundary bx, by;
        if (uniform(rng, 0, 1))
            bx.set(strict, ExtRational::infinity());
        if (uniform(rng, 0, 1))
            by.set(target, ExtRational::infinity());
        Int m(uniform(rng, 1, 4));
        Int kf(uniform(rng, 2, 3));
        auto base = pluricanonical_pullback(phi, kx, bx, ky, by, m);
        auto scaled = pluricanonical_pullback(phi, kx, bx, ky, by, kf * m);
        bool ok = scaled.defect == Rational(kf) * base.defect;
        r.record(ok, [&] { return "instance " + std::to_string(it); });
    }
    return r;
}

/// Symmetry of the B-birationality test in (α, B_X) ↔ (β, B_Y).
inline SweepResult sweep_bbirational_symmetry(unsigned long seed, long count) {
    Rng rng(seed);
    SweepResult r;
    r.name = "b-birational-symmetry";
    for (long it = 0; it < count; ++it) {
        PrimeDivisor h = PrimeDivisor::abstract("H"), e = PrimeDivisor::abstract("E"),
                     hx = PrimeDivisor::abstract("HX"), hy = PrimeDivisor::abstract("HY");
        DivisorialMorphism alpha("alpha",
                                 {{hx, QDivisor::term(h, 1) +
                                           QDivisor::term(e, Rational(uniform(rng, 0, 2)))}},
                                 {e});
        DivisorialMorphism beta("beta",
                                {{hy, QDivisor::term(h, 1) +
                                          QDivisor::term(e, Rational(uniform(rng, 0, 2)))}},
                                {e});
        QDivisor kz = QDivisor::term(h, Rational(uniform(rng, -3, 3))) +
                      QDivisor::term(e, Rational(uniform(rng, -2, 2)));
        CPairBoundary bx, by;
        if (uniform(rng, 0, 1))
            bx.set(hx, random_mult(rng));
        if (uniform(rng, 0, 1))
            by.set(hy, random_mult(rng));
        bool fwd = b_birational(alpha, beta, kz, bx, by).pass;
        bool bwd = b_birational(beta, alpha, kz, by, bx).pass;
        r.record(fwd == bwd, [&] { return "instance " + std::to_string(it); });
    }
    return r;
}

// ----------------------------------------------------- invariants, chern

/// Degree-one part of the total C-Chern class equals c₁(Ω¹) + Σ(m−1)/m·D_i.
inline SweepResult sweep_chern_c1(unsigned long seed, long count) {
    Rng rng(seed);
    SweepResult r;
    r.name = "chern-c1";
    for (long it = 0; it < count; ++it) {
        int dim = uniform(rng, 1, 4);
        GradedClass c_omega = GradedClass::constant(dim, 1);
        int nsym = uniform(rng, 1, 3);
        for (int k = 1; k <= nsym && k <= dim; ++k)
            c_omega = c_omega +
                      random_rational(rng) * GradedClass::symbol(dim, "h", k);  // h^k slot
        std::vector<ChernComponent> comps;
        int nb = uniform(rng, 0, 3);
        for (int i = 0; i < nb; ++i) {
            int mm = uniform(rng, 1, 4);
            comps.push_back({"D" + std::to_string(i),
                             mm == 4 ? ExtRational::infinity() : ExtRational(Rational(mm)),
                             std::nullopt});
        }
        GradedClass total = total_c_chern(c_omega, comps);
        GradedClass expected = c_omega.degree_part(1);
        for (const auto& comp : comps) {
            Rational w = comp.multiplicity.is_infinite()
                             ? Rational(1)
                             : (comp.multiplicity.value() - 1) / comp.multiplicity.value();
            expected = expected + w * GradedClass::symbol(dim, comp.symbol);
        }
        r.record(total.degree_part(1) == expected, [&] { return "dim=" + std::to_string(dim); });
    }
    return r;
}

/// Étale Riemann–Hurwitz: ĝ = d(g−1)+1 for d ≤ 20, g ≤ 5.
inline SweepResult sweep_rh_etale(unsigned long seed, long count) {
    (void)seed;
    (void)count;
    SweepResult r;
    r.name = "rh-etale";
    for (int d = 1; d <= 20; ++d)
        for (int g = 0; g <= 5; ++g) {
            if (g == 0 && d > 1)
                continue;  // P¹ has no nontrivial étale covers; RH would give ĝ < 0
            Int gh = riemann_hurwitz_genus(g, CurveCover::etale(d, 0));
            r.record(gh == Int(d) * (g - 1) + 1, [&] {
                return "d=" + std::to_string(d) + " g=" + std::to_string(g);
            });
        }
    return r;
}

/// Curve-degree bookkeeping: adding an ∞-point raises the degree by one;
/// κ is monotone in the multiplicities.
inline SweepResult sweep_curve_props(unsigned long seed, long count) {
    Rng rng(seed);
    SweepResult r;
    r.name = "curve-props";
    for (long it = 0; it < count; ++it) {
        int g = uniform(rng, 0, 3);
        std::vector<ExtRational> mults;
        int k = uniform(rng, 0, 4);
        for (int i = 0; i < k; ++i)
            mults.push_back(random_mult(rng));
        OrbifoldCurve c(g, mults);
        auto with_inf = mults;
        with_inf.push_back(ExtRational::infinity());
        OrbifoldCurve c2(g, with_inf);
        bool ok = curve_degree(c2) == curve_degree(c) + 1;

        if (!mults.empty()) {
            size_t j = (size_t)uniform(rng, 0, (int)mults.size() - 1);
            auto raised = mults;
            raised[j] = raised[j].is_infinite()
                            ? raised[j]
                            : (uniform(rng, 0, 1) ? ExtRational(raised[j].value() + 1)
                                                  : ExtRational::infinity());
            ok = ok && (int)curve_kappa(OrbifoldCurve(g, raised)) >= (int)curve_kappa(c);
        }
        r.record(ok, [&] { return "g=" + std::to_string(g); });
    }
    return r;
}

/// Cyclic quotient models z ↦ z^k plus the boundary comparison of the
/// induced quotient pair.
inline SweepResult sweep_quotient_cyclic(unsigned long seed, long count) {
    (void)seed;
    (void)count;
    SweepResult r;
    r.name = "quotient-cyclic";
    PrimeDivisor zero_up = PrimeDivisor::abstract("o_up");
    PrimeDivisor zero_dn = PrimeDivisor::abstract("o");
    for (int k = 2; k <= 12; ++k) {
        DivisorialMorphism q("q", {{zero_dn, QDivisor::term(zero_up, Rational(k))}}, {});
        auto [dq, data] = quotient_pair(CPairBoundary{}, q);
        QDivisor expect = QDivisor::term(zero_dn, Rational(k - 1, k));
        bool ok = dq.induced_qdivisor() == expect && data.quotient_map_strongly_adapted;

        // on the same models: for every divisor m | k of the
        // downstairs multiplicity, D'_X = (k−1)/k ≥ (m−1)/m = D_X.
        for (int m = 2; m <= k; ++m) {
            if (k % m != 0)
                continue;
            CPairBoundary bx;
            bx.set(zero_dn, ExtRational(Rational(m)));
            ok = ok && compare_boundaries(dq, bx).pass;
        }
        r.record(ok, [&] { return "k=" + std::to_string(k); });
    }
    return r;
}

// ---------------------------------------------------------------- lookup

inline SweepResult run_sweep(const std::string& name, unsigned long seed, long count) {
    if (name == "floor-props")
        return sweep_floor_props(seed, count);
    if (name == "pullback-functoriality")
        return sweep_pullback_functoriality(seed, count);
    if (name == "adapted-composition")
        return sweep_adapted_composition(seed, count);
    if (name == "oracle")
        return sweep_oracle(seed, count);
    if (name == "residue")
        return sweep_residue(seed, count);
    if (name == "uniformization")
        return sweep_uniformization(seed, count);
    if (name == "sym-product")
        return sweep_sym_product(seed, count);
    if (name == "monotonicity")
        return sweep_monotonicity(seed, count);
    if (name == "differential")
        return sweep_differential_criterion(seed, count);
    if (name == "quotient-presentation")
        return sweep_quotient_presentation(seed, count);
    if (name == "nc-chain")
        return sweep_nc_chain(seed, count);
    if (name == "orbifold-monotone")
        return sweep_orbifold_monotone(seed, count);
    if (name == "pluricanonical-linearity")
        return sweep_pluricanonical_linear(seed, count);
    if (name == "b-birational-symmetry")
        return sweep_bbirational_symmetry(seed, count);
    if (name == "chern-c1")
        return sweep_chern_c1(seed, count);
    if (name == "rh-etale")
        return sweep_rh_etale(seed, count);
    if (name == "curve-props")
        return sweep_curve_props(seed, count);
    if (name == "quotient-cyclic")
        return sweep_quotient_cyclic(seed, count);
    throw DegreeOutOfRange("unknown sweep '" + name + "'");
}

} // namespace cpair::sweeps
