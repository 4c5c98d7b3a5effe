#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "cpair/geometry.hpp"

namespace cpair {

struct CoverClassification {
    bool is_adapted = false;
    bool is_strongly_adapted = false;
    bool is_uniformization = false;
    bool branch_in_support = false;
};

/// Classifies a monomial cover relative to a boundary on its target chart:
/// adapted ⇔ γ*D_orb integral, strongly adapted ⇔ γ*D_orb reduced,
/// uniformization ⇔ strongly adapted and the branch divisor lies in supp D.
/// The nc hypothesis holds automatically for coordinate-hyperplane data.
inline CoverClassification classify_cover(const MonomialCover& gamma, const CPairBoundary& b) {
    for (const auto& [p, m] : b.terms()) {
        (void)m;
        if (!p.is_coordinate() || p.chart != gamma.target().name)
            throw UnknownPrime("classify_cover: boundary component " + p.id +
                               " is not a hyperplane of chart " + gamma.target().name);
    }
    CoverClassification c;
    QDivisor pulled_orb = pullback_qdiv(gamma, b.d_orb());
    c.is_adapted = pulled_orb.is_integral();
    c.is_strongly_adapted = c.is_adapted && pulled_orb.is_reduced();

    c.branch_in_support = true;
    for (const PrimeDivisor& br : gamma.branch_support())
        if (!b.contains(br))
            c.branch_in_support = false;

    c.is_uniformization = c.is_strongly_adapted && c.branch_in_support;
    return c;
}

/// The cyclic strongly adapted cover of a boundary: degree n = lcm of the
/// finite multiplicities, raising a local equation of D_i to the exponent
/// n/m_i.  Its local model is the diagonal cover with exponent m_i on each
/// finite boundary axis.
struct CyclicCoverSpec {
    Int degree = 1;
    std::map<PrimeDivisor, Int> exponents;  // n/m_i per finite component
};

inline CyclicCoverSpec cyclic_adapted_cover(const CPairBoundary& b) {
    CyclicCoverSpec spec;
    for (const auto& [p, m] : b.terms()) {
        (void)p;
        if (m.is_finite())
            spec.degree = lcm_int(spec.degree, m.value().num());
    }
    for (const auto& [p, m] : b.terms())
        if (m.is_finite())
            spec.exponents[p] = spec.degree / m.value().num();
    return spec;
}

/// Diagonal monomial model of the cyclic cover on a chart whose boundary
/// components are coordinate hyperplanes: exponent m_i on each finite
/// boundary axis, 1 elsewhere.
inline MonomialCover cyclic_cover_model(const Chart& chart, const CPairBoundary& b) {
    std::vector<Int> c(chart.dim, 1);
    for (const auto& [p, m] : b.terms()) {
        if (!p.is_coordinate() || p.chart != chart.name)
            throw UnknownPrime("cyclic_cover_model: component " + p.id);
        if (m.is_finite())
            c[p.axis - 1] = m.value().num();
    }
    return MonomialCover::diagonal(chart, c);
}

struct QuotientData {
    struct Row {
        PrimeDivisor quotient_prime;
        PrimeDivisor upstairs_prime;
        Int ramification;           // mult_{H'} q*H
        ExtRational upstairs_mult;  // mult_{C,H'} D_X
        ExtRational m_H;            // their product, ∞-conventions applied
    };
    std::vector<Row> rows;
    bool quotient_map_strongly_adapted = false;
};

/// Builds the quotient boundary of a finite group action presented by its
/// ramification table: for every quotient prime H and preimage component
/// H', m_H := (mult_{H'} q*H)·(mult_{C,H'} D_X).  All components of one
/// orbit must yield the same m_H; multiplicity 1 means H is not a boundary
/// component.  Also certifies that q is strongly adapted for the quotient
/// pair, which holds whenever the upstairs boundary is a log pair.
inline std::pair<CPairBoundary, QuotientData> quotient_pair(const CPairBoundary& b_upstairs,
                                                            const DivisorialMorphism& q) {
    CPairBoundary b_quot;
    QuotientData data;
    bool strongly = true;
    for (const auto& [h, pb] : q.pullback_table()) {
        ExtRational m_h(0);
        bool first = true;
        for (const auto& [hp, mult] : pb.terms()) {
            ExtRational up = b_upstairs.c_multiplicity(hp);
            ExtRational m = ExtRational(mult) * up;
            data.rows.push_back({h, hp, mult.num(), up, m});
            if (first) {
                m_h = m;
                first = false;
            } else if (!(m == m_h)) {
                throw InconsistentOrbit("quotient_pair: preimage components of " + h.id +
                                        " yield multiplicities " + m_h.str() + " and " + m.str());
            }
            // q*D_orb(D_Q) has coefficient mult/m_H = 1/mult_C at H'; it is
            // reduced exactly when every upstairs multiplicity is 1 or ∞.
            if (up.is_finite() && up.value() != Rational(1))
                strongly = false;
        }
        if (m_h == ExtRational(1))
            continue;  // unramified, boundary-free orbit
        b_quot.set(h, m_h);
    }
    data.quotient_map_strongly_adapted = strongly;
    return {b_quot, data};
}

} // namespace cpair
