#include <catch2/catch_amalgamated.hpp>

#include "cpair/covers.hpp"
#include "cpair/sweeps.hpp"

using namespace cpair;

TEST_CASE("classification of cyclic covers of the line") {
    Chart line("A1", 1);
    CPairBoundary b;
    b.set(line.hyperplane(1), ExtRational(3));  // m = 3

    SECTION("z to z^3 uniformizes") {
        CoverClassification c = classify_cover(MonomialCover::diagonal(line, {3}), b);
        CHECK(c.is_adapted);
        CHECK(c.is_strongly_adapted);
        CHECK(c.branch_in_support);
        CHECK(c.is_uniformization);
    }

    SECTION("z to z^6 is adapted but not strongly adapted") {
        CoverClassification c = classify_cover(MonomialCover::diagonal(line, {6}), b);
        CHECK(c.is_adapted);
        CHECK(!c.is_strongly_adapted);
        CHECK(!c.is_uniformization);
    }

    SECTION("the identity is not adapted for a finite multiplicity") {
        CoverClassification c = classify_cover(MonomialCover::identity(line), b);
        CHECK(!c.is_adapted);
    }

    SECTION("branching off the boundary spoils uniformization") {
        CPairBoundary empty;
        CoverClassification c = classify_cover(MonomialCover::diagonal(line, {2}), empty);
        CHECK(c.is_adapted);  // D_orb = 0 pulls back integrally
        CHECK(c.is_strongly_adapted);
        CHECK(!c.branch_in_support);
        CHECK(!c.is_uniformization);
    }
}

TEST_CASE("classification in the surface sample computation") {
    Chart plane("A2", 2);
    CPairBoundary b;
    b.set(plane.hyperplane(2), ExtRational(3));  // (m−1)/m at {y = 0}

    for (int alpha = 1; alpha <= 3; ++alpha) {
        MonomialCover g = MonomialCover::diagonal(plane, {1, 3 * alpha});
        CoverClassification c = classify_cover(g, b);
        CHECK(c.is_adapted);
        CHECK(c.is_uniformization == (alpha == 1));
    }
}

TEST_CASE("cyclic adapted covers take the lcm of the finite multiplicities") {
    PrimeDivisor d1 = PrimeDivisor::abstract("D1");
    PrimeDivisor d2 = PrimeDivisor::abstract("D2");

    SECTION("multiplicities 2 and 3 need degree 6") {
        CPairBoundary b;
        b.set(d1, ExtRational(2));
        b.set(d2, ExtRational(3));
        CyclicCoverSpec s = cyclic_adapted_cover(b);
        CHECK(s.degree == 6);
        CHECK(s.exponents.at(d1) == 3);
        CHECK(s.exponents.at(d2) == 2);
    }

    SECTION("a log component needs no cover") {
        CPairBoundary b;
        b.set(d1, ExtRational::infinity());
        CHECK(cyclic_adapted_cover(b).degree == 1);
    }

    SECTION("a single multiplicity gives exponent one") {
        CPairBoundary b;
        b.set(d1, ExtRational(4));
        CyclicCoverSpec s = cyclic_adapted_cover(b);
        CHECK(s.degree == 4);
        CHECK(s.exponents.at(d1) == 1);
    }

    SECTION("the diagonal model is strongly adapted") {
        Chart plane("X", 2);
        CPairBoundary b;
        b.set(plane.hyperplane(1), ExtRational(2));
        b.set(plane.hyperplane(2), ExtRational(3));
        MonomialCover model = cyclic_cover_model(plane, b);
        CHECK(classify_cover(model, b).is_strongly_adapted);
    }
}

TEST_CASE("quotient boundaries from ramification tables") {
    PrimeDivisor o_up = PrimeDivisor::abstract("o_up");
    PrimeDivisor o = PrimeDivisor::abstract("o");

    SECTION("cyclic action z to z^k on the line") {
        for (int k = 2; k <= 5; ++k) {
            DivisorialMorphism q("q", {{o, QDivisor::term(o_up, k)}}, {});
            auto [dq, data] = quotient_pair(CPairBoundary{}, q);
            CHECK(dq.induced_qdivisor() == QDivisor::term(o, Rational(k - 1, k)));
            CHECK(data.quotient_map_strongly_adapted);
        }
    }

    SECTION("quotient with no divisorial ramification keeps an empty boundary") {
        // A² / ±1: the fixed point is isolated, generic primes are unramified
        PrimeDivisor h_up = PrimeDivisor::abstract("H_up");
        PrimeDivisor h = PrimeDivisor::abstract("H");
        DivisorialMorphism q("b", {{h, QDivisor::term(h_up, 1)}}, {});
        auto [dq, data] = quotient_pair(CPairBoundary{}, q);
        CHECK(dq.empty());
        CHECK(data.quotient_map_strongly_adapted);
    }

    SECTION("infinity conventions: a log component stays log downstairs") {
        DivisorialMorphism q("q", {{o, QDivisor::term(o_up, 2)}}, {});
        CPairBoundary upstairs;
        upstairs.set(o_up, ExtRational::infinity());
        auto [dq, data] = quotient_pair(upstairs, q);
        CHECK(dq.c_multiplicity(o).is_infinite());
        CHECK(dq.induced_qdivisor() == QDivisor::term(o, 1));
        CHECK(data.quotient_map_strongly_adapted);
    }

    SECTION("inconsistent orbits are rejected") {
        PrimeDivisor a = PrimeDivisor::abstract("A"), bb = PrimeDivisor::abstract("B");
        DivisorialMorphism q("q", {{o, QDivisor::term(a, 2) + QDivisor::term(bb, 3)}}, {});
        CHECK_THROWS_AS(quotient_pair(CPairBoundary{}, q), InconsistentOrbit);
    }

    SECTION("finite upstairs multiplicities break strong adaptedness") {
        DivisorialMorphism q("q", {{o, QDivisor::term(o_up, 2)}}, {});
        CPairBoundary upstairs;
        upstairs.set(o_up, ExtRational(3));
        auto [dq, data] = quotient_pair(upstairs, q);
        CHECK(dq.c_multiplicity(o) == ExtRational(6));  // 2 · 3
        CHECK(!data.quotient_map_strongly_adapted);
    }
}

TEST_CASE("composition with an adapted cover stays adapted") {
    sweeps::SweepResult r = sweeps::sweep_adapted_composition(5, 150);
    INFO(r.first_failure);
    CHECK(r.ok());
}

TEST_CASE("quotient presentations give the same adapted sheaves") {
    sweeps::SweepResult r = sweeps::sweep_quotient_presentation(17, 60);
    INFO(r.first_failure);
    CHECK(r.ok());
}
