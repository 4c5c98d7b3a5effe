#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <random>

#include "cpair/geometry.hpp"
#include "cpair/sweeps.hpp"

using namespace cpair;

TEST_CASE("monomial pull-back of divisors") {
    Chart line("A1", 1);

    SECTION("z maps to z^6 pulls (2/3)·{0} to 4·{0}") {
        MonomialCover g = MonomialCover::diagonal(line, {6});
        QDivisor d = QDivisor::term(line.hyperplane(1), Rational(2, 3));
        CHECK(pullback_qdiv(g, d) == QDivisor::term(line.hyperplane(1), 4));
    }

    SECTION("blow-up chart (u,v) -> (u,uv)") {
        Chart up("U", 2), down("Y", 2);
        MonomialCover sigma(up, down, {{1, 1}, {0, 1}});
        QDivisor d = QDivisor::term(down.hyperplane(2), 1);  // {y = 0}, y = uv
        CHECK(pullback_qdiv(sigma, d) ==
              QDivisor::term(up.hyperplane(1), 1) + QDivisor::term(up.hyperplane(2), 1));
        CHECK(sigma.jacobian_divisor() == QDivisor::term(up.hyperplane(1), 1));
    }

    SECTION("unknown prime is rejected") {
        MonomialCover g = MonomialCover::identity(line);
        CHECK_THROWS_AS(pullback_qdiv(g, QDivisor::term(PrimeDivisor::abstract("P"), 1)),
                        UnknownPrime);
    }
}

// The Paquerette de Mélibée (x²+y²)² = x³ − 3xy² has multiplicity 3 at the
// origin: expand the defining polynomial and take the lowest total degree.
TEST_CASE("paquerette curve has multiplicity three at the origin") {
    std::map<std::pair<int, int>, long> poly;  // (deg_x, deg_y) -> coefficient
    auto add = [&](int dx, int dy, long c) { poly[{dx, dy}] += c; };
    // (x²+y²)² = x⁴ + 2x²y² + y⁴
    add(4, 0, 1);
    add(2, 2, 2);
    add(0, 4, 1);
    // −(x³ − 3xy²)
    add(3, 0, -1);
    add(1, 2, 3);
    int lowest = 1 << 20;
    for (const auto& [mono, c] : poly)
        if (c != 0)
            lowest = std::min(lowest, mono.first + mono.second);
    CHECK(lowest == 3);
}

TEST_CASE("divisorial morphism tables: paquerette blow-up") {
    PrimeDivisor p = PrimeDivisor::abstract("P");
    PrimeDivisor ps = PrimeDivisor::abstract("Pstrict");
    PrimeDivisor e = PrimeDivisor::abstract("E");
    DivisorialMorphism pi("pi", {{p, QDivisor::term(ps, 1) + QDivisor::term(e, 3)}}, {e});

    CHECK(pullback_qdiv(pi, QDivisor::term(p, Rational(2, 3))) ==
          QDivisor::term(ps, Rational(2, 3)) + QDivisor::term(e, 2));
    CHECK(pi.multiplicity(e, p) == 3);
    CHECK(pi.strict_transform(p) == ps);
    CHECK(pi.pushforward(QDivisor::term(ps, Rational(1, 2)) + QDivisor::term(e, 5)) ==
          QDivisor::term(p, Rational(1, 2)));
}

TEST_CASE("divisorial morphism validation") {
    PrimeDivisor t = PrimeDivisor::abstract("T");
    PrimeDivisor s = PrimeDivisor::abstract("S");
    CHECK_THROWS_AS(DivisorialMorphism("bad", {{t, QDivisor::term(s, Rational(1, 2))}}, {}),
                    InvalidMorphism);
    CHECK_THROWS_AS(DivisorialMorphism("bad", {{t, QDivisor::term(s, Rational(-1))}}, {}),
                    InvalidMorphism);
    CHECK_THROWS_AS(DivisorialMorphism("bad", {{t, QDivisor::zero()}}, {}), InvalidMorphism);
}

TEST_CASE("monomial cover validation") {
    Chart plane("X", 2);
    CHECK_THROWS_AS(MonomialCover(plane, plane, {{1, 0}, {0, 0}}), InvalidMorphism);
    CHECK_THROWS_AS(MonomialCover(plane, plane, {{1, 2}, {2, 4}}), InvalidMorphism);
    CHECK_THROWS_AS(MonomialCover(plane, plane, {{1, -1}, {0, 1}}), InvalidMorphism);
    CHECK_THROWS_AS(MonomialCover(plane, Chart("Y", 3), {{1, 0}, {0, 1}}), ChartMismatch);
}

TEST_CASE("composition multiplies exponent matrices") {
    Chart line("A1", 1);
    MonomialCover f = MonomialCover::diagonal(line, {2});
    MonomialCover g = MonomialCover::diagonal(line, {3});
    CHECK(compose(f, g).exponent(1, 1) == 6);
    CHECK(compose(MonomialCover::identity(line), f).matrix() == f.matrix());
    CHECK(compose(f, MonomialCover::identity(line)).matrix() == f.matrix());

    // factorization through the identity: α = (z ↦ z²), β = Id, γ = z ↦ z²
    MonomialCover alpha = MonomialCover::diagonal(line, {2});
    MonomialCover beta = MonomialCover::identity(line);
    CHECK(compose(alpha, beta).exponent(1, 1) == 2);
}

TEST_CASE("pull-back respects composition on random matrices") {
    sweeps::SweepResult r = sweeps::sweep_pullback_functoriality(99, 150);
    INFO(r.first_failure);
    CHECK(r.ok());
}

TEST_CASE("restriction of a pair to a boundary axis") {
    Chart plane("X", 2);

    SECTION("restricting to a boundary component removes it first") {
        CPairBoundary b;
        b.set(plane.hyperplane(1), ExtRational(2));
        b.set(plane.hyperplane(2), ExtRational(3));
        auto [sub, rb] = restrict_pair(plane, b, 1);
        CHECK(sub.dim == 1);
        REQUIRE(rb.terms().size() == 1);
        CHECK(rb.c_multiplicity(sub.hyperplane(1)) == ExtRational(3));
    }

    SECTION("empty boundary restricts to the empty boundary") {
        auto [sub, rb] = restrict_pair(plane, CPairBoundary{}, 2);
        CHECK(sub.dim == 1);
        CHECK(rb.empty());
    }

    SECTION("direct restriction when the axis is off the boundary") {
        CPairBoundary b;
        b.set(plane.hyperplane(2), ExtRational(2));
        auto [sub, rb] = restrict_pair(plane, b, 1);
        CHECK(rb.c_multiplicity(sub.hyperplane(1)) == ExtRational(2));
    }

    SECTION("axis out of range") {
        CHECK_THROWS_AS(restrict_pair(plane, CPairBoundary{}, 3), AxisOutOfRange);
        CHECK_THROWS_AS(restrict_pair(Chart("L", 1), CPairBoundary{}, 1), AxisOutOfRange);
    }
}
