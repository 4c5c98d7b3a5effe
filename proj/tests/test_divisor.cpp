#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "cpair/divisor.hpp"

using namespace cpair;

namespace {
PrimeDivisor D(const std::string& name) { return PrimeDivisor::abstract(name); }
}

TEST_CASE("rational arithmetic is exact and normalized") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(5, 2).floor() == 2);
    CHECK(Rational(-5, 2).floor() == -3);
    CHECK(Rational(-5, 2).ceil() == -2);
    CHECK(Rational(5, 2).frac() == Rational(1, 2));
    CHECK(Rational(-5, 2).frac() == Rational(1, 2));
    CHECK(Rational(7, 3).str() == "7/3");
    CHECK(Rational(4).str() == "4");
    CHECK_THROWS_AS(Rational(1, 0), UndefinedArithmetic);
}

TEST_CASE("extended rationals follow the infinity conventions") {
    ExtRational inf = ExtRational::infinity();
    CHECK((inf * ExtRational(Rational(5, 2))).is_infinite());  // ∞·(positive finite)
    CHECK((inf - ExtRational(7)).is_infinite());               // ∞ − finite
    CHECK(inf / inf == ExtRational(1));                        // ∞/∞ = 1
    CHECK(ExtRational(3) / inf == ExtRational(0));             // finite/∞ = 0
    CHECK_THROWS_AS(inf * ExtRational(0), UndefinedArithmetic);
    CHECK_THROWS_AS(inf * ExtRational(-2), UndefinedArithmetic);
    CHECK_THROWS_AS(ExtRational(1) - inf, UndefinedArithmetic);
    CHECK(ExtRational(5) < inf);
    CHECK(inf >= inf);
    CHECK(inf.str() == "inf");
}

TEST_CASE("floor, ceil, fractional part and reduction act termwise") {
    QDivisor d = QDivisor::term(D("D1"), Rational(2, 3)) + QDivisor::term(D("D2"), 1);
    CHECK(floor_div(d) == QDivisor::term(D("D2"), 1));

    CHECK(frac_part(QDivisor::term(D("D1"), Rational(5, 2))) ==
          QDivisor::term(D("D1"), Rational(1, 2)));

    // the pulled-back fractional boundary with m = 3, α = 2
    // has coefficient (2/3)·6 = 4, already integral
    QDivisor pulled = QDivisor::term(D("o"), Rational(2, 3) * Rational(6));
    CHECK(floor_div(pulled) == QDivisor::term(D("o"), 4));

    CHECK(reduce_div(d) == QDivisor::term(D("D1"), 1) + QDivisor::term(D("D2"), 1));
    CHECK(ceil_div(QDivisor::term(D("D1"), Rational(-1, 2))).is_zero());
}

TEST_CASE("canonical form drops zero terms") {
    QDivisor d = QDivisor::term(D("A"), Rational(1, 2));
    d.add(D("A"), Rational(-1, 2));
    CHECK(d.is_zero());
    CHECK(d == QDivisor::zero());
    CHECK(d.str() == "0");
}

TEST_CASE("comparison expands over the union of primes") {
    QDivisor a = QDivisor::term(D("A"), Rational(2, 3));
    QDivisor b = QDivisor::term(D("A"), Rational(1, 2)) + QDivisor::term(D("B"), Rational(1, 5));
    CHECK(!(a >= b));
    CHECK(a + QDivisor::term(D("B"), 1) >= b);
    CHECK(QDivisor::zero() <= a);
}

TEST_CASE("as_cpair recognizes standard coefficients") {
    QDivisor d = QDivisor::term(D("D1"), Rational(1, 2)) +
                 QDivisor::term(D("D2"), Rational(2, 3)) + QDivisor::term(D("D3"), 1);
    CPairBoundary b = as_cpair(d);
    CHECK(b.c_multiplicity(D("D1")) == ExtRational(2));
    CHECK(b.c_multiplicity(D("D2")) == ExtRational(3));
    CHECK(b.c_multiplicity(D("D3")).is_infinite());

    CHECK_THROWS_AS(as_cpair(QDivisor::term(D("D1"), Rational(1, 3))), NotStandardCoefficient);
    CHECK_THROWS_AS(as_cpair(QDivisor::term(D("D1"), Rational(5, 4))), NotStandardCoefficient);
    CHECK(as_cpair(QDivisor::zero()).empty());
}

TEST_CASE("c-multiplicity looks up the boundary and defaults to one") {
    CPairBoundary b;
    b.set(D("D1"), ExtRational(2));
    CHECK(b.c_multiplicity(D("D1")) == ExtRational(2));
    CHECK(b.c_multiplicity(D("D2")) == ExtRational(1));
    b.set(D("D3"), ExtRational::infinity());
    CHECK(b.c_multiplicity(D("D3")).is_infinite());
    CHECK_THROWS_AS(b.set(D("bad"), ExtRational(1)), NotStandardCoefficient);
    CHECK_THROWS_AS(b.set(D("bad"), ExtRational(Rational(5, 2))), NotStandardCoefficient);
}

TEST_CASE("d_orb sums over the finite multiplicities only") {
    CPairBoundary b;
    b.set(D("D1"), ExtRational(2));
    b.set(D("D2"), ExtRational(3));
    CHECK(b.d_orb() == QDivisor::term(D("D1"), Rational(1, 2)) +
                           QDivisor::term(D("D2"), Rational(1, 3)));

    CPairBoundary inf_only;
    inf_only.set(D("D1"), ExtRational::infinity());
    CHECK(inf_only.d_orb().is_zero());
    CHECK(CPairBoundary{}.d_orb().is_zero());
}

TEST_CASE("divisor identities hold on random input") {
    std::mt19937_64 rng(42);
    auto rnd = [&](int lo, int hi) {
        return (int)std::uniform_int_distribution<int>(lo, hi)(rng);
    };
    for (int it = 0; it < 300; ++it) {
        QDivisor d;
        for (int i = 0, k = rnd(0, 4); i < k; ++i)
            d.add(D("P" + std::to_string(rnd(1, 5))), Rational(rnd(-12, 12), rnd(1, 8)));

        CHECK(floor_div(d) + frac_part(d) == d);
        QDivisor gap = ceil_div(d) - floor_div(d);
        for (const auto& [p, c] : gap.terms()) {
            (void)p;
            CHECK((c == Rational(0) || c == Rational(1)));
        }

        int n1 = rnd(0, 6), n2 = rnd(0, 6);
        QDivisor f = frac_part(d);
        CHECK(floor_div(Rational(n1) * f) + floor_div(Rational(n2) * f) <=
              floor_div(Rational(n1 + n2) * f));
    }
}

TEST_CASE("as_cpair round-trips the induced divisor") {
    std::mt19937_64 rng(7);
    auto rnd = [&](int lo, int hi) {
        return (int)std::uniform_int_distribution<int>(lo, hi)(rng);
    };
    for (int it = 0; it < 200; ++it) {
        CPairBoundary b;
        for (int i = 0, k = rnd(0, 4); i < k; ++i) {
            int m = rnd(2, 9);
            b.set(D("Q" + std::to_string(i)), m == 9 ? ExtRational::infinity() : ExtRational(m));
        }
        CHECK(as_cpair(b.induced_qdivisor()) == b);
    }
}
