#include "doctest.h"
#include "futaki/conic.hpp"

using namespace futaki;

TEST_CASE("surface invariants for genus 2, deg D = 3") {
    ConicParams p(2, 3);
    ConicSurfaceInvariants inv = surface_invariants(p);
    CHECK(inv.chi == -1);
    CHECK(inv.K_squared == -18);
    CHECK(inv.euler_number == 6);
    CHECK(inv.singular_fibres == 10);
}

TEST_CASE("Noether's identity holds across the parameter grid") {
    for (long long g = 2; g <= 50; ++g)
        for (long long d = 3; d <= 50; ++d) {
            ConicSurfaceInvariants inv = surface_invariants(ConicParams(g, d));
            CHECK(12 * inv.chi == inv.K_squared + inv.euler_number);
            CHECK(inv.singular_fibres == 2 * (d + 2));
            CHECK(inv.singular_fibres >= 0);
        }
}

TEST_CASE("fibre count does not depend on the genus") {
    CHECK(surface_invariants(ConicParams(17, 3)).singular_fibres == 10);
    CHECK(surface_invariants(ConicParams(2, 3)).singular_fibres == 10);
    CHECK(surface_invariants(ConicParams(40, 3)).singular_fibres == 10);
}

TEST_CASE("the underlying fibration data") {
    FibrationSpec spec = conic_fibration(ConicParams(17, 3));
    CHECK(spec.pair.total.rank == 3);
    CHECK(spec.pair.total.degree == -5);
    CHECK(spec.pair.sub.rank == 2);
    CHECK(spec.pair.sub.degree == -2);
    CHECK(spec.m.codim() == 1);
    CHECK(spec.m.values() == std::vector<int>{2});
    CHECK(spec.globally_generated_asserted);
}

TEST_CASE("modified slope comparison favours F exactly when deg D > 2") {
    for (long long d = 3; d <= 40; ++d) {
        FibrationSpec spec = conic_fibration(ConicParams(2, d));
        Rational muE = modified_slope(spec.pair.total, 1);
        Rational muF = modified_slope(spec.pair.sub, 1);
        CHECK(muF == Rational(-2));
        CHECK(muE == Rational(-2 - d, 2));
        CHECK(muF > muE);
    }
}

TEST_CASE("destabilization at genus 17, deg D = 3") {
    FutakiReport rep = conic_destab(ConicParams(17, 3));
    CHECK((rep.futaki == GAffine{Rational(16, 3), Rational(-1, 3)}));
    REQUIRE(rep.futaki_at_genus.has_value());
    CHECK(*rep.futaki_at_genus == Rational(-1, 3));
    CHECK(rep.verdict == Verdict::DestabilizesAtGenus);
    REQUIRE(rep.threshold.has_value());
    CHECK(*rep.threshold == Rational(16));
    CHECK(rep.globally_generated_asserted);
}

TEST_CASE("genus thresholds: finite, maximal at deg D = 3, and effective") {
    std::optional<Rational> prev;
    for (long long d = 3; d <= 100; ++d) {
        FibrationSpec spec = conic_fibration(ConicParams(2, d));
        auto thr = genus_threshold(spec);
        REQUIRE(thr.has_value());
        CHECK(*thr == Rational(4 * (d + 1), d - 2));
        CHECK(*thr <= Rational(16));
        if (prev) CHECK(*thr < *prev);  // strictly decreasing in d
        prev = thr;

        // One genus past the threshold the invariant is genuinely negative.
        mpz_class g = thr->ceil() + 1;
        CHECK(futaki_affine(spec).at_genus(Rational(g)) < Rational(0));
    }
    CHECK(*genus_threshold(conic_fibration(ConicParams(2, 3))) == Rational(16));
}

TEST_CASE("genus 17 destabilizes for every deg D from 3 to 100") {
    for (long long d = 3; d <= 100; ++d) {
        FutakiReport rep = conic_destab(ConicParams(17, d));
        REQUIRE(rep.futaki_at_genus.has_value());
        CHECK(*rep.futaki_at_genus < Rational(0));
        CHECK(rep.verdict == Verdict::DestabilizesAtGenus);
    }
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(ConicParams(1, 3), std::domain_error);
    CHECK_THROWS_AS(ConicParams(0, 3), std::domain_error);
    CHECK_THROWS_AS(ConicParams(-5, 3), std::domain_error);
    CHECK_THROWS_AS(ConicParams(2, 2), std::domain_error);   // deg D must exceed deg H
    CHECK_THROWS_AS(ConicParams(2, -1), std::domain_error);
    CHECK_NOTHROW(ConicParams(2, 3));

    // Explicit deg H must satisfy 1 <= deg H < (genus + 2)/3.
    CHECK_THROWS_AS(ConicParams(2, 3, 2), std::domain_error);   // needs 3*2 < 4
    CHECK_THROWS_AS(ConicParams(17, 3, 0), std::domain_error);
    CHECK_THROWS_AS(ConicParams(17, 8, 7), std::domain_error);  // needs 3*7 < 19
    CHECK_NOTHROW(ConicParams(2, 2, 1));
    CHECK_NOTHROW(ConicParams(17, 8, 6));
    CHECK_THROWS_AS(ConicParams(17, 6, 6), std::domain_error);  // deg D must exceed deg H

    ConicParams def(2, 3);
    CHECK(def.deg_h == 2);
    CHECK(!def.deg_h_explicit);
    ConicParams expl(17, 8, 6);
    CHECK(expl.deg_h == 6);
    CHECK(expl.deg_h_explicit);
}

TEST_CASE("explicit deg H feeds through to the bundles") {
    FibrationSpec spec = conic_fibration(ConicParams(17, 8, 6));
    CHECK(spec.pair.total.degree == -14);
    CHECK(spec.pair.sub.degree == -6);
    ConicSurfaceInvariants inv = surface_invariants(ConicParams(17, 8, 6));
    CHECK(inv.singular_fibres == 28);
}
