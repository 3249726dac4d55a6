#include "doctest.h"
#include "futaki/weights.hpp"

using namespace futaki;

TEST_CASE("h0_proj on a line bundle is Riemann-Roch on the curve") {
    for (long long d0 : {-3LL, 0LL, 2LL}) {
        GAffinePoly h = h0_proj(BundleOnCurve(1, d0));
        // -d0*k + 1 - g
        CHECK(h.const_part == Poly(std::vector<Rational>{Rational(1), Rational(-d0)}));
        CHECK(h.g_part == Poly(std::vector<Rational>{Rational(-1)}));
    }
}

TEST_CASE("h0_proj spot values") {
    CHECK(h0_proj(BundleOnCurve(2, 0)).eval(Rational(3), Rational(0)) == Rational(4));
    CHECK(h0_proj(BundleOnCurve(3, -5)).const_part.coeff(3) == Rational(5, 6));
    // degree is e in k; g-part is -C(e-1+k, e-1)
    GAffinePoly h = h0_proj(BundleOnCurve(4, -7));
    CHECK(h.const_part.degree() == 4);
    CHECK(h.g_part == -binom_poly(3));
}

TEST_CASE("dim_weight_space") {
    SplitPair pair{BundleOnCurve(3, -5), BundleOnCurve(2, -2)};  // q=1, degQ=-3
    SUBCASE("k=0, i=0 is the Euler characteristic of O_C") {
        GAffine w = dim_weight_space(pair, 0, 0);
        CHECK((w == GAffine{Rational(1), Rational(-1)}));
    }
    SUBCASE("worked value") {
        GAffine w = dim_weight_space(pair, 1, 1);
        CHECK((w == GAffine{Rational(4), Rational(-2)}));
    }
    SUBCASE("rank-1 pieces with slope zero") {
        SplitPair flat{BundleOnCurve(2, 0), BundleOnCurve(1, 0)};
        CHECK((dim_weight_space(flat, 5, 2) == GAffine{Rational(1), Rational(-1)}));
    }
    SUBCASE("out-of-range i rejected") {
        CHECK_THROWS_AS(dim_weight_space(pair, 2, 3), std::domain_error);
        CHECK_THROWS_AS(dim_weight_space(pair, 2, -1), std::domain_error);
    }
}

TEST_CASE("weight decomposition exhausts H^0 of the split bundle") {
    for (int f = 1; f <= 3; ++f)
        for (int q = 1; q <= 3; ++q)
            for (long long degF : {-4LL, 0LL, 3LL})
                for (long long degQ : {-2LL, 1LL}) {
                    SplitPair pair{BundleOnCurve(f + q, degF + degQ), BundleOnCurve(f, degF)};
                    GAffinePoly h = h0_proj(pair.total);
                    for (long long k = 0; k <= 6; ++k)
                        for (long long g : {0LL, 2LL}) {
                            Rational total(0);
                            for (long long i = 0; i <= k; ++i)
                                total += dim_weight_space(pair, k, i).at_genus(Rational(g));
                            CHECK(total == h.eval(Rational(k), Rational(g)));
                        }
                }
}

TEST_CASE("absorption closed forms at worked values") {
    AbsorptionValues v = absorption_closed(2, 1, 2);
    CHECK(v.s1 == Rational(8));
    CHECK(v.s2 == Rational(14));
    CHECK(v.s3 == Rational(2));
    AbsorptionValues z = absorption_closed(3, 2, 0);
    CHECK(z.s1 == Rational(0));
    CHECK(z.s2 == Rational(0));
    CHECK(z.s3 == Rational(0));
    CHECK(absorption_closed(1, 1, 2).s1 == Rational(3));
    CHECK(absorption_closed(1, 1, 2).s3 == Rational(1));
}

TEST_CASE("absorption brute agrees with closed forms") {
    for (int f = 1; f <= 4; ++f)
        for (int q = 1; q <= 4; ++q)
            for (long long k = 0; k <= 30; ++k) {
                AbsorptionValues v = absorption_closed(f, q, k);
                CHECK(absorption_brute(f, q, k, AbsorptionSum::S1) == v.s1);
                CHECK(absorption_brute(f, q, k, AbsorptionSum::S2) == v.s2);
                CHECK(absorption_brute(f, q, k, AbsorptionSum::S3) == v.s3);
            }
}

TEST_CASE("absorption polynomials evaluate to the closed forms") {
    for (int f = 1; f <= 3; ++f)
        for (int q = 1; q <= 3; ++q) {
            Poly s1 = absorption_poly(f, q, AbsorptionSum::S1);
            Poly s2 = absorption_poly(f, q, AbsorptionSum::S2);
            Poly s3 = absorption_poly(f, q, AbsorptionSum::S3);
            for (long long k = 0; k <= 15; ++k) {
                AbsorptionValues v = absorption_closed(f, q, k);
                CHECK(s1(Rational(k)) == v.s1);
                CHECK(s2(Rational(k)) == v.s2);
                CHECK(s3(Rational(k)) == v.s3);
            }
        }
}

TEST_CASE("trace_proj structure") {
    SplitPair pair{BundleOnCurve(3, -5), BundleOnCurve(2, -2)};
    GAffinePoly tr = trace_proj(pair);
    SUBCASE("vanishes at k = 0") {
        CHECK(tr.eval(Rational(0), Rational(0)) == Rational(0));
        CHECK(tr.eval(Rational(0), Rational(7)) == Rational(0));
    }
    SUBCASE("leading coefficient f((f+1)mu(F)+q mu(Q))/(e+1)!") {
        CHECK(tr.const_part.coeff(4) == Rational(-1, 2));
        CHECK(tr.const_part.degree() == 4);
    }
    SUBCASE("g-part is S1") {
        CHECK(tr.g_part == absorption_poly(2, 1, AbsorptionSum::S1));
    }
}

TEST_CASE("trace_proj_brute worked values") {
    SplitPair flat{BundleOnCurve(2, 0), BundleOnCurve(1, 0)};
    CHECK(trace_proj_brute(flat, 0, 0) == Rational(0));
    CHECK(trace_proj_brute(flat, 1, 0) == Rational(-1));
    SplitPair pair{BundleOnCurve(3, -5), BundleOnCurve(2, -2)};
    CHECK(trace_proj_brute(pair, 2, 2) == trace_proj(pair).eval(Rational(2), Rational(2)));
}

TEST_CASE("trace polynomial equals brute summation across the oracle grid") {
    for (int f = 1; f <= 3; ++f)
        for (int q = 1; q <= 3; ++q)
            for (long long degF : {-5LL, -1LL, 0LL, 4LL})
                for (long long degQ : {-3LL, 0LL, 5LL}) {
                    SplitPair pair{BundleOnCurve(f + q, degF + degQ), BundleOnCurve(f, degF)};
                    GAffinePoly tr = trace_proj(pair);
                    for (long long k = 0; k <= 12; ++k)
                        for (long long g : {0LL, 1LL, 2LL, 5LL})
                            CHECK(tr.eval(Rational(k), Rational(g)) ==
                                  trace_proj_brute(pair, k, g));
                }
}

TEST_CASE("SplitPair validation and quotient") {
    CHECK_THROWS_AS(SplitPair(BundleOnCurve(2, 0), BundleOnCurve(2, 0)), std::domain_error);
    CHECK_THROWS_AS(SplitPair(BundleOnCurve(2, 0), BundleOnCurve(3, 0)), std::domain_error);
    SplitPair pair{BundleOnCurve(5, -7), BundleOnCurve(2, -3)};
    CHECK(pair.quotient().rank == 3);
    CHECK(pair.quotient().degree == -4);
    CHECK_THROWS_AS(BundleOnCurve(0, 1), std::domain_error);
    CHECK(BundleOnCurve(3, -5).slope() == Rational(-5, 3));
}
