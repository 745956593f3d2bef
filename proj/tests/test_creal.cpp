#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle.hpp"
#include "wreal/creal.hpp"

#include <random>

using namespace wreal;

TEST_CASE("from_rat is exact at every precision") {
    CReal x(Rat(1, 2));
    CHECK(x.approx(Int(1000)) == Rat(1, 2));
    CHECK(CReal(Rat(0)).approx(Int(1)) == Rat(0));
    CHECK(CReal(Rat(22, 7)).approx(Int(7)) == Rat(22, 7));
}

TEST_CASE("approx rejects k < 1") {
    CReal x(Rat(1));
    CHECK_THROWS_AS(x.approx(Int(0)), std::invalid_argument);
}

TEST_CASE("arithmetic stays within witnessed error") {
    CReal a(Rat(1, 4)), b(Rat(1, 4));
    CHECK(abs((a + b).approx(Int(1000)) - Rat(1, 2)) < Rat(1, 1000));

    // sqrt2 as a genuinely approximate witness
    CReal r2 = sqrt_creal(CReal(Rat(2)));
    auto s2 = oracle::sqrt(Rat(2));
    for (long k : {10L, 100L, 10000L}) {
        Rat v = r2.approx(Int(k));
        CHECK(oracle::within(s2, v, Rat(1, k)));
    }
    // product of two approximate reals: sqrt2 * sqrt2 near 2
    Rat p = (r2 * r2).approx(Int(100000));
    CHECK(abs(p - Rat(2)) < Rat(1, 100000));
    // reciprocal: 1/sqrt2 = sqrt2/2
    Rat ir = recip(r2).approx(Int(100000));
    CHECK(oracle::within(oracle::sqrt(Rat(1, 2)), ir, Rat(1, 100000)));
}

TEST_CASE("sampled witness consistency |a(k)-a(k')| < 1/k + 1/k'") {
    CReal r2 = sqrt_creal(CReal(Rat(2)));
    CReal third = CReal(Rat(1)) / CReal(Rat(3));
    std::mt19937_64 rng(4242);
    for (int t = 0; t < 100; ++t) {
        long k = 1 + static_cast<long>(rng() % 9999);
        long kp = k + 1 + static_cast<long>(rng() % (10001 - k));
        for (const CReal& x : {r2, third}) {
            Rat d = abs(x.approx(Int(k)) - x.approx(Int(kp)));
            CHECK(d < Rat(1, k) + Rat(1, kp));
        }
    }
}

TEST_CASE("cache only improves: coarse after fine still valid") {
    int calls = 0;
    CReal x([&calls](const Int& k) {
        ++calls;
        return Rat(1, 3) + Rat(1, Int(10 * k));  // valid witness for 1/3
    });
    Rat fine = x.approx(Int(1000));
    Rat coarse = x.approx(Int(10));
    CHECK(calls == 1);       // coarse request served from cache
    CHECK(fine == coarse);   // cached best value returned
    CHECK(abs(coarse - Rat(1, 3)) < Rat(1, 10));
}

TEST_CASE("compare_apart") {
    CReal zero(Rat(0)), one(Rat(1));
    CHECK(compare_apart(zero, one, Int(5)) == Cmp::less);
    CHECK(compare_apart(one, zero, Int(5)) == Cmp::greater);

    CReal r2 = sqrt_creal(CReal(Rat(2)));
    CHECK(compare_apart(r2, r2, Int(10)) == Cmp::within);
    CHECK(compare_apart(CReal(Rat(141, 100)), r2, Int(1000)) == Cmp::less);
}

TEST_CASE("compare_apart soundness on randomized rationals") {
    std::mt19937_64 rng(777);
    for (int t = 0; t < 500; ++t) {
        Rat a(static_cast<long>(rng() % 2001) - 1000, 1 + static_cast<long>(rng() % 100));
        Rat b(static_cast<long>(rng() % 2001) - 1000, 1 + static_cast<long>(rng() % 100));
        long k = 1 + static_cast<long>(rng() % 1000);
        switch (compare_apart(CReal(a), CReal(b), Int(k))) {
            case Cmp::less: CHECK(a < b); break;
            case Cmp::greater: CHECK(a > b); break;
            case Cmp::within: CHECK(abs(a - b) <= Rat(2, k)); break;
        }
    }
}

TEST_CASE("division requires apartness") {
    CReal tiny([](const Int& k) { return inv(2 * k); });  // a witness for 0
    CHECK_THROWS_AS((void)recip(tiny, 8).approx(Int(10)), Error);
    CHECK_THROWS_AS((void)(CReal(Rat(1)) / CReal(Rat(0))).approx(Int(10)), Error);
}

TEST_CASE("creal_to_decimal") {
    CHECK(creal_to_decimal(CReal(Rat(1, 4)), 3).str() == "0.250 ± 0.001");
    CHECK(creal_to_decimal(CReal(Rat(-2)), 0).str() == "-2 ± 1");
    CReal r2 = sqrt_creal(CReal(Rat(2)));
    auto d = creal_to_decimal(r2, 5);
    CHECK(d.str().substr(0, 7) == "1.41421");
    // bound is honest for the real itself
    CHECK(oracle::within(oracle::sqrt(Rat(2)), d.shown, d.error_bound + Rat(1, 100000000)));
}

TEST_CASE("min/max/abs") {
    CReal r2 = sqrt_creal(CReal(Rat(2)));
    CHECK(abs(min(r2, CReal(Rat(1))).approx(Int(100)) - Rat(1)) < Rat(1, 100));
    Rat mx = max(r2, CReal(Rat(3, 2))).approx(Int(1000));
    CHECK(abs(mx - Rat(3, 2)) < Rat(1, 500));
    Rat ab = abs(-r2).approx(Int(1000));
    CHECK(oracle::within(oracle::sqrt(Rat(2)), ab, Rat(1, 1000)));
}
