#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wreal/rat.hpp"

#include <random>

using namespace wreal;

TEST_CASE("rationals are canonical") {
    CHECK(Rat(4, 2) == Rat(2));
    CHECK(Rat(4, 2).den() == 1);
    CHECK(Rat(-3, -6) == Rat(1, 2));
    CHECK(Rat(3, -6).num() == -1);
    CHECK(Rat(3, -6).den() == 2);
    CHECK(Rat(0, 7).den() == 1);
}

TEST_CASE("height") {
    CHECK(height(Rat(-5, 3)) == 5);
    CHECK(height(Rat(0)) == 1);
    CHECK(height(Rat(4, 2)) == 2);
    RatVec v{Rat(1, 7), Rat(-9, 2)};
    CHECK(height(std::span<const Rat>(v)) == 9);
    CHECK(height(Rat(1, 1)) == 1);
}

TEST_CASE("round_num basics") {
    CHECK(round_num(Rat(2, 3), Int(3)) == 2);
    CHECK(round_num(Rat(1, 2), Int(2)) == 1);
    CHECK(round_num(Rat(-7, 5), Int(10)) == -14);
    // ties resolve toward even
    CHECK(round_num(Rat(1, 2), Int(1)) == 0);
    CHECK(round_num(Rat(3, 2), Int(1)) == 2);
    CHECK(round_num(Rat(-1, 2), Int(1)) == 0);
}

TEST_CASE("round_num contract |n/k - r| < 1/k, randomized") {
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 2000; ++trial) {
        long num = static_cast<long>(rng() % 20001) - 10000;
        long den = 1 + static_cast<long>(rng() % 999);
        long k = 1 + static_cast<long>(rng() % 997);
        Rat r(num, den);
        Int n = round_num(r, Int(k));
        CHECK(abs(Rat(n, Int(k)) - r) < Rat(1, k));
    }
}

TEST_CASE("sum_approx") {
    SUBCASE("constant thirds") {
        Rat s = sum_approx([](std::int64_t) { return Rat(1, 3); }, 2, Int(10));
        CHECK(abs(s - Rat(1)) < Rat(1, 10));
        CHECK(s == Rat(1));  // 3 * round(1/3 * 30)/30 = 30/30
    }
    SUBCASE("zero") {
        Rat s = sum_approx([](std::int64_t) { return Rat(0); }, 100, Int(5));
        CHECK(s == Rat(0));
    }
    SUBCASE("harmonic prefix") {
        Rat s = sum_approx([](std::int64_t i) { return Rat(1, i + 1); }, 3, Int(12));
        CHECK(abs(s - Rat(25, 12)) < Rat(1, 12));
    }
    SUBCASE("denominator divides (y+1)k, randomized error bound") {
        std::mt19937_64 rng(99);
        for (int trial = 0; trial < 200; ++trial) {
            std::int64_t y = rng() % 40;
            long k = 1 + static_cast<long>(rng() % 50);
            std::vector<Rat> terms;
            Rat exact(0);
            for (std::int64_t i = 0; i <= y; ++i) {
                Rat t(static_cast<long>(rng() % 2001) - 1000, 1 + static_cast<long>(rng() % 300));
                terms.push_back(t);
                exact += t;
            }
            Rat s = sum_approx([&](std::int64_t i) { return terms[i]; }, y, Int(k));
            CHECK(abs(s - exact) < Rat(1, k));
            Int full = Int(y + 1) * k;
            CHECK(full % s.den() == 0);
        }
    }
}

TEST_CASE("to_decimal") {
    SUBCASE("22/7 at 1/100") {
        auto d = to_decimal(Rat(22, 7), Rat(1, 100), 6);
        CHECK(d.frac_digits.size() <= 2);
        CHECK(abs(d.shown - Rat(22, 7)) <= d.error_bound);
        CHECK(d.error_bound >= Rat(1, 100));
        CHECK(d.str() == "3.14 ± 0.01");
    }
    SUBCASE("1/2 at 1/10") {
        auto d = to_decimal(Rat(1, 2), Rat(1, 10), 6);
        CHECK(d.str() == "0.5 ± 0.1");
    }
    SUBCASE("-1/3 at 1/1000") {
        auto d = to_decimal(Rat(-1, 3), Rat(1, 1000), 6);
        CHECK(d.str() == "-0.333 ± 0.001");
        CHECK(abs(d.shown - Rat(-1, 3)) <= d.error_bound);
    }
    SUBCASE("max_places caps the digits") {
        auto d = to_decimal(Rat(1, 3), Rat(1, 100000), 2);
        CHECK(d.frac_digits.size() == 2);
    }
    SUBCASE("coarse error") {
        auto d = to_decimal(Rat(-2), Rat(1, 2), 0);
        CHECK(d.str() == "-2 ± 1");
    }
    SUBCASE("never claims unjustified digits, randomized") {
        std::mt19937_64 rng(7);
        for (int trial = 0; trial < 500; ++trial) {
            Rat r(static_cast<long>(rng() % 20001) - 10000, 1 + static_cast<long>(rng() % 999));
            Rat err(1, 1 + static_cast<long>(rng() % 100000));
            auto d = to_decimal(r, err, 8);
            CHECK(abs(d.shown - r) <= d.error_bound);
            CHECK(d.error_bound >= err);
        }
    }
}

TEST_CASE("rational parsing is exact") {
    CHECK(Rat::parse("2.75") == Rat(11, 4));
    CHECK(Rat::parse("-0.1") == Rat(-1, 10));
    CHECK(Rat::parse("3/4") == Rat(3, 4));
    CHECK(Rat::parse("1e-3") == Rat(1, 1000));
    CHECK(Rat::parse("2.5e2") == Rat(250));
    CHECK_THROWS(Rat::parse("1/0"));
    CHECK_THROWS(Rat::parse("abc"));
}
