#include <doctest.h>

#include <random>

#include "modcubic/rational.hpp"

using modcubic::Rational;
using modcubic::Valuation;
using modcubic::val_p;

TEST_CASE("rational normalization invariants") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(0, -5) == Rational(0));
    CHECK(Rational(0).den() == modcubic::BigInt(1));
    CHECK(Rational(6, 3).is_integer());
    CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("rational field arithmetic is exact") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long long> dist(-50, 50);
    for (int iter = 0; iter < 1000; ++iter) {
        long long a = dist(rng), b = dist(rng), c = dist(rng), d = dist(rng);
        if (b == 0 || d == 0) continue;
        Rational x(a, b), y(c, d);
        if (!x.is_zero()) CHECK(x * x.inverse() == Rational(1));
        CHECK(x + y == y + x);
        CHECK((x + y) - y == x);
        CHECK(x * y == y * x);
        if (!y.is_zero()) CHECK((x / y) * y == x);
    }
}

TEST_CASE("rational parsing and printing") {
    CHECK(Rational::from_string("3375/8").to_string() == "3375/8");
    CHECK(Rational::from_string("-15").to_string() == "-15");
    CHECK(Rational(25589, 216).to_string() == "25589/216");
    CHECK(Rational(50625, 120).to_string() == "3375/8");
}

TEST_CASE("p-adic valuation on the ledger constants") {
    CHECK(val_p(Rational(modcubic::pow(modcubic::BigInt(2), 13), modcubic::BigInt(27)), 5) ==
          Valuation::of(0));
    CHECK(val_p(Rational(3375, 8), 5) == Valuation::of(3));  // 3375 = 3^3 * 5^3
    CHECK(val_p(Rational(-1, 216), 2) == Valuation::of(-3));
    CHECK(val_p(Rational(0), 5) == Valuation::inf());
    CHECK(val_p(Rational(160000), 5) == Valuation::of(4));  // 20^4 = 5^4 * 2^8
    CHECK_THROWS(val_p(Rational(1), 6));
    CHECK_THROWS(val_p(Rational(1), 1));
}

TEST_CASE("val_p is a valuation") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long long> dist(-200, 200);
    const long long primes[] = {2, 3, 5, 7};
    for (int iter = 0; iter < 1000; ++iter) {
        long long a = dist(rng), b = dist(rng), c = dist(rng), d = dist(rng);
        if (b == 0 || d == 0) continue;
        Rational x(a, b), y(c, d);
        for (long long p : primes) {
            CHECK(val_p(x * y, p) == val_p(x, p) + val_p(y, p));
            Valuation vs = val_p(x + y, p);
            Valuation lo = min(val_p(x, p), val_p(y, p));
            if (!vs.infinite) CHECK((lo.infinite || vs.value >= lo.value));
            if (!val_p(x, p).infinite && !val_p(y, p).infinite &&
                val_p(x, p).value != val_p(y, p).value)
                CHECK(vs == lo);
        }
    }
}
