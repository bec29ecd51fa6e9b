#include <doctest.h>

#include <random>

#include "modcubic/laurent.hpp"

using modcubic::Cyclotomic;
using modcubic::LaurentPolynomial;
using modcubic::MonomialTerm;
using modcubic::Rational;

namespace {

const std::vector<std::string> kSlice = {"a0", "a1", "a2", "ah0", "ah1", "ah2"};

LaurentPolynomial var(const std::vector<std::string>& ring, const std::string& name) {
    return LaurentPolynomial::variable(ring, name);
}

LaurentPolynomial rat(const std::vector<std::string>& ring, long long v) {
    return LaurentPolynomial::constant(ring, Rational(v));
}

// deterministic small random polynomial in up to 3 variables
LaurentPolynomial random_poly(std::mt19937_64& rng, const std::vector<std::string>& ring,
                              bool allow_negative) {
    std::uniform_int_distribution<int> nterms(1, 4);
    std::uniform_int_distribution<int> expo(allow_negative ? -2 : 0, 3);
    std::uniform_int_distribution<long long> coeff(-5, 5);
    LaurentPolynomial p(ring);
    int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        std::map<std::string, int> powers;
        for (const auto& v : ring) powers[v] = expo(rng);
        long long c = coeff(rng);
        if (c == 0) c = 1;
        p += LaurentPolynomial::monomial(ring, Cyclotomic::from_rational(Rational(c)), powers);
    }
    return p;
}

}  // namespace

TEST_CASE("substitute applies the blowup chart map") {
    // 27*a1^2 + 4*ah1^3 with a_i -> a0 t_i, ah_i -> a0 th_i
    LaurentPolynomial f =
        rat(kSlice, 27) * var(kSlice, "a1") * var(kSlice, "a1") +
        rat(kSlice, 4) * var(kSlice, "ah1") * var(kSlice, "ah1") * var(kSlice, "ah1");
    const std::vector<std::string> chart = {"a0", "t1", "t2", "th0", "th1", "th2"};
    Cyclotomic one = Cyclotomic::from_rational(Rational(1));
    std::map<std::string, MonomialTerm> images = {
        {"a1", {one, {{"a0", 1}, {"t1", 1}}}},
        {"ah1", {one, {{"a0", 1}, {"th1", 1}}}},
    };
    LaurentPolynomial g = f.substitute(chart, images);
    LaurentPolynomial expect =
        rat(chart, 27) * var(chart, "a0").pow(2) * var(chart, "t1").pow(2) +
        rat(chart, 4) * var(chart, "a0").pow(3) * var(chart, "th1").pow(3);
    CHECK(g == expect);
    auto [k, residual] = g.extract_variable_power("a0");
    CHECK(k == 2);
    CHECK(residual == rat(chart, 27) * var(chart, "t1").pow(2) +
                          rat(chart, 4) * var(chart, "a0") * var(chart, "th1").pow(3));
}

TEST_CASE("identity substitution fixes the polynomial") {
    std::mt19937_64 rng(5);
    const std::vector<std::string> ring = {"u", "v"};
    Cyclotomic one = Cyclotomic::from_rational(Rational(1));
    std::map<std::string, MonomialTerm> id = {
        {"u", {one, {{"u", 1}}}},
        {"v", {one, {{"v", 1}}}},
    };
    for (int i = 0; i < 50; ++i) {
        LaurentPolynomial f = random_poly(rng, ring, true);
        CHECK(f.substitute(ring, id) == f);
    }
}

TEST_CASE("missing variable image is an error") {
    const std::vector<std::string> ring = {"u", "v"};
    LaurentPolynomial f = var(ring, "u") + var(ring, "v");
    Cyclotomic one = Cyclotomic::from_rational(Rational(1));
    std::map<std::string, MonomialTerm> partial = {{"u", {one, {{"u", 1}}}}};
    CHECK_THROWS(f.substitute(ring, partial));
}

TEST_CASE("substitution is a ring homomorphism (randomized)") {
    std::mt19937_64 rng(42);
    const std::vector<std::string> ring = {"u", "v", "w"};
    const std::vector<std::string> target = {"x", "y"};
    std::uniform_int_distribution<int> expo(-2, 2);
    std::uniform_int_distribution<long long> coeff(1, 4);
    for (int iter = 0; iter < 300; ++iter) {
        LaurentPolynomial f = random_poly(rng, ring, true);
        LaurentPolynomial g = random_poly(rng, ring, true);
        std::map<std::string, MonomialTerm> images;
        for (const auto& v : ring) {
            MonomialTerm t{Cyclotomic::from_rational(Rational(coeff(rng))), {}};
            t.powers["x"] = expo(rng);
            t.powers["y"] = expo(rng);
            images[v] = t;
        }
        CHECK((f * g).substitute(target, images) ==
              f.substitute(target, images) * g.substitute(target, images));
        CHECK((f + g).substitute(target, images) ==
              f.substitute(target, images) + g.substitute(target, images));
    }
}

TEST_CASE("multiplicity at origin") {
    LaurentPolynomial q =
        var(kSlice, "a1").pow(2) * var(kSlice, "ah0").pow(3) -
        var(kSlice, "a0").pow(2) * var(kSlice, "ah1").pow(3);
    CHECK(q.multiplicity_at_origin() == 5);

    const std::vector<std::string> xy = {"x", "y"};
    CHECK((var(xy, "x") + var(xy, "y").pow(2)).multiplicity_at_origin() == 1);

    LaurentPolynomial disc = rat(kSlice, 1);
    const char* as[] = {"a0", "a1", "a2"};
    const char* ahs[] = {"ah0", "ah1", "ah2"};
    for (int i = 0; i < 3; ++i)
        disc *= rat(kSlice, 27) * var(kSlice, as[i]).pow(2) +
                rat(kSlice, 4) * var(kSlice, ahs[i]).pow(3);
    CHECK(disc.multiplicity_at_origin() == 6);

    CHECK_THROWS(LaurentPolynomial(kSlice).multiplicity_at_origin());
    CHECK_THROWS(var(xy, "x").pow(1).substitute_general(
                        xy, {{"x", var(xy, "x")}, {"y", var(xy, "y")}})
                     .extract_variable_power("z"));
}

TEST_CASE("multiplicity is additive over products (randomized)") {
    std::mt19937_64 rng(4711);
    const std::vector<std::string> ring = {"u", "v", "w"};
    for (int iter = 0; iter < 300; ++iter) {
        LaurentPolynomial f = random_poly(rng, ring, false);
        LaurentPolynomial g = random_poly(rng, ring, false);
        if (f.is_zero() || g.is_zero()) continue;
        CHECK((f * g).multiplicity_at_origin() ==
              f.multiplicity_at_origin() + g.multiplicity_at_origin());
    }
}

TEST_CASE("gradient basics") {
    LaurentPolynomial f = rat(kSlice, 27) * var(kSlice, "a0").pow(2) +
                          rat(kSlice, 4) * var(kSlice, "ah0").pow(3);
    CHECK(f.derivative("a0") == rat(kSlice, 54) * var(kSlice, "a0"));
    CHECK(rat(kSlice, 7).derivative("a0").is_zero());
    auto g = rat(kSlice, 7).gradient();
    for (const auto& d : g) CHECK(d.is_zero());
}

TEST_CASE("gradient satisfies the Leibniz rule (randomized)") {
    std::mt19937_64 rng(13);
    const std::vector<std::string> ring = {"u", "v"};
    for (int iter = 0; iter < 300; ++iter) {
        LaurentPolynomial f = random_poly(rng, ring, false);
        LaurentPolynomial g = random_poly(rng, ring, false);
        for (const auto& v : ring) {
            CHECK((f * g).derivative(v) == f.derivative(v) * g + f * g.derivative(v));
            CHECK((f + g).derivative(v) == f.derivative(v) + g.derivative(v));
        }
    }
}

TEST_CASE("extract variable power") {
    const std::vector<std::string> chart = {"a0", "t1", "t2", "th0", "th1", "th2"};
    LaurentPolynomial total =
        var(chart, "a0").pow(6) *
        (rat(chart, 27) + rat(chart, 4) * var(chart, "a0") * var(chart, "th0").pow(3)) *
        (rat(chart, 27) * var(chart, "t1").pow(2) +
         rat(chart, 4) * var(chart, "a0") * var(chart, "th1").pow(3)) *
        (rat(chart, 27) * var(chart, "t2").pow(2) +
         rat(chart, 4) * var(chart, "a0") * var(chart, "th2").pow(3));
    auto [k, g] = total.extract_variable_power("a0");
    CHECK(k == 6);
    CHECK_FALSE(g.is_zero());
    auto [k2, g2] = rat(chart, 1).extract_variable_power("a0");
    CHECK(k2 == 0);
    CHECK_THROWS(LaurentPolynomial(chart).extract_variable_power("a0"));
}

TEST_CASE("canonical serialization") {
    const std::vector<std::string> ring = {"x", "y"};
    LaurentPolynomial f = rat(ring, 2) * var(ring, "y").pow(2) + var(ring, "x") + rat(ring, 5);
    CHECK(f.to_string() == "5 + 1 * x^1 + 2 * y^2");
    CHECK(LaurentPolynomial(ring).to_string() == "0");
    LaurentPolynomial lau = var(ring, "x").substitute_general(
        ring, {{"x", var(ring, "x").pow(1)}, {"y", var(ring, "y")}});
    CHECK(lau.to_string() == "1 * x^1");
}

TEST_CASE("general substitution handles zero images") {
    const std::vector<std::string> ring = {"x", "y"};
    LaurentPolynomial f = var(ring, "x") * var(ring, "y") + var(ring, "y").pow(2);
    std::map<std::string, LaurentPolynomial> imgs = {
        {"x", LaurentPolynomial(ring)},  // x -> 0
        {"y", var(ring, "y")},
    };
    CHECK(f.substitute_general(ring, imgs) == var(ring, "y").pow(2));
}
