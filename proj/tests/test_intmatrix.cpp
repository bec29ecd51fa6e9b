#include <doctest.h>

#include <random>

#include "modcubic/intmatrix.hpp"

using modcubic::BigInt;
using modcubic::FiniteAbelianGroup;
using modcubic::IntegerMatrix;

namespace {

IntegerMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int bound) {
    std::uniform_int_distribution<long long> dist(-bound, bound);
    IntegerMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = BigInt(dist(rng));
    return m;
}

bool is_unimodular(const IntegerMatrix& u) {
    BigInt d = modcubic::determinant(u);
    return d == BigInt(1) || d == BigInt(-1);
}

}  // namespace

TEST_CASE("smith normal form reproduces the stabilizer kernels") {
    auto diag_groups = [](std::vector<std::vector<long long>> rows) {
        return FiniteAbelianGroup::from_smith_diagonal(
                   modcubic::smith_diagonal(IntegerMatrix::from_rows(rows)))
            .to_string();
    };
    CHECK(diag_groups({{-3, 3}, {-6, -3}}) == "Z3 x Z9");
    CHECK(diag_groups({{-2, 2}, {-4, -2}}) == "Z2 x Z6");
    CHECK(diag_groups({{-3, 3}, {-5, -2}}) == "Z21");
    CHECK(diag_groups({{-3, 2}, {-5, -2}}) == "Z16");
    CHECK(diag_groups({{1, 0}, {0, 1}}) == "1");
    CHECK(modcubic::smith_diagonal(IntegerMatrix::identity(2)) ==
          std::vector<BigInt>{BigInt(1), BigInt(1)});
}

TEST_CASE("smith normal form properties on random matrices") {
    std::mt19937_64 rng(2024);
    for (int iter = 0; iter < 1000; ++iter) {
        std::size_t r = 1 + iter % 4, c = 1 + (iter / 4) % 4;
        IntegerMatrix a = random_matrix(rng, r, c, 9);
        auto res = modcubic::smith_normal_form(a);
        CHECK(res.u * a * res.v == res.s);
        CHECK(is_unimodular(res.u));
        CHECK(is_unimodular(res.v));
        for (std::size_t t = 0; t + 1 < std::min(r, c); ++t) {
            if (res.s.at(t, t).is_zero()) CHECK(res.s.at(t + 1, t + 1).is_zero());
            else CHECK((res.s.at(t + 1, t + 1) % res.s.at(t, t)).is_zero());
        }
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                if (i != j) CHECK(res.s.at(i, j).is_zero());
        if (r == c) {
            BigInt p(1);
            for (std::size_t t = 0; t < r; ++t) p *= res.s.at(t, t);
            CHECK(p.abs() == modcubic::determinant(a).abs());
        }
    }
}

TEST_CASE("kernel lattice: examples and saturation") {
    // gamma from the toric character pipeline
    IntegerMatrix gamma = IntegerMatrix::from_rows(
        {{1, 1, 1, 1, 1, 1}, {-3, 3, 0, -2, 2, 0}, {-3, 0, 3, -2, 0, 2}});
    IntegerMatrix k = modcubic::kernel_lattice(gamma);
    CHECK(k.cols() == 3);
    CHECK((gamma * k).is_zero());
    IntegerMatrix reference_basis = IntegerMatrix::from_rows({{0, 0, 1},
                                                          {-2, 0, 1},
                                                          {-16, -6, 1},
                                                          {-3, -1, -1},
                                                          {0, -1, -1},
                                                          {21, 8, -1}});
    CHECK((gamma * reference_basis).is_zero());
    CHECK(modcubic::same_column_lattice(k, reference_basis));

    IntegerMatrix zero(2, 3);
    CHECK(modcubic::kernel_lattice(zero) == IntegerMatrix::identity(3));

    IntegerMatrix row = IntegerMatrix::from_rows({{1, 1}});
    IntegerMatrix kr = modcubic::kernel_lattice(row);
    CHECK(kr.cols() == 1);
    CHECK(kr.at(0, 0) * kr.at(1, 0) == BigInt(-1));
}

TEST_CASE("kernel saturation on random matrices") {
    std::mt19937_64 rng(55);
    std::uniform_int_distribution<long long> dist(-4, 4);
    for (int iter = 0; iter < 400; ++iter) {
        IntegerMatrix a = random_matrix(rng, 1 + iter % 3, 2 + iter % 4, 5);
        IntegerMatrix k = modcubic::kernel_lattice(a);
        CHECK((a * k).is_zero());
        CHECK(k.cols() == a.cols() - modcubic::rank(a));
        // any random integer kernel vector must be an integer combination of k
        if (k.cols() == 0) continue;
        std::vector<BigInt> combo(a.cols(), BigInt(0));
        for (std::size_t j = 0; j < k.cols(); ++j) {
            BigInt c(dist(rng));
            for (std::size_t i = 0; i < a.cols(); ++i) combo[i] += c * k.at(i, j);
        }
        IntegerMatrix aug(a.cols(), k.cols() + 1);
        for (std::size_t i = 0; i < a.cols(); ++i) {
            for (std::size_t j = 0; j < k.cols(); ++j) aug.at(i, j) = k.at(i, j);
            aug.at(i, k.cols()) = combo[i];
        }
        CHECK(modcubic::same_column_lattice(aug, k));
    }
}

TEST_CASE("sublattice index") {
    IntegerMatrix b =
        IntegerMatrix::from_rows({{0, 1, -1}, {3, -8, -1}, {-3, 7, -7}});
    auto idx = modcubic::sublattice_index(b);
    REQUIRE(idx.has_value());
    CHECK(*idx == BigInt(27));
    CHECK(*modcubic::sublattice_index(IntegerMatrix::identity(3)) == BigInt(1));
    IntegerMatrix two = IntegerMatrix::from_rows({{2, 0, 0}, {0, 2, 0}, {0, 0, 2}});
    CHECK(*modcubic::sublattice_index(two) == BigInt(8));
    IntegerMatrix sing = IntegerMatrix::from_rows({{1, 2}, {2, 4}});
    CHECK(!modcubic::sublattice_index(sing).has_value());
}

TEST_CASE("hermite form is canonical for lattice comparison") {
    std::mt19937_64 rng(77);
    for (int iter = 0; iter < 200; ++iter) {
        IntegerMatrix a = random_matrix(rng, 3, 3, 6);
        auto h = modcubic::hermite_normal_form(a);
        CHECK(h.u * a == h.h);
        CHECK(is_unimodular(h.u));
    }
}

TEST_CASE("finite abelian group validation") {
    CHECK(FiniteAbelianGroup({BigInt(3), BigInt(9)}).order() == BigInt(27));
    CHECK(FiniteAbelianGroup().is_trivial());
    CHECK_THROWS(FiniteAbelianGroup({BigInt(1)}));
    CHECK_THROWS(FiniteAbelianGroup({BigInt(4), BigInt(6)}));
    CHECK(modcubic::prime_factors(BigInt(24)) == std::vector<long long>{2, 3});
    CHECK(modcubic::prime_factors(BigInt(21)) == std::vector<long long>{3, 7});
}
