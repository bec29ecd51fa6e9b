#include <doctest.h>

#include <random>

#include "modcubic/motivic.hpp"

using namespace modcubic;
using namespace modcubic::motivic;

TEST_CASE("projective classes and the tetrahedron decomposition") {
    MotivicClass L = MotivicClass::lefschetz();
    MotivicClass C = MotivicClass::cstar();
    CHECK(projective_class(3) == MotivicClass::from_coefficients({1, 1, 1, 1}));
    CHECK(projective_class(0) == MotivicClass::point());
    CHECK(projective_class(3).to_string() == "L^3 + L^2 + L + 1");
    // 1 cell, 4 faces, 6 edges, 4 vertices
    CHECK(C.pow(3) + 4 * C.pow(2) + 6 * C + 4 * MotivicClass::point() == projective_class(3));
    CHECK((L - MotivicClass::point()) == C);
}

TEST_CASE("motivic ring laws (randomized)") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<long long> dist(-4, 4);
    auto random_class = [&]() {
        std::vector<long long> c(1 + static_cast<std::size_t>(rng() % 4), 0);
        for (auto& x : c) x = dist(rng);
        return MotivicClass::from_coefficients(c);
    };
    MotivicClass one = MotivicClass::point();
    for (int iter = 0; iter < 500; ++iter) {
        MotivicClass a = random_class(), b = random_class(), c = random_class();
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a * one == a);
        CHECK((a - a).is_zero());
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("fixed point certificates match the cycle criterion") {
    // (-T0, T1, T2): cycle {0} has sign -1, forcing T0 = 0
    SignedPermutation g1({0, 1, 2}, {-1, 1, 1});
    auto c1 = fixed_point_free(g1);
    CHECK(c1.fixed_point_free);
    CHECK(c1.violating_cycle == std::vector<std::size_t>{0});

    // (T1, T0, -T2): swap with signs +1, cycle {2} with sign -1
    SignedPermutation g2({1, 0, 2}, {1, 1, -1});
    auto c2 = fixed_point_free(g2);
    CHECK(c2.fixed_point_free);
    CHECK(c2.violating_cycle == std::vector<std::size_t>{2});

    SignedPermutation id({0, 1, 2}, {1, 1, 1});
    CHECK_FALSE(fixed_point_free(id).fixed_point_free);
}

TEST_CASE("certificate agrees with the linear-system oracle on all 48 elements") {
    const std::size_t perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                     {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    std::size_t odd_coset_fpf = 0;
    for (const auto& p : perms)
        for (int mask = 0; mask < 8; ++mask) {
            std::vector<int> signs = {(mask & 1) ? -1 : 1, (mask & 2) ? -1 : 1,
                                      (mask & 4) ? -1 : 1};
            SignedPermutation g({p[0], p[1], p[2]}, signs);
            bool fast = fixed_point_free(g).fixed_point_free;
            CHECK(fast == fixed_point_free_oracle(g));
            if (g.total_sign() == -1) {
                CHECK(fast);  // coset criterion
                ++odd_coset_fpf;
            }
        }
    CHECK(odd_coset_fpf == 24);
}

TEST_CASE("coset criterion holds exhaustively for k = 4") {
    std::vector<std::vector<std::size_t>> perms;
    std::vector<std::size_t> base = {0, 1, 2, 3};
    do perms.push_back(base);
    while (std::next_permutation(base.begin(), base.end()));
    for (const auto& p : perms)
        for (int mask = 0; mask < 16; ++mask) {
            std::vector<int> signs;
            for (int b = 0; b < 4; ++b) signs.push_back((mask >> b) & 1 ? -1 : 1);
            SignedPermutation g(p, signs);
            bool fast = fixed_point_free(g).fixed_point_free;
            CHECK(fast == fixed_point_free_oracle(g));
            if (g.total_sign() == -1) CHECK(fast);
        }
}

TEST_CASE("stratum sum reproduces [P^3]") {
    MotivicClass L = MotivicClass::lefschetz();
    MotivicClass C = MotivicClass::cstar();
    std::vector<std::pair<MotivicClass, long long>> strata = {
        {C * L * L, 1},              // (1)
        {C * L, 2},                  // (2), (3)
        {C, 3},                      // (4), (5), (6)
        {MotivicClass::point(), 4},  // (7) .. (10)
    };
    CHECK(stratum_sum(strata) == projective_class(3));
    CHECK(stratum_sum({}).is_zero());
    CHECK(stratum_sum({{C, 1}, {MotivicClass::point(), 1}}) == L);
}

TEST_CASE("toric orbit route equals the table route") {
    using namespace modcubic::toric;
    LatticePolytope p =
        polytope_from_character(gamma_matrix(), reference_kernel_basis(), character_offsets());
    enumerate_vertices(p);
    auto lattice = face_lattice_audit(p);
    auto action = s3_action_audit(tau_matrix(), sigma_matrix(), p);
    auto orbits = face_orbits(tau_matrix(), sigma_matrix(), p, lattice, action);
    auto cat = default_catalogue();
    CHECK(toric_orbit_classes(orbits.orbits, cat) == projective_class(3));

    // trivial group: every face contributes (L-1)^dim, total (L+1)^3
    auto trivial_action =
        s3_action_audit(IntegerMatrix::identity(3), IntegerMatrix::identity(3), p);
    auto trivial = face_orbits(IntegerMatrix::identity(3), IntegerMatrix::identity(3), p,
                               lattice, trivial_action);
    MotivicClass L = MotivicClass::lefschetz();
    CHECK(toric_orbit_classes(trivial.orbits, cat) ==
          (L + MotivicClass::point()).pow(3));

    CHECK(toric_orbit_classes({}, cat).is_zero());

    // uncatalogued pairs fail loudly
    toric::FaceOrbit weird;
    weird.dim = 2;
    weird.action = "unclassified";
    CHECK_THROWS(toric_orbit_classes({weird}, cat));
}
