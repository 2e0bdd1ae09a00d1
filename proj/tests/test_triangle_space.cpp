#include <cmath>
#include <random>

#include "doctest.h"
#include "finsler/triangle_space.hpp"

using namespace finsler;

TEST_CASE("side and excess coordinates are inverse linear maps") {
    const TriangleA equilateral = sides_to_excess({1.0, 1.0, 1.0});
    CHECK(equilateral.a1 == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(equilateral.a2 == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(equilateral.a3 == doctest::Approx(0.5).epsilon(1e-15));

    const TriangleSides doubled = excess_to_sides({1.0, 1.0, 1.0});
    CHECK(doubled.a1 == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(doubled.a2 == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(doubled.a3 == doctest::Approx(2.0).epsilon(1e-15));

    std::mt19937_64 rng(80);
    std::uniform_real_distribution<double> side(0.1, 5.0);
    int round_trips = 0;
    while (round_trips < 500) {
        const TriangleSides s{side(rng), side(rng), side(rng)};
        if (!(s.a1 + s.a2 > s.a3 && s.a2 + s.a3 > s.a1 && s.a3 + s.a1 > s.a2)) continue;
        const TriangleSides back = excess_to_sides(sides_to_excess(s));
        CHECK(back.a1 == doctest::Approx(s.a1).epsilon(1e-15));
        CHECK(back.a2 == doctest::Approx(s.a2).epsilon(1e-15));
        CHECK(back.a3 == doctest::Approx(s.a3).epsilon(1e-15));
        ++round_trips;
    }

    CHECK_THROWS_AS(sides_to_excess({1.0, 1.0, 2.5}), std::invalid_argument);
    CHECK_THROWS_AS(sides_to_excess({-1.0, 1.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(excess_to_sides({0.0, 1.0, 1.0}), std::invalid_argument);
}

TEST_CASE("heron area values and scaling degree") {
    // Equilateral with side 1 has area sqrt(3)/4.
    CHECK(heron_area({0.5, 0.5, 0.5}) == doctest::Approx(std::sqrt(3.0) / 4.0).epsilon(1e-15));
    // Doubling the sides quadruples the area.
    CHECK(heron_area({1.0, 1.0, 1.0}) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-15));

    std::mt19937_64 rng(81);
    std::uniform_real_distribution<double> coord(0.05, 4.0);
    std::uniform_real_distribution<double> lam(0.1, 10.0);
    for (int k = 0; k < 500; ++k) {
        const TriangleA a{coord(rng), coord(rng), coord(rng)};
        const double l = lam(rng);
        CHECK(heron_area({l * a.a1, l * a.a2, l * a.a3}) ==
              doctest::Approx(l * l * heron_area(a)).epsilon(1e-12));
    }
}

TEST_CASE("unit area normalization") {
    const UnitAreaTriangle u = normalize_unit_area({1.0, 1.0, 1.0});
    CHECK(u.coords.a1 == doctest::Approx(std::pow(3.0, -0.25)).epsilon(1e-14));
    CHECK(heron_area(u.coords) == doctest::Approx(1.0).epsilon(1e-14));

    std::mt19937_64 rng(82);
    std::uniform_real_distribution<double> coord(0.05, 4.0);
    std::uniform_real_distribution<double> lam(0.1, 10.0);
    for (int k = 0; k < 500; ++k) {
        const TriangleA a{coord(rng), coord(rng), coord(rng)};
        const UnitAreaTriangle n = normalize_unit_area(a);
        CHECK(std::abs(heron_area(n.coords) - 1.0) <= 1e-12);
        // Scale invariance of the normalization map.
        const double l = lam(rng);
        const UnitAreaTriangle m = normalize_unit_area({l * a.a1, l * a.a2, l * a.a3});
        CHECK(m.coords.a1 == doctest::Approx(n.coords.a1).epsilon(1e-12));
        // Idempotence on the slice.
        const UnitAreaTriangle twice = normalize_unit_area(n.coords);
        CHECK(twice.coords.a2 == doctest::Approx(n.coords.a2).epsilon(1e-12));
    }
}

TEST_CASE("eta closed values and asymmetry off the slice") {
    CHECK(eta({1, 1, 1}, {1, 1, 1}) == 0.0);
    CHECK(eta({1, 1, 1}, {2, 2, 2}) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
    CHECK(eta({1, 2, 1}, {2, 1, 1}) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
    CHECK(eta({2, 1, 1}, {1, 2, 1}) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
    CHECK(eta({1, 2, 1}, {1, 1, 1}) == doctest::Approx(0.0));
    CHECK(eta({1, 1, 1}, {1, 2, 1}) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
}

TEST_CASE("eta on the unit-area slice: nonnegative weak metric") {
    std::mt19937_64 rng(83);
    for (int k = 0; k < 1000; ++k) {
        const TriangleA x = sample_unit_area_triangle(rng).coords;
        const TriangleA y = sample_unit_area_triangle(rng).coords;
        const TriangleA z = sample_unit_area_triangle(rng).coords;
        CHECK(eta(x, x) == 0.0);
        CHECK(eta(x, y) >= 0.0);
        CHECK(eta(x, z) - eta(x, y) - eta(y, z) <= 1e-12);
    }
}

TEST_CASE("scaling identity for eta") {
    CHECK(eta_scaling_residual({1, 1, 1}, {2, 2, 2}, 1.0, 1.0) <= 1e-15);
    CHECK(eta_scaling_residual({1, 1, 1}, {2, 2, 2}, 2.0, 3.0) <= 1e-12);

    std::mt19937_64 rng(84);
    std::uniform_real_distribution<double> coord(0.1, 3.0);
    std::uniform_real_distribution<double> lam(0.5, 2.0);
    for (int k = 0; k < 1000; ++k) {
        const TriangleA x{coord(rng), coord(rng), coord(rng)};
        const TriangleA y{coord(rng), coord(rng), coord(rng)};
        CHECK(eta_scaling_residual(x, y, lam(rng), lam(rng)) <= 1e-12);
    }
}

TEST_CASE("eta families: endpoints, symmetry, evaluation") {
    std::mt19937_64 rng(85);
    const WeakMetric eta0 = eta_family(FamilyKind::arith, Weight(0.0));
    const WeakMetric arith_half = eta_family(FamilyKind::arith, Weight(0.5));
    const WeakMetric max_half = eta_family(FamilyKind::max, Weight(0.5));
    const WeakMetric arith_03 = eta_family(FamilyKind::arith, Weight(0.3));

    for (int k = 0; k < 1000; ++k) {
        const UnitAreaTriangle xt = sample_unit_area_triangle(rng);
        const UnitAreaTriangle yt = sample_unit_area_triangle(rng);
        const Vec x = vec3(xt.coords.a1, xt.coords.a2, xt.coords.a3);
        const Vec y = vec3(yt.coords.a1, yt.coords.a2, yt.coords.a3);
        CHECK(eta0(x, y) == doctest::Approx(eta(xt.coords, yt.coords)).epsilon(1e-15));
        CHECK(std::abs(arith_half(x, y) - arith_half(y, x)) <= 1e-12);
        CHECK(std::abs(max_half(x, y) - max_half(y, x)) <= 1e-12);
        const double expected =
            0.7 * eta(xt.coords, yt.coords) + 0.3 * eta(yt.coords, xt.coords);
        CHECK(arith_03(x, y) == doctest::Approx(expected).epsilon(1e-13));
    }

    // Inputs off the unit-area slice are rejected.
    CHECK_THROWS_AS(arith_half(vec3(1, 1, 1), vec3(1, 1, 1)), std::invalid_argument);
    CHECK_THROWS_AS(arith_half(vec2(1, 1), vec2(1, 1)), std::invalid_argument);
}

TEST_CASE("asymmetry witness search") {
    // eta itself is asymmetric on the slice.
    const auto t0 = asymmetry_witness(Weight(0.0), FamilyKind::arith, 10000, 42);
    REQUIRE(t0.has_value());
    CHECK(t0->gap > 0.01);
    CHECK(std::abs(heron_area(t0->x.coords) - 1.0) <= 1e-12);
    CHECK(t0->gap == doctest::Approx(std::abs(t0->forward - t0->backward)));

    const auto t03 = asymmetry_witness(Weight(0.3), FamilyKind::arith, 10000, 42);
    REQUIRE(t03.has_value());
    CHECK(t03->gap > 0.01);

    const auto t03m = asymmetry_witness(Weight(0.3), FamilyKind::max, 10000, 42);
    REQUIRE(t03m.has_value());
    CHECK(t03m->gap > 0.01);

    // The arithmetic family at t = 1/2 is symmetric by construction.
    CHECK_FALSE(asymmetry_witness(Weight(0.5), FamilyKind::arith, 2000, 42).has_value());

    CHECK_THROWS_AS(asymmetry_witness(Weight(0.3), FamilyKind::arith, 0, 42),
                    std::invalid_argument);
}
