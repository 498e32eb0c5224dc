#include <cmath>
#include <numbers>

#include "doctest.h"
#include "hypervol/errors.hpp"
#include "hypervol/solids.hpp"
#include "oracles.hpp"

using namespace hypervol;
using namespace hypervol::solids;
using models::Curvature;
constexpr double pi = std::numbers::pi;

TEST_CASE("reference values") {
    CHECK(sphere_volume(1.0) == doctest::Approx(oracle::kSphere11).epsilon(1e-14));
    CHECK(equidistant_body(1.0, 1.0) == doctest::Approx(oracle::kEquidistant111).epsilon(1e-14));
    CHECK(barrel(1.0, 1.0) == doctest::Approx(oracle::kBarrel111).epsilon(1e-14));
    CHECK(asymptotic_cone(1.0) == doctest::Approx(oracle::kAsymptoticCone1).epsilon(1e-14));
    CHECK(paraspherical_sector(2.0, Curvature(3.0)) == 3.0);
    CHECK(barrel_wedge(2.0, 3.0) == 3.0);
}

TEST_CASE("zero parameters give zero") {
    CHECK(sphere_volume(0.0) == 0.0);
    CHECK(equidistant_body(1.0, 0.0) == 0.0);
    CHECK(barrel(1.0, 0.0) == 0.0);
    CHECK(paraspherical_sector(0.0) == 0.0);
    CHECK(barrel_wedge(1.0, 0.0) == 0.0);
    CHECK(circular_cone(0.0, 0.5).value == 0.0);
    CHECK(asymptotic_cone(0.0) == 0.0);
}

TEST_CASE("circular cone against the geometric cone") {
    CHECK(circular_cone(1.0, pi / 4).value == doctest::Approx(oracle::kCone1_pi4).epsilon(1e-12));
    CHECK(circular_cone(0.5, 0.3).value == doctest::Approx(oracle::kCone05_03).epsilon(1e-12));
    CHECK(circular_cone(1.5, 1.2).value == doctest::Approx(oracle::kCone15_12).epsilon(1e-12));
    // the cone thins to its axis as beta -> pi/2
    CHECK(circular_cone(1.0, pi / 2 - 1e-6).value < 1e-5);
    CHECK_THROWS_AS(circular_cone(1.0, pi / 2), DomainError);
    CHECK_THROWS_AS(circular_cone(1.0, 0.0), DomainError);
}

TEST_CASE("closed forms match coordinate quadrature") {
    for (double v : {0.1, 0.5, 1.0, 2.0, 3.0}) {
        CHECK(std::abs(sphere_volume(v) - sphere_volume_quadrature(v).value) < 1e-8);
        CHECK(std::abs(equidistant_body(1.3, v) - equidistant_body_quadrature(1.3, v).value) < 1e-8);
        CHECK(std::abs(barrel(0.7, v) - barrel_quadrature(0.7, v).value) < 1e-8);
        const Curvature k(1.7);
        CHECK(std::abs(sphere_volume(v, k) - sphere_volume_quadrature(v, k).value) < 1e-8);
        CHECK(std::abs(equidistant_body(1.3, v, k) - equidistant_body_quadrature(1.3, v, k).value) < 1e-8);
        CHECK(std::abs(barrel(0.7, v, k) - barrel_quadrature(0.7, v, k).value) < 1e-8);
    }
}

TEST_CASE("monotone in each size parameter") {
    double prev_s = 0, prev_e = 0, prev_b = 0, prev_c = 0, prev_a = 0;
    for (double v = 0.1; v < 3.0; v += 0.1) {
        CHECK(sphere_volume(v) > prev_s);
        CHECK(equidistant_body(1.0, v) > prev_e);
        CHECK(barrel(1.0, v) > prev_b);
        CHECK(asymptotic_cone(v) > prev_a);
        const double c = circular_cone(v, 0.6).value;
        CHECK(c > prev_c);
        prev_s = sphere_volume(v);
        prev_e = equidistant_body(1.0, v);
        prev_b = barrel(1.0, v);
        prev_a = asymptotic_cone(v);
        prev_c = c;
    }
    CHECK(equidistant_body(2.0, 1.0) > equidistant_body(1.0, 1.0));
    CHECK(barrel(2.0, 1.0) > barrel(1.0, 1.0));
}

TEST_CASE("k scaling") {
    for (double x : {0.3, 1.0, 2.5}) {
        for (double k : {0.5, 2.0, 3.0}) {
            const Curvature kk(k);
            CHECK(sphere_volume(x, kk) == doctest::Approx(k * k * k * sphere_volume(x / k)).epsilon(1e-10));
            // barrel and slab: segment length / base area scale like k and k^2
            CHECK(barrel(k * 0.8, x, kk) == doctest::Approx(k * k * k * barrel(0.8, x / k)).epsilon(1e-10));
            CHECK(equidistant_body(k * k * 0.8, x, kk) ==
                  doctest::Approx(k * k * k * equidistant_body(0.8, x / k)).epsilon(1e-10));
            CHECK(circular_cone(x, 0.7, kk).value ==
                  doctest::Approx(k * k * k * circular_cone(x / k, 0.7).value).epsilon(1e-10));
            CHECK(asymptotic_cone(x, kk) == doctest::Approx(k * k * k * asymptotic_cone(x / k)).epsilon(1e-10));
        }
    }
}

TEST_CASE("euclidean limits") {
    const double e = 1e-2;
    CHECK(sphere_volume(e) / (4.0 / 3.0 * pi * e * e * e) == doctest::Approx(1.0).epsilon(1e-4));
    CHECK(equidistant_body(1.0, e) / e == doctest::Approx(1.0).epsilon(1e-3));
    CHECK(barrel(1.0, e) / (pi * e * e) == doctest::Approx(1.0).epsilon(1e-3));
    CHECK(asymptotic_cone(e) / (pi * e * e / 2) == doctest::Approx(1.0).epsilon(1e-3));
    // tiny radii keep full relative precision
    CHECK(sphere_volume(1e-6) / (4.0 / 3.0 * pi * 1e-18) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("negative inputs are domain errors") {
    CHECK_THROWS_AS(sphere_volume(-1.0), DomainError);
    CHECK_THROWS_AS(barrel(1.0, -1.0), DomainError);
    CHECK_THROWS_AS(equidistant_body(-1.0, 1.0), DomainError);
    CHECK_THROWS_AS(barrel_wedge(1.0, -2.0), DomainError);
    CHECK_THROWS_AS(asymptotic_cone(-0.1), DomainError);
    CHECK_THROWS_AS(sphere_volume(NAN), DomainError);
}
