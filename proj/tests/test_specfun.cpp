#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "doctest.h"
#include "hypervol/errors.hpp"
#include "hypervol/specfun.hpp"
#include "oracles.hpp"

using namespace hypervol;
using specfun::clausen2;
using specfun::lobachevsky;
constexpr double pi = std::numbers::pi;

TEST_CASE("lobachevsky reference values") {
    CHECK(lobachevsky(pi / 6) == doctest::Approx(oracle::kLobPi6).epsilon(1e-15));
    CHECK(3 * lobachevsky(pi / 3) == doctest::Approx(oracle::kRegularIdeal).epsilon(1e-15));
    CHECK(8 * lobachevsky(pi / 4) == doctest::Approx(oracle::kRegularOctahedron).epsilon(1e-15));
    CHECK(lobachevsky(0.0) == 0.0);
    CHECK(std::abs(lobachevsky(pi / 2)) < 4e-16);
    CHECK(std::abs(lobachevsky(pi)) < 1e-16);
}

TEST_CASE("clausen at pi/2 is Catalan's constant") {
    CHECK(std::abs(clausen2(pi / 2) - oracle::kCatalan) < 1e-15);
    CHECK(std::abs(specfun::im_li2_unit(pi / 2) - oracle::kCatalan) < 1e-15);
}

TEST_CASE("series agrees with the defining integral") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-4.0, 4.0);
    for (int i = 0; i < 200; ++i) {
        const double x = u(rng);
        CHECK(std::abs(lobachevsky(x) - oracle::lobachevsky_quad(x)) < 1e-13);
    }
    for (double x : {1e-8, 1e-4, 0.3, pi / 2 - 1e-9, pi / 2 + 1e-9, pi - 1e-7}) {
        CHECK(std::abs(lobachevsky(x) - oracle::lobachevsky_quad(x)) < 1e-13);
    }
}

TEST_CASE("identities: odd, pi-periodic, duplication") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-10.0, 10.0);
    for (int i = 0; i < 100; ++i) {
        const double x = u(rng);
        CHECK(std::abs(lobachevsky(-x) + lobachevsky(x)) < 1e-15);
        CHECK(std::abs(lobachevsky(x + pi) - lobachevsky(x)) < 1e-13);
        CHECK(std::abs(lobachevsky(2 * x) - 2 * lobachevsky(x) - 2 * lobachevsky(x + pi / 2)) < 1e-13);
        CHECK(std::abs(clausen2(x) - 2 * lobachevsky(x / 2)) < 1e-14);
    }
}

TEST_CASE("maximum at pi/6") {
    const double peak = lobachevsky(pi / 6);
    for (double d : {1e-3, 1e-2, 0.1}) {
        CHECK(lobachevsky(pi / 6 + d) < peak);
        CHECK(lobachevsky(pi / 6 - d) < peak);
    }
}

TEST_CASE("large arguments reduce") {
    CHECK(std::abs(lobachevsky(1000 * pi + pi / 6) - oracle::kLobPi6) < 1e-12);
    CHECK(std::abs(clausen2(-2000 * pi + pi / 2) - oracle::kCatalan) < 1e-12);
}

TEST_CASE("non-finite input is a domain error") {
    CHECK_THROWS_AS(lobachevsky(std::numeric_limits<double>::quiet_NaN()), DomainError);
    CHECK_THROWS_AS(clausen2(std::numeric_limits<double>::infinity()), DomainError);
}
