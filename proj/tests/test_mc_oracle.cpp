#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "hypervol/errors.hpp"
#include "hypervol/mc_oracle.hpp"
#include "hypervol/models.hpp"
#include "hypervol/orthoscheme.hpp"
#include "hypervol/solids.hpp"
#include "oracles.hpp"

using namespace hypervol;
using namespace hypervol::mc;
constexpr double pi = std::numbers::pi;

namespace {

double zscore(const MCEstimate& e, double exact) { return (e.mean - exact) / e.std_error; }

}  // namespace

TEST_CASE("estimates do not depend on the thread schedule") {
    const Region r = region_ball(1.0);
    const MCEstimate par = estimate(r, 50'000, 42);
    const MCEstimate ser = estimate_serial(r, 50'000, 42);
    CHECK(par.mean == ser.mean);
    CHECK(par.std_error == ser.std_error);
    CHECK(par.samples == 50'000);
    CHECK(par.seed == 42);
    const MCEstimate again = estimate(r, 50'000, 42);
    CHECK(again.mean == par.mean);
    const MCEstimate other = estimate(r, 50'000, 43);
    CHECK(other.mean != par.mean);
}

TEST_CASE("uneven shard split") {
    const Region r = region_ball(0.5);
    const MCEstimate a = estimate(r, 10'007, 3, {}, 7);
    const MCEstimate b = estimate_serial(r, 10'007, 3, {}, 7);
    CHECK(a.mean == b.mean);
    CHECK(a.samples == 10'007);
}

TEST_CASE("empty region") {
    Region r = region_ball(1.0);
    r.contains = [](std::span<const double>) { return false; };
    const MCEstimate e = estimate(r, 20'000, 1);
    CHECK(e.mean == 0.0);
    CHECK(e.std_error == 0.0);
}

TEST_CASE("standard error scales as 1/sqrt(N)") {
    const Region r = region_ball(1.0);
    const MCEstimate a = estimate(r, 100'000, 11);
    const MCEstimate b = estimate(r, 200'000, 11);
    CHECK(b.std_error / a.std_error == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(0.2));
}

TEST_CASE("box region against coordinate quadrature") {
    const Box box{{-0.2, 0.1, 0.0}, {0.5, 0.6, 0.4}};
    const Region r = region_box(box);
    models::CoordinateRegion cr;
    cr.order = {0, 1, 2};
    for (std::size_t i = 0; i < 3; ++i) {
        const double lo = box.lo[i], hi = box.hi[i];
        cr.limits.push_back([lo, hi](std::span<const double>) { return quadrature::Interval{lo, hi}; });
    }
    const double exact = models::coordinate_volume(models::CoordinateSystem::klein, cr, 3).value;
    const MCEstimate e = estimate(r, 200'000, 5);
    CHECK(std::abs(zscore(e, exact)) < 4.0);
    CHECK(e.std_error < 0.01 * exact);
}

TEST_CASE("simplex membership") {
    const std::vector<PointKlein> v = {{{0, 0, 0}}, {{0.5, 0, 0}}, {{0, 0.5, 0}}, {{0, 0, 0.5}}};
    const Region r = region_simplex(v);
    const std::vector<double> in = {0.1, 0.1, 0.1}, out = {0.3, 0.2, 0.1}, vert = {0.5, 0, 0};
    const std::vector<double> neg = {-1e-6, 0.1, 0.1};
    CHECK(r.contains(in));
    CHECK_FALSE(r.contains(out));
    CHECK(r.contains(vert));
    CHECK_FALSE(r.contains(neg));
    CHECK(r.max_radius == doctest::Approx(0.5));
    const std::vector<PointKlein> flat = {{{0, 0, 0}}, {{0.5, 0, 0}}, {{0, 0.5, 0}}, {{0.25, 0.25, 0}}};
    CHECK_THROWS_AS(region_simplex(flat), DomainError);
}

TEST_CASE("orthoscheme vertices") {
    for (double k : {1.0, 1.7}) {
        const models::Curvature kk(k);
        const double a = 0.7 * k, b = 1.1 * k, c = 0.4 * k;
        const auto V = orthoscheme_vertices(a, b, c, kk);
        CHECK(models::klein_distance(V[0], V[1], kk) == doctest::Approx(a).epsilon(1e-10));
        CHECK(models::klein_distance(V[1], V[2], kk) == doctest::Approx(b).epsilon(1e-10));
        CHECK(models::klein_distance(V[2], V[3], kk) == doctest::Approx(c).epsilon(1e-10));
        const orthoscheme::OrthoschemeEdges e{a / k, b / k, c / k};
        CHECK(models::klein_distance(V[0], V[3], kk) == doctest::Approx(k * e.long_diagonal()).epsilon(1e-10));
        CHECK(models::klein_distance(V[0], V[2], kk) == doctest::Approx(k * e.z()).epsilon(1e-10));
    }
}

TEST_CASE("regions against closed forms") {
    constexpr std::size_t n = 200'000;
    SUBCASE("ball") {
        const MCEstimate e = estimate(region_ball(1.0), n, 101);
        CHECK(std::abs(zscore(e, oracle::kSphere11)) < 4.0);
    }
    SUBCASE("ball, k = 2") {
        const models::Curvature k(2.0);
        const MCEstimate e = estimate(region_ball(1.5, k), n, 102, k);
        CHECK(std::abs(zscore(e, solids::sphere_volume(1.5, k))) < 4.0);
    }
    SUBCASE("barrel") {
        const MCEstimate e = estimate(region_barrel(1.0, 1.0), n, 103);
        CHECK(std::abs(zscore(e, oracle::kBarrel111)) < 4.0);
    }
    SUBCASE("cone") {
        const MCEstimate e = estimate(region_cone(1.0, pi / 4), n, 104);
        CHECK(std::abs(zscore(e, oracle::kCone1_pi4)) < 4.0);
    }
    SUBCASE("slab") {
        const double w = 0.5, q = 0.8;
        const double exact = solids::equidistant_body(slab_base_area(w), q);
        const MCEstimate e = estimate(region_slab(w, q), n, 105);
        CHECK(std::abs(zscore(e, exact)) < 4.0);
    }
    SUBCASE("orthoscheme") {
        const auto V = orthoscheme_vertices(1, 1, 1);
        const MCEstimate e = estimate(region_simplex({V.begin(), V.end()}), n, 106);
        CHECK(std::abs(zscore(e, oracle::kOrtho111)) < 4.0);
    }
    SUBCASE("orthoscheme, k = 0.8") {
        const models::Curvature k(0.8);
        const auto V = orthoscheme_vertices(0.8, 0.4, 0.8, k);
        const double exact = orthoscheme::volume_edges({0.8, 0.4, 0.8}, {}, k).value;
        const MCEstimate e = estimate(region_simplex({V.begin(), V.end()}, k), n, 107, k);
        CHECK(std::abs(zscore(e, exact)) < 4.0);
    }
}

TEST_CASE("slab base area") {
    // small squares are nearly Euclidean
    CHECK(slab_base_area(1e-3) == doctest::Approx(4e-6).epsilon(1e-5));
    for (double k : {1.0, 1.6}) {
        for (double w : {0.2, 0.5, 0.65}) {
            models::CoordinateRegion sq;
            const double s = w * k;
            sq.order = {0, 1};
            sq.limits = {[s](std::span<const double>) { return quadrature::Interval{-s, s}; },
                         [s](std::span<const double>) { return quadrature::Interval{-s, s}; }};
            const double quad =
                models::coordinate_volume(models::CoordinateSystem::klein, sq, 2, models::Curvature(k)).value;
            CHECK(slab_base_area(s, models::Curvature(k)) == doctest::Approx(quad).epsilon(1e-9));
        }
    }
    // an ideal quadrilateral in the limit
    CHECK(slab_base_area(std::sqrt(0.5) * (1 - 1e-12)) == doctest::Approx(2 * pi).epsilon(1e-5));
    CHECK_THROWS_AS(slab_base_area(std::sqrt(0.5)), DomainError);
}

TEST_CASE("truncated ideal vertices") {
    const double b = 1.0;
    const double exact = 2.0 * oracle::kTwoIdeal1;
    const MCEstimate fine = estimate(region_doubled_two_ideal(b, 1 - 1e-6), 200'000, 7);
    const MCEstimate coarse = estimate(region_doubled_two_ideal(b, 1 - 1e-5), 200'000, 7);
    CHECK(std::abs(zscore(fine, exact)) < 4.0);
    // the cut-off changes the estimate far less than its statistical error
    CHECK(std::abs(fine.mean - coarse.mean) < fine.std_error);
}

TEST_CASE("invalid input") {
    const Region r = region_ball(1.0);
    CHECK_THROWS_AS(estimate(r, kMinSamples - 1, 1), DomainError);
    CHECK_THROWS_AS(estimate(r, kMinSamples, 1, {}, 0), DomainError);
    Region edge = r;
    edge.max_radius = 1.0;
    CHECK_THROWS_AS(estimate(edge, kMinSamples, 1), DomainError);
    CHECK_THROWS_AS(region_slab(0.75, 1.0), DomainError);
    CHECK_THROWS_AS(region_cone(1.0, pi / 2), DomainError);
    CHECK_THROWS_AS(region_doubled_two_ideal(1.0, 1.0), DomainError);
    CHECK_THROWS_AS(region_box({{0, 0, 0}, {0.1, 0, 0.1}}), DomainError);
}
