#pragma once

// Monte-Carlo volume oracle in the Klein ball of radius k. Points are drawn
// uniformly in the region's bounding box and weighted by the Klein density.
//
// Sharding: the sample budget is split into a fixed number of shards. Shard i
// draws from std::mt19937_64 seeded with seed_seq{seed_lo, seed_hi, i}; its
// running mean/variance are merged with the others in shard order. The
// result depends only on (seed, samples, shards), never on the thread count.

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "hypervol/models.hpp"

namespace hypervol::mc {

using models::Curvature;
using models::PointKlein;

struct Box {
    std::vector<double> lo;
    std::vector<double> hi;
    double volume() const;
};

struct Region {
    std::function<bool(std::span<const double>)> contains;
    Box bbox;
    std::size_t dim = 3;
    /// Largest Euclidean norm of a member point (explicit truncation included).
    double max_radius = 0.0;
};

struct MCEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
};

inline constexpr std::size_t kDefaultShards = 64;
inline constexpr std::size_t kMinSamples = 10'000;

/// OpenMP over shards.
MCEstimate estimate(const Region& r, std::size_t samples, std::uint64_t seed, Curvature k = {},
                    std::size_t shards = kDefaultShards);
/// Same estimator, one shard after the other on the calling thread.
MCEstimate estimate_serial(const Region& r, std::size_t samples, std::uint64_t seed,
                           Curvature k = {}, std::size_t shards = kDefaultShards);

/// Orthoscheme vertices O, A1, A2, A3 (orthogonal coordinates (0,0,0),
/// (0,0,a), (b,0,a), (b,c,a)) in Klein coordinates.
std::array<PointKlein, 4> orthoscheme_vertices(double a, double b, double c, Curvature k = {});

/// Euclidean simplex; boundary counts as inside.
Region region_simplex(const std::vector<PointKlein>& vertices, Curvature k = {});

Region region_box(const Box& box, Curvature k = {});

/// Hyperbolic ball of radius x about the origin.
Region region_ball(double x, Curvature k = {});

/// Points whose nearest point on a segment of length p (centred on the X1
/// axis) is interior to the segment and lies within distance q.
Region region_barrel(double p, double q, Curvature k = {});

/// Cone with apex at the origin, axis X3, half-angle beta and base circle of radius b.
Region region_cone(double b, double beta, Curvature k = {});

/// Points above the plane X3 = 0 within distance q of it whose foot lies in
/// the square |X1|, |X2| <= w (Klein coordinates).
Region region_slab(double w, double q, Curvature k = {});

/// Hyperbolic area of the base square of region_slab.
double slab_base_area(double w, Curvature k = {});

/// Two copies of the orthoscheme with edge b and two ideal vertices, glued
/// along a face: vertices (0,0,+-1), (tanh t, 0, 0), (tanh t, sech t, 0) times k,
/// with t = b/k. Points beyond Euclidean radius truncation * k are dropped.
Region region_doubled_two_ideal(double b, double truncation, Curvature k = {});

}  // namespace hypervol::mc
