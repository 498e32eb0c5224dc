#pragma once

// Coordinate systems on hyperbolic n-space and their volume densities.
//
// Conventions (k is the curvature parameter, v_n = 1 throughout):
//  * Paracycle coordinates xi_1..xi_n: xi_n is the signed distance to a base
//    parasphere, growing towards the common ideal point of the parallel
//    pencil; xi_1..xi_{n-1} are paracycle arc lengths on the base parasphere.
//  * Orthogonal coordinates x_1..x_n: x_{n-1} is the distance of P from the
//    hyperplane of the axes {1..n-2, n}, x_{n-2} the distance of that foot from
//    the next coordinate subspace, and so on; x_n is the distance of the last
//    foot (on axis n) from the origin. Axis n coincides with the paracycle
//    xi_n axis.
//  * Spherical coordinates (r, phi_1..phi_{n-1}): r is the distance from the
//    origin; phi_1 in [0, 2pi) is the azimuth in the plane of axes 1 and n;
//    phi_2..phi_{n-1} in [0, pi] are polar angles measured from axes 2..n-1.
//  * Klein (projective) coordinates X_1..X_n inside the ball of radius k,
//    sharing the angles of the spherical system with Euclidean radius
//    R = k tanh(r/k).
//  * Half-space coordinates: x_i = xi_i (i < n), x_n = exp(xi_n / k).

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "hypervol/quadrature.hpp"

namespace hypervol::models {

/// Curvature parameter k > 0 (Bolyai's space constant). Default 1.
class Curvature {
public:
    Curvature() = default;
    explicit Curvature(double k);
    double value() const noexcept { return k_; }

private:
    double k_ = 1.0;
};

inline constexpr std::size_t kMinDim = 2;
inline constexpr std::size_t kMaxDim = 8;

struct PointParacycle {
    std::vector<double> xi;
    std::size_t dim() const noexcept { return xi.size(); }
};

struct PointOrthogonal {
    std::vector<double> x;
    std::size_t dim() const noexcept { return x.size(); }
};

struct PointSpherical {
    double r = 0.0;
    std::vector<double> phi;  // phi[0] = phi_1 (azimuth), phi[i] = phi_{i+1}
    std::size_t dim() const noexcept { return phi.size() + 1; }
};

struct PointKlein {
    std::vector<double> X;
    std::size_t dim() const noexcept { return X.size(); }
};

// densities -----------------------------------------------------------------

double density_paracycle(const PointParacycle& p, Curvature k = {});
/// k / x_n^n for a half-space point with last coordinate x_n > 0.
double density_halfspace(std::span<const double> x, Curvature k = {});
double density_orthogonal(const PointOrthogonal& p, Curvature k = {});
double density_spherical(const PointSpherical& p, Curvature k = {});
double density_klein(const PointKlein& p, Curvature k = {});

/// Volume of the paracycle brick [0,a_1] x ... x [0,a_{n-1}] x [0,a_n].
/// a_n may be +infinity (sector of parallel half-lines).
double paracycle_brick_volume(std::span<const double> edges, Curvature k = {});

/// Half-chord d of a paracycle arc -> (half arc length s, sagitta z).
struct ChordArc {
    double s;
    double z;
};
ChordArc chord_arc(double d, Curvature k = {});

// transforms ------------------------------------------------------------------

PointOrthogonal paracycle_to_orthogonal(const PointParacycle& p, Curvature k = {});
PointParacycle orthogonal_to_paracycle(const PointOrthogonal& p, Curvature k = {});

PointSpherical orthogonal_to_spherical(const PointOrthogonal& p, Curvature k = {});
PointOrthogonal spherical_to_orthogonal(const PointSpherical& p, Curvature k = {});

PointKlein spherical_to_klein(const PointSpherical& p, Curvature k = {});
PointSpherical klein_to_spherical(const PointKlein& p, Curvature k = {});

PointKlein orthogonal_to_klein(const PointOrthogonal& p, Curvature k = {});
PointOrthogonal klein_to_orthogonal(const PointKlein& p, Curvature k = {});

/// Paracycle point -> half-space point (x_i = xi_i, x_n = e^{xi_n/k}).
std::vector<double> paracycle_to_halfspace(const PointParacycle& p, Curvature k = {});

/// Hyperbolic distance between two points of the Klein ball.
double klein_distance(const PointKlein& p, const PointKlein& q, Curvature k = {});

// coordinate-domain volume ----------------------------------------------------

enum class CoordinateSystem { paracycle, halfspace, orthogonal, spherical, klein };

/// Region of integration in one of the coordinate systems. Level j of the
/// iterated integral runs over coordinate order[j] (outermost first) between
/// limits[j](values of levels 0..j-1). Coordinates are numbered 0..n-1 in the
/// natural order of the system; for the spherical system 0 is r and 1..n-1
/// are phi_1..phi_{n-1}.
struct CoordinateRegion {
    std::vector<std::size_t> order;
    std::vector<quadrature::LimitFn> limits;
};

/// Iterated quadrature of the system's density over the region.
quadrature::IntegralResult coordinate_volume(CoordinateSystem system,
                                             const CoordinateRegion& region, std::size_t n,
                                             Curvature k = {},
                                             const quadrature::Tolerance& tol = {});

}  // namespace hypervol::models
