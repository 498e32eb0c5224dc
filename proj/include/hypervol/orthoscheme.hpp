#pragma once

// Orthoschemes of hyperbolic 3-space (k = 1 unless a Curvature is passed).
//
// Edge parameters: a, b, c with a perpendicular to b and c perpendicular to
// the plane (a, b). In orthogonal coordinates the vertices are
//   O = (0,0,0), A1 = (0,0,a), A2 = (b,0,a), A3 = (b,c,a)
// (coordinate order x_1, x_2, x_3). The three non-right dihedral angles are
//   alpha at OA1 (edge a), gamma at A2A3 (edge c), beta at the diagonal OA3,
// and delta is the auxiliary angle with tan delta = tanh a tan alpha = tanh c tan gamma.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hypervol/models.hpp"
#include "hypervol/quadrature.hpp"
#include "hypervol/specfun.hpp"

namespace hypervol::orthoscheme {

using models::Curvature;
using quadrature::IntegralResult;
using quadrature::Tolerance;

struct OrthoschemeEdges {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;

    /// Face diagonal OA2: cosh z = cosh a cosh b.
    double z() const;
    /// Long diagonal OA3: cosh Z = cosh a cosh b cosh c.
    double long_diagonal() const;
    void validate() const;
};

struct OrthoschemeAngles {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
    double delta = 0.0;

    /// Fills delta from the three dihedral angles.
    static OrthoschemeAngles from_dihedrals(double alpha, double beta, double gamma);
    /// Throws NotRealizableError unless 0 < delta < min(alpha, gamma, pi/2 - beta).
    void validate() const;
};

/// Edge-parameter integral; the integrand stays bounded on [0, b].
IntegralResult volume_edges(const OrthoschemeEdges& e, const Tolerance& tol = {},
                            Curvature k = {});

/// Lobachevsky-function closed form in the dihedral angles.
double volume_angles(const OrthoschemeAngles& ang,
                     const specfun::LobachevskyFn& lob = specfun::lobachevsky);

OrthoschemeAngles edges_to_angles(const OrthoschemeEdges& e);
OrthoschemeEdges angles_to_edges(const OrthoschemeAngles& ang);

/// tan delta = sqrt(cos^2 beta - sin^2 alpha sin^2 gamma) / (cos alpha cos gamma).
double delta_from_angles(double alpha, double beta, double gamma);

/// Bolyai's integral along edge c.
IntegralResult bolyai_integral_1(const OrthoschemeEdges& e, const Tolerance& tol = {});

/// a -> infinity.
IntegralResult volume_one_ideal(double b, double c, const Tolerance& tol = {});
/// a, c -> infinity; log singularity at the upper limit.
IntegralResult volume_two_ideal(double b, const Tolerance& tol = {});
/// Four copies of the two-ideal orthoscheme glued by reflections.
IntegralResult volume_ideal_tetrahedron_b(double b, const Tolerance& tol = {});

/// Bolyai's orthoscheme with an ideal vertex, dihedral angle alpha, edge c.
IntegralResult bolyai_asymptotic_1(double alpha, double c, const Tolerance& tol = {});
/// Second asymptotic form; alpha_max is an angle with cos(alpha_max) > tanh b.
IntegralResult bolyai_asymptotic_2(double alpha_max, double b, const Tolerance& tol = {});

/// Area of the right triangle with legs a, b by quadrature.
IntegralResult area_right_triangle(double a, double b, const Tolerance& tol = {});
/// pi/2 - alpha - beta for the same triangle.
double right_triangle_defect(double a, double b);

/// atan(tanh t / sinh s).
double lemma_angle(double t, double s);

/// n-dimensional orthoscheme (2 <= n <= 4) with edge chain a_1..a_n.
/// n = 3 with (a_1, a_2, a_3) = (b, c, a) is the edge-parameter orthoscheme;
/// n = 2 with (a_1, a_2) = (b, a) is the right triangle with legs a, b.
IntegralResult volume_ndim(std::span<const double> edges, const Tolerance& tol = {});

inline constexpr std::size_t kMaxNdim = 4;

/// Angle triples drawn uniformly from (0.2, 1.2)^3, keeping those whose delta
/// is real and at least 0.05 below min(alpha, gamma, pi/2 - beta).
std::vector<OrthoschemeAngles> sample_valid_angles(std::size_t count, std::uint64_t seed);

}  // namespace hypervol::orthoscheme
