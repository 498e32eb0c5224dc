#pragma once

// Tetrahedron volume formulas in dihedral angles.
// Opposite edges carry the angle pairs (A, D), (B, E), (C, F); the faces meet
// at the vertices with angle triples {A,B,C}, {A,E,F}, {B,D,F}, {C,D,E}.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hypervol/quadrature.hpp"
#include "hypervol/specfun.hpp"

namespace hypervol::tetrahedra {

struct TetraDihedrals {
    double A = 0.0, B = 0.0, C = 0.0, D = 0.0, E = 0.0, F = 0.0;
    void validate() const;
};

struct LambertCubeAngles {
    double w0 = 0.0, w1 = 0.0, w2 = 0.0;
    double theta = 0.0;  // auxiliary angle, must be supplied
};

/// Free angles of the ideal symmetric octahedron; C = pi - A, D = pi - B, F = pi - E.
struct OctahedronAngles {
    double A = 0.0, B = 0.0, E = 0.0;
};

/// Ideal tetrahedron with A + B + C = pi.
double milnor_ideal(double A, double B, double C,
                    const specfun::LobachevskyFn& lob = specfun::lobachevsky);

struct DMCoefficients {
    double S, k1, k2, k3, k4, z1, z2;
};

/// Coefficients and the two roots z1 < z2 of the integral's log argument.
/// Throws NotRealizableError when k1^2 + k2^2 < k3^2.
DMCoefficients dm_coefficients(const TetraDihedrals& t);

/// Numerator N(z) and denominator D(z) of the log argument (products of four
/// cosines and four sines of half-angles).
struct LogArgument {
    double numerator;
    double denominator;
};
LogArgument dm_log_argument(const TetraDihedrals& t, double z);

/// Operational realizability: dm_coefficients succeeds, z1 < z2 and N/D > 0
/// on a probe grid between the roots. Throws NotRealizableError otherwise.
void check_realizable(const TetraDihedrals& t);

/// -1/4 of the integral of log(N/D) between the roots.
quadrature::IntegralResult derevnin_mednykh(const TetraDihedrals& t,
                                            const quadrature::Tolerance& tol = {});

/// Dilogarithm closed form, evaluated through Clausen values at the real roots.
double murakami_yano(const TetraDihedrals& t,
                     const specfun::LobachevskyFn& cl2 = specfun::clausen2);

/// Lambert cube with essential angles w0..w2 and auxiliary angle theta in (0, pi/2].
double lambert_cube(const LambertCubeAngles& w,
                    const specfun::LobachevskyFn& lob = specfun::lobachevsky);

double mohanty_octahedron(const OctahedronAngles& o,
                          const specfun::LobachevskyFn& lob = specfun::lobachevsky);

/// Compact tetrahedra near ideal ones: (A, B, C) with A, B uniform in
/// (0.5, 1.3) and C = pi - A - B, repeated on the opposite edges, then every
/// angle raised by a uniform amount in [0, 0.05]. Only realizable draws are kept.
std::vector<TetraDihedrals> sample_perturbed_ideal(std::size_t count, std::uint64_t seed);

}  // namespace hypervol::tetrahedra
