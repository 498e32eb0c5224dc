#pragma once

// Volumes of classical bodies of hyperbolic space. Closed forms take the
// curvature parameter k; the circular cone is stated for k = 1 and rescaled
// through v_k(b, beta) = k^3 v_1(b/k, beta).

#include "hypervol/models.hpp"
#include "hypervol/quadrature.hpp"

namespace hypervol::solids {

using models::Curvature;

/// Points on one side of a planar region of area p, within distance q of it.
double equidistant_body(double p, double q, Curvature k = {});

/// Parallel half-lines orthogonal to a paraspherical region of area p.
double paraspherical_sector(double p, Curvature k = {});

double sphere_volume(double x, Curvature k = {});

/// Points whose perpendicular foot lies on a segment of length p, within distance q.
double barrel(double p, double q, Curvature k = {});

/// Part of a barrel cut out by two meridian planes: arc length p times meridian area T, halved.
double barrel_wedge(double p, double T);

/// Right circular cone with base radius b and half-angle beta at the apex.
quadrature::IntegralResult circular_cone(double b, double beta, Curvature k = {},
                                         const quadrature::Tolerance& tol = {});

/// Limit of the circular cone as its apex recedes to an ideal point.
double asymptotic_cone(double b, Curvature k = {});

// Coordinate-quadrature counterparts of the closed forms.
quadrature::IntegralResult sphere_volume_quadrature(double x, Curvature k = {},
                                                    const quadrature::Tolerance& tol = {});
quadrature::IntegralResult equidistant_body_quadrature(double p, double q, Curvature k = {},
                                                       const quadrature::Tolerance& tol = {});
quadrature::IntegralResult barrel_quadrature(double p, double q, Curvature k = {},
                                             const quadrature::Tolerance& tol = {});

}  // namespace hypervol::solids
