#pragma once

#include <functional>

namespace hypervol::specfun {

/// Lobachevsky function in Milnor's normalisation,
///   L(x) = -int_0^x ln|2 sin t| dt.
/// Odd and pi-periodic; maximum 0.50747... at pi/6. Throws DomainError for
/// non-finite x.
double lobachevsky(double x);

/// Clausen function Cl2(x) = Im Li2(e^{ix}) = sum sin(kx)/k^2 = 2 L(x/2).
double clausen2(double x);

/// Imaginary part of the dilogarithm on the unit circle, Im Li2(e^{ix}).
/// Same as clausen2; kept as a separate name for the dilogarithm-based
/// tetrahedron formula.
double im_li2_unit(double x);

/// Any evaluator of the Lobachevsky function. The closed-form volume formulas
/// take one so that an independent evaluation path can be substituted.
using LobachevskyFn = std::function<double(double)>;

}  // namespace hypervol::specfun
