#pragma once

// Reference values for the tests.
//
// Constants below were computed once with mpmath at 30 significant digits
// (Clausen function clsin, adaptive tanh-sinh quad) and frozen here.
// lobachevsky_quad() is an independent evaluation path for Lambda through its
// defining integral, using Boost's tanh-sinh rule.

#include <cmath>
#include <numbers>

#include <boost/math/quadrature/tanh_sinh.hpp>

namespace oracle {

inline constexpr double kLobPi6 = 0.507470803204826812;      // Lambda(pi/6), the maximum
inline constexpr double kCatalan = 0.915965594177219015;     // Cl2(pi/2)
inline constexpr double kRegularIdeal = 1.01494160640965362502;  // 3 Lambda(pi/3)
inline constexpr double kRegularOctahedron = 3.66386237670887606;  // 8 Lambda(pi/4)

inline constexpr double kSphere11 = 5.11093270570828898;       // x = 1, k = 1
inline constexpr double kEquidistant111 = 1.40671510196175469;  // p = q = k = 1
inline constexpr double kBarrel111 = 4.33884684544285927;       // p = q = k = 1
inline constexpr double kAsymptoticCone1 = 1.36276267031355765;

// orthoscheme volumes by edges (a, b, c)
inline constexpr double kOrtho111 = 0.0984047189291455266;
inline constexpr double kOrtho05_1_15 = 0.0709245451740043538;
inline constexpr double kOrtho15_05_1 = 0.0780974726127468056;

// dihedral angles of the (1,1,1) orthoscheme
inline constexpr double kAlpha111 = 0.5750061825784119;
inline constexpr double kBeta111 = 1.096868739457478;
inline constexpr double kDelta111 = 0.4584778038850296;

// circular cone (b, beta)
inline constexpr double kCone1_pi4 = 0.63987680946686915;
inline constexpr double kCone05_03 = 0.25634568127822030;
inline constexpr double kCone15_12 = 0.69663274416615432;

// right triangles (a, b)
inline constexpr double kTriangle11 = 0.42078396163807291;
inline constexpr double kTriangle03_17 = 0.20505822918996765;

// ideal-vertex orthoschemes
inline constexpr double kOneIdeal05_05 = 0.0552519640888;
inline constexpr double kOneIdeal05_1 = 0.0986872256380;
inline constexpr double kOneIdeal1_05 = 0.0881215987229;
inline constexpr double kOneIdeal1_1 = 0.1559143606742;
inline constexpr double kTwoIdeal05 = 0.157026332359118;
inline constexpr double kTwoIdeal1 = 0.241213555753153;

// ideal tetrahedron with dihedral angles 0.9, 1.1, pi - 2
inline constexpr double kMilnor09_11 = 1.0047819177266033;

inline constexpr double kLambertPi4_06 = -0.05453533733506750;  // w = pi/4 (x3), theta = 0.6
inline constexpr double kBolyaiAsym1Pi4_1 = 0.127966984471819;  // alpha = pi/4, c = 1

/// Lambda(x) = -int_0^x ln|2 sin t| dt by tanh-sinh quadrature.
inline double lobachevsky_quad(double x) {
    constexpr double pi = std::numbers::pi;
    double t = std::remainder(x, pi);  // [-pi/2, pi/2]
    const double sign = t < 0.0 ? -1.0 : 1.0;
    t = std::abs(t);
    if (t == 0.0) return 0.0;
    thread_local boost::math::quadrature::tanh_sinh<double> rule;
    auto f = [](double u) { return -std::log(2.0 * std::sin(u)); };
    return sign * rule.integrate(f, 0.0, t, 1e-15);
}

inline double clausen2_quad(double x) { return 2.0 * lobachevsky_quad(0.5 * x); }

}  // namespace oracle
