#include "hypervol/solids.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "hypervol/errors.hpp"

namespace hypervol::solids {
namespace {

constexpr double kPi = std::numbers::pi;

void require_nonneg(double v, const char* name, const char* where) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
        throw DomainError(std::string(where) + ": " + name + " must be finite and >= 0");
    }
}

}  // namespace

double equidistant_body(double p, double q, Curvature k) {
    require_nonneg(p, "p", "equidistant_body");
    require_nonneg(q, "q", "equidistant_body");
    const double kk = k.value();
    return 0.25 * p * kk * std::sinh(2.0 * q / kk) + 0.5 * p * q;
}

double paraspherical_sector(double p, Curvature k) {
    require_nonneg(p, "p", "paraspherical_sector");
    return 0.5 * p * k.value();
}

double sphere_volume(double x, Curvature k) {
    require_nonneg(x, "x", "sphere_volume");
    const double kk = k.value();
    const double t = x / kk;
    // sinh(2t) - 2t loses everything to cancellation for small t
    double shape;
    if (t < 0.1) {
        const double u = 4.0 * t * t;
        double term = 2.0 * t;  // (2t)^1 / 1!
        shape = 0.0;
        for (int m = 3; m < 40; m += 2) {
            term *= u / static_cast<double>((m - 1) * m);
            shape += term;
            if (term < 1e-18 * shape) break;
        }
    } else {
        shape = std::sinh(2.0 * t) - 2.0 * t;
    }
    return kPi * kk * kk * kk * shape;
}

double barrel(double p, double q, Curvature k) {
    require_nonneg(p, "p", "barrel");
    require_nonneg(q, "q", "barrel");
    const double kk = k.value();
    const double s = std::sinh(q / kk);
    return kPi * kk * kk * p * s * s;
}

double barrel_wedge(double p, double T) {
    require_nonneg(p, "p", "barrel_wedge");
    require_nonneg(T, "T", "barrel_wedge");
    return 0.5 * p * T;
}

quadrature::IntegralResult circular_cone(double b, double beta, Curvature k,
                                         const quadrature::Tolerance& tol) {
    require_nonneg(b, "b", "circular_cone");
    if (!(beta > 0.0 && beta < kPi / 2)) {
        throw DomainError("circular_cone: beta must lie in (0, pi/2)");
    }
    const double kk = k.value();
    const double bb = b / kk;
    const double cb = std::cos(beta);
    // cosh^2 y / cos^2 beta - 1 = (sinh^2 y + sin^2 beta) / cos^2 beta
    const double sb2 = std::sin(beta) * std::sin(beta);
    auto f = [=](double y) {
        const double sh = std::sinh(y);
        return sh * sh * cb / (std::cosh(y) * std::sqrt(sh * sh + sb2));
    };
    auto r = quadrature::integrate_1d(f, 0.0, bb, tol);
    const double scale = kPi * kk * kk * kk;
    return {scale * r.value, scale * r.error_estimate, r.evaluations};
}

double asymptotic_cone(double b, Curvature k) {
    require_nonneg(b, "b", "asymptotic_cone");
    const double kk = k.value();
    const double t = b / kk;
    const double log_cosh = t + std::log1p(std::exp(-2.0 * t)) - std::numbers::ln2;
    return kPi * kk * kk * kk * log_cosh;
}

quadrature::IntegralResult sphere_volume_quadrature(double x, Curvature k,
                                                    const quadrature::Tolerance& tol) {
    require_nonneg(x, "x", "sphere_volume_quadrature");
    // radial shell integral of the spherical density, angles integrated out (4 pi)
    models::PointSpherical p{0.0, {0.0, kPi / 2}};
    auto f = [&](double r) {
        p.r = r;
        return 4.0 * kPi * models::density_spherical(p, k);
    };
    return quadrature::integrate_1d(f, 0.0, x, tol);
}

quadrature::IntegralResult equidistant_body_quadrature(double p, double q, Curvature k,
                                                       const quadrature::Tolerance& tol) {
    require_nonneg(p, "p", "equidistant_body_quadrature");
    require_nonneg(q, "q", "equidistant_body_quadrature");
    const double kk = k.value();
    auto f = [=](double t) {
        const double c = std::cosh(t / kk);
        return p * c * c;
    };
    return quadrature::integrate_1d(f, 0.0, q, tol);
}

quadrature::IntegralResult barrel_quadrature(double p, double q, Curvature k,
                                             const quadrature::Tolerance& tol) {
    require_nonneg(p, "p", "barrel_quadrature");
    require_nonneg(q, "q", "barrel_quadrature");
    const double kk = k.value();
    auto f = [=](double t) {
        return 2.0 * kPi * p * kk * std::sinh(t / kk) * std::cosh(t / kk);
    };
    return quadrature::integrate_1d(f, 0.0, q, tol);
}

}  // namespace hypervol::solids
