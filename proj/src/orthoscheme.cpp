#include "hypervol/orthoscheme.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "hypervol/errors.hpp"

namespace hypervol::orthoscheme {
namespace {

constexpr double kHalfPi = std::numbers::pi / 2;

void require_edge(double v, const char* name, const char* where) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        throw DomainError(std::string(where) + ": " + name + " must be finite and > 0");
    }
}

// acosh(cosh x cosh y) without overflow for large arguments
double pythagoras(double x, double y) {
    if (x + y < 20.0) return std::acosh(std::cosh(x) * std::cosh(y));
    // cosh x cosh y = e^{x+y} (1+e^{-2x})(1+e^{-2y}) / 4
    const double log_prod = x + y + std::log1p(std::exp(-2.0 * x)) +
                            std::log1p(std::exp(-2.0 * y)) - 2.0 * std::numbers::ln2;
    // acosh(w) = ln(w) + ln(1 + sqrt(1 - w^-2))
    const double inv2 = std::exp(-2.0 * log_prod);
    return log_prod + std::log1p(std::sqrt(1.0 - inv2));
}

// ln((sinh b + T sinh l) / (sinh b - T sinh l)) with T = tanh c; c may be
// infinite. The denominator is assembled from pieces that stay accurate as
// l -> b and T -> 1.
double log_ratio(double b, double c, double l) {
    const double sl = std::sinh(l);
    const double t = std::isinf(c) ? 1.0 : std::tanh(c);
    const double one_minus_t = std::isinf(c) ? 0.0 : 2.0 / (std::exp(2.0 * c) + 1.0);
    const double num = std::sinh(b) + t * sl;
    const double den =
        2.0 * std::cosh(0.5 * (b + l)) * std::sinh(0.5 * (b - l)) + one_minus_t * sl;
    return std::log(num) - std::log(den);
}

IntegralResult scaled(IntegralResult r, double factor) {
    r.value *= factor;
    r.error_estimate *= std::abs(factor);
    return r;
}

}  // namespace

double OrthoschemeEdges::z() const { return pythagoras(a, b); }

double OrthoschemeEdges::long_diagonal() const { return pythagoras(pythagoras(a, b), c); }

void OrthoschemeEdges::validate() const {
    require_edge(a, "a", "OrthoschemeEdges");
    require_edge(b, "b", "OrthoschemeEdges");
    require_edge(c, "c", "OrthoschemeEdges");
}

OrthoschemeAngles OrthoschemeAngles::from_dihedrals(double alpha, double beta, double gamma) {
    OrthoschemeAngles ang{alpha, beta, gamma, delta_from_angles(alpha, beta, gamma)};
    ang.validate();
    return ang;
}

void OrthoschemeAngles::validate() const {
    for (double v : {alpha, beta, gamma, delta}) {
        if (!(v > 0.0 && v < kHalfPi)) {
            throw NotRealizableError("OrthoschemeAngles: angles must lie in (0, pi/2)");
        }
    }
    if (!(delta < alpha && delta < gamma && delta < kHalfPi - beta)) {
        throw NotRealizableError(
            "OrthoschemeAngles: delta must be below alpha, gamma and pi/2 - beta");
    }
}

IntegralResult volume_edges(const OrthoschemeEdges& e, const Tolerance& tol, Curvature k) {
    e.validate();
    const double kk = k.value();
    const double a = e.a / kk, b = e.b / kk, c = e.c / kk;
    // tanh l sinh a / sqrt(tanh^2 b cosh^2 l + sinh^2 a sinh^2 l), divided through by sinh a
    const double ratio = std::tanh(b) / std::sinh(a);
    auto f = [=](double l) {
        const double w = ratio * std::cosh(l);
        const double s = std::sinh(l);
        return std::tanh(l) / std::sqrt(w * w + s * s) * log_ratio(b, c, l);
    };
    return scaled(quadrature::integrate_1d(f, 0.0, b, tol), 0.25 * kk * kk * kk);
}

double volume_angles(const OrthoschemeAngles& ang, const specfun::LobachevskyFn& lob) {
    ang.validate();
    const double al = ang.alpha, be = ang.beta, ga = ang.gamma, d = ang.delta;
    return 0.25 * (lob(al + d) - lob(al - d) - lob(kHalfPi - be + d) + lob(kHalfPi - be - d) +
                   lob(ga + d) - lob(ga - d) + 2.0 * lob(kHalfPi - d));
}

OrthoschemeAngles edges_to_angles(const OrthoschemeEdges& e) {
    e.validate();
    const double sb = std::sinh(e.b);
    const double tan_delta = std::tanh(e.a) * std::tanh(e.c) / sb;
    OrthoschemeAngles ang;
    ang.alpha = std::atan(std::tanh(e.c) / sb);
    ang.gamma = std::atan(std::tanh(e.a) / sb);
    ang.delta = std::atan(tan_delta);
    ang.beta = std::atan(std::tanh(e.long_diagonal()) / tan_delta);
    return ang;
}

OrthoschemeEdges angles_to_edges(const OrthoschemeAngles& ang) {
    ang.validate();
    const double d = ang.delta;
    auto edge = [d](double phi) {
        return 0.5 * std::log(std::sin(phi + d) / std::sin(phi - d));
    };
    const double a = edge(ang.alpha);
    const double c = edge(ang.gamma);
    // the same expression at pi/2 - beta gives the long diagonal
    const double big_z = edge(kHalfPi - ang.beta);
    // cosh b = cosh Z / (cosh a cosh c), formed in log space
    auto lc = [](double x) { return x + std::log1p(std::exp(-2.0 * x)) - std::numbers::ln2; };
    const double log_cosh_b = lc(big_z) - lc(a) - lc(c);
    if (!(log_cosh_b > 0.0)) {
        throw NotRealizableError(
            "angles_to_edges: cosh of the long diagonal is below cosh a cosh c");
    }
    // acosh(e^L) = L + ln(1 + sqrt(1 - e^{-2L}))
    const double b = log_cosh_b + std::log1p(std::sqrt(-std::expm1(-2.0 * log_cosh_b)));
    return {a, b, c};
}

double delta_from_angles(double alpha, double beta, double gamma) {
    for (double v : {alpha, beta, gamma}) {
        if (!(v > 0.0 && v < kHalfPi)) {
            throw NotRealizableError("delta_from_angles: angles must lie in (0, pi/2)");
        }
    }
    const double sa = std::sin(alpha), sg = std::sin(gamma), cb = std::cos(beta);
    const double radicand = cb * cb - sa * sa * sg * sg;
    if (!(radicand > 0.0)) {
        throw NotRealizableError("delta_from_angles: cos^2 beta <= sin^2 alpha sin^2 gamma");
    }
    return std::atan(std::sqrt(radicand) / (std::cos(alpha) * std::cos(gamma)));
}

IntegralResult bolyai_integral_1(const OrthoschemeEdges& e, const Tolerance& tol) {
    e.validate();
    const double alpha = std::atan(std::tanh(e.c) / std::sinh(e.b));
    const double beta_p = std::atan(std::tanh(e.b) / std::sinh(e.a));
    const double gamma_p = std::atan(std::tanh(e.c) / std::sinh(e.z()));
    const double sa2 = std::sin(alpha) * std::sin(alpha);
    const double ca2 = std::cos(alpha) * std::cos(alpha);
    const double sg2 = std::sin(gamma_p) * std::sin(gamma_p);
    const double cg = std::cos(gamma_p);
    // cosh^2 t / cos^2 phi - 1 = (sinh^2 t + sin^2 phi) / cos^2 phi
    auto f = [=](double t) {
        const double s2 = std::sinh(t) * std::sinh(t);
        return t * std::sinh(t) * ca2 * cg / ((s2 + sa2) * std::sqrt(s2 + sg2));
    };
    return scaled(quadrature::integrate_1d(f, 0.0, e.c, tol),
                  std::tan(gamma_p) / (2.0 * std::tan(beta_p)));
}

IntegralResult volume_one_ideal(double b, double c, const Tolerance& tol) {
    require_edge(b, "b", "volume_one_ideal");
    if (!(c > 0.0)) throw DomainError("volume_one_ideal: c must be > 0");
    auto f = [=](double l) { return log_ratio(b, c, l) / std::cosh(l); };
    return scaled(quadrature::integrate_1d(f, 0.0, b, tol), 0.25);
}

IntegralResult volume_two_ideal(double b, const Tolerance& tol) {
    require_edge(b, "b", "volume_two_ideal");
    constexpr double kInf = std::numeric_limits<double>::infinity();
    auto f = [=](double l) { return log_ratio(b, kInf, l) / std::cosh(l); };
    return scaled(quadrature::integrate_1d(f, 0.0, b, tol), 0.25);
}

IntegralResult volume_ideal_tetrahedron_b(double b, const Tolerance& tol) {
    return scaled(volume_two_ideal(b, tol), 4.0);
}

IntegralResult bolyai_asymptotic_1(double alpha, double c, const Tolerance& tol) {
    if (!(alpha > 0.0 && alpha < kHalfPi)) {
        throw DomainError("bolyai_asymptotic_1: alpha must lie in (0, pi/2)");
    }
    require_edge(c, "c", "bolyai_asymptotic_1");
    const double sa2 = std::sin(alpha) * std::sin(alpha);
    // cosh^2 z - cos^2 alpha = sinh^2 z + sin^2 alpha
    auto f = [=](double z) {
        const double s = std::sinh(z);
        return z / (s * s + sa2);
    };
    return scaled(quadrature::integrate_1d(f, 0.0, c, tol), std::sin(2.0 * alpha) / 4.0);
}

IntegralResult bolyai_asymptotic_2(double alpha_max, double b, const Tolerance& tol) {
    if (!(alpha_max >= 0.0 && alpha_max < kHalfPi)) {
        throw DomainError("bolyai_asymptotic_2: alpha_max must lie in [0, pi/2)");
    }
    if (!(b >= 0.0) || !std::isfinite(b)) throw DomainError("bolyai_asymptotic_2: b must be >= 0");
    const double tb = std::tanh(b);
    if (!(std::cos(alpha_max) > tb)) {
        throw DomainError("bolyai_asymptotic_2: need cos(alpha_max) > tanh b");
    }
    // ln(cos phi / sqrt(cos^2 phi - tanh^2 b)) = -1/2 ln(1 - tanh^2 b / cos^2 phi)
    auto f = [=](double phi) {
        const double r = tb / std::cos(phi);
        return -0.5 * std::log1p(-r * r);
    };
    return scaled(quadrature::integrate_1d(f, 0.0, alpha_max, tol), 0.5);
}

IntegralResult area_right_triangle(double a, double b, const Tolerance& tol) {
    require_edge(a, "a", "area_right_triangle");
    require_edge(b, "b", "area_right_triangle");
    // inner integral of cosh y up to phi(x) is sinh phi(x), tanh phi = t sinh x
    const double t = std::tanh(b) / std::sinh(a);
    auto f = [=](double x) {
        const double u = t * std::sinh(x);
        return u / std::sqrt((1.0 - u) * (1.0 + u));
    };
    return quadrature::integrate_1d(f, 0.0, a, tol);
}

double right_triangle_defect(double a, double b) {
    require_edge(a, "a", "right_triangle_defect");
    require_edge(b, "b", "right_triangle_defect");
    return kHalfPi - lemma_angle(b, a) - lemma_angle(a, b);
}

double lemma_angle(double t, double s) {
    if (!(t >= 0.0)) throw DomainError("lemma_angle: t must be >= 0");
    if (!(s > 0.0) || !std::isfinite(s)) throw DomainError("lemma_angle: s must be finite and > 0");
    return std::atan(std::tanh(t) / std::sinh(s));
}

IntegralResult volume_ndim(std::span<const double> edges, const Tolerance& tol) {
    const std::size_t n = edges.size();
    if (n < 2 || n > kMaxNdim) {
        throw UnsupportedError("volume_ndim: n = " + std::to_string(n) + " outside [2, 4]");
    }
    for (double a : edges) require_edge(a, "edge", "volume_ndim");

    // level 0 is x_n in [0, a_n]; level j >= 1 is x_j bounded through the
    // previous level: tanh x_j <= tanh a_j / sinh a_prev * sinh x_prev
    std::vector<double> ratio(n - 1);
    ratio[0] = std::tanh(edges[0]) / std::sinh(edges[n - 1]);
    for (std::size_t j = 1; j + 1 < n; ++j) ratio[j] = std::tanh(edges[j]) / std::sinh(edges[j - 1]);

    std::vector<quadrature::BoundFn> bounds;
    for (std::size_t j = 0; j + 1 < n; ++j) {
        const double r = ratio[j];
        bounds.push_back([r](std::span<const double> outer) {
            return std::atanh(std::min(r * std::sinh(outer.back()), 1.0 - 1e-16));
        });
    }
    auto f = [n](std::span<const double> vars) {
        double v = 1.0;
        for (std::size_t i = 1; i < n; ++i) {
            v *= std::pow(std::cosh(vars[i]), static_cast<double>(i));
        }
        return v;
    };
    return quadrature::integrate_nested(f, {0.0, edges[n - 1]}, bounds, tol);
}

std::vector<OrthoschemeAngles> sample_valid_angles(std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto uniform = [&rng](double lo, double hi) {
        return lo + (hi - lo) * static_cast<double>(rng() >> 11) * 0x1.0p-53;
    };
    std::vector<OrthoschemeAngles> out;
    out.reserve(count);
    while (out.size() < count) {
        const double al = uniform(0.2, 1.2), be = uniform(0.2, 1.2), ga = uniform(0.2, 1.2);
        const double sa = std::sin(al), sg = std::sin(ga), cb = std::cos(be);
        if (!(cb * cb - sa * sa * sg * sg > 0.0)) continue;
        const double d = delta_from_angles(al, be, ga);
        if (d < std::min({al, ga, kHalfPi - be}) - 0.05) out.push_back({al, be, ga, d});
    }
    return out;
}

}  // namespace hypervol::orthoscheme
