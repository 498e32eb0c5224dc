#include "hypervol/models.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "hypervol/errors.hpp"

namespace hypervol::models {
namespace {

void check_dim(std::size_t n, const char* where) {
    if (n < kMinDim || n > kMaxDim) {
        throw UnsupportedError(std::string(where) + ": dimension " + std::to_string(n) +
                               " outside [2, 8]");
    }
}

void check_finite(std::span<const double> v, const char* where) {
    for (double x : v) {
        if (!std::isfinite(x)) throw DomainError(std::string(where) + ": non-finite coordinate");
    }
}

// ln cosh y without overflow
double log_cosh(double y) {
    const double a = std::abs(y);
    return a + std::log1p(std::exp(-2.0 * a)) - std::numbers::ln2;
}

// Spatial part of the hyperboloid point (time part sqrt(1 + |s|^2)), in units
// of k. All point transforms pass through it.
std::vector<double> orthogonal_to_spatial(const PointOrthogonal& p, double k) {
    const std::size_t n = p.dim();
    std::vector<double> s(n);
    double c = 1.0;  // product of cosh over the coordinates already peeled off
    for (std::size_t i = n - 1; i-- > 0;) {
        const double y = p.x[i] / k;
        s[i] = c * std::sinh(y);
        c *= std::cosh(y);
    }
    s[n - 1] = c * std::sinh(p.x[n - 1] / k);
    return s;
}

PointOrthogonal spatial_to_orthogonal(std::span<const double> s, double k) {
    const std::size_t n = s.size();
    PointOrthogonal p{std::vector<double>(n)};
    double c = 1.0;
    for (std::size_t i = n - 1; i-- > 0;) {
        const double y = std::asinh(s[i] / c);
        p.x[i] = k * y;
        c *= std::cosh(y);
    }
    p.x[n - 1] = k * std::asinh(s[n - 1] / c);
    return p;
}

std::vector<double> spherical_to_unit(const PointSpherical& p) {
    const std::size_t n = p.dim();
    std::vector<double> u(n);
    double sines = 1.0;
    for (std::size_t i = n - 1; i-- > 1;) {  // phi_{n-1} .. phi_2 -> u_{n-1} .. u_2
        u[i] = sines * std::cos(p.phi[i]);
        sines *= std::sin(p.phi[i]);
    }
    u[0] = sines * std::cos(p.phi[0]);
    u[n - 1] = sines * std::sin(p.phi[0]);
    return u;
}

// angles of a direction vector (need not be normalised)
std::vector<double> unit_to_angles(std::span<const double> u) {
    const std::size_t n = u.size();
    std::vector<double> phi(n - 1, 0.0);
    // tail[i] = u_0^2 + ... + u_{i-1}^2 + u_{n-1}^2 (0-based components)
    double tail = u[0] * u[0] + u[n - 1] * u[n - 1];
    std::vector<double> partial(n, 0.0);
    partial[1] = tail;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        tail += u[i] * u[i];
        partial[i + 1] = tail;
    }
    for (std::size_t i = n - 1; i-- > 1;) {
        phi[i] = std::atan2(std::sqrt(partial[i]), u[i]);
    }
    double az = std::atan2(u[n - 1], u[0]);
    if (az < 0.0) az += 2.0 * std::numbers::pi;
    phi[0] = az;
    return phi;
}

PointSpherical spatial_to_spherical(std::span<const double> s, double k) {
    double norm2 = 0.0;
    for (double v : s) norm2 += v * v;
    const double rho = std::sqrt(norm2);
    PointSpherical p;
    p.r = k * std::asinh(rho);
    if (rho == 0.0) {
        p.phi.assign(s.size() - 1, 0.0);
    } else {
        p.phi = unit_to_angles(s);
    }
    return p;
}

std::vector<double> spherical_to_spatial(const PointSpherical& p, double k) {
    std::vector<double> u = spherical_to_unit(p);
    const double sr = std::sinh(p.r / k);
    for (double& v : u) v *= sr;
    return u;
}

}  // namespace

Curvature::Curvature(double k) : k_(k) {
    if (!(k > 0.0) || !std::isfinite(k)) throw DomainError("Curvature: k must be finite and > 0");
}

double density_paracycle(const PointParacycle& p, Curvature k) {
    check_dim(p.dim(), "density_paracycle");
    check_finite(p.xi, "density_paracycle");
    const double n = static_cast<double>(p.dim());
    return std::exp(-(n - 1.0) * p.xi.back() / k.value());
}

double density_halfspace(std::span<const double> x, Curvature k) {
    check_dim(x.size(), "density_halfspace");
    check_finite(x, "density_halfspace");
    const double xn = x.back();
    if (!(xn > 0.0)) throw DomainError("density_halfspace: x_n must be > 0");
    return k.value() / std::pow(xn, static_cast<double>(x.size()));
}

double density_orthogonal(const PointOrthogonal& p, Curvature k) {
    check_dim(p.dim(), "density_orthogonal");
    check_finite(p.x, "density_orthogonal");
    double d = 1.0;
    for (std::size_t i = 0; i + 1 < p.dim(); ++i) {
        d *= std::pow(std::cosh(p.x[i] / k.value()), static_cast<double>(i + 1));
    }
    return d;
}

double density_spherical(const PointSpherical& p, Curvature k) {
    check_dim(p.dim(), "density_spherical");
    if (!std::isfinite(p.r) || p.r < 0.0) throw DomainError("density_spherical: r must be >= 0");
    check_finite(p.phi, "density_spherical");
    const std::size_t n = p.dim();
    const double kk = k.value();
    double d = std::pow(kk * std::sinh(p.r / kk), static_cast<double>(n - 1));
    for (std::size_t i = 1; i < n - 1; ++i) {  // phi_{i+1} carries sin^i
        d *= std::pow(std::sin(p.phi[i]), static_cast<double>(i));
    }
    return d;
}

double density_klein(const PointKlein& p, Curvature k) {
    check_dim(p.dim(), "density_klein");
    check_finite(p.X, "density_klein");
    double rho2 = 0.0;
    for (double v : p.X) rho2 += (v / k.value()) * (v / k.value());
    if (!(rho2 < 1.0)) throw DomainError("density_klein: point not inside the ball");
    const double n = static_cast<double>(p.dim());
    return std::pow(1.0 - rho2, -0.5 * (n + 1.0));
}

double paracycle_brick_volume(std::span<const double> edges, Curvature k) {
    check_dim(edges.size(), "paracycle_brick_volume");
    double base = 1.0;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        if (!(edges[i] > 0.0) || !std::isfinite(edges[i])) {
            throw DomainError("paracycle_brick_volume: base edges must be finite and > 0");
        }
        base *= edges[i];
    }
    const double an = edges.back();
    if (!(an > 0.0)) throw DomainError("paracycle_brick_volume: a_n must be > 0");
    const double m = static_cast<double>(edges.size() - 1);
    const double layer = std::isinf(an) ? 1.0 : -std::expm1(-m * an / k.value());
    return k.value() / m * base * layer;
}

ChordArc chord_arc(double d, Curvature k) {
    if (!(d >= 0.0) || !std::isfinite(d)) throw DomainError("chord_arc: d must be >= 0");
    const double kk = k.value();
    return {kk * std::sinh(d / kk), kk * log_cosh(d / kk)};
}

PointParacycle orthogonal_to_paracycle(const PointOrthogonal& p, Curvature k) {
    check_dim(p.dim(), "orthogonal_to_paracycle");
    check_finite(p.x, "orthogonal_to_paracycle");
    const std::size_t n = p.dim();
    const double kk = k.value();
    double lift = p.x[n - 1] / kk;
    for (std::size_t i = 0; i + 1 < n; ++i) lift -= log_cosh(p.x[i] / kk);

    PointParacycle out{std::vector<double>(n)};
    out.xi[n - 1] = kk * lift;
    for (std::size_t i = n - 1; i-- > 0;) {
        out.xi[i] = kk * std::exp(lift) * std::sinh(p.x[i] / kk);
        lift += log_cosh(p.x[i] / kk);
    }
    return out;
}

PointOrthogonal paracycle_to_orthogonal(const PointParacycle& p, Curvature k) {
    check_dim(p.dim(), "paracycle_to_orthogonal");
    check_finite(p.xi, "paracycle_to_orthogonal");
    const std::size_t n = p.dim();
    const double kk = k.value();
    // back-substitution from x_{n-1} down to x_1; the exponent accumulates
    // xi_n/k + sum ln cosh(x_j/k) over the coordinates already solved
    double lift = p.xi[n - 1] / kk;
    PointOrthogonal out{std::vector<double>(n)};
    for (std::size_t i = n - 1; i-- > 0;) {
        const double y = std::asinh(p.xi[i] * std::exp(-lift) / kk);
        out.x[i] = kk * y;
        lift += log_cosh(y);
    }
    out.x[n - 1] = kk * lift;
    return out;
}

PointSpherical orthogonal_to_spherical(const PointOrthogonal& p, Curvature k) {
    check_dim(p.dim(), "orthogonal_to_spherical");
    check_finite(p.x, "orthogonal_to_spherical");
    return spatial_to_spherical(orthogonal_to_spatial(p, k.value()), k.value());
}

PointOrthogonal spherical_to_orthogonal(const PointSpherical& p, Curvature k) {
    check_dim(p.dim(), "spherical_to_orthogonal");
    if (!std::isfinite(p.r) || p.r < 0.0) throw DomainError("spherical_to_orthogonal: r must be >= 0");
    check_finite(p.phi, "spherical_to_orthogonal");
    return spatial_to_orthogonal(spherical_to_spatial(p, k.value()), k.value());
}

PointKlein spherical_to_klein(const PointSpherical& p, Curvature k) {
    check_dim(p.dim(), "spherical_to_klein");
    if (!std::isfinite(p.r) || p.r < 0.0) throw DomainError("spherical_to_klein: r must be >= 0");
    check_finite(p.phi, "spherical_to_klein");
    const double radius = k.value() * std::tanh(p.r / k.value());
    PointKlein out{spherical_to_unit(p)};
    for (double& v : out.X) v *= radius;
    return out;
}

PointSpherical klein_to_spherical(const PointKlein& p, Curvature k) {
    check_dim(p.dim(), "klein_to_spherical");
    check_finite(p.X, "klein_to_spherical");
    double norm2 = 0.0;
    for (double v : p.X) norm2 += v * v;
    const double radius = std::sqrt(norm2);
    if (!(radius < k.value())) throw DomainError("klein_to_spherical: point not inside the ball");
    PointSpherical out;
    out.r = k.value() * std::atanh(radius / k.value());
    out.phi = radius == 0.0 ? std::vector<double>(p.dim() - 1, 0.0) : unit_to_angles(p.X);
    return out;
}

PointKlein orthogonal_to_klein(const PointOrthogonal& p, Curvature k) {
    return spherical_to_klein(orthogonal_to_spherical(p, k), k);
}

PointOrthogonal klein_to_orthogonal(const PointKlein& p, Curvature k) {
    return spherical_to_orthogonal(klein_to_spherical(p, k), k);
}

std::vector<double> paracycle_to_halfspace(const PointParacycle& p, Curvature k) {
    check_dim(p.dim(), "paracycle_to_halfspace");
    check_finite(p.xi, "paracycle_to_halfspace");
    std::vector<double> x = p.xi;
    x.back() = std::exp(p.xi.back() / k.value());
    return x;
}

double klein_distance(const PointKlein& p, const PointKlein& q, Curvature k) {
    if (p.dim() != q.dim()) throw DomainError("klein_distance: dimension mismatch");
    check_dim(p.dim(), "klein_distance");
    check_finite(p.X, "klein_distance");
    check_finite(q.X, "klein_distance");
    const double kk = k.value();
    const std::size_t n = p.dim();

    double pp = 0.0, qq = 0.0, pq = 0.0, diff2 = 0.0, wedge2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double a = p.X[i] / kk, b = q.X[i] / kk;
        pp += a * a;
        qq += b * b;
        pq += a * b;
        diff2 += (a - b) * (a - b);
        for (std::size_t j = i + 1; j < n; ++j) {
            const double w = a * (q.X[j] / kk) - (p.X[j] / kk) * b;
            wedge2 += w * w;
        }
    }
    if (!(pp < 1.0) || !(qq < 1.0)) throw DomainError("klein_distance: point not inside the ball");

    // cosh d - 1 = ((1 - P.Q) - g) / g with g = sqrt((1-|P|^2)(1-|Q|^2)); the
    // numerator is rewritten as (|P-Q|^2 - |P^Q|^2) / ((1 - P.Q) + g)
    const double g = std::sqrt((1.0 - pp) * (1.0 - qq));
    const double num = std::max(0.0, diff2 - wedge2);
    const double w = num / (g * ((1.0 - pq) + g));
    return kk * std::log1p(w + std::sqrt(w * (w + 2.0)));
}

quadrature::IntegralResult coordinate_volume(CoordinateSystem system,
                                             const CoordinateRegion& region, std::size_t n,
                                             Curvature k, const quadrature::Tolerance& tol) {
    check_dim(n, "coordinate_volume");
    if (region.order.size() != n || region.limits.size() != n) {
        throw DomainError("coordinate_volume: region must have one level per coordinate");
    }
    std::vector<bool> seen(n, false);
    for (std::size_t c : region.order) {
        if (c >= n || seen[c]) throw DomainError("coordinate_volume: order is not a permutation");
        seen[c] = true;
    }

    auto assemble = [&region, n](std::span<const double> vars) {
        std::vector<double> coords(n);
        for (std::size_t j = 0; j < n; ++j) coords[region.order[j]] = vars[j];
        return coords;
    };

    quadrature::MultiIntegrand density;
    switch (system) {
        case CoordinateSystem::paracycle:
            density = [=](std::span<const double> v) {
                return density_paracycle(PointParacycle{assemble(v)}, k);
            };
            break;
        case CoordinateSystem::halfspace:
            density = [=](std::span<const double> v) { return density_halfspace(assemble(v), k); };
            break;
        case CoordinateSystem::orthogonal:
            density = [=](std::span<const double> v) {
                return density_orthogonal(PointOrthogonal{assemble(v)}, k);
            };
            break;
        case CoordinateSystem::spherical:
            density = [=](std::span<const double> v) {
                std::vector<double> c = assemble(v);
                PointSpherical p;
                p.r = c[0];
                p.phi.assign(c.begin() + 1, c.end());
                return density_spherical(p, k);
            };
            break;
        case CoordinateSystem::klein:
            density = [=](std::span<const double> v) {
                return density_klein(PointKlein{assemble(v)}, k);
            };
            break;
    }
    return quadrature::integrate_iterated(density, region.limits, tol);
}

}  // namespace hypervol::models
