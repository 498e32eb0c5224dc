#include "hypervol/mc_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "hypervol/errors.hpp"

namespace hypervol::mc {
namespace {

struct Moments {
    double n = 0.0;
    double mean = 0.0;
    double m2 = 0.0;

    void add(double x) {
        n += 1.0;
        const double d = x - mean;
        mean += d / n;
        m2 += d * (x - mean);
    }
    void merge(const Moments& o) {
        if (o.n == 0.0) return;
        const double total = n + o.n;
        const double d = o.mean - mean;
        mean += d * o.n / total;
        m2 += o.m2 + d * d * n * o.n / total;
        n = total;
    }
};

void check_region(const Region& r, std::size_t samples, Curvature k, std::size_t shards) {
    if (samples < kMinSamples) {
        throw DomainError("mc::estimate: need at least " + std::to_string(kMinSamples) + " samples");
    }
    if (shards == 0 || shards > samples) throw DomainError("mc::estimate: bad shard count");
    if (r.dim < models::kMinDim || r.dim > models::kMaxDim || r.bbox.lo.size() != r.dim ||
        r.bbox.hi.size() != r.dim) {
        throw DomainError("mc::estimate: region dimension mismatch");
    }
    if (!r.contains) throw DomainError("mc::estimate: region has no membership test");
    if (!(r.max_radius <= k.value() * (1.0 - 1e-9))) {
        throw DomainError("mc::estimate: region reaches the boundary of the ball");
    }
}

Moments run_shard(const Region& r, std::size_t count, std::uint64_t seed, std::size_t shard,
                  double k) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(shard)};
    std::mt19937_64 rng(seq);
    const std::size_t n = r.dim;
    const double box_volume = r.bbox.volume();
    const double power = -0.5 * static_cast<double>(n + 1);
    const double inv_k2 = 1.0 / (k * k);

    std::array<double, models::kMaxDim> x{};
    const std::span<const double> point(x.data(), n);
    Moments m;
    for (std::size_t s = 0; s < count; ++s) {
        double rho2 = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            x[i] = r.bbox.lo[i] + u * (r.bbox.hi[i] - r.bbox.lo[i]);
            rho2 += x[i] * x[i];
        }
        double w = 0.0;
        rho2 *= inv_k2;
        if (rho2 < 1.0 && r.contains(point)) w = box_volume * std::pow(1.0 - rho2, power);
        m.add(w);
    }
    return m;
}

MCEstimate summarise(const std::vector<Moments>& parts, std::size_t samples, std::uint64_t seed) {
    Moments total;
    for (const Moments& m : parts) total.merge(m);
    MCEstimate e;
    e.mean = total.mean;
    e.std_error = total.n > 1.0 ? std::sqrt(total.m2 / (total.n - 1.0) / total.n) : 0.0;
    e.samples = samples;
    e.seed = seed;
    return e;
}

std::size_t shard_size(std::size_t samples, std::size_t shards, std::size_t i) {
    return samples / shards + (i < samples % shards ? 1 : 0);
}

void require_positive(double v, const char* what) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        throw DomainError(std::string(what) + " must be finite and > 0");
    }
}

double norm(std::span<const double> x) {
    double s = 0.0;
    for (double v : x) s += v * v;
    return std::sqrt(s);
}

}  // namespace

double Box::volume() const {
    double v = 1.0;
    for (std::size_t i = 0; i < lo.size(); ++i) v *= hi[i] - lo[i];
    return v;
}

MCEstimate estimate(const Region& r, std::size_t samples, std::uint64_t seed, Curvature k,
                    std::size_t shards) {
    check_region(r, samples, k, shards);
    std::vector<Moments> parts(shards);
    const auto count = static_cast<long long>(shards);
#pragma omp parallel for schedule(dynamic, 1)
    for (long long i = 0; i < count; ++i) {
        const auto s = static_cast<std::size_t>(i);
        parts[s] = run_shard(r, shard_size(samples, shards, s), seed, s, k.value());
    }
    return summarise(parts, samples, seed);
}

MCEstimate estimate_serial(const Region& r, std::size_t samples, std::uint64_t seed, Curvature k,
                           std::size_t shards) {
    check_region(r, samples, k, shards);
    std::vector<Moments> parts(shards);
    for (std::size_t s = 0; s < shards; ++s) {
        parts[s] = run_shard(r, shard_size(samples, shards, s), seed, s, k.value());
    }
    return summarise(parts, samples, seed);
}

std::array<PointKlein, 4> orthoscheme_vertices(double a, double b, double c, Curvature k) {
    require_positive(a, "orthoscheme_vertices: a");
    require_positive(b, "orthoscheme_vertices: b");
    require_positive(c, "orthoscheme_vertices: c");
    const models::PointOrthogonal pts[4] = {
        {{0.0, 0.0, 0.0}}, {{0.0, 0.0, a}}, {{b, 0.0, a}}, {{b, c, a}}};
    std::array<PointKlein, 4> out;
    for (int i = 0; i < 4; ++i) out[i] = models::orthogonal_to_klein(pts[i], k);
    return out;
}

Region region_simplex(const std::vector<PointKlein>& vertices, Curvature k) {
    if (vertices.empty()) throw DomainError("region_simplex: no vertices");
    const std::size_t n = vertices.size() - 1;
    if (n < models::kMinDim || n > models::kMaxDim) {
        throw DomainError("region_simplex: need n + 1 vertices for 2 <= n <= 8");
    }
    for (const PointKlein& v : vertices) {
        if (v.dim() != n) throw DomainError("region_simplex: vertex dimension mismatch");
    }

    // invert the edge matrix E (columns v_j - v_0) by Gauss-Jordan
    std::vector<double> m(n * 2 * n, 0.0);
    auto at = [&m, n](std::size_t i, std::size_t j) -> double& { return m[i * 2 * n + j]; };
    double scale = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            at(i, j) = vertices[j + 1].X[i] - vertices[0].X[i];
            scale = std::max(scale, std::abs(at(i, j)));
        }
        at(i, n + i) = 1.0;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t i = col + 1; i < n; ++i) {
            if (std::abs(at(i, col)) > std::abs(at(piv, col))) piv = i;
        }
        if (!(std::abs(at(piv, col)) > 1e-12 * scale)) {
            throw DomainError("region_simplex: vertices are affinely dependent");
        }
        for (std::size_t j = 0; j < 2 * n; ++j) std::swap(at(col, j), at(piv, j));
        const double p = at(col, col);
        for (std::size_t j = 0; j < 2 * n; ++j) at(col, j) /= p;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col) continue;
            const double f = at(i, col);
            if (f == 0.0) continue;
            for (std::size_t j = 0; j < 2 * n; ++j) at(i, j) -= f * at(col, j);
        }
    }
    std::vector<double> inv(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) inv[i * n + j] = at(i, n + j);
    }

    Region r;
    r.dim = n;
    r.bbox.lo.assign(n, 0.0);
    r.bbox.hi.assign(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double lo = vertices[0].X[i], hi = lo;
        for (const PointKlein& v : vertices) {
            lo = std::min(lo, v.X[i]);
            hi = std::max(hi, v.X[i]);
        }
        r.bbox.lo[i] = lo;
        r.bbox.hi[i] = hi;
    }
    for (const PointKlein& v : vertices) r.max_radius = std::max(r.max_radius, norm(v.X));
    if (!(r.max_radius < k.value())) throw DomainError("region_simplex: vertex outside the ball");

    std::vector<double> origin = vertices[0].X;
    r.contains = [n, inv = std::move(inv), origin = std::move(origin)](std::span<const double> x) {
        constexpr double kSlack = 1e-12;
        double sum = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double lambda = 0.0;
            for (std::size_t j = 0; j < n; ++j) lambda += inv[i * n + j] * (x[j] - origin[j]);
            if (lambda < -kSlack) return false;
            sum += lambda;
        }
        return sum <= 1.0 + kSlack;
    };
    return r;
}

Region region_box(const Box& box, Curvature k) {
    const std::size_t n = box.lo.size();
    if (n < models::kMinDim || n > models::kMaxDim || box.hi.size() != n) {
        throw DomainError("region_box: bad dimension");
    }
    double far = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (!(box.hi[i] > box.lo[i])) throw DomainError("region_box: empty box");
        const double c = std::max(std::abs(box.lo[i]), std::abs(box.hi[i]));
        far += c * c;
    }
    Region r;
    r.dim = n;
    r.bbox = box;
    r.max_radius = std::sqrt(far);
    (void)k;
    r.contains = [](std::span<const double>) { return true; };
    return r;
}

Region region_ball(double x, Curvature k) {
    require_positive(x, "region_ball: x");
    const double radius = k.value() * std::tanh(x / k.value());
    Region r;
    r.dim = 3;
    r.bbox = {{-radius, -radius, -radius}, {radius, radius, radius}};
    r.max_radius = radius;
    r.contains = [radius](std::span<const double> p) { return norm(p) <= radius; };
    return r;
}

Region region_barrel(double p, double q, Curvature k) {
    require_positive(p, "region_barrel: p");
    require_positive(q, "region_barrel: q");
    const double kk = k.value();
    const double half = kk * std::tanh(0.5 * p / kk);
    const double side = kk * std::tanh(q / kk);

    Region r;
    r.dim = 3;
    r.bbox = {{-half, -side, -side}, {half, side, side}};
    const double t2 = (half / kk) * (half / kk);
    r.max_radius = kk * std::sqrt(t2 + (1.0 - t2) * (side / kk) * (side / kk));
    r.contains = [half, q, k](std::span<const double> x) {
        const PointKlein pt{{x[0], x[1], x[2]}};
        PointKlein on{{0.0, 0.0, 0.0}};
        auto dist = [&](double s) {
            on.X[0] = s;
            return models::klein_distance(pt, on, k);
        };
        // golden-section search for the nearest point of the segment
        constexpr double kInvPhi = 0.6180339887498949;
        double lo = -half, hi = half;
        double x1 = hi - kInvPhi * (hi - lo), x2 = lo + kInvPhi * (hi - lo);
        double f1 = dist(x1), f2 = dist(x2);
        while (hi - lo > 1e-12) {
            if (f1 < f2) {
                hi = x2;
                x2 = x1;
                f2 = f1;
                x1 = hi - kInvPhi * (hi - lo);
                f1 = dist(x1);
            } else {
                lo = x1;
                x1 = x2;
                f1 = f2;
                x2 = lo + kInvPhi * (hi - lo);
                f2 = dist(x2);
            }
        }
        const double foot = 0.5 * (lo + hi);
        if (std::abs(foot) > half - 1e-9 * (1.0 + half)) return false;
        return dist(foot) <= q;
    };
    return r;
}

Region region_cone(double b, double beta, Curvature k) {
    require_positive(b, "region_cone: b");
    if (!(beta > 0.0 && beta < 0.5 * std::numbers::pi)) {
        throw DomainError("region_cone: beta must lie in (0, pi/2)");
    }
    const double kk = k.value();
    // base plane at distance h from the apex, sinh(h/k) = tanh(b/k) / tan(beta)
    const double h = kk * std::asinh(std::tanh(b / kk) / std::tan(beta));
    const double top = kk * std::tanh(h / kk);
    const double tb = std::tan(beta);
    const double reach = top * tb;

    Region r;
    r.dim = 3;
    r.bbox = {{-reach, -reach, 0.0}, {reach, reach, top}};
    r.max_radius = std::sqrt(top * top + reach * reach);
    r.contains = [top, tb](std::span<const double> x) {
        if (x[2] < 0.0 || x[2] > top) return false;
        return std::hypot(x[0], x[1]) <= x[2] * tb;
    };
    return r;
}

Region region_slab(double w, double q, Curvature k) {
    require_positive(w, "region_slab: w");
    require_positive(q, "region_slab: q");
    const double kk = k.value();
    if (!(2.0 * w * w < kk * kk)) throw DomainError("region_slab: base square leaves the ball");
    const double top = kk * std::tanh(q / kk);

    Region r;
    r.dim = 3;
    r.bbox = {{-w, -w, 0.0}, {w, w, top}};
    const double c2 = 2.0 * w * w / (kk * kk);
    r.max_radius = kk * std::sqrt(c2 + (1.0 - c2) * (top / kk) * (top / kk));
    // perpendiculars to the plane X3 = 0 are the vertical lines, so the foot is
    // (X1, X2, 0); sinh(d/k) = X3 / sqrt(k^2 - |X|^2)
    r.contains = [w, q, kk](std::span<const double> x) {
        if (x[2] < 0.0 || std::abs(x[0]) > w || std::abs(x[1]) > w) return false;
        const double rest = kk * kk - (x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
        if (!(rest > 0.0)) return false;
        return kk * std::asinh(x[2] / std::sqrt(rest)) <= q;
    };
    return r;
}

double slab_base_area(double w, Curvature k) {
    require_positive(w, "slab_base_area: w");
    const double kk = k.value();
    if (!(2.0 * w * w < kk * kk)) throw DomainError("slab_base_area: square leaves the ball");
    // geodesic quadrilateral: area k^2 (2 pi - 4 theta), with the corner angle
    // cos theta = w^2 / (k^2 - w^2) read off the Klein metric at (w, w)
    const double w2 = w * w;
    return kk * kk * (2.0 * std::numbers::pi - 4.0 * std::acos(w2 / (kk * kk - w2)));
}

Region region_doubled_two_ideal(double b, double truncation, Curvature k) {
    require_positive(b, "region_doubled_two_ideal: b");
    if (!(truncation > 0.0 && truncation <= 1.0 - 1e-9)) {
        throw DomainError("region_doubled_two_ideal: truncation must lie in (0, 1 - 1e-9]");
    }
    const double kk = k.value();
    // the ideal vertices sit on the sphere; pull them in by one part in 1e15
    // so the simplex builder accepts them, then cut at the truncation radius
    const double tb = std::tanh(b / kk), sb = 1.0 / std::cosh(b / kk);
    const double in = kk * (1.0 - 1e-15);
    const Region simplex = region_simplex(
        {{{0.0, 0.0, in}}, {{0.0, 0.0, -in}}, {{in * tb, 0.0, 0.0}}, {{in * tb, in * sb, 0.0}}}, k);

    Region cut_region = simplex;
    const double cut = truncation * kk;
    for (std::size_t i = 0; i < 3; ++i) {
        cut_region.bbox.lo[i] = std::max(cut_region.bbox.lo[i], -cut);
        cut_region.bbox.hi[i] = std::min(cut_region.bbox.hi[i], cut);
    }
    cut_region.max_radius = cut;
    cut_region.contains = [inner = simplex.contains, cut](std::span<const double> x) {
        return norm(x) <= cut && inner(x);
    };
    return cut_region;
}

}  // namespace hypervol::mc
