#include "hypervol/tetrahedra.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "hypervol/errors.hpp"

namespace hypervol::tetrahedra {
namespace {

constexpr double kPi = std::numbers::pi;

// arguments (before halving) of the four cosines and four sines in N and D,
// excluding z itself
struct HalfAngles {
    std::array<double, 4> cos_args;
    std::array<double, 3> sin_args;  // plus sin(z/2)
};

HalfAngles half_angles(const TetraDihedrals& t) {
    return {{t.A + t.B + t.C, t.A + t.E + t.F, t.B + t.D + t.F, t.C + t.D + t.E},
            {t.A + t.B + t.D + t.E, t.A + t.C + t.D + t.F, t.B + t.C + t.E + t.F}};
}

// log|N/D| as a sum of logs; finite wherever no factor vanishes
double log_abs_ratio(const HalfAngles& h, double z) {
    double v = 0.0;
    for (double s : h.cos_args) v += std::log(std::abs(std::cos(0.5 * (s + z))));
    for (double s : h.sin_args) v -= std::log(std::abs(std::sin(0.5 * (s + z))));
    v -= std::log(std::abs(std::sin(0.5 * z)));
    return v;
}

}  // namespace

void TetraDihedrals::validate() const {
    for (double v : {A, B, C, D, E, F}) {
        if (!(v > 0.0 && v < kPi)) throw DomainError("TetraDihedrals: angles must lie in (0, pi)");
    }
}

double milnor_ideal(double A, double B, double C, const specfun::LobachevskyFn& lob) {
    for (double v : {A, B, C}) {
        if (!(v > 0.0 && v < kPi)) throw DomainError("milnor_ideal: angles must lie in (0, pi)");
    }
    if (std::abs(A + B + C - kPi) > 1e-9) {
        throw DomainError("milnor_ideal: A + B + C must equal pi");
    }
    return lob(A) + lob(B) + lob(C);
}

DMCoefficients dm_coefficients(const TetraDihedrals& t) {
    t.validate();
    const double A = t.A, B = t.B, C = t.C, D = t.D, E = t.E, F = t.F;
    const double S = A + B + C + D + E + F;
    const std::array<double, 8> args = {S,         A + D,     B + E,     C + F,
                                        D + E + F, D + B + C, A + E + C, A + B + F};
    double k1 = 0.0, k2 = 0.0;
    for (double x : args) {
        k1 -= std::cos(x);
        k2 += std::sin(x);
    }
    const double k3 = 2.0 * (std::sin(A) * std::sin(D) + std::sin(B) * std::sin(E) +
                             std::sin(C) * std::sin(F));
    const double disc = k1 * k1 + k2 * k2 - k3 * k3;
    if (!(disc >= 0.0)) {
        throw NotRealizableError("dm_coefficients: k1^2 + k2^2 < k3^2");
    }
    const double k4 = std::sqrt(disc);
    const double base = std::atan2(k2, k1);
    const double spread = std::atan(k4 / k3);
    return {S, k1, k2, k3, k4, base - spread, base + spread};
}

LogArgument dm_log_argument(const TetraDihedrals& t, double z) {
    const HalfAngles h = half_angles(t);
    LogArgument r{1.0, std::sin(0.5 * z)};
    for (double s : h.cos_args) r.numerator *= std::cos(0.5 * (s + z));
    for (double s : h.sin_args) r.denominator *= std::sin(0.5 * (s + z));
    return r;
}

void check_realizable(const TetraDihedrals& t) {
    const DMCoefficients co = dm_coefficients(t);
    if (!(co.z2 > co.z1)) throw NotRealizableError("tetrahedron: degenerate root interval");
    // the log argument must stay positive between the roots
    for (int i = 1; i < 16; ++i) {
        const double z = co.z1 + (co.z2 - co.z1) * i / 16.0;
        const LogArgument la = dm_log_argument(t, z);
        if (!(la.numerator / la.denominator > 0.0)) {
            throw NotRealizableError("tetrahedron: log argument changes sign between the roots");
        }
    }
}

quadrature::IntegralResult derevnin_mednykh(const TetraDihedrals& t,
                                            const quadrature::Tolerance& tol) {
    check_realizable(t);
    const DMCoefficients co = dm_coefficients(t);
    const HalfAngles h = half_angles(t);
    auto f = [&h](double z) { return log_abs_ratio(h, z); };
    quadrature::IntegralResult r = quadrature::integrate_1d(f, co.z1, co.z2, tol);
    r.value *= -0.25;
    r.error_estimate *= 0.25;
    return r;
}

double murakami_yano(const TetraDihedrals& t, const specfun::LobachevskyFn& cl2) {
    check_realizable(t);
    const DMCoefficients co = dm_coefficients(t);
    const HalfAngles h = half_angles(t);
    auto U = [&](double z) {
        double u = cl2(z);
        for (double s : h.sin_args) u += cl2(s + z);
        for (double s : h.cos_args) u -= cl2(kPi + s + z);
        return 0.5 * u;
    };
    return 0.5 * (U(co.z1) - U(co.z2));
}

double lambert_cube(const LambertCubeAngles& w, const specfun::LobachevskyFn& lob) {
    for (double v : {w.w0, w.w1, w.w2}) {
        if (!(v > 0.0 && v < kPi / 2)) throw DomainError("lambert_cube: w_i must lie in (0, pi/2)");
    }
    if (!(w.theta > 0.0 && w.theta <= kPi / 2)) {
        throw DomainError("lambert_cube: theta must lie in (0, pi/2]");
    }
    const double th = w.theta;
    double sum = 0.0;
    for (double v : {w.w0, w.w1, w.w2}) sum += lob(v + th) - lob(v - th);
    return 0.25 * (sum - lob(2.0 * th) + 2.0 * lob(kPi / 2 - th));
}

double mohanty_octahedron(const OctahedronAngles& o, const specfun::LobachevskyFn& lob) {
    for (double v : {o.A, o.B, o.E}) {
        if (!(v > 0.0 && v < kPi)) throw DomainError("mohanty_octahedron: angles must lie in (0, pi)");
    }
    const double A = o.A, B = o.B, E = o.E;
    return 2.0 * (lob(0.5 * (kPi + A + B + E)) + lob(0.5 * (kPi - A - B + E)) +
                  lob(0.5 * (kPi + A - B - E)) + lob(0.5 * (kPi - A + B - E)));
}

std::vector<TetraDihedrals> sample_perturbed_ideal(std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto uniform = [&rng](double lo, double hi) {
        return lo + (hi - lo) * static_cast<double>(rng() >> 11) * 0x1.0p-53;
    };
    std::vector<TetraDihedrals> out;
    out.reserve(count);
    while (out.size() < count) {
        const double A = uniform(0.5, 1.3), B = uniform(0.5, 1.3);
        const double C = kPi - A - B;
        TetraDihedrals t{A, B, C, A, B, C};
        for (double* v : {&t.A, &t.B, &t.C, &t.D, &t.E, &t.F}) *v += uniform(0.0, 0.05);
        if (!(C > 0.0)) continue;
        try {
            check_realizable(t);
        } catch (const NotRealizableError&) {
            continue;
        }
        out.push_back(t);
    }
    return out;
}

}  // namespace hypervol::tetrahedra
