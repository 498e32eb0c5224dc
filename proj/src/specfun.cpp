#include "hypervol/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "hypervol/errors.hpp"

namespace hypervol::specfun {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// zeta(2k), k = 1..30
constexpr std::array<double, 30> kZetaEven = {
    1.6449340668482264365, 1.0823232337111381915, 1.0173430619844491397,
    1.0040773561979443394, 1.0009945751278180853, 1.0002460865533080483,
    1.0000612481350587048, 1.0000152822594086519, 1.0000038172932649998,
    1.0000009539620338728, 1.0000002384505027277, 1.0000000596081890513,
    1.0000000149015548284, 1.0000000037253340248, 1.0000000009313274324,
    1.0000000002328311834, 1.0000000000582077209, 1.0000000000145519219,
    1.0000000000036379795, 1.0000000000009094948, 1.0000000000002273737,
    1.0000000000000568434, 1.0000000000000142109, 1.0000000000000035527,
    1.0000000000000008882, 1.0000000000000002220, 1.0000000000000000555,
    1.0000000000000000139, 1.0000000000000000035, 1.0000000000000000009,
};

// Cl2 on [0, pi] from the Bernoulli expansion
//   Cl2(t) = t - t ln t + sum_k |B_2k| t^{2k+1} / (2k (2k+1)!)
// with |B_2k| rewritten through zeta(2k); the ratio of successive terms is
// (t / 2pi)^2 <= 1/4 on this range.
double clausen2_reduced(double t) {
    if (t == 0.0) return 0.0;
    const double q = (t / kTwoPi) * (t / kTwoPi);
    double power = 1.0;
    double series = 0.0;
    for (std::size_t i = 0; i < kZetaEven.size(); ++i) {
        const double k = static_cast<double>(i + 1);
        power *= q;
        const double term = kZetaEven[i] * power / (k * (2.0 * k + 1.0));
        series += term;
        if (term < 1e-18 * series) break;
    }
    return t - t * std::log(t) + t * series;
}

void require_finite(double x, const char* name) {
    if (!std::isfinite(x)) {
        throw DomainError(std::string(name) + ": argument must be finite");
    }
}

}  // namespace

double clausen2(double x) {
    require_finite(x, "clausen2");
    // remainder() lands in [-pi, pi]; Cl2 is odd and 2pi-periodic
    const double t = std::remainder(x, kTwoPi);
    return t < 0.0 ? -clausen2_reduced(-t) : clausen2_reduced(t);
}

double lobachevsky(double x) {
    require_finite(x, "lobachevsky");
    const double t = std::remainder(x, kPi);
    return 0.5 * (t < 0.0 ? -clausen2_reduced(-2.0 * t) : clausen2_reduced(2.0 * t));
}

double im_li2_unit(double x) { return clausen2(x); }

}  // namespace hypervol::specfun
