#include "hypervol/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "hypervol/errors.hpp"

namespace hypervol::quadrature {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTiny = std::numeric_limits<double>::min();

// 15-point Kronrod abscissae (descending) and weights; every second abscissa
// (index 1, 3, 5, 7) belongs to the embedded 7-point Gauss rule.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
};

// Half-width of the tanh-sinh parameter range. At |t| = 4.5 the mapped point
// sits ~1e-61 (relative) from the endpoint.
constexpr double kTanhSinhRange = 4.5;

// Thrown out of the kernel when the integrand is not finite at an interior node.
struct NonFiniteValue {
    double x;
    double value;
};

struct Segment {
    double a;
    double b;
    double value;
    double error;
    bool at_roundoff;
};

struct KernelResult {
    double value;
    double error;
    bool at_roundoff;
};

template <class G>
KernelResult gauss_kronrod_15(const G& g, double a, double b) {
    const double centre = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    std::array<double, 7> f1{};
    std::array<double, 7> f2{};
    const double fc = g(centre);
    double resk = kWgk[7] * fc;
    double resg = kWg[3] * fc;
    double resabs = std::abs(resk);
    for (std::size_t j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        f1[j] = g(centre - dx);
        f2[j] = g(centre + dx);
        const double sum = f1[j] + f2[j];
        resk += kWgk[j] * sum;
        resabs += kWgk[j] * (std::abs(f1[j]) + std::abs(f2[j]));
        if (j % 2 == 1) resg += kWg[j / 2] * sum;
    }
    const double mean = 0.5 * resk;
    double resasc = kWgk[7] * std::abs(fc - mean);
    for (std::size_t j = 0; j < 7; ++j) {
        resasc += kWgk[j] * (std::abs(f1[j] - mean) + std::abs(f2[j] - mean));
    }

    const double scale = std::abs(half);
    const double value = resk * half;
    resabs *= scale;
    resasc *= scale;
    double err = std::abs((resk - resg) * half);
    if (resasc != 0.0 && err != 0.0) {
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    }
    const double floor = 50.0 * kEps * resabs;
    bool at_roundoff = false;
    if (resabs > kTiny / (50.0 * kEps) && err <= floor) {
        err = floor;
        at_roundoff = true;
    }
    return {value, err, at_roundoff};
}

struct AdaptiveOutcome {
    double value = 0.0;
    double error = 0.0;
    std::size_t evaluations = 0;
    bool converged = false;      // error <= tolerance
    bool exhausted = false;      // stopped for lack of budget
};

double target(const Tolerance& tol, double value) {
    return std::max(tol.abs, tol.rel * std::abs(value));
}

// Global adaptive bisection: always split the segment with the largest error.
template <class G>
AdaptiveOutcome adaptive(const G& g, double a, double b, const Tolerance& tol,
                         std::size_t budget) {
    AdaptiveOutcome out;
    constexpr std::size_t kPerKernel = 15;

    auto by_error = [](const Segment& l, const Segment& r) { return l.error < r.error; };
    std::vector<Segment> heap;
    std::vector<Segment> frozen;

    auto file = [&](const Segment& s) {
        if (s.at_roundoff) {
            frozen.push_back(s);
        } else {
            heap.push_back(s);
            std::push_heap(heap.begin(), heap.end(), by_error);
        }
    };

    {
        const KernelResult k = gauss_kronrod_15(g, a, b);
        out.evaluations += kPerKernel;
        file({a, b, k.value, k.error, k.at_roundoff});
    }

    double value = heap.empty() ? frozen.front().value : heap.front().value;
    double error = heap.empty() ? frozen.front().error : heap.front().error;

    while (error > target(tol, value)) {
        if (heap.empty()) break;  // everything left is at roundoff level
        if (out.evaluations + 2 * kPerKernel > budget) {
            out.exhausted = true;
            break;
        }
        std::pop_heap(heap.begin(), heap.end(), by_error);
        const Segment worst = heap.back();
        heap.pop_back();

        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b)) {
            frozen.push_back({worst.a, worst.b, worst.value, worst.error, true});
            continue;
        }
        const KernelResult left = gauss_kronrod_15(g, worst.a, mid);
        const KernelResult right = gauss_kronrod_15(g, mid, worst.b);
        out.evaluations += 2 * kPerKernel;
        file({worst.a, mid, left.value, left.error, left.at_roundoff});
        file({mid, worst.b, right.value, right.error, right.at_roundoff});

        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
    }

    // exact re-summation; the running totals above only steer the loop
    out.value = 0.0;
    out.error = 0.0;
    for (const auto* list : {&heap, &frozen}) {
        for (const Segment& s : *list) {
            out.value += s.value;
            out.error += s.error;
        }
    }
    out.converged = out.error <= target(tol, out.value);
    return out;
}

template <class F>
auto guarded(const F& f) {
    return [&f](double x) {
        const double v = f(x);
        if (!std::isfinite(v)) throw NonFiniteValue{x, v};
        return v;
    };
}

AdaptiveOutcome run_gauss_kronrod(const Integrand& f, double lo, double hi,
                                  const Tolerance& tol, std::size_t budget) {
    return adaptive(guarded(f), lo, hi, tol, budget);
}

// x = c + h tanh(pi/2 sinh t); distances to the endpoints are formed directly
// so that nodes packed against an endpoint keep their full relative precision.
AdaptiveOutcome run_tanh_sinh(const Integrand& f, double lo, double hi,
                              const Tolerance& tol, std::size_t budget) {
    const double half = 0.5 * (hi - lo);
    auto g = [&](double t) {
        const double u = 0.5 * std::numbers::pi * std::sinh(t);
        const double e = std::exp(-2.0 * std::abs(u));
        const double gap = half * 2.0 * e / (1.0 + e);  // h (1 - tanh|u|)
        const double x = t < 0.0 ? lo + gap : hi - gap;
        if (!(x > lo && x < hi)) return 0.0;
        // dx/dt = h (pi/2) cosh t sech^2 u
        const double jac = half * 0.5 * std::numbers::pi * std::cosh(t) * 4.0 * e /
                           ((1.0 + e) * (1.0 + e));
        if (jac == 0.0) return 0.0;
        const double v = f(x);
        if (!std::isfinite(v)) throw NonFiniteValue{x, v};
        return v * jac;
    };
    return adaptive(g, -kTanhSinhRange, kTanhSinhRange, tol, budget);
}

IntegralResult finish(const AdaptiveOutcome& o, std::size_t evaluations) {
    if (o.exhausted && !o.converged) {
        throw ConvergenceError("integrate_1d: evaluation budget exhausted (estimate " +
                                   std::to_string(o.value) + ", error " +
                                   std::to_string(o.error) + ")",
                               o.value, o.error);
    }
    return {o.value, o.error, evaluations};
}

[[noreturn]] void rethrow_non_finite(const NonFiniteValue& nf) {
    throw DomainError("integrate_1d: integrand is " +
                      std::string(std::isnan(nf.value) ? "NaN" : "infinite") +
                      " at x = " + std::to_string(nf.x));
}

}  // namespace

void Tolerance::validate() const {
    if (!(rel >= 1e-14 && rel <= 1e-2)) {
        throw DomainError("Tolerance: rel must lie in [1e-14, 1e-2]");
    }
    if (!(abs >= 0.0) || !std::isfinite(abs)) {
        throw DomainError("Tolerance: abs must be finite and >= 0");
    }
}

Tolerance Tolerance::tightened() const {
    return {std::max(rel / 10.0, 1e-14), abs / 10.0};
}

IntegralResult integrate_1d(const Integrand& f, double lo, double hi, const Tolerance& tol,
                            const Options& opts) {
    tol.validate();
    if (!std::isfinite(lo) || !std::isfinite(hi)) {
        throw DomainError("integrate_1d: limits must be finite");
    }
    if (lo > hi) throw DomainError("integrate_1d: lo > hi");
    if (lo == hi) return {};

    try {
        switch (opts.rule) {
            case Rule::gauss_kronrod: {
                const auto o = run_gauss_kronrod(f, lo, hi, tol, opts.max_evaluations);
                return finish(o, o.evaluations);
            }
            case Rule::tanh_sinh: {
                const auto o = run_tanh_sinh(f, lo, hi, tol, opts.max_evaluations);
                return finish(o, o.evaluations);
            }
            case Rule::automatic:
                break;
        }
    } catch (const NonFiniteValue& nf) {
        rethrow_non_finite(nf);
    }

    // Smooth integrands settle within a few hundred evaluations of plain
    // Gauss-Kronrod; anything else gets the endpoint-absorbing transform.
    const std::size_t probe_budget = std::min<std::size_t>(opts.max_evaluations, 2000);
    std::size_t spent = 0;
    try {
        const auto o = run_gauss_kronrod(f, lo, hi, tol, probe_budget);
        if (o.converged) return {o.value, o.error, o.evaluations};
        spent = o.evaluations;
    } catch (const NonFiniteValue& nf) {
        if (std::isnan(nf.value) && nf.x > lo && nf.x < hi &&
            std::min(nf.x - lo, hi - nf.x) > 1e-8 * (hi - lo)) {
            rethrow_non_finite(nf);
        }
        spent = probe_budget;
    }
    const std::size_t remaining = opts.max_evaluations > spent ? opts.max_evaluations - spent : 0;
    try {
        const auto o = run_tanh_sinh(f, lo, hi, tol, remaining);
        return finish(o, spent + o.evaluations);
    } catch (const NonFiniteValue& nf) {
        rethrow_non_finite(nf);
    }
}

namespace {

struct IteratedState {
    const MultiIntegrand& f;
    const std::vector<LimitFn>& limits;
    const Options& opts;
    std::vector<double> vars;
    std::size_t evaluations = 0;
};

IntegralResult integrate_level(IteratedState& st, std::size_t level, const Tolerance& tol) {
    const Interval iv = st.limits[level](std::span<const double>(st.vars.data(), level));
    if (!std::isfinite(iv.lo) || !std::isfinite(iv.hi)) {
        throw DomainError("integrate_iterated: non-finite limit at level " + std::to_string(level));
    }
    if (iv.hi <= iv.lo) {
        if (iv.hi < iv.lo) {
            throw DomainError("integrate_iterated: reversed limits at level " +
                              std::to_string(level));
        }
        return {};
    }

    const bool innermost = level + 1 == st.limits.size();
    if (innermost) {
        const auto r = integrate_1d(
            [&st, level](double x) {
                st.vars[level] = x;
                return st.f(st.vars);
            },
            iv.lo, iv.hi, tol, st.opts);
        st.evaluations += r.evaluations;
        return r;
    }

    const Tolerance inner_tol = tol.tightened();
    double inner_error = 0.0;
    std::size_t inner_calls = 0;
    const auto r = integrate_1d(
        [&](double x) {
            st.vars[level] = x;
            const IntegralResult inner = integrate_level(st, level + 1, inner_tol);
            inner_error += inner.error_estimate;
            ++inner_calls;
            return inner.value;
        },
        iv.lo, iv.hi, tol, st.opts);
    const double mean_inner = inner_calls ? inner_error / static_cast<double>(inner_calls) : 0.0;
    return {r.value, r.error_estimate + (iv.hi - iv.lo) * mean_inner, st.evaluations};
}

}  // namespace

IntegralResult integrate_iterated(const MultiIntegrand& f, const std::vector<LimitFn>& limits,
                                  const Tolerance& tol, const Options& opts) {
    tol.validate();
    if (limits.empty()) throw DomainError("integrate_iterated: need at least one level");
    IteratedState st{f, limits, opts, std::vector<double>(limits.size(), 0.0)};
    IntegralResult r = integrate_level(st, 0, tol);
    r.evaluations = st.evaluations;
    return r;
}

IntegralResult integrate_nested(const MultiIntegrand& f, Interval outer,
                                const std::vector<BoundFn>& bounds, const Tolerance& tol,
                                const Options& opts) {
    if (bounds.empty()) throw DomainError("integrate_nested: need m >= 2 variables");
    std::vector<LimitFn> limits;
    limits.reserve(bounds.size() + 1);
    limits.push_back([outer](std::span<const double>) { return outer; });
    for (const BoundFn& bound : bounds) {
        limits.push_back([bound](std::span<const double> vars) {
            return Interval{0.0, bound(vars)};
        });
    }
    return integrate_iterated(f, limits, tol, opts);
}

}  // namespace hypervol::quadrature
