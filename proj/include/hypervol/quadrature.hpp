#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace hypervol::quadrature {

/// Requested accuracy: converged once error <= max(abs, rel * |value|).
/// rel must lie in [1e-14, 1e-2], abs >= 0.
struct Tolerance {
    double rel = 1e-10;
    double abs = 1e-14;

    void validate() const;
    /// Tolerance handed to the next inner level of an iterated integral.
    Tolerance tightened() const;
};

struct IntegralResult {
    double value = 0.0;
    double error_estimate = 0.0;
    std::size_t evaluations = 0;
};

enum class Rule {
    /// Gauss-Kronrod first; switch to tanh-sinh if it runs out of its small
    /// budget or meets a non-finite value near an endpoint.
    automatic,
    /// Adaptive 7/15-point Gauss-Kronrod on [lo, hi].
    gauss_kronrod,
    /// Adaptive Gauss-Kronrod after the tanh-sinh change of variables, which
    /// absorbs integrable endpoint singularities (log, inverse powers).
    tanh_sinh,
};

struct Options {
    Rule rule = Rule::automatic;
    std::size_t max_evaluations = 1'000'000;
};

using Integrand = std::function<double(double)>;

/// Adaptive integral of f over [lo, hi]. f is never evaluated at an endpoint
/// by the tanh-sinh rule. Deterministic for fixed inputs.
///
/// Throws DomainError when lo > hi or f returns NaN, ConvergenceError when the
/// evaluation budget is exhausted (carrying the best estimate).
IntegralResult integrate_1d(const Integrand& f, double lo, double hi,
                            const Tolerance& tol = {}, const Options& opts = {});

/// Integration limits of one level of an iterated integral, given the values
/// of all enclosing (outer) variables.
struct Interval {
    double lo;
    double hi;
};
using LimitFn = std::function<Interval(std::span<const double> outer)>;
using MultiIntegrand = std::function<double(std::span<const double> vars)>;

/// Iterated integral  int_{l0} int_{l1(x0)} ... f(x0, ..., x_{m-1})  with
/// limits[j] evaluated on (x0..x_{j-1}). Inner levels run at a tolerance
/// ten times tighter than their parent.
IntegralResult integrate_iterated(const MultiIntegrand& f, const std::vector<LimitFn>& limits,
                                  const Tolerance& tol = {}, const Options& opts = {});

/// Upper limit of one inner level given the outer variables; the lower limit is 0.
using BoundFn = std::function<double(std::span<const double> outer)>;

/// Nested integral with zero lower limits:
///   int_lo^hi dx0 int_0^{bounds[0](x0)} dx1 ... int_0^{bounds[m-2](x0..x_{m-2})} dx_{m-1} f(x)
/// Requires at least one inner bound (m >= 2).
IntegralResult integrate_nested(const MultiIntegrand& f, Interval outer,
                                const std::vector<BoundFn>& bounds,
                                const Tolerance& tol = {}, const Options& opts = {});

}  // namespace hypervol::quadrature
