#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace uavnet {

struct QuadratureSpec {
    double rel_tol = 1e-6;
    double abs_tol = 1e-10;
    std::size_t max_subdivisions = 4000;

    void validate() const;
    QuadratureSpec tightened(double factor) const;
};

/// Outcome of one integral evaluation. `converged` is false when the
/// subdivision budget ran out; `value` then carries the best estimate and
/// `error` its (non-satisfying) error bound.
struct IntegralResult {
    double value = 0.0;
    double error = 0.0;
    bool converged = true;
    std::size_t evaluations = 0;

    IntegralResult& operator+=(const IntegralResult& other);
};

using Integrand = std::function<double(double)>;

/// Adaptive Gauss-Kronrod (G7,K15) on [lo, hi].
IntegralResult integrate_finite(const Integrand& f, double lo, double hi,
                                const QuadratureSpec& spec = {});

/// Same, pre-split at the given interior points (pass kink locations here;
/// points outside (lo, hi) are ignored).
IntegralResult integrate_finite(const Integrand& f, double lo, double hi,
                                std::span<const double> breakpoints,
                                const QuadratureSpec& spec = {});

/// Adaptive integration of f over [lo, inf) via the change of variable
/// u = lo + t/(1-t), t in [0,1). Suitable for decaying integrands.
IntegralResult integrate_semi_infinite(const Integrand& f, double lo,
                                       const QuadratureSpec& spec = {});

IntegralResult integrate_semi_infinite(const Integrand& f, double lo,
                                       std::span<const double> breakpoints,
                                       const QuadratureSpec& spec = {});

/// Single non-adaptive (G7,K15) panel; error is the Kronrod estimate.
/// Building block for cumulative tables where panels are known smooth.
IntegralResult gauss_kronrod_panel(const Integrand& f, double lo, double hi);

} // namespace uavnet
