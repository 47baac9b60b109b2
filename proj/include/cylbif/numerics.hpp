#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>

namespace cylbif::numerics {

using ScalarFunction = std::function<double(double)>;

struct RootOptions {
    int max_iterations = 200;
    /// Absolute floor on the final bracket width.
    double absolute_tolerance = 0.0;
    /// Relative bracket width at which iteration stops.
    double relative_tolerance = 4.0 * std::numeric_limits<double>::epsilon();
};

struct RootResult {
    double root;
    double lower;
    double upper;
    int iterations;
};

/// Bracketed root of f on [a, b] given f(a) and f(b) of opposite sign.
///
/// Secant steps are taken while they stay inside the bracket and keep
/// shrinking it; otherwise the step is a bisection. The schedule is fixed, so
/// identical inputs give bit-identical roots. Throws NumericalFailure if the
/// endpoints do not bracket a sign change.
RootResult find_root_bracketed(const ScalarFunction& f, double a, double b, double fa, double fb,
                               const RootOptions& options = {});

struct DerivativeEstimate {
    double value;
    double error;
    double step;
};

/// Central differences with Richardson (Ridders) extrapolation, starting
/// from step h0 and shrinking by 1.4 per tableau row.
DerivativeEstimate ridders_derivative(const ScalarFunction& f, double x, double h0);

/// Slope at x of the least-squares polynomial of `degree` through
/// `points` equally spaced samples on [x - h, x + h].
double polyfit_derivative(const ScalarFunction& f, double x, double h, int points = 9,
                          int degree = 4);

/// Adaptive Dormand-Prince 5(4) integration of y' = rhs(t, y) from t0 to t1.
template <std::size_t N>
struct OdeTolerance {
    double relative = 1e-12;
    double absolute = 1e-14;
    std::size_t max_steps = 2'000'000;
};

template <std::size_t N, class Rhs>
std::array<double, N> integrate_dopri45(Rhs&& rhs, std::array<double, N> y, double t0, double t1,
                                        const OdeTolerance<N>& tol = {});

}  // namespace cylbif::numerics

#include "cylbif/detail/dopri45.hpp"
