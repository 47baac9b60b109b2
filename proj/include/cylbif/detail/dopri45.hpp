#pragma once

// Implementation of numerics::integrate_dopri45; included from numerics.hpp.

#include "cylbif/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace cylbif::numerics {

namespace detail {

template <std::size_t N>
std::array<double, N> axpy(const std::array<double, N>& y, double h,
                           std::initializer_list<std::pair<double, const std::array<double, N>*>> terms) {
    std::array<double, N> out = y;
    for (const auto& [coeff, k] : terms) {
        if (coeff == 0.0) continue;
        for (std::size_t i = 0; i < N; ++i) out[i] += h * coeff * (*k)[i];
    }
    return out;
}

}  // namespace detail

template <std::size_t N, class Rhs>
std::array<double, N> integrate_dopri45(Rhs&& rhs, std::array<double, N> y, double t0, double t1,
                                        const OdeTolerance<N>& tol) {
    using State = std::array<double, N>;
    if (t1 == t0) return y;
    const double direction = t1 > t0 ? 1.0 : -1.0;
    double t = t0;
    double h = direction * std::abs(t1 - t0) / 100.0;

    State k1 = rhs(t, y);
    for (std::size_t step = 0; step < tol.max_steps; ++step) {
        if ((t + h - t1) * direction > 0.0) h = t1 - t;

        const State k2 = rhs(t + h / 5.0, detail::axpy(y, h, {{1.0 / 5.0, &k1}}));
        const State k3 = rhs(t + 3.0 * h / 10.0, detail::axpy(y, h, {{3.0 / 40.0, &k1}, {9.0 / 40.0, &k2}}));
        const State k4 = rhs(t + 4.0 * h / 5.0,
                             detail::axpy(y, h, {{44.0 / 45.0, &k1}, {-56.0 / 15.0, &k2}, {32.0 / 9.0, &k3}}));
        const State k5 = rhs(t + 8.0 * h / 9.0,
                             detail::axpy(y, h, {{19372.0 / 6561.0, &k1},
                                                 {-25360.0 / 2187.0, &k2},
                                                 {64448.0 / 6561.0, &k3},
                                                 {-212.0 / 729.0, &k4}}));
        const State k6 = rhs(t + h, detail::axpy(y, h, {{9017.0 / 3168.0, &k1},
                                                        {-355.0 / 33.0, &k2},
                                                        {46732.0 / 5247.0, &k3},
                                                        {49.0 / 176.0, &k4},
                                                        {-5103.0 / 18656.0, &k5}}));
        const State y_new = detail::axpy(y, h, {{35.0 / 384.0, &k1},
                                                {500.0 / 1113.0, &k3},
                                                {125.0 / 192.0, &k4},
                                                {-2187.0 / 6784.0, &k5},
                                                {11.0 / 84.0, &k6}});
        const State k7 = rhs(t + h, y_new);

        double err2 = 0.0;
        for (std::size_t i = 0; i < N; ++i) {
            const double e = h * (71.0 / 57600.0 * k1[i] - 71.0 / 16695.0 * k3[i] + 71.0 / 1920.0 * k4[i] -
                                  17253.0 / 339200.0 * k5[i] + 22.0 / 525.0 * k6[i] - 1.0 / 40.0 * k7[i]);
            const double scale = tol.absolute + tol.relative * std::max(std::abs(y[i]), std::abs(y_new[i]));
            err2 += (e / scale) * (e / scale);
        }
        const double err = std::sqrt(err2 / static_cast<double>(N));

        if (err <= 1.0) {
            t += h;
            y = y_new;
            k1 = k7;
            if ((t - t1) * direction >= 0.0) return y;
        }
        const double factor = err == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0);
        h *= factor;
        if (std::abs(h) < 1e-15 * std::max(1.0, std::abs(t))) {
            throw NumericalFailure("integrate_dopri45: step size underflow");
        }
    }
    throw NumericalFailure("integrate_dopri45: step budget exhausted");
}

}  // namespace cylbif::numerics
