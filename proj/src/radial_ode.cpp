#include "cylbif/radial_ode.hpp"

#include "cylbif/errors.hpp"
#include "cylbif/numerics.hpp"
#include "cylbif/special_functions.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

namespace cylbif {

namespace {

constexpr double kPi = std::numbers::pi;

// Shooting start radius and number of even series terms.
constexpr double kShootStart = 1e-3;
constexpr int kSeriesTerms = 4;

void require_mode(int m, double period) {
    if (m < 1) throw DomainError("mode m must be >= 1");
    if (std::isnan(period) || !(period > 0.0)) throw DomainError("period must be positive");
}

void require_admissible(const ProblemConfig& config, int m, double period) {
    for (double ti : singular_periods(config, m)) {
        if (std::abs(period - ti) <= kSingularGuard * ti) {
            std::ostringstream os;
            os.precision(17);
            os << "period " << period << " is singular for m = " << m << " (T_i = " << ti << ")";
            throw SingularPeriodError(period, ti, os.str());
        }
    }
}

std::vector<double> uniform_grid(int points) {
    std::vector<double> grid;
    if (points < 2) return grid;
    grid.reserve(points);
    for (int n = 0; n < points; ++n) grid.push_back(static_cast<double>(n) / (points - 1));
    grid.back() = 1.0;
    return grid;
}

}  // namespace

double radial_shift(double lambda, int m, double period) {
    const double w = 2.0 * m * kPi / period;
    return lambda - w * w;
}

std::vector<double> singular_periods(const ProblemConfig& config, int m) {
    if (m < 1) throw DomainError("mode m must be >= 1");
    std::vector<double> out;
    if (config.k() < 2) return out;
    const auto lambdas = radial_eigenvalues(config.dim(), config.k());
    const double lk = lambdas.back();
    // lambda_i increasing, so T_i increases with i.
    for (int i = 0; i + 1 < config.k(); ++i) {
        out.push_back(2.0 * m * kPi / std::sqrt(lk - lambdas[i]));
    }
    return out;
}

RadialMode::RadialMode(const BallEigenpair& pair, int m, double period)
    : nu_(pair.config.nu()), phi_prime_1_(pair.phi_prime_1), m_(m), period_(period) {
    require_mode(m, period);
    require_admissible(pair.config, m, period);
    shift_ = radial_shift(pair.lambda, m, period);
    slope_at_1_ = phi_prime_1_ * special::upper_ratio(nu_, shift_);
}

double RadialMode::value(double r) const {
    if (std::isnan(r) || r < 0.0 || r > 1.0) throw DomainError("RadialMode::value: r outside [0, 1]");
    if (r == 1.0) return -phi_prime_1_;
    return -phi_prime_1_ * special::reduced_bessel_ratio(nu_, shift_ * r * r, shift_);
}

double RadialMode::derivative(double r) const {
    if (std::isnan(r) || r < 0.0 || r > 1.0) {
        throw DomainError("RadialMode::derivative: r outside [0, 1]");
    }
    if (r == 1.0) return slope_at_1_;
    if (r == 0.0) return 0.0;
    // d/dr E_nu(q r^2) = -q r E_{nu+1}(q r^2) / (2 (nu+1))
    return phi_prime_1_ * shift_ * r / (2.0 * (nu_ + 1.0)) *
           special::reduced_bessel_ratio(nu_ + 1.0, shift_ * r * r, nu_, shift_);
}

RadialSolution solve_cm_closed(const BallEigenpair& pair, int m, double period, int trace_points) {
    const RadialMode mode(pair, m, period);
    RadialSolution sol{m, period, SolutionKind::closed_form, mode.value(1.0), mode.slope_at_1(), 0.0, {}};
    for (double r : uniform_grid(trace_points)) sol.trace.push_back(mode.value(r));
    return sol;
}

RadialSolution solve_cm_shoot(const BallEigenpair& pair, int m, double period, int trace_points) {
    require_mode(m, period);
    require_admissible(pair.config, m, period);
    const double q = radial_shift(pair.lambda, m, period);
    const double bend = pair.config.dim() - 1.0;

    // Regular solution at the singular point r = 0, normalized to c(0) = 1:
    // alpha_{2n} = -q alpha_{2n-2} / (2n (2n + N - 2)).
    std::array<double, kSeriesTerms> alpha{};
    alpha[0] = 1.0;
    for (int n = 1; n < kSeriesTerms; ++n) {
        alpha[n] = -q * alpha[n - 1] / (2.0 * n * (2.0 * n + pair.config.dim() - 2.0));
    }
    auto series_value = [&](double r) {
        double s = 0.0, p = 1.0;
        for (int n = 0; n < kSeriesTerms; ++n, p *= r * r) s += alpha[n] * p;
        return s;
    };
    auto series_slope = [&](double r) {
        double s = 0.0, p = r;
        for (int n = 1; n < kSeriesTerms; ++n, p *= r * r) s += 2.0 * n * alpha[n] * p;
        return s;
    };

    auto rhs = [&](double r, const std::array<double, 2>& y) {
        return std::array<double, 2>{y[1], -bend / r * y[1] - q * y[0]};
    };
    numerics::OdeTolerance<2> tol;
    tol.relative = 1e-12;
    tol.absolute = 1e-15;

    std::vector<double> raw_trace;
    std::array<double, 2> y{series_value(kShootStart), series_slope(kShootStart)};
    double r_now = kShootStart;
    for (double r : uniform_grid(trace_points)) {
        if (r <= kShootStart) {
            raw_trace.push_back(series_value(r));
            continue;
        }
        y = numerics::integrate_dopri45(rhs, y, r_now, r, tol);
        r_now = r;
        raw_trace.push_back(y[0]);
    }
    if (r_now < 1.0) y = numerics::integrate_dopri45(rhs, y, r_now, 1.0, tol);

    const double shot = y[0];
    if (std::abs(shot) < 1e-10) {
        std::ostringstream os;
        os.precision(17);
        os << "shooting: c(1) = " << shot << " before rescaling, period " << period << " is numerically singular";
        throw SingularPeriodError(period, period, os.str());
    }
    const double scale = -pair.phi_prime_1 / shot;
    RadialSolution sol{m, period, SolutionKind::shooting, -pair.phi_prime_1, scale * y[1], 0.0, {}};
    sol.trace.reserve(raw_trace.size());
    for (double v : raw_trace) sol.trace.push_back(scale * v);
    if (!sol.trace.empty()) sol.trace.back() = -pair.phi_prime_1;
    return sol;
}

}  // namespace cylbif
