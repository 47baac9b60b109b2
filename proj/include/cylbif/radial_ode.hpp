#pragma once

#include "cylbif/ball_spectrum.hpp"

#include <vector>

namespace cylbif {

enum class SolutionKind { closed_form, shooting };

/// The regular solution c_m of
///   c'' + (N-1)/r c' + (lambda_k - (2 m pi / T)^2) c = 0,  c'(0) = 0,
///   c(1) = -phi'_k(1).
struct RadialSolution {
    int m;
    double period;
    SolutionKind kind;
    double value_at_1;
    double slope_at_1;
    double slope_at_0;
    /// c_m(r_n) at r_n = n / (size - 1); empty unless requested.
    std::vector<double> trace;
};

/// Relative exclusion radius around each singular period.
inline constexpr double kSingularGuard = 1e-8;

/// Singular periods 2 m pi / sqrt(lambda_k - lambda_i), i = 1..k-1, ascending.
std::vector<double> singular_periods(const ProblemConfig& config, int m = 1);

/// lambda_k - (2 m pi / T)^2; positive in the Bessel regime, negative in the
/// modified-Bessel regime.
double radial_shift(double lambda, int m, double period);

/// c_m in closed form: r^{-nu} J_nu(beta r) / J_nu(beta) and its modified
/// counterpart, written through the entire function E_nu so the regime
/// boundary and the axis need no special casing.
class RadialMode {
public:
    /// Throws SingularPeriodError when T is within kSingularGuard (relative)
    /// of a singular period for this m.
    RadialMode(const BallEigenpair& pair, int m, double period);

    int m() const noexcept { return m_; }
    double period() const noexcept { return period_; }
    double shift() const noexcept { return shift_; }

    double value(double r) const;
    double derivative(double r) const;
    double slope_at_1() const noexcept { return slope_at_1_; }

private:
    double nu_;
    double phi_prime_1_;
    int m_;
    double period_;
    double shift_;
    double slope_at_1_;
};

/// Closed-form solution. `trace_points` > 1 samples c_m on a uniform grid.
RadialSolution solve_cm_closed(const BallEigenpair& pair, int m, double period, int trace_points = 0);

/// Independent shooting solution: even power-series start at r0 = 1e-3,
/// adaptive Dormand-Prince integration to r = 1 with local tolerance 1e-12,
/// then rescaling so that c(1) = -phi'_k(1). No Bessel function is used.
RadialSolution solve_cm_shoot(const BallEigenpair& pair, int m, double period, int trace_points = 0);

}  // namespace cylbif
