#pragma once

#include <cstddef>
#include <span>
#include <vector>

/// Real-order Bessel functions of the first kind, their modified
/// counterparts, stable ratios, and positive zeros.
///
/// Supported orders are tau >= 0 plus the two negative orders the rest of the
/// library needs, tau = -1/2 (elementary cosine form) and tau = -1 (integer
/// reflection). Any other negative order raises DomainError.
namespace cylbif::special {

/// J_tau(x). x = 0 is accepted for tau >= 0 and tau = -1.
double bessel_j(double tau, double x);

/// J'_tau(x) = (J_{tau-1}(x) - J_{tau+1}(x)) / 2, for x > 0.
double bessel_j_prime(double tau, double x);

/// I_tau(x) for x >= 0. Raises NumericalFailure when the value overflows.
double bessel_i(double tau, double x);

/// e^{-x} I_tau(x), finite for every x >= 0.
double bessel_i_scaled(double tau, double x);

/// g(x) = x I_{nu-1}(x) / I_nu(x) for nu >= 0, continuous on [0, inf) with
/// g(0) = 2 nu.
double bessel_i_ratio(double nu, double x);

/// x I_{nu+1}(x) / I_nu(x) for nu >= 0; zero at x = 0, never overflows.
double bessel_i_upper_ratio(double nu, double x);

/// x J_{nu+1}(x) / J_nu(x) for nu >= -1/2; infinite at zeros of J_nu.
double bessel_j_upper_ratio(double nu, double x);

/// The entire function E_nu(q) = sum_m (-q/4)^m / (m! (nu+1)_m).
///
/// E_nu(x^2) = Gamma(nu+1) (2/x)^nu J_nu(x) and E_nu(-x^2) is the analogous
/// I_nu expression, so one argument covers both the oscillatory and the
/// exponential regime without a removable singularity at q = 0. Valid for
/// nu >= -1/2. Raises NumericalFailure on overflow (q below about -5e5).
double reduced_bessel(double nu, double q);

/// E_nu(q1) / E_nu(q2), computed in log space when both arguments are
/// negative so that very large exponential growth does not overflow.
double reduced_bessel_ratio(double nu, double q1, double q2);

/// E_{nu1}(q1) / E_{nu2}(q2), same overflow handling.
double reduced_bessel_ratio(double nu1, double q1, double nu2, double q2);

/// q E_{nu+1}(q) / (2 (nu+1) E_nu(q)): equals x J_{nu+1}(x)/J_nu(x) for
/// q = x^2 > 0 and -x I_{nu+1}(x)/I_nu(x) for q = -x^2 < 0. Analytic in q
/// except for poles at q = j_{nu,i}^2. Valid for nu >= -1/2.
double upper_ratio(double nu, double q);

/// log Gamma(x) for x > 0.
double log_gamma(double x);

/// Positive zeros of J_tau, built once and then shared read-only.
class BesselZeroTable {
public:
    /// Computes the first `count` positive zeros of J_tau, tau >= -1/2.
    BesselZeroTable(double tau, std::size_t count);

    double tau() const noexcept { return tau_; }
    std::size_t count() const noexcept { return zeros_.size(); }

    /// The m-th zero, 1-based.
    double zero(std::size_t m) const;

    std::span<const double> zeros() const noexcept { return zeros_; }

private:
    double tau_;
    std::vector<double> zeros_;
};

/// j_{tau,m}, the m-th positive zero of J_tau (m >= 1, tau >= -1/2),
/// certified by a sign change of J_tau across a bracket narrower than 1e-11.
double bessel_j_zero(double tau, int m);

/// McMahon's large-zero expansion; used only as a starting guess.
double mcmahon_zero_guess(double tau, int m);

}  // namespace cylbif::special
