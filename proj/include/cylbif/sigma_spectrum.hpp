#pragma once

#include "cylbif/ball_spectrum.hpp"

#include <vector>

namespace cylbif {

enum class Regime { subcritical, critical, supercritical };

const char* to_string(Regime regime);

/// The critical period mu = 2 pi / sqrt(lambda_k) and the singular periods
/// T_1 < ... < T_{k-1} (m = 1).
struct SpectralSlice {
    ProblemConfig config;
    double mu;
    std::vector<double> singular_periods;
};

struct SigmaEvaluation {
    double period;
    Regime regime;
    /// xi = sqrt((2 pi / T)^2 - lambda_k) below mu, rho = sqrt(lambda_k - (2 pi / T)^2) above.
    double frequency;
    double value;
};

/// sigma(T) = c_1'(1) + phi''_k(1) for one configuration, with the eigenpair
/// and singular periods computed once. Immutable after construction, so a
/// single instance may be shared by threads.
class SigmaFunction {
public:
    explicit SigmaFunction(const ProblemConfig& config);

    const ProblemConfig& config() const noexcept { return pair_.config; }
    const BallEigenpair& eigenpair() const noexcept { return pair_; }
    const SpectralSlice& slice() const noexcept { return slice_; }

    /// Throws SingularPeriodError within 1e-8 (relative) of a singular period.
    SigmaEvaluation evaluate(double period) const;
    double value(double period) const;
    /// sigma(T / m).
    double value_m(int m, double period) const;
    /// Richardson-extrapolated central difference (closed form for N = 1).
    double derivative(double period) const;

    /// 0-based index of the singular period nearest to T, or -1 when k = 1.
    int nearest_singular(double period) const;
    /// Distance from T to the closest singular period (infinity when k = 1).
    double singular_distance(double period) const;

private:
    BallEigenpair pair_;
    SpectralSlice slice_;
};

SigmaEvaluation sigma(const ProblemConfig& config, double period);
double sigma_m(const ProblemConfig& config, int m, double period);
SpectralSlice singular_points(const ProblemConfig& config);
double sigma_prime(const ProblemConfig& config, double period);

}  // namespace cylbif
