#pragma once

#include <vector>

namespace cylbif {

/// Dimension N of the ball factor and the index k of the radial mode.
class ProblemConfig {
public:
    /// Throws DomainError unless dim >= 1 and k >= 1.
    ProblemConfig(int dim, int k);

    int dim() const noexcept { return dim_; }
    int k() const noexcept { return k_; }
    /// Radial Bessel order (N - 2) / 2.
    double nu() const noexcept { return 0.5 * (dim_ - 2); }
    /// (-1)^k, the sign of phi'_k(1).
    int parity() const noexcept { return k_ % 2 == 0 ? 1 : -1; }

    bool operator==(const ProblemConfig&) const = default;

private:
    int dim_;
    int k_;
};

/// The k-th radial Dirichlet eigenpair of the unit ball, normalized so that
/// the integral of phi^2 over the ball is 1/(2 pi) with phi(0) > 0.
struct BallEigenpair {
    ProblemConfig config;
    /// sqrt(lambda): j_{nu,k} for N >= 2, (2k-1) pi / 2 for N = 1.
    double frequency;
    double lambda;
    /// C_k in |x|^nu phi = C_k J_nu(j |x|) for N >= 2; the cosine prefactor
    /// 1/sqrt(2 pi) for N = 1.
    double c_norm;
    double phi_prime_1;
    double phi_second_1;
};

struct BoundaryDerivatives {
    double first;
    double second;
};

/// lambda_k: j_{nu,k}^2 for N >= 2, (2k-1)^2 pi^2 / 4 for N = 1.
double eigenvalue(const ProblemConfig& config);

/// lambda_1 < ... < lambda_count for the given dimension.
std::vector<double> radial_eigenvalues(int dim, int count);

double normalization(const ProblemConfig& config);

/// phi'_k(1) and phi''_k(1) = -(N - 1) phi'_k(1).
BoundaryDerivatives boundary_derivatives(const ProblemConfig& config);

BallEigenpair make_eigenpair(const ProblemConfig& config);

/// phi_k(r) on [0, 1], with the removable singularity at r = 0 filled in.
double eigenfunction_radial(const BallEigenpair& pair, double r);
double eigenfunction_radial(const ProblemConfig& config, double r);

/// d phi_k / dr on [0, 1].
double eigenfunction_radial_derivative(const BallEigenpair& pair, double r);

/// The k - 1 interior zeros j_{nu,i} / j_{nu,k} of phi_k (empty for k = 1).
std::vector<double> nodal_radii(const ProblemConfig& config);

/// Surface measure of the unit sphere S^{n} in R^{n+1}; 2 for n = 0.
double unit_sphere_measure(int n);

}  // namespace cylbif
