#pragma once

#include "cylbif/ball_spectrum.hpp"
#include "cylbif/bifurcation.hpp"
#include "cylbif/radial_ode.hpp"

#include <vector>

namespace cylbif {

struct ModeCoefficient {
    int mode;
    double coefficient;
};

/// A first-order boundary perturbation R(t) = 1 + s v(2 pi t / T) with
/// v = sum coefficient * cos(mode * .). No kernel condition is imposed.
struct Perturbation {
    double period;
    double s;
    std::vector<ModeCoefficient> modes;
};

/// Branch data at a bifurcation point: v = beta cos + sum gamma_n cos(l_n .).
struct BranchParams {
    BifurcationPoint point;
    double s;
    double beta;
    std::vector<ModeCoefficient> gammas;
};

/// Throws DomainError unless beta^2 + sum gamma^2 = 1 (to 1e-12), every gamma
/// mode is a kernel mode other than 1, and |s| (|beta| + sum |gamma|) < 0.5.
void validate(const BranchParams& params);

/// Unit-norm branch parameters built from raw weights: (beta, gammas) are
/// rescaled to satisfy the normalization before validation.
BranchParams make_branch(const BifurcationPoint& point, double s, double beta,
                         std::vector<ModeCoefficient> gammas);

Perturbation to_perturbation(const BranchParams& params);

/// First-order fields on the reference cylinder (r in [0, 1], t in R) for one
/// perturbation. Radial modes are built once at construction.
class FirstOrderField {
public:
    FirstOrderField(const ProblemConfig& config, Perturbation perturbation);

    const BallEigenpair& eigenpair() const noexcept { return pair_; }
    const Perturbation& perturbation() const noexcept { return perturbation_; }

    /// v(2 pi t / T).
    double shape(double t) const;
    /// R(t) = 1 + s v(2 pi t / T); R(0) = 1 + s beta for a branch.
    double profile(double t) const;
    /// psi(r, t) = sum coefficient * c_m(r) cos(2 m pi t / T).
    double psi(double r, double t) const;
    double psi_r(double r, double t) const;
    /// u_1 = phi_k(r) + s psi(r, t).
    double eigenfunction(double r, double t) const;
    /// phi'_k(1) + s (d_r psi(1, t) + phi''_k(1) v).
    double neumann_trace(double t) const;

    /// r_j^0 - s psi(r_j^0, t) / phi'_k(r_j^0), j = 1..k-1.
    std::vector<double> nodal_lines_linear(double t) const;
    /// The linear estimates polished to zeros of u_1(., t) by a bracketed
    /// solve in a window of half-width 2 |s| around each estimate.
    std::vector<double> nodal_lines(double t) const;

private:
    struct ActiveMode {
        int mode;
        double coefficient;
        RadialMode radial;
    };

    BallEigenpair pair_;
    Perturbation perturbation_;
    std::vector<ActiveMode> active_;
    std::vector<double> nodal_radii_;
};

struct ProfileSample {
    double t;
    double radius;
    std::vector<double> nodal;
    double trace;
};

struct DomainProfile {
    ProblemConfig config;
    int branch;
    double period;
    double s;
    double beta;
    std::vector<ModeCoefficient> gammas;
    /// t_n = n T / resolution, n = 0..resolution-1.
    std::vector<ProfileSample> samples;
};

double branch_profile(const BranchParams& params, double t);
double first_order_eigenfunction(const ProblemConfig& config, const BranchParams& params, double r, double t);
double neumann_trace(const ProblemConfig& config, const BranchParams& params, double t);
std::vector<double> nodal_lines(const ProblemConfig& config, const BranchParams& params, double t);

/// Requires resolution >= 16.
DomainProfile export_grid(const ProblemConfig& config, const BranchParams& params, int resolution);

}  // namespace cylbif
