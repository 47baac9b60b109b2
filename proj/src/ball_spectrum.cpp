#include "cylbif/ball_spectrum.hpp"

#include "cylbif/errors.hpp"
#include "cylbif/special_functions.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace cylbif {

namespace {

constexpr double kPi = std::numbers::pi;

double n1_frequency(int k) { return (2.0 * k - 1.0) * kPi / 2.0; }

void require_radius(double r) {
    if (std::isnan(r) || r < 0.0 || r > 1.0) {
        throw DomainError("radius " + std::to_string(r) + " outside [0, 1]");
    }
}

// (j/2)^nu / Gamma(nu+1): converts E_nu(j^2 r^2) into r^{-nu} J_nu(j r).
double reduced_prefactor(double nu, double j) {
    return std::exp(nu * std::log(0.5 * j) - special::log_gamma(nu + 1.0));
}

}  // namespace

ProblemConfig::ProblemConfig(int dim, int k) : dim_(dim), k_(k) {
    if (dim < 1) throw DomainError("dimension must be >= 1, got " + std::to_string(dim));
    if (k < 1) throw DomainError("mode index k must be >= 1, got " + std::to_string(k));
}

double unit_sphere_measure(int n) {
    if (n < 0) throw DomainError("unit_sphere_measure: negative dimension");
    // |S^n| = 2 pi |S^{n-2}| / (n - 1), from |S^0| = 2 and |S^1| = 2 pi.
    double measure = n % 2 == 0 ? 2.0 : 2.0 * kPi;
    for (int m = n % 2 + 2; m <= n; m += 2) measure *= 2.0 * kPi / (m - 1);
    return measure;
}

std::vector<double> radial_eigenvalues(int dim, int count) {
    const ProblemConfig check(dim, std::max(count, 1));
    std::vector<double> out;
    out.reserve(count);
    if (dim == 1) {
        for (int i = 1; i <= count; ++i) {
            const double w = n1_frequency(i);
            out.push_back(w * w);
        }
        return out;
    }
    const special::BesselZeroTable table(check.nu(), static_cast<std::size_t>(count));
    for (double z : table.zeros()) out.push_back(z * z);
    return out;
}

double eigenvalue(const ProblemConfig& config) {
    if (config.dim() == 1) {
        const double w = n1_frequency(config.k());
        return w * w;
    }
    const double j = special::bessel_j_zero(config.nu(), config.k());
    return j * j;
}

namespace {

BallEigenpair build(const ProblemConfig& config, double j) {
    BallEigenpair pair{config, j, j * j, 0.0, 0.0, 0.0};
    if (config.dim() == 1) {
        pair.c_norm = 1.0 / std::sqrt(2.0 * kPi);
        pair.phi_prime_1 = config.parity() * (2.0 * config.k() - 1.0) * std::sqrt(2.0 * kPi) / 4.0;
        pair.phi_second_1 = 0.0;
        return pair;
    }
    const double nu = config.nu();
    const double jp = special::bessel_j_prime(nu, j);
    pair.c_norm = 1.0 / (std::sqrt(kPi * unit_sphere_measure(config.dim() - 1)) * std::abs(jp));
    pair.phi_prime_1 = pair.c_norm * j * jp;
    pair.phi_second_1 = -(config.dim() - 1) * pair.phi_prime_1;
    return pair;
}

}  // namespace

BallEigenpair make_eigenpair(const ProblemConfig& config) {
    const double j = config.dim() == 1 ? n1_frequency(config.k())
                                       : special::bessel_j_zero(config.nu(), config.k());
    return build(config, j);
}

double normalization(const ProblemConfig& config) { return make_eigenpair(config).c_norm; }

BoundaryDerivatives boundary_derivatives(const ProblemConfig& config) {
    const auto pair = make_eigenpair(config);
    return {pair.phi_prime_1, pair.phi_second_1};
}

double eigenfunction_radial(const BallEigenpair& pair, double r) {
    require_radius(r);
    const double j = pair.frequency;
    if (pair.config.dim() == 1) return pair.c_norm * std::cos(j * r);
    if (r == 1.0) return 0.0;
    const double nu = pair.config.nu();
    return pair.c_norm * reduced_prefactor(nu, j) * special::reduced_bessel(nu, j * j * r * r);
}

double eigenfunction_radial(const ProblemConfig& config, double r) {
    return eigenfunction_radial(make_eigenpair(config), r);
}

double eigenfunction_radial_derivative(const BallEigenpair& pair, double r) {
    require_radius(r);
    const double j = pair.frequency;
    if (pair.config.dim() == 1) return -pair.c_norm * j * std::sin(j * r);
    if (r == 1.0) return pair.phi_prime_1;
    const double nu = pair.config.nu();
    // d/dr E_nu(j^2 r^2) = -j^2 r E_{nu+1}(j^2 r^2) / (2 (nu+1))
    return -pair.c_norm * reduced_prefactor(nu, j) * j * j * r *
           special::reduced_bessel(nu + 1.0, j * j * r * r) / (2.0 * (nu + 1.0));
}

std::vector<double> nodal_radii(const ProblemConfig& config) {
    const int k = config.k();
    std::vector<double> radii;
    if (k < 2) return radii;
    radii.reserve(k - 1);
    if (config.dim() == 1) {
        for (int i = 1; i < k; ++i) radii.push_back((2.0 * i - 1.0) / (2.0 * k - 1.0));
        return radii;
    }
    const special::BesselZeroTable table(config.nu(), static_cast<std::size_t>(k));
    for (int i = 1; i < k; ++i) radii.push_back(table.zero(i) / table.zero(k));
    return radii;
}

}  // namespace cylbif
