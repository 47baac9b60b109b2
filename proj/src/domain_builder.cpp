#include "cylbif/domain_builder.hpp"

#include "cylbif/errors.hpp"
#include "cylbif/numerics.hpp"
#include "cylbif/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

namespace cylbif {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

void validate(const BranchParams& params) {
    if (!std::isfinite(params.s) || !std::isfinite(params.beta)) throw DomainError("branch parameters must be finite");
    double norm = params.beta * params.beta;
    double weight = std::abs(params.beta);
    const auto& modes = params.point.kernel.modes;
    for (const auto& g : params.gammas) {
        if (g.mode < 2 || !std::binary_search(modes.begin(), modes.end(), g.mode)) {
            throw DomainError("gamma mode " + std::to_string(g.mode) + " is not a kernel mode of branch " +
                              std::to_string(params.point.interval_index));
        }
        norm += g.coefficient * g.coefficient;
        weight += std::abs(g.coefficient);
    }
    for (std::size_t a = 0; a < params.gammas.size(); ++a) {
        for (std::size_t b = a + 1; b < params.gammas.size(); ++b) {
            if (params.gammas[a].mode == params.gammas[b].mode) throw DomainError("duplicate gamma mode");
        }
    }
    if (std::abs(norm - 1.0) > 1e-12) throw DomainError("beta^2 + sum gamma^2 must equal 1");
    if (!(std::abs(params.s) * weight < 0.5)) throw DomainError("amplitude |s| too large for a positive radius");
}

BranchParams make_branch(const BifurcationPoint& point, double s, double beta, std::vector<ModeCoefficient> gammas) {
    double norm = beta * beta;
    for (const auto& g : gammas) norm += g.coefficient * g.coefficient;
    if (!(norm > 0.0)) throw DomainError("beta and gammas cannot all vanish");
    const double scale = 1.0 / std::sqrt(norm);
    for (auto& g : gammas) g.coefficient *= scale;
    BranchParams params{point, s, beta * scale, std::move(gammas)};
    validate(params);
    return params;
}

Perturbation to_perturbation(const BranchParams& params) {
    Perturbation p{params.point.T_star, params.s, {{1, params.beta}}};
    p.modes.insert(p.modes.end(), params.gammas.begin(), params.gammas.end());
    return p;
}

FirstOrderField::FirstOrderField(const ProblemConfig& config, Perturbation perturbation)
    : pair_(make_eigenpair(config)), perturbation_(std::move(perturbation)), nodal_radii_(nodal_radii(config)) {
    if (!(perturbation_.period > 0.0)) throw DomainError("period must be positive");
    for (const auto& m : perturbation_.modes) {
        if (m.mode < 1) throw DomainError("perturbation modes must be >= 1");
        active_.push_back({m.mode, m.coefficient, RadialMode(pair_, m.mode, perturbation_.period)});
    }
}

double FirstOrderField::shape(double t) const {
    double v = 0.0;
    for (const auto& m : active_) v += m.coefficient * std::cos(2.0 * m.mode * kPi * t / perturbation_.period);
    return v;
}

double FirstOrderField::profile(double t) const { return 1.0 + perturbation_.s * shape(t); }

double FirstOrderField::psi(double r, double t) const {
    double sum = 0.0;
    for (const auto& m : active_) {
        sum += m.coefficient * m.radial.value(r) * std::cos(2.0 * m.mode * kPi * t / perturbation_.period);
    }
    return sum;
}

double FirstOrderField::psi_r(double r, double t) const {
    double sum = 0.0;
    for (const auto& m : active_) {
        sum += m.coefficient * m.radial.derivative(r) * std::cos(2.0 * m.mode * kPi * t / perturbation_.period);
    }
    return sum;
}

double FirstOrderField::eigenfunction(double r, double t) const {
    return eigenfunction_radial(pair_, r) + perturbation_.s * psi(r, t);
}

double FirstOrderField::neumann_trace(double t) const {
    double first = 0.0;
    for (const auto& m : active_) {
        first += m.coefficient * (m.radial.slope_at_1() + pair_.phi_second_1) *
                 std::cos(2.0 * m.mode * kPi * t / perturbation_.period);
    }
    return pair_.phi_prime_1 + perturbation_.s * first;
}

std::vector<double> FirstOrderField::nodal_lines_linear(double t) const {
    std::vector<double> out;
    out.reserve(nodal_radii_.size());
    for (double r0 : nodal_radii_) {
        const double slope = eigenfunction_radial_derivative(pair_, r0);
        if (std::abs(slope) < 1e-10) throw NumericalFailure("degenerate nodal radius");
        out.push_back(r0 - perturbation_.s * psi(r0, t) / slope);
    }
    return out;
}

std::vector<double> FirstOrderField::nodal_lines(double t) const {
    std::vector<double> out = nodal_lines_linear(t);
    if (perturbation_.s == 0.0) return out;
    const double reach = 2.0 * std::abs(perturbation_.s);
    auto u = [&](double r) { return eigenfunction(r, t); };
    for (std::size_t j = 0; j < out.size(); ++j) {
        // Keep each window between the neighbouring unperturbed radii.
        const double floor_r = j == 0 ? 0.0 : 0.5 * (nodal_radii_[j - 1] + nodal_radii_[j]);
        const double ceil_r = j + 1 == out.size() ? 1.0 : 0.5 * (nodal_radii_[j] + nodal_radii_[j + 1]);
        const double lo = std::max(floor_r, out[j] - reach);
        const double hi = std::min(ceil_r, out[j] + reach);
        const double ulo = u(lo), uhi = u(hi);
        if ((ulo > 0.0) == (uhi > 0.0)) throw NumericalFailure("nodal line polish: no sign change in window");
        out[j] = numerics::find_root_bracketed(u, lo, hi, ulo, uhi).root;
    }
    return out;
}

double branch_profile(const BranchParams& params, double t) {
    validate(params);
    const auto p = to_perturbation(params);
    double v = 0.0;
    for (const auto& m : p.modes) v += m.coefficient * std::cos(2.0 * m.mode * kPi * t / p.period);
    return 1.0 + p.s * v;
}

double first_order_eigenfunction(const ProblemConfig& config, const BranchParams& params, double r, double t) {
    validate(params);
    return FirstOrderField(config, to_perturbation(params)).eigenfunction(r, t);
}

double neumann_trace(const ProblemConfig& config, const BranchParams& params, double t) {
    validate(params);
    return FirstOrderField(config, to_perturbation(params)).neumann_trace(t);
}

std::vector<double> nodal_lines(const ProblemConfig& config, const BranchParams& params, double t) {
    validate(params);
    if (config.k() < 2) throw DomainError("nodal lines require k >= 2");
    return FirstOrderField(config, to_perturbation(params)).nodal_lines(t);
}

DomainProfile export_grid(const ProblemConfig& config, const BranchParams& params, int resolution) {
    if (resolution < 16) throw DomainError("resolution must be >= 16");
    validate(params);
    const FirstOrderField field(config, to_perturbation(params));
    const double period = params.point.T_star;
    DomainProfile out{config, params.point.interval_index, period, params.s, params.beta, params.gammas, {}};
    out.samples = parallel_map(static_cast<std::size_t>(resolution), [&](std::size_t n) {
        const double t = static_cast<double>(n) * period / resolution;
        return ProfileSample{t, field.profile(t), field.nodal_lines(t), field.neumann_trace(t)};
    });
    return out;
}

}  // namespace cylbif
