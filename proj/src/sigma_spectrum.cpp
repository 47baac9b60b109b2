#include "cylbif/sigma_spectrum.hpp"

#include "cylbif/errors.hpp"
#include "cylbif/n1_exact.hpp"
#include "cylbif/numerics.hpp"
#include "cylbif/radial_ode.hpp"
#include "cylbif/special_functions.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace cylbif {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

const char* to_string(Regime regime) {
    switch (regime) {
        case Regime::subcritical: return "subcritical";
        case Regime::critical: return "critical";
        case Regime::supercritical: return "supercritical";
    }
    return "unknown";
}

SigmaFunction::SigmaFunction(const ProblemConfig& config)
    : pair_(make_eigenpair(config)),
      slice_{config, 2.0 * kPi / pair_.frequency,
             config.dim() == 1 ? singular_points_n1(config.k()) : singular_periods(config, 1)} {}

int SigmaFunction::nearest_singular(double period) const {
    int best = -1;
    double gap = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < slice_.singular_periods.size(); ++i) {
        const double d = std::abs(period - slice_.singular_periods[i]);
        if (d < gap) {
            gap = d;
            best = static_cast<int>(i);
        }
    }
    return best;
}

double SigmaFunction::singular_distance(double period) const {
    const int i = nearest_singular(period);
    if (i < 0) return std::numeric_limits<double>::infinity();
    return std::abs(period - slice_.singular_periods[i]);
}

SigmaEvaluation SigmaFunction::evaluate(double period) const {
    if (std::isnan(period) || !(period > 0.0)) throw DomainError("period must be positive");
    const int near = nearest_singular(period);
    if (near >= 0) {
        const double ti = slice_.singular_periods[near];
        if (std::abs(period - ti) <= kSingularGuard * ti) {
            std::ostringstream os;
            os.precision(17);
            os << "sigma is singular at T = " << period << " (T_" << near + 1 << " = " << ti << ")";
            throw SingularPeriodError(period, ti, os.str());
        }
    }

    const double q = radial_shift(pair_.lambda, 1, period);
    SigmaEvaluation out{period, Regime::critical, std::sqrt(std::abs(q)), 0.0};
    if (std::abs(q) <= 8.0 * std::numeric_limits<double>::epsilon() * pair_.lambda) {
        out.frequency = 0.0;
    } else {
        out.regime = q < 0.0 ? Regime::subcritical : Regime::supercritical;
    }

    if (config().dim() == 1) {
        out.value = sigma_exact_n1(config().k(), period);
        return out;
    }
    const double bend = config().dim() - 1.0;
    out.value = -pair_.phi_prime_1 * (bend - special::upper_ratio(config().nu(), q));
    return out;
}

double SigmaFunction::value(double period) const { return evaluate(period).value; }

double SigmaFunction::value_m(int m, double period) const {
    if (m < 1) throw DomainError("mode m must be >= 1");
    return value(period / m);
}

double SigmaFunction::derivative(double period) const {
    if (config().dim() == 1) return sigma_prime_exact_n1(config().k(), period);
    evaluate(period);
    const double h0 = std::min(0.1 * period, 0.25 * singular_distance(period));
    const auto est = numerics::ridders_derivative([this](double t) { return value(t); }, period, h0);
    return est.value;
}

SigmaEvaluation sigma(const ProblemConfig& config, double period) {
    return SigmaFunction(config).evaluate(period);
}

double sigma_m(const ProblemConfig& config, int m, double period) {
    return SigmaFunction(config).value_m(m, period);
}

SpectralSlice singular_points(const ProblemConfig& config) { return SigmaFunction(config).slice(); }

double sigma_prime(const ProblemConfig& config, double period) {
    return SigmaFunction(config).derivative(period);
}

}  // namespace cylbif
