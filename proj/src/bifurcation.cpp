#include "cylbif/bifurcation.hpp"

#include "cylbif/errors.hpp"
#include "cylbif/n1_exact.hpp"
#include "cylbif/numerics.hpp"
#include "cylbif/parallel.hpp"
#include "cylbif/radial_ode.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace cylbif {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kBracketBudget = 200;
// Bracket probes never come closer than this (relative) to a singular period.
constexpr double kApproachFloor = 1e-7;
constexpr int kScaleSamples = 64;
constexpr double kTransversalityRatio = 1e-4;
// Sub-periods this close (relative) to a singular period are not classified.
constexpr double kNearSingular = 1e-6;

struct Interval {
    double lower;
    double upper;
};

Interval interval_of(const SigmaFunction& sigma, int i) {
    const auto& ts = sigma.slice().singular_periods;
    return {i == 1 ? 0.0 : ts[i - 2], i == sigma.config().k() ? kInf : ts[i - 1]};
}

[[noreturn]] void bracket_failure(const ProblemConfig& c, int i, const char* side) {
    std::ostringstream os;
    os << "no sign change found on the " << side << " side of interval " << i << " (N = " << c.dim()
       << ", k = " << c.k() << ")";
    throw NumericalFailure(os.str());
}

BifurcationPoint locate(const SigmaFunction& sigma, int i) {
    const ProblemConfig& c = sigma.config();
    if (i < 1 || i > c.k()) throw DomainError("interval index must lie in [1, k]");
    const Interval iv = interval_of(sigma, i);
    const double sign = c.parity();
    auto g = [&](double t) { return sign * sigma.value(t); };

    // Starting probe inside the interval.
    double start;
    if (i == 1 && c.dim() >= 2) {
        start = sigma.slice().mu;
    } else if (i == 1) {
        start = std::isinf(iv.upper) ? sigma.slice().mu : 0.5 * iv.upper;
    } else if (std::isinf(iv.upper)) {
        start = iv.lower * (1.0 + 1e-3);
    } else {
        start = 0.5 * (iv.lower + iv.upper);
    }

    double a = start, ga = g(a);
    for (int n = 0; ga > 0.0; ++n) {
        if (n >= kBracketBudget) bracket_failure(c, i, "lower");
        a = iv.lower + 0.5 * (a - iv.lower);
        if (iv.lower > 0.0 && a - iv.lower < kApproachFloor * iv.lower) bracket_failure(c, i, "lower");
        ga = g(a);
    }
    double b = start, gb = ga;
    if (a != start) gb = g(b);
    for (int n = 0; gb < 0.0; ++n) {
        if (n >= kBracketBudget) bracket_failure(c, i, "upper");
        if (std::isinf(iv.upper)) {
            b = 2.0 * b;
        } else {
            b = iv.upper - 0.5 * (iv.upper - b);
            if (iv.upper - b < kApproachFloor * iv.upper) bracket_failure(c, i, "upper");
        }
        gb = g(b);
    }

    double root;
    if (ga == 0.0) {
        root = a;
    } else if (gb == 0.0) {
        root = b;
    } else {
        numerics::RootOptions opts;
        root = numerics::find_root_bracketed(g, a, b, ga, gb, opts).root;
    }

    BifurcationPoint p{c, i, root, iv.lower, iv.upper, std::abs(sigma.value(root)), sigma.derivative(root),
                       KernelSpec{}, Transversality{}};
    return p;
}

double median_abs_sigma(const SigmaFunction& sigma, const BifurcationPoint& p) {
    const double lo = p.interval_lower;
    const double hi = std::isinf(p.interval_upper) ? p.interval_lower + 2.0 * (p.T_star - p.interval_lower)
                                                   : p.interval_upper;
    std::vector<double> values;
    values.reserve(kScaleSamples);
    for (int n = 0; n < kScaleSamples; ++n) {
        const double t = lo + (hi - lo) * (n + 0.5) / kScaleSamples;
        values.push_back(std::abs(sigma.value(t)));
    }
    std::nth_element(values.begin(), values.begin() + kScaleSamples / 2, values.end());
    return values[kScaleSamples / 2];
}

}  // namespace

const char* to_string(CertificationStatus status) {
    switch (status) {
        case CertificationStatus::certified: return "certified";
        case CertificationStatus::failed: return "failed";
        case CertificationStatus::inconclusive: return "inconclusive";
    }
    return "unknown";
}

Transversality certify_transversality(const SigmaFunction& sigma, const BifurcationPoint& point) {
    const double t = point.T_star;
    const double reach = std::min(0.1 * t, 0.25 * sigma.singular_distance(t));
    auto f = [&](double x) { return sigma.value(x); };

    Transversality out;
    out.finite_difference = numerics::ridders_derivative(f, t, reach).value;
    out.polynomial_fit = numerics::polyfit_derivative(f, t, 0.05 * reach);
    out.scale = median_abs_sigma(sigma, point);

    const double parity = sigma.config().parity();
    const bool fd_sign = parity * out.finite_difference > 0.0;
    const bool fit_sign = parity * out.polynomial_fit > 0.0;
    if ((out.finite_difference > 0.0) != (out.polynomial_fit > 0.0)) {
        out.status = CertificationStatus::inconclusive;
    } else if (fd_sign && fit_sign && std::abs(out.finite_difference) * t > kTransversalityRatio * out.scale) {
        out.status = CertificationStatus::certified;
    } else {
        out.status = CertificationStatus::failed;
    }
    return out;
}

Transversality certify_transversality(const BifurcationPoint& point) {
    return certify_transversality(SigmaFunction(point.config), point);
}

KernelSpec kernel_spec(const ProblemConfig& config, const std::vector<BifurcationPoint>& points, int i,
                       double tol) {
    if (i < 1 || static_cast<std::size_t>(i) > points.size()) {
        throw DomainError("kernel_spec: interval index out of range");
    }
    if (!(tol > 0.0)) throw DomainError("kernel_spec: tolerance must be positive");

    const std::vector<double> singular =
        config.dim() == 1 ? singular_points_n1(config.k()) : singular_periods(config, 1);
    const double ti = points[i - 1].T_star;
    const int l_max = static_cast<int>(std::floor(ti / points.front().T_star)) + 1;

    KernelSpec spec;
    spec.exact = config.dim() == 1;
    for (int l = 2; l <= l_max; ++l) {
        const double sub = ti / l;
        const bool near = std::any_of(singular.begin(), singular.end(),
                                      [&](double s) { return std::abs(sub - s) <= kNearSingular * s; });
        if (near) {
            std::ostringstream os;
            os << "T_star/" << l << " lies next to a singular period; mode " << l << " not classified";
            spec.warnings.push_back(os.str());
            continue;
        }
        for (int j = 1; j < i; ++j) {
            const double residual = std::abs(ti - l * points[j - 1].T_star) / ti;
            const bool hit = spec.exact ? is_resonant_exact(config.k(), i, j, l) : residual < tol;
            if (hit) {
                spec.partners.push_back({j, l, spec.exact ? 0.0 : residual});
                spec.modes.push_back(l);
                break;
            }
        }
    }
    std::sort(spec.modes.begin(), spec.modes.end());
    spec.modes.erase(std::unique(spec.modes.begin(), spec.modes.end()), spec.modes.end());
    spec.dimension = static_cast<int>(spec.modes.size());
    return spec;
}

BifurcationPoint find_bifurcation_point(const SigmaFunction& sigma, int i) {
    const ProblemConfig& c = sigma.config();
    if (i < 1 || i > c.k()) throw DomainError("interval index must lie in [1, k]");
    std::vector<BifurcationPoint> points;
    points.reserve(i);
    for (int n = 1; n <= i; ++n) points.push_back(locate(sigma, n));
    BifurcationPoint p = points.back();
    p.kernel = kernel_spec(c, points, i);
    p.certification = certify_transversality(sigma, p);
    return p;
}

BifurcationPoint find_bifurcation_point(const ProblemConfig& config, int i) {
    return find_bifurcation_point(SigmaFunction(config), i);
}

std::vector<BifurcationPoint> all_bifurcation_points(const ProblemConfig& config) {
    const SigmaFunction sigma(config);
    auto points = parallel_map(static_cast<std::size_t>(config.k()),
                               [&](std::size_t n) { return locate(sigma, static_cast<int>(n) + 1); });
    const auto extras = parallel_map(points.size(), [&](std::size_t n) {
        return std::pair{kernel_spec(config, points, static_cast<int>(n) + 1),
                         certify_transversality(sigma, points[n])};
    });
    for (std::size_t n = 0; n < points.size(); ++n) {
        points[n].kernel = extras[n].first;
        points[n].certification = extras[n].second;
    }
    return points;
}

}  // namespace cylbif
