#include "cylbif/special_functions.hpp"

#include "cylbif/errors.hpp"

#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace cylbif::special {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// Above this argument the exponentially scaled I is taken from its
// large-argument expansion instead of from the unscaled value.
constexpr double kScaledIAsymptoticFrom = 600.0;

// |q| up to this bound is summed directly from the power series of E_nu.
constexpr double kReducedSeriesBound = 4.0;

bool is_minus_half(double tau) { return tau == -0.5; }
bool is_minus_one(double tau) { return tau == -1.0; }

bool order_supported(double tau) {
    return tau >= 0.0 || is_minus_half(tau) || is_minus_one(tau);
}

void require_order(double tau, const char* fn) {
    if (std::isnan(tau) || !order_supported(tau)) {
        throw DomainError(std::string(fn) + ": unsupported order " + std::to_string(tau) +
                          " (need tau >= 0, tau = -1/2 or tau = -1)");
    }
}

void require_argument(double x, const char* fn) {
    if (std::isnan(x) || x < 0.0) {
        throw DomainError(std::string(fn) + ": negative argument " + std::to_string(x));
    }
}

template <class F>
double guarded(F&& f, const char* fn) {
    try {
        return f();
    } catch (const std::overflow_error&) {
        throw NumericalFailure(std::string(fn) + ": overflow");
    } catch (const std::domain_error& e) {
        throw DomainError(std::string(fn) + ": " + e.what());
    } catch (const boost::math::evaluation_error& e) {
        throw NumericalFailure(std::string(fn) + ": " + e.what());
    }
}

// Power series of E_nu(q); only used where it converges without cancellation.
double reduced_series(double nu, double q) {
    double term = 1.0;
    double sum = 1.0;
    for (int m = 1; m < 200; ++m) {
        term *= -q / (4.0 * m * (nu + m));
        sum += term;
        if (std::abs(term) <= 0.25 * kEps * std::abs(sum)) break;
    }
    return sum;
}

// log E_nu(-xi^2), xi >= 0. E_nu is positive on the negative axis.
double log_reduced_negative(double nu, double xi) {
    if (xi * xi <= kReducedSeriesBound) return std::log(reduced_series(nu, -xi * xi));
    if (is_minus_half(nu)) return xi + std::log(0.5 * (1.0 + std::exp(-2.0 * xi)));
    return log_gamma(nu + 1.0) + nu * std::log(2.0 / xi) + xi + std::log(bessel_i_scaled(nu, xi));
}

}  // namespace

double log_gamma(double x) {
    if (!(x > 0.0)) throw DomainError("log_gamma: argument must be positive");
    return boost::math::lgamma(x);
}

double bessel_j(double tau, double x) {
    require_order(tau, "bessel_j");
    require_argument(x, "bessel_j");
    if (is_minus_one(tau)) return -bessel_j(1.0, x);
    if (is_minus_half(tau)) {
        if (x == 0.0) throw DomainError("bessel_j: J_{-1/2} is unbounded at 0");
        return std::sqrt(2.0 / (kPi * x)) * std::cos(x);
    }
    if (x == 0.0) return tau == 0.0 ? 1.0 : 0.0;
    if (tau == 0.5) return std::sqrt(2.0 / (kPi * x)) * std::sin(x);
    return guarded([&] { return boost::math::cyl_bessel_j(tau, x); }, "bessel_j");
}

double bessel_j_prime(double tau, double x) {
    require_order(tau, "bessel_j_prime");
    if (std::isnan(x) || x <= 0.0) throw DomainError("bessel_j_prime: argument must be positive");
    if (order_supported(tau - 1.0)) {
        return 0.5 * (bessel_j(tau - 1.0, x) - bessel_j(tau + 1.0, x));
    }
    // tau - 1 falls in the unsupported band (-1, 0); use the upward form.
    return tau / x * bessel_j(tau, x) - bessel_j(tau + 1.0, x);
}

double bessel_i(double tau, double x) {
    require_order(tau, "bessel_i");
    require_argument(x, "bessel_i");
    if (is_minus_one(tau)) return bessel_i(1.0, x);
    if (is_minus_half(tau)) {
        if (x == 0.0) throw DomainError("bessel_i: I_{-1/2} is unbounded at 0");
        const double c = std::cosh(x);
        if (!std::isfinite(c)) throw NumericalFailure("bessel_i: overflow");
        return std::sqrt(2.0 / (kPi * x)) * c;
    }
    if (x == 0.0) return tau == 0.0 ? 1.0 : 0.0;
    return guarded([&] { return boost::math::cyl_bessel_i(tau, x); }, "bessel_i");
}

double bessel_i_scaled(double tau, double x) {
    require_order(tau, "bessel_i_scaled");
    require_argument(x, "bessel_i_scaled");
    if (is_minus_one(tau)) return bessel_i_scaled(1.0, x);
    if (is_minus_half(tau)) {
        if (x == 0.0) throw DomainError("bessel_i_scaled: I_{-1/2} is unbounded at 0");
        return std::sqrt(2.0 / (kPi * x)) * 0.5 * (1.0 + std::exp(-2.0 * x));
    }
    if (x < kScaledIAsymptoticFrom) return bessel_i(tau, x) * std::exp(-x);

    // Hankel expansion: e^{-x} I_tau(x) ~ (2 pi x)^{-1/2} sum_k (-1)^k a_k / x^k.
    const double mu = 4.0 * tau * tau;
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k < 60; ++k) {
        const double odd = 2.0 * k - 1.0;
        term *= -(mu - odd * odd) / (8.0 * k * x);
        sum += term;
        if (std::abs(term) <= 0.25 * kEps * std::abs(sum)) break;
    }
    return sum / std::sqrt(2.0 * kPi * x);
}

double bessel_i_upper_ratio(double nu, double x) {
    if (std::isnan(nu) || nu < 0.0) throw DomainError("bessel_i_upper_ratio: need nu >= 0");
    require_argument(x, "bessel_i_upper_ratio");
    if (x == 0.0) return 0.0;
    if (x * x <= kReducedSeriesBound) {
        return x * x / (2.0 * (nu + 1.0)) * reduced_series(nu + 1.0, -x * x) /
               reduced_series(nu, -x * x);
    }
    // I_{nu+1}/I_nu = 1/(b_1 + 1/(b_2 + ...)), b_n = 2(nu+n)/x, modified Lentz.
    constexpr double tiny = 1e-300;
    double f = 2.0 * (nu + 1.0) / x;
    double c = f;
    double d = 0.0;
    const int max_terms = 10000 + static_cast<int>(4.0 * x);
    for (int n = 2; n < max_terms; ++n) {
        const double b = 2.0 * (nu + n) / x;
        d = b + d;
        if (d == 0.0) d = tiny;
        d = 1.0 / d;
        c = b + 1.0 / c;
        if (c == 0.0) c = tiny;
        const double delta = c * d;
        f *= delta;
        if (std::abs(delta - 1.0) <= kEps) return x / f;
    }
    throw NumericalFailure("bessel_i_upper_ratio: continued fraction did not converge");
}

double bessel_i_ratio(double nu, double x) {
    if (std::isnan(nu) || nu < 0.0) throw DomainError("bessel_i_ratio: need nu >= 0");
    require_argument(x, "bessel_i_ratio");
    if (x < 1e-8) return 2.0 * nu;
    return 2.0 * nu + bessel_i_upper_ratio(nu, x);
}

double bessel_j_upper_ratio(double nu, double x) {
    if (std::isnan(nu) || !(nu >= 0.0 || is_minus_half(nu))) {
        throw DomainError("bessel_j_upper_ratio: need nu >= -1/2");
    }
    require_argument(x, "bessel_j_upper_ratio");
    if (x == 0.0) return 0.0;
    if (x * x <= kReducedSeriesBound) {
        return x * x / (2.0 * (nu + 1.0)) * reduced_series(nu + 1.0, x * x) /
               reduced_series(nu, x * x);
    }
    if (is_minus_half(nu)) return x * std::tan(x);
    return x * bessel_j(nu + 1.0, x) / bessel_j(nu, x);
}

double reduced_bessel(double nu, double q) {
    if (std::isnan(nu) || !(nu >= 0.0 || is_minus_half(nu))) {
        throw DomainError("reduced_bessel: need nu >= -1/2");
    }
    if (std::isnan(q)) throw DomainError("reduced_bessel: NaN argument");
    if (std::abs(q) <= kReducedSeriesBound) return reduced_series(nu, q);
    if (q > 0.0) {
        const double x = std::sqrt(q);
        if (is_minus_half(nu)) return std::cos(x);
        return std::exp(log_gamma(nu + 1.0) + nu * std::log(2.0 / x)) * bessel_j(nu, x);
    }
    const double log_value = log_reduced_negative(nu, std::sqrt(-q));
    if (log_value > std::log(std::numeric_limits<double>::max())) {
        throw NumericalFailure("reduced_bessel: overflow");
    }
    return std::exp(log_value);
}

double reduced_bessel_ratio(double nu, double q1, double q2) {
    return reduced_bessel_ratio(nu, q1, nu, q2);
}

double reduced_bessel_ratio(double nu1, double q1, double nu2, double q2) {
    if (q1 < 0.0 && q2 < 0.0) {
        return std::exp(log_reduced_negative(nu1, std::sqrt(-q1)) -
                        log_reduced_negative(nu2, std::sqrt(-q2)));
    }
    if (q2 < 0.0) {
        // Bounded numerator over a possibly huge positive denominator.
        const double num = reduced_bessel(nu1, q1);
        return num * std::exp(-log_reduced_negative(nu2, std::sqrt(-q2)));
    }
    return reduced_bessel(nu1, q1) / reduced_bessel(nu2, q2);
}

double upper_ratio(double nu, double q) {
    if (std::isnan(nu) || !(nu >= 0.0 || is_minus_half(nu))) {
        throw DomainError("upper_ratio: need nu >= -1/2");
    }
    if (std::isnan(q)) throw DomainError("upper_ratio: NaN argument");
    if (std::abs(q) <= kReducedSeriesBound) {
        return q / (2.0 * (nu + 1.0)) * reduced_series(nu + 1.0, q) / reduced_series(nu, q);
    }
    if (q > 0.0) return bessel_j_upper_ratio(nu, std::sqrt(q));
    const double xi = std::sqrt(-q);
    if (is_minus_half(nu)) return -xi * std::tanh(xi);
    return -bessel_i_upper_ratio(nu, xi);
}

double mcmahon_zero_guess(double tau, int m) {
    const double b = (m + 0.5 * tau - 0.25) * kPi;
    const double mu = 4.0 * tau * tau;
    const double b8 = 8.0 * b;
    return b - (mu - 1.0) / b8 - 4.0 * (mu - 1.0) * (7.0 * mu - 31.0) / (3.0 * b8 * b8 * b8);
}

namespace {

// Refines the single zero of J_tau inside [a, b] (sign change given) with
// Newton steps, falling back to bisection whenever Newton leaves the bracket.
double refine_zero(double tau, double a, double b, double fa, double guess) {
    double x = (guess > a && guess < b) ? guess : 0.5 * (a + b);
    for (int it = 0; it < 200; ++it) {
        const double fx = bessel_j(tau, x);
        if (fx == 0.0) return x;
        if ((fx > 0.0) == (fa > 0.0)) {
            a = x;
            fa = fx;
        } else {
            b = x;
        }
        if (b - a <= 4.0 * kEps * b) break;
        const double dfx = bessel_j_prime(tau, x);
        double next = (dfx != 0.0) ? x - fx / dfx : 0.5 * (a + b);
        if (!(next > a && next < b)) next = 0.5 * (a + b);
        if (std::abs(next - x) <= 2.0 * kEps * x) {
            x = next;
            break;
        }
        x = next;
    }

    // Certify: a bracket no wider than 1e-11 around x must change sign.
    const double half = std::max(8.0 * kEps * x, 1e-13);
    for (double w = half; w <= 5e-12; w *= 2.0) {
        const double lo = bessel_j(tau, x - w);
        const double hi = bessel_j(tau, x + w);
        if (lo == 0.0 || hi == 0.0 || (lo > 0.0) != (hi > 0.0)) return x;
    }
    throw NumericalFailure("bessel_j_zero: could not certify zero of J_" + std::to_string(tau) +
                           " near " + std::to_string(x));
}

}  // namespace

BesselZeroTable::BesselZeroTable(double tau, std::size_t count) : tau_(tau) {
    if (std::isnan(tau) || !(tau >= 0.0 || is_minus_half(tau) || is_minus_one(tau))) {
        throw DomainError("BesselZeroTable: need tau >= -1/2");
    }
    // J_{-1} = -J_1 shares its positive zeros with J_1.
    const double order = is_minus_one(tau) ? 1.0 : tau;
    zeros_.reserve(count);

    // Consecutive positive zeros are more than 2.4 apart for every order
    // >= -1/2, and j_{tau,1} > tau, so a 0.25 scan from max(tau, 0)
    // visits every sign change exactly once.
    constexpr double step = 0.25;
    double a = std::max(order, 0.0) + 1e-3;
    double fa = bessel_j(order, a);
    while (zeros_.size() < count) {
        const double b = a + step;
        const double fb = bessel_j(order, b);
        if (fb == 0.0) {
            zeros_.push_back(refine_zero(order, a, b + step, fa, b));
            a = b + 0.5 * step;
            fa = bessel_j(order, a);
            continue;
        }
        if ((fa > 0.0) != (fb > 0.0)) {
            const int m = static_cast<int>(zeros_.size()) + 1;
            zeros_.push_back(refine_zero(order, a, b, fa, mcmahon_zero_guess(order, m)));
        }
        a = b;
        fa = fb;
        if (a > 1e6) throw NumericalFailure("BesselZeroTable: scan budget exhausted");
    }
}

double BesselZeroTable::zero(std::size_t m) const {
    if (m < 1 || m > zeros_.size()) {
        throw DomainError("BesselZeroTable::zero: index " + std::to_string(m) + " out of range");
    }
    return zeros_[m - 1];
}

double bessel_j_zero(double tau, int m) {
    if (m < 1) throw DomainError("bessel_j_zero: m must be >= 1");
    if (std::isnan(tau) || !(tau >= 0.0 || is_minus_half(tau))) {
        throw DomainError("bessel_j_zero: need tau >= -1/2");
    }
    if (is_minus_half(tau)) return (m - 0.5) * kPi;
    return BesselZeroTable(tau, static_cast<std::size_t>(m)).zero(static_cast<std::size_t>(m));
}

}  // namespace cylbif::special
