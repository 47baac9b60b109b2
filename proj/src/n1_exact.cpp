#include "cylbif/n1_exact.hpp"

#include "cylbif/errors.hpp"
#include "cylbif/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

namespace cylbif {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kGuard = 1e-8;

void require_k(int k) {
    if (k < 1) throw DomainError("mode index k must be >= 1, got " + std::to_string(k));
}

void require_period(int k, double period) {
    require_k(k);
    if (std::isnan(period) || !(period > 0.0)) throw DomainError("period must be positive");
    for (double ti : singular_points_n1(k)) {
        if (std::abs(period - ti) <= kGuard * ti) {
            std::ostringstream os;
            os.precision(17);
            os << "period " << period << " is singular (T_i = " << ti << ")";
            throw SingularPeriodError(period, ti, os.str());
        }
    }
}

double amplitude(int k) { return (2.0 * k - 1.0) * std::sqrt(2.0 * kPi) / 4.0; }

int parity(int k) { return k % 2 == 0 ? 1 : -1; }

bool checked_square(std::int64_t x, std::int64_t& out) { return __builtin_mul_overflow(x, x, &out); }

// Exact integer square root, or -1 when n is not a perfect square.
std::int64_t exact_sqrt(std::int64_t n) {
    if (n < 0) return -1;
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r * r == n ? r : -1;
}

}  // namespace

double alpha_n1(int k, double period) {
    require_k(k);
    const double w = 2.0 * kPi / period;
    const double f = (2.0 * k - 1.0) * kPi / 2.0;
    return (f - w) * (f + w);
}

double sigma_exact_n1(int k, double period) {
    require_period(k, period);
    const double a = alpha_n1(k, period);
    if (a == 0.0) return 0.0;
    if (a < 0.0) {
        const double x = std::sqrt(-a);
        return -parity(k) * amplitude(k) * x * std::tanh(x);
    }
    const double y = std::sqrt(a);
    return parity(k) * amplitude(k) * y * std::tan(y);
}

double sigma_prime_exact_n1(int k, double period) {
    require_period(k, period);
    const double a = alpha_n1(k, period);
    const double da = 8.0 * kPi * kPi / (period * period * period);
    double h = 2.0;
    if (a < 0.0) {
        const double x = std::sqrt(-a);
        const double c = std::cosh(x);
        h = std::tanh(x) / x + 1.0 / (c * c);
    } else if (a > 0.0) {
        const double y = std::sqrt(a);
        const double c = std::cos(y);
        h = std::tan(y) / y + 1.0 / (c * c);
    }
    return parity(k) * amplitude(k) * da / 2.0 * h;
}

std::vector<double> bifurcation_points_n1(int k) {
    require_k(k);
    std::vector<double> out;
    out.reserve(k);
    for (int i = 1; i <= k; ++i) {
        out.push_back(4.0 / std::sqrt(static_cast<double>(interval_discriminant(k, i))));
    }
    return out;
}

std::vector<double> singular_points_n1(int k) {
    require_k(k);
    std::vector<double> out;
    const double a = 2.0 * k - 1.0;
    for (int i = 1; i < k; ++i) {
        const double b = 2.0 * i - 1.0;
        out.push_back(4.0 / std::sqrt((a - b) * (a + b)));
    }
    return out;
}

std::int64_t interval_discriminant(int k, int i) {
    require_k(k);
    if (i < 1 || i > k) throw DomainError("interval index must lie in [1, k]");
    const std::int64_t a = 2 * static_cast<std::int64_t>(k) - 1;
    const std::int64_t b = 2 * static_cast<std::int64_t>(i - 1);
    return (a - b) * (a + b);
}

bool is_resonant_exact(int k, int i, int j, int l) {
    if (k < 1 || j < 1 || j > i || i > k || l < 1) {
        throw DomainError("is_resonant_exact requires 1 <= j <= i <= k and l >= 1");
    }
    const std::int64_t ai = interval_discriminant(k, i);
    const std::int64_t aj = interval_discriminant(k, j);
    std::int64_t l2 = 0, rhs = 0;
    if (checked_square(l, l2) || __builtin_mul_overflow(l2, ai, &rhs)) return false;
    return aj == rhs;
}

std::vector<ResonanceTuple> find_resonances_n1(int k_max, int l_max) {
    if (k_max < 1) throw DomainError("k_max must be >= 1");
    if (l_max < 2) throw DomainError("l_max must be >= 2");
    if (k_max > kResonanceBudget) {
        throw BudgetExceeded("k_max = " + std::to_string(k_max) + " exceeds the budget of " +
                             std::to_string(kResonanceBudget));
    }
    const std::int64_t top = 2 * static_cast<std::int64_t>(k_max) - 1;
    std::int64_t top2 = 0, l2 = 0, bound = 0;
    if (checked_square(top, top2) || checked_square(l_max, l2) || __builtin_mul_overflow(top2, l2, &bound)) {
        throw BudgetExceeded("(2 k_max - 1)^2 l_max^2 overflows 64-bit arithmetic");
    }

    // A_j = l^2 A_i  <=>  (2k-1)^2 - l^2 A_i = 4 (j-1)^2; j < i follows from l >= 2.
    auto scan_k = [l_max](std::size_t idx) {
        const int k = static_cast<int>(idx) + 1;
        const std::int64_t a2 = (2 * static_cast<std::int64_t>(k) - 1) * (2 * static_cast<std::int64_t>(k) - 1);
        std::vector<ResonanceTuple> found;
        for (int i = 2; i <= k; ++i) {
            const std::int64_t ai = interval_discriminant(k, i);
            for (std::int64_t l = 2; l <= l_max; ++l) {
                const std::int64_t rest = a2 - l * l * ai;
                if (rest < 0) break;
                if (rest % 4 != 0) continue;
                const std::int64_t half = exact_sqrt(rest / 4);
                if (half < 0) continue;
                const int j = static_cast<int>(half) + 1;
                found.push_back({k, i, j, static_cast<int>(l), ai, interval_discriminant(k, j)});
            }
        }
        return found;
    };
    const auto per_k = parallel_map(static_cast<std::size_t>(k_max), scan_k);

    std::vector<ResonanceTuple> out;
    for (const auto& part : per_k) out.insert(out.end(), part.begin(), part.end());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace cylbif
