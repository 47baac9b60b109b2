#pragma once

#include <cstdint>
#include <vector>

/// The one-dimensional ball (an interval) in closed form. Everything here is
/// elementary: no Bessel function is evaluated.
namespace cylbif {

/// alpha(T) = (2k-1)^2 pi^2 / 4 - (2 pi / T)^2.
double alpha_n1(int k, double period);

/// sigma(T) for N = 1. Throws SingularPeriodError near the excluded periods.
double sigma_exact_n1(int k, double period);

/// d sigma / dT; at alpha = 0 the analytic value (-1)^k (2k-1)^4 pi^2 sqrt(2 pi) / 32.
double sigma_prime_exact_n1(int k, double period);

/// T_{i,*} = 4 / sqrt((2k-1)^2 - 4 (i-1)^2), i = 1..k.
std::vector<double> bifurcation_points_n1(int k);

/// T_i = 4 / sqrt((2k-1)^2 - (2i-1)^2), i = 1..k-1.
std::vector<double> singular_points_n1(int k);

/// (2k-1)^2 - 4 (i-1)^2, so that T_{i,*} = 4 / sqrt(A_i).
std::int64_t interval_discriminant(int k, int i);

/// Exact test of T_{i,*} = l T_{j,*}, i.e. A_j == l^2 A_i.
/// Requires 1 <= j <= i <= k and l >= 1; throws DomainError otherwise.
bool is_resonant_exact(int k, int i, int j, int l);

struct ResonanceTuple {
    int k;
    int i;
    int j;
    int l;
    std::int64_t a_i;
    std::int64_t a_j;

    auto operator<=>(const ResonanceTuple&) const = default;
};

/// Largest k_max accepted by find_resonances_n1.
inline constexpr int kResonanceBudget = 10'000;

/// Every (k, i, j, l) with 1 <= j < i <= k <= k_max and 2 <= l <= l_max
/// satisfying the exact identity, sorted by (k, i, j, l).
/// Throws BudgetExceeded when k_max exceeds the budget or the products would
/// overflow 64-bit arithmetic, DomainError when l_max < 2 or k_max < 1.
std::vector<ResonanceTuple> find_resonances_n1(int k_max, int l_max);

}  // namespace cylbif
