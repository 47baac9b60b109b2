#pragma once

#include "cylbif/ball_spectrum.hpp"
#include "cylbif/sigma_spectrum.hpp"

#include <string>
#include <vector>

namespace cylbif {

/// A sub-period partner: T_{i,*} ~ l T_{j,*}.
struct KernelPartner {
    int j;
    int l;
    /// |T_{i,*} - l T_{j,*}| / T_{i,*}; exactly 0 for N = 1 integer matches.
    double residual;
};

struct KernelSpec {
    int dimension = 1;
    /// Sorted, always starts with 1.
    std::vector<int> modes{1};
    std::vector<KernelPartner> partners;
    /// True when partners were decided in integer arithmetic (N = 1). For
    /// N >= 2 they are numerical candidates.
    bool exact = false;
    /// l values skipped because T_{i,*}/l sits next to a singular period.
    std::vector<std::string> warnings;
};

enum class CertificationStatus { certified, failed, inconclusive };

const char* to_string(CertificationStatus status);

struct Transversality {
    CertificationStatus status = CertificationStatus::inconclusive;
    /// Richardson finite-difference and local polynomial-fit slopes.
    double finite_difference = 0.0;
    double polynomial_fit = 0.0;
    /// Median |sigma| over interior samples of the bracketing interval.
    double scale = 0.0;
};

struct BifurcationPoint {
    ProblemConfig config;
    int interval_index;
    double T_star;
    /// (T_{i-1}, T_i) with T_0 = 0 and T_k = +infinity.
    double interval_lower;
    double interval_upper;
    /// |sigma(T_star)|.
    double sigma_residual;
    double transversality;
    KernelSpec kernel;
    Transversality certification;
};

inline constexpr double kDefaultKernelTolerance = 1e-8;

/// The zero of sigma in the i-th interval, 1 <= i <= k.
BifurcationPoint find_bifurcation_point(const ProblemConfig& config, int i);
BifurcationPoint find_bifurcation_point(const SigmaFunction& sigma, int i);

/// All k zeros with kernels and certification filled in, ordered by i.
std::vector<BifurcationPoint> all_bifurcation_points(const ProblemConfig& config);

/// Kernel of the linearization at points[i-1]: mode 1 plus every l >= 2 with
/// T_{i,*} / l equal (N = 1: exactly, N >= 2: within `tol` relative) to some
/// T_{j,*}, j < i.
KernelSpec kernel_spec(const ProblemConfig& config, const std::vector<BifurcationPoint>& points, int i,
                       double tol = kDefaultKernelTolerance);

/// Transversality check of sigma'(T_star): nonzero on the scale of sigma
/// across the interval, sign (-1)^k, and two independent derivative
/// estimates agreeing in sign.
Transversality certify_transversality(const SigmaFunction& sigma, const BifurcationPoint& point);
Transversality certify_transversality(const BifurcationPoint& point);

}  // namespace cylbif
