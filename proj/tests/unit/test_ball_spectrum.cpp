#include "cylbif/ball_spectrum.hpp"
#include "cylbif/errors.hpp"
#include "cylbif/special_functions.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace cylbif;

namespace {

constexpr double kPi = std::numbers::pi;

double norm_integral(const BallEigenpair& p) {
    const int n = p.config.dim();
    auto f = [&](double r) {
        const double v = eigenfunction_radial(p, r);
        return v * v * std::pow(r, n - 1);
    };
    return oracle::sphere_area(n) * oracle::integrate(f, 0.0, 1.0, 1e-13);
}

}  // namespace

TEST(ProblemConfig, ValidatesInput) {
    EXPECT_THROW(ProblemConfig(0, 1), DomainError);
    EXPECT_THROW(ProblemConfig(1, 0), DomainError);
    const ProblemConfig c(5, 2);
    EXPECT_EQ(c.nu(), 1.5);
    EXPECT_EQ(c.parity(), 1);
    EXPECT_EQ(ProblemConfig(2, 3).parity(), -1);
}

TEST(Eigenvalue, ThreeBallSecondMode) {
    EXPECT_NEAR(eigenvalue(ProblemConfig(3, 2)), 39.47841760435743, 1e-10 * 39.5);
}

TEST(Eigenvalue, IntervalThirdMode) {
    EXPECT_EQ(eigenvalue(ProblemConfig(1, 3)), 25 * kPi * kPi / 4);
    EXPECT_NEAR(eigenvalue(ProblemConfig(1, 3)), 61.68502750680849, 1e-12);
}

TEST(Eigenvalue, DiscFirstModeAgainstOracle) {
    const double z = oracle::series_j_zero(0.0, 1);
    EXPECT_NEAR(eigenvalue(ProblemConfig(2, 1)), 5.783185962947, 1e-8);
    EXPECT_NEAR(eigenvalue(ProblemConfig(2, 1)), z * z, 1e-10);
}

TEST(Eigenvalue, ThreeBallIsSquareOfMultiplesOfPi) {
    for (int k = 1; k <= 12; ++k) {
        const double want = k * k * kPi * kPi;
        EXPECT_NEAR(eigenvalue(ProblemConfig(3, k)), want, 1e-10 * want);
    }
}

TEST(Eigenvalue, StrictlyIncreasing) {
    for (int dim = 1; dim <= 5; ++dim) {
        const auto lam = radial_eigenvalues(dim, 12);
        ASSERT_EQ(lam.size(), 12u);
        for (int k = 1; k < 12; ++k) EXPECT_LT(lam[k - 1], lam[k]);
        for (int k = 1; k <= 12; ++k) EXPECT_EQ(lam[k - 1], eigenvalue(ProblemConfig(dim, k)));
    }
}

TEST(Eigenfunction, ThreeBallNodeAtOneThird) {
    EXPECT_NEAR(eigenfunction_radial(ProblemConfig(3, 3), 1.0 / 3.0), 0.0, 1e-10);
}

TEST(Eigenfunction, ThreeBallSineForm) {
    const auto p = make_eigenpair(ProblemConfig(3, 2));
    for (double r : {0.05, 0.2, 0.37, 0.5, 0.81, 0.99}) {
        EXPECT_NEAR(eigenfunction_radial(p, r), std::sin(2 * kPi * r) / (2 * kPi * r), 1e-13);
    }
    EXPECT_NEAR(eigenfunction_radial(p, 0.0), 1.0, 1e-13);
}

TEST(Eigenfunction, DirichletAtBoundaryAndPositiveCentre) {
    for (int dim = 1; dim <= 5; ++dim) {
        for (int k = 1; k <= 5; ++k) {
            const auto p = make_eigenpair(ProblemConfig(dim, k));
            EXPECT_NEAR(eigenfunction_radial(p, 1.0), 0.0, 1e-15);
            EXPECT_GT(eigenfunction_radial(p, 0.0), 0.0);
        }
    }
}

TEST(Eigenfunction, CentreValueIsSeriesLimit) {
    for (int dim = 2; dim <= 5; ++dim) {
        const ProblemConfig c(dim, 3);
        const auto p = make_eigenpair(c);
        const double j = p.frequency, nu = c.nu();
        EXPECT_NEAR(eigenfunction_radial(p, 0.0), p.c_norm * std::pow(j / 2, nu) / std::tgamma(nu + 1), 1e-12);
    }
}

TEST(Eigenfunction, MatchesBesselFormAwayFromCentre) {
    for (int dim = 2; dim <= 5; ++dim) {
        const ProblemConfig c(dim, 4);
        const auto p = make_eigenpair(c);
        for (double r : {0.1, 0.33, 0.7, 0.95}) {
            const double want = p.c_norm * std::pow(r, -c.nu()) * oracle::series_j(c.nu(), p.frequency * r);
            EXPECT_NEAR(eigenfunction_radial(p, r), want, 1e-12);
        }
    }
}

TEST(Eigenfunction, RejectsRadiusOutsideUnitInterval) {
    const auto p = make_eigenpair(ProblemConfig(3, 2));
    EXPECT_THROW(eigenfunction_radial(p, -0.1), DomainError);
    EXPECT_THROW(eigenfunction_radial(p, 1.1), DomainError);
}

TEST(Eigenfunction, SignChangesEqualNodeCount) {
    for (int dim = 1; dim <= 5; ++dim) {
        for (int k = 1; k <= 6; ++k) {
            const auto p = make_eigenpair(ProblemConfig(dim, k));
            int changes = 0;
            double prev = eigenfunction_radial(p, 0.0);
            for (int n = 1; n < 2000; ++n) {
                const double v = eigenfunction_radial(p, n / 2000.0);
                if ((v > 0) != (prev > 0)) ++changes;
                prev = v;
            }
            EXPECT_EQ(changes, k - 1) << "N=" << dim << " k=" << k;
        }
    }
}

TEST(Eigenfunction, DerivativeMatchesFiniteDifferences) {
    for (int dim = 1; dim <= 4; ++dim) {
        const auto p = make_eigenpair(ProblemConfig(dim, 3));
        for (double r : {0.1, 0.4, 0.75}) {
            const double fd =
                oracle::richardson_derivative([&](double x) { return eigenfunction_radial(p, x); }, r, 1e-3);
            EXPECT_NEAR(eigenfunction_radial_derivative(p, r), fd, 1e-7);
        }
        const double left = oracle::richardson_derivative(
            [&](double x) { return eigenfunction_radial(p, x); }, 1.0 - 2e-3, 1e-3);
        EXPECT_NEAR(eigenfunction_radial_derivative(p, 1.0 - 2e-3), left, 1e-7);
    }
}

TEST(Normalization, QuadratureGivesOneOverTwoPi) {
    for (int dim = 1; dim <= 5; ++dim) {
        for (int k = 1; k <= 4; ++k) {
            const auto p = make_eigenpair(ProblemConfig(dim, k));
            EXPECT_NEAR(norm_integral(p), 1.0 / (2 * kPi), 1e-8) << "N=" << dim << " k=" << k;
        }
    }
}

TEST(Normalization, ThreeBallSecondMode) {
    const ProblemConfig c(3, 2);
    const double cn = normalization(c);
    EXPECT_NEAR(cn, 0.5, 1e-14);
    // r^{-1/2} J_{1/2}(2 pi r) = sqrt(2/(pi 2 pi)) sin(2 pi r)/r, so the sine prefactor is 1/(2 pi).
    EXPECT_NEAR(cn * std::sqrt(2.0 / (kPi * 2 * kPi)), 1.0 / (2 * kPi), 1e-14);
}

TEST(Normalization, IntervalCosinePrefactor) {
    for (int k = 1; k <= 4; ++k) EXPECT_EQ(normalization(ProblemConfig(1, k)), 1 / std::sqrt(2 * kPi));
}

TEST(Normalization, ClosedFormAndPositivity) {
    for (int dim = 2; dim <= 5; ++dim) {
        for (int k = 1; k <= 5; ++k) {
            const ProblemConfig c(dim, k);
            const double j = special::bessel_j_zero(c.nu(), k);
            const double want = 1 / (std::sqrt(kPi * oracle::sphere_area(dim)) * std::abs(special::bessel_j_prime(c.nu(), j)));
            EXPECT_NEAR(normalization(c), want, 1e-12 * want);
            EXPECT_GT(normalization(c), 0.0);
        }
    }
}

TEST(BoundaryDerivatives, IntervalThirdMode) {
    const auto d = boundary_derivatives(ProblemConfig(1, 3));
    EXPECT_NEAR(d.first, -5 * std::sqrt(2 * kPi) / 4, 1e-14);
    EXPECT_NEAR(d.first, -3.13329, 1e-5);
    EXPECT_EQ(d.second, 0.0);
}

TEST(BoundaryDerivatives, ThreeBallSecondMode) {
    const auto d = boundary_derivatives(ProblemConfig(3, 2));
    EXPECT_NEAR(d.first, 1.0, 1e-14);
    EXPECT_NEAR(d.second, -2.0, 1e-14);
}

TEST(BoundaryDerivatives, SignAlternatesWithK) {
    for (int dim = 1; dim <= 4; ++dim) {
        for (int k = 1; k <= 6; ++k) {
            const auto d = boundary_derivatives(ProblemConfig(dim, k));
            EXPECT_GT((k % 2 == 0 ? 1 : -1) * d.first, 0.0);
        }
    }
}

TEST(BoundaryDerivatives, RadialEquationAtBoundary) {
    for (int dim = 1; dim <= 5; ++dim) {
        for (int k = 1; k <= 5; ++k) {
            const auto p = make_eigenpair(ProblemConfig(dim, k));
            EXPECT_NEAR(p.phi_second_1 + (dim - 1) * p.phi_prime_1 + p.lambda * eigenfunction_radial(p, 1.0), 0.0,
                        1e-13 * p.lambda * std::abs(p.phi_prime_1));
            EXPECT_NEAR(eigenfunction_radial_derivative(p, 1.0), p.phi_prime_1, 1e-15);
        }
    }
}

TEST(BoundaryDerivatives, SecondDerivativeMatchesFiniteDifference) {
    for (int dim = 2; dim <= 4; ++dim) {
        const auto p = make_eigenpair(ProblemConfig(dim, 2));
        auto slope = [&](double r) { return eigenfunction_radial_derivative(p, r); };
        // one-sided second-order stencil at r = 1
        const double h = 1e-4;
        const double fd = (3 * slope(1.0) - 4 * slope(1.0 - h) + slope(1.0 - 2 * h)) / (2 * h);
        EXPECT_NEAR(p.phi_second_1, fd, 1e-6);
    }
}

TEST(NodalRadii, ThreeBallThirdMode) {
    const auto r = nodal_radii(ProblemConfig(3, 3));
    ASSERT_EQ(r.size(), 2u);
    EXPECT_NEAR(r[0], 1.0 / 3, 1e-12);
    EXPECT_NEAR(r[1], 2.0 / 3, 1e-12);
}

TEST(NodalRadii, IntervalSecondMode) {
    const auto r = nodal_radii(ProblemConfig(1, 2));
    ASSERT_EQ(r.size(), 1u);
    EXPECT_NEAR(r[0], 1.0 / 3, 1e-15);
}

TEST(NodalRadii, DiscSecondModeAgainstOracle) {
    const auto r = nodal_radii(ProblemConfig(2, 2));
    ASSERT_EQ(r.size(), 1u);
    EXPECT_NEAR(r[0], 0.43565, 1e-5);
    EXPECT_NEAR(r[0], oracle::series_j_zero(0, 1) / oracle::series_j_zero(0, 2), 1e-6);
}

TEST(NodalRadii, AreOrderedZeros) {
    for (int dim = 1; dim <= 5; ++dim) {
        for (int k = 2; k <= 7; ++k) {
            const ProblemConfig c(dim, k);
            const auto r = nodal_radii(c);
            ASSERT_EQ(r.size(), static_cast<std::size_t>(k - 1));
            for (std::size_t i = 0; i < r.size(); ++i) {
                EXPECT_GT(r[i], i == 0 ? 0.0 : r[i - 1]);
                EXPECT_LT(r[i], 1.0);
                EXPECT_NEAR(eigenfunction_radial(c, r[i]), 0.0, 1e-10);
            }
        }
    }
    EXPECT_TRUE(nodal_radii(ProblemConfig(3, 1)).empty());
}

TEST(SphereMeasure, KnownValues) {
    EXPECT_EQ(unit_sphere_measure(0), 2.0);
    EXPECT_NEAR(unit_sphere_measure(1), 2 * kPi, 1e-14);
    EXPECT_NEAR(unit_sphere_measure(2), 4 * kPi, 1e-13);
    EXPECT_NEAR(unit_sphere_measure(3), 2 * kPi * kPi, 1e-13);
    for (int n = 0; n <= 8; ++n) EXPECT_NEAR(unit_sphere_measure(n), oracle::sphere_area(n + 1), 1e-12);
}
