#include "cylbif/cli.hpp"

#include "cylbif/bifurcation.hpp"
#include "cylbif/domain_builder.hpp"
#include "cylbif/errors.hpp"
#include "cylbif/n1_exact.hpp"
#include "cylbif/radial_ode.hpp"
#include "cylbif/serialization.hpp"
#include "cylbif/sigma_spectrum.hpp"
#include "cylbif/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <ostream>

namespace cylbif::cli {

namespace {

constexpr double kPi = std::numbers::pi;

struct Tally {
    int passed = 0;
    int total = 0;
    double max_residual = 0.0;

    // A check passes when residual <= tolerance; residuals are reported
    // relative to their tolerance scale.
    void check(double residual, double tolerance) {
        ++total;
        if (std::isfinite(residual) && residual <= tolerance) ++passed;
        if (!std::isfinite(residual)) residual = std::numeric_limits<double>::infinity();
        max_residual = std::max(max_residual, residual);
    }
    void require(bool ok) { check(ok ? 0.0 : 1.0, 0.5); }
};

double rel(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

Tally suite_bessel() {
    Tally t;
    for (int n = 1; n <= 200; ++n) {
        const double x = 0.1 * n;
        const double w = std::sqrt(kPi * x / 2.0);
        t.check(std::abs(special::bessel_j(0.5, x) * w - std::sin(x)), 1e-10);
        t.check(std::abs(special::bessel_j(-0.5, x) * w - std::cos(x)), 1e-10);
    }
    for (double tau : {0.0, 0.5, 1.0, 1.5, 2.0}) {
        const special::BesselZeroTable a(tau, 11), b(tau + 1.0, 10);
        for (std::size_t m = 1; m <= 10; ++m) t.require(a.zero(m) < b.zero(m) && b.zero(m) < a.zero(m + 1));
        for (double z : a.zeros()) {
            t.check(std::abs(special::bessel_j(tau, z)) / std::max(1.0, std::abs(special::bessel_j_prime(tau, z))), 1e-12);
        }
    }
    for (double nu : {0.5, 1.0, 1.5}) {
        for (double x : {0.5, 2.0, 7.0}) {
            const double j = special::bessel_j(nu, x);
            t.check(std::abs(special::bessel_j(nu - 1, x) + special::bessel_j(nu + 1, x) - 2 * nu / x * j) /
                        std::max(1e-300, std::abs(j) + std::abs(special::bessel_j(nu - 1, x))),
                    1e-10);
            const double i = special::bessel_i(nu, x);
            t.check(std::abs(special::bessel_i(nu - 1, x) - special::bessel_i(nu + 1, x) - 2 * nu / x * i) / i, 1e-10);
        }
    }
    t.check(std::abs(special::bessel_j_zero(0.0, 1) - 2.404825557695773), 1e-10);
    return t;
}

Tally suite_spectrum() {
    Tally t;
    for (int k = 1; k <= 8; ++k) t.check(rel(eigenvalue(ProblemConfig(3, k)), k * k * kPi * kPi), 1e-10);
    for (int k = 1; k <= 8; ++k) {
        const double f = (2.0 * k - 1.0) * kPi / 2.0;
        t.require(eigenvalue(ProblemConfig(1, k)) == f * f);
    }
    for (int dim = 1; dim <= 5; ++dim) {
        const auto lam = radial_eigenvalues(dim, 12);
        t.require(std::is_sorted(lam.begin(), lam.end()) &&
                  std::adjacent_find(lam.begin(), lam.end()) == lam.end());
        for (int k = 2; k <= 4; ++k) {
            const auto pair = make_eigenpair(ProblemConfig(dim, k));
            t.require(pair.config.parity() * pair.phi_prime_1 > 0.0);
            t.check(std::abs(pair.phi_second_1 + (dim - 1) * pair.phi_prime_1), 1e-14);
            for (double r : nodal_radii(pair.config)) t.check(std::abs(eigenfunction_radial(pair, r)), 1e-10);
        }
    }
    return t;
}

Tally suite_radial() {
    Tally t;
    struct Case {
        int dim, k, m;
    };
    for (const Case c : {Case{2, 3, 1}, Case{3, 4, 2}, Case{4, 2, 1}}) {
        const auto pair = make_eigenpair(ProblemConfig(c.dim, c.k));
        for (int n = 0; n < 10; ++n) {
            const double period = c.m * (0.25 + 0.3 * n + 0.0137);
            try {
                const auto closed = solve_cm_closed(pair, c.m, period);
                const auto shot = solve_cm_shoot(pair, c.m, period);
                t.check(std::abs(closed.slope_at_1 - shot.slope_at_1) / std::max(1.0, std::abs(closed.slope_at_1)),
                        1e-7);
            } catch (const SingularPeriodError&) {
            }
        }
    }
    return t;
}

Tally suite_sigma() {
    Tally t;
    for (int dim = 2; dim <= 4; ++dim) {
        for (int k = 1; k <= 5; ++k) {
            const SigmaFunction s(ProblemConfig(dim, k));
            const double at_mu = s.value(s.slice().mu);
            t.check(rel(at_mu, -(dim - 1) * s.eigenpair().phi_prime_1), 1e-8);
            t.require(k % 2 == 0 ? at_mu < 0.0 : at_mu > 0.0);
            t.require(s.value_m(3, 3.0 * s.slice().mu) == s.value(3.0 * s.slice().mu / 3));
        }
    }
    return t;
}

Tally suite_bifurcation() {
    Tally t;
    for (int k : {2, 3, 5}) {
        const auto points = all_bifurcation_points(ProblemConfig(1, k));
        const auto exact = bifurcation_points_n1(k);
        for (int i = 0; i < k; ++i) t.check(rel(points[i].T_star, exact[i]), 1e-10);
    }
    for (auto [dim, k] : {std::pair{2, 3}, std::pair{3, 4}, std::pair{4, 4}}) {
        const ProblemConfig config(dim, k);
        const auto lam = radial_eigenvalues(dim, k);
        const auto points = all_bifurcation_points(config);
        t.require(static_cast<int>(points.size()) == k);
        for (int i = 1; i <= k; ++i) {
            const double lo = 2 * kPi / std::sqrt(lam[k - 1] - (i == 1 ? 0.0 : lam[i - 2]));
            const double hi = i == k ? std::numeric_limits<double>::infinity()
                                     : 2 * kPi / std::sqrt(lam[k - 1] - lam[i - 1]);
            const auto& p = points[i - 1];
            t.require(p.T_star > lo && p.T_star < hi);
            t.require(p.certification.status == CertificationStatus::certified);
            t.check(p.sigma_residual / std::max(1.0, std::abs(p.transversality) * p.T_star), 1e-9);
        }
    }
    return t;
}

Tally suite_n1() {
    Tally t;
    const auto found = find_resonances_n1(100, 10);
    auto has = [&](int k, int i, int j, int l) {
        return std::any_of(found.begin(), found.end(), [&](const ResonanceTuple& r) {
            return r.k == k && r.i == i && r.j == j && r.l == l;
        });
    };
    t.require(has(53, 53, 15, 7) && has(83, 83, 13, 9));
    for (const auto& r : found) t.require(r.l % 2 == 1 && is_resonant_exact(r.k, r.i, r.j, r.l));
    t.require(find_resonances_n1(10, 10).empty());
    for (int k : {2, 3, 4}) {
        const double expected = (k % 2 == 0 ? 1.0 : -1.0) * std::pow(2.0 * k - 1.0, 4) * kPi * kPi *
                                std::sqrt(2.0 * kPi) / 32.0;
        t.check(std::abs(sigma_prime_exact_n1(k, 4.0 / (2 * k - 1)) - expected) / std::abs(expected), 1e-6);
    }
    return t;
}

Tally suite_domain() {
    Tally t;
    const ProblemConfig config(3, 3);
    const auto point = find_bifurcation_point(config, 1);
    const double s = 0.05;
    const FirstOrderField field(config, to_perturbation(make_branch(point, s, 1.0, {})));
    for (int n = 0; n < 32; ++n) {
        const double time = point.T_star * n / 32.0;
        t.check(std::abs(field.neumann_trace(time) - field.eigenpair().phi_prime_1), 1e-9);
        const auto lin = field.nodal_lines_linear(time);
        const auto polished = field.nodal_lines(time);
        for (std::size_t j = 0; j < lin.size(); ++j) t.check(std::abs(lin[j] - polished[j]), 5 * s * s);
        t.require(polished[0] < polished[1] && polished[1] < field.profile(time));
    }
    const SigmaFunction sigma(config);
    const double off = point.T_star * 1.05;
    for (int m : {1, 2, 3}) {
        const FirstOrderField single(config, Perturbation{off, s, {{m, 1.0}}});
        for (int n = 0; n < 16; ++n) {
            const double time = off * n / 16.0;
            const double expected = s * sigma.value_m(m, off) * std::cos(2 * m * kPi * time / off);
            t.check(std::abs(single.neumann_trace(time) - single.eigenpair().phi_prime_1 - expected), 1e-9);
        }
    }
    return t;
}

using Suite = std::pair<const char*, std::function<Tally()>>;

const std::vector<Suite>& suites() {
    static const std::vector<Suite> all = {
        {"bessel", suite_bessel},       {"spectrum", suite_spectrum},       {"radial", suite_radial},
        {"sigma", suite_sigma},         {"bifurcation", suite_bifurcation}, {"n1", suite_n1},
        {"domain", suite_domain},
    };
    return all;
}

}  // namespace

const std::vector<std::string>& verify_suites() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& s : suites()) out.emplace_back(s.first);
        return out;
    }();
    return names;
}

int cmd_verify(const RunConfig& c, std::ostream& out, std::ostream& err) {
    const auto& names = verify_suites();
    if (c.suite != "all" && std::find(names.begin(), names.end(), c.suite) == names.end()) {
        err << "error: unknown suite '" << c.suite << "'\n";
        return kArgumentError;
    }
    bool ok = true;
    out << "suite,passed,total,max_residual\n";
    for (const auto& [name, body] : suites()) {
        if (c.suite != "all" && c.suite != name) continue;
        Tally t;
        try {
            t = body();
        } catch (const std::exception& e) {
            err << "suite " << name << " aborted: " << e.what() << '\n';
            t.total += 1;
            t.max_residual = std::numeric_limits<double>::infinity();
        }
        ok = ok && t.passed == t.total;
        out << name << ',' << t.passed << ',' << t.total << ',' << io::format_double(t.max_residual) << '\n';
    }
    out << (ok ? "verify: PASS\n" : "verify: FAIL\n");
    return ok ? kSuccess : kVerifyFailure;
}

}  // namespace cylbif::cli
