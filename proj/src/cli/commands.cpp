#include "cylbif/cli.hpp"

#include "cylbif/bifurcation.hpp"
#include "cylbif/errors.hpp"
#include "cylbif/n1_exact.hpp"
#include "cylbif/parallel.hpp"
#include "cylbif/serialization.hpp"
#include "cylbif/sigma_spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>

namespace cylbif::cli {

using io::format_double;

namespace {

int guarded(std::ostream& err, const std::function<int()>& body) {
    try {
        return body();
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kArgumentError;
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kArgumentError;
    } catch (const SingularPeriodError& e) {
        err << "numerical failure: " << e.what() << '\n';
        return kNumericalFailure;
    } catch (const std::exception& e) {
        err << "numerical failure: " << e.what() << '\n';
        return kNumericalFailure;
    }
}

int require_k(const RunConfig& c, std::ostream& err) {
    if (!c.k) {
        err << "error: --k is required for " << c.command << '\n';
        return -1;
    }
    return *c.k;
}

// Writes to --output when given, otherwise to `out`.
void emit(const RunConfig& c, std::ostream& out, const std::string& text) {
    if (c.output.empty()) {
        out << text;
        return;
    }
    std::ofstream file(c.output, std::ios::binary);
    if (!file) throw DomainError("cannot open output file " + c.output);
    file << text;
    if (!file) throw Error("failed writing " + c.output);
}

}  // namespace

ModeCoefficient parse_gamma(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 == text.size()) {
        throw DomainError("gamma must look like l:value, got '" + text + "'");
    }
    try {
        std::size_t used = 0;
        const int mode = std::stoi(text.substr(0, colon), &used);
        if (used != colon) throw DomainError("bad gamma mode in '" + text + "'");
        const std::string rest = text.substr(colon + 1);
        const double value = std::stod(rest, &used);
        if (used != rest.size()) throw DomainError("bad gamma value in '" + text + "'");
        return {mode, value};
    } catch (const std::logic_error&) {
        throw DomainError("gamma must look like l:value, got '" + text + "'");
    }
}

int cmd_spectrum(const RunConfig& c, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        if (c.k_max < 1) throw DomainError("--kmax must be >= 1");
        const ProblemConfig check(c.dim, c.k_max);
        const auto rows = parallel_map(static_cast<std::size_t>(c.k_max), [&](std::size_t n) {
            return make_eigenpair(ProblemConfig(c.dim, static_cast<int>(n) + 1));
        });
        std::string text = "# command=spectrum dim=" + std::to_string(c.dim) + " kmax=" + std::to_string(c.k_max) +
                           "\nk,j,lambda,phi_prime_1\n";
        for (const auto& p : rows) {
            text += std::to_string(p.config.k()) + ',' + format_double(p.frequency) + ',' + format_double(p.lambda) +
                    ',' + format_double(p.phi_prime_1) + '\n';
        }
        emit(c, out, text);
        return static_cast<int>(kSuccess);
    });
}

int cmd_sigma_sweep(const RunConfig& c, std::ostream& out, std::ostream& err) {
    const int k = require_k(c, err);
    if (k < 0) return kArgumentError;
    return guarded(err, [&] {
        if (!(c.t_min > 0.0) || !(c.t_max > c.t_min)) throw DomainError("need 0 < --tmin < --tmax");
        if (c.samples < 2) throw DomainError("--samples must be >= 2");
        const SigmaFunction sigma(ProblemConfig(c.dim, k));
        const auto n = static_cast<std::size_t>(c.samples);
        auto grid = [&](std::size_t i) {
            return i + 1 == n ? c.t_max : c.t_min + (c.t_max - c.t_min) * static_cast<double>(i) / (c.samples - 1);
        };
        const auto values = parallel_map(n, [&](std::size_t i) -> std::optional<double> {
            try {
                return sigma.value(grid(i));
            } catch (const SingularPeriodError&) {
                return std::nullopt;
            }
        });

        std::string text = "# command=sigma dim=" + std::to_string(c.dim) + " k=" + std::to_string(k) +
                            " tmin=" + format_double(c.t_min) + " tmax=" + format_double(c.t_max) +
                            " samples=" + std::to_string(c.samples) + "\nT,sigma,gap\n";
        const auto& singular = sigma.slice().singular_periods;
        for (std::size_t i = 0; i < n; ++i) {
            if (i > 0) {
                // One gap row for each singular period strictly between samples.
                for (double ts : singular) {
                    if (ts > grid(i - 1) && ts < grid(i) && values[i - 1] && values[i]) {
                        text += format_double(ts) + ",,1\n";
                    }
                }
            }
            if (values[i]) {
                text += format_double(grid(i)) + ',' + format_double(*values[i]) + ",0\n";
            } else {
                text += format_double(grid(i)) + ",,1\n";
            }
        }
        emit(c, out, text);
        return static_cast<int>(kSuccess);
    });
}

int cmd_bifurcate(const RunConfig& c, std::ostream& out, std::ostream& err) {
    const int k = require_k(c, err);
    if (k < 0) return kArgumentError;
    return guarded(err, [&] {
        const ProblemConfig config(c.dim, k);
        const auto points = all_bifurcation_points(config);
        emit(c, out, io::bifurcation_report(config, points).dump(2) + '\n');
        const bool all_certified = std::all_of(points.begin(), points.end(), [](const BifurcationPoint& p) {
            return p.certification.status == CertificationStatus::certified;
        });
        if (!all_certified) {
            err << "numerical failure: transversality not certified for every point\n";
            return static_cast<int>(kNumericalFailure);
        }
        return static_cast<int>(kSuccess);
    });
}

int cmd_resonance(const RunConfig& c, std::ostream& out, std::ostream& err) {
    if (c.l_max < 2) {
        err << "error: --lmax must be >= 2\n";
        return kArgumentError;
    }
    return guarded(err, [&] {
        if (c.dim < 1) throw DomainError("--dim must be >= 1");
        if (c.dim == 1) {
            std::string text = "# command=resonance dim=1 kmax=" + std::to_string(c.k_max) +
                                " lmax=" + std::to_string(c.l_max) + " classification=exact\n";
            text += io::resonance_csv(find_resonances_n1(c.k_max, c.l_max));
            emit(c, out, text);
            return static_cast<int>(kSuccess);
        }
        std::vector<int> ks;
        if (c.k) {
            ks.push_back(*c.k);
        } else {
            for (int k = 2; k <= c.k_max; ++k) ks.push_back(k);
        }
        std::string text = "# command=resonance dim=" + std::to_string(c.dim) + " lmax=" + std::to_string(c.l_max) +
                           " tol=" + format_double(c.tolerance) + " classification=candidate\n" +
                           "k,i,j,l,T_i_star,T_j_star,residual,accepted,label\n";
        for (int k : ks) {
            const auto points = all_bifurcation_points(ProblemConfig(c.dim, k));
            for (int i = 2; i <= k; ++i) {
                for (int j = 1; j < i; ++j) {
                    const double ti = points[i - 1].T_star, tj = points[j - 1].T_star;
                    const long l = std::lround(ti / tj);
                    if (l < 2 || l > c.l_max) continue;
                    const double residual = std::abs(ti - static_cast<double>(l) * tj) / ti;
                    text += std::to_string(k) + ',' + std::to_string(i) + ',' + std::to_string(j) + ',' +
                            std::to_string(l) + ',' + format_double(ti) + ',' + format_double(tj) + ',' +
                            format_double(residual) + ',' + (residual < c.tolerance ? "1" : "0") + ",candidate\n";
                }
            }
        }
        emit(c, out, text);
        return static_cast<int>(kSuccess);
    });
}

int cmd_domain(const RunConfig& c, std::ostream& out, std::ostream& err) {
    const int k = require_k(c, err);
    if (k < 0) return kArgumentError;
    return guarded(err, [&] {
        if (c.format != "csv" && c.format != "json") throw DomainError("--format must be csv or json");
        if (c.branch < 1 || c.branch > k) throw DomainError("--branch must lie in [1, k]");
        const ProblemConfig config(c.dim, k);
        const auto point = find_bifurcation_point(config, c.branch);
        const auto params = make_branch(point, c.s, c.beta, c.gammas);
        const auto profile = export_grid(config, params, c.resolution);
        emit(c, out, c.format == "csv" ? io::domain_csv(profile) : io::to_json(profile).dump(2) + '\n');
        return static_cast<int>(kSuccess);
    });
}

int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
    if (c.command == "spectrum") return cmd_spectrum(c, out, err);
    if (c.command == "sigma") return cmd_sigma_sweep(c, out, err);
    if (c.command == "bifurcate") return cmd_bifurcate(c, out, err);
    if (c.command == "resonance") return cmd_resonance(c, out, err);
    if (c.command == "domain") return cmd_domain(c, out, err);
    if (c.command == "verify") return cmd_verify(c, out, err);
    err << "error: unknown command '" << c.command << "'\n";
    return kArgumentError;
}

}  // namespace cylbif::cli
