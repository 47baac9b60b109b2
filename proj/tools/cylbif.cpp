// cylbif: spectral function sweeps, bifurcation points, resonances and
// first-order branch geometry for perturbed cylinders.

#include "cylbif/cli.hpp"
#include "cylbif/errors.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

using cylbif::cli::RunConfig;

void add_dim(CLI::App* cmd, RunConfig& c) {
    cmd->add_option("--dim", c.dim, "dimension N of the ball factor")->required();
}

void add_k(CLI::App* cmd, RunConfig& c, bool required) {
    auto* opt = cmd->add_option_function<int>("--k", [&c](const int& k) { c.k = k; }, "mode index k");
    if (required) opt->required();
}

void add_output(CLI::App* cmd, RunConfig& c) {
    cmd->add_option("--output,-o", c.output, "write to this file instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Overdetermined eigenvalue problem on perturbed cylinders"};
    app.require_subcommand(1);
    RunConfig c;

    auto* spectrum = app.add_subcommand("spectrum", "radial Dirichlet eigenvalues of the unit ball");
    add_dim(spectrum, c);
    spectrum->add_option("--kmax", c.k_max, "number of eigenvalues")->required();
    add_output(spectrum, c);

    auto* sigma = app.add_subcommand("sigma", "sweep sigma(T) over [tmin, tmax]");
    add_dim(sigma, c);
    add_k(sigma, c, true);
    sigma->add_option("--tmin", c.t_min, "smallest period");
    sigma->add_option("--tmax", c.t_max, "largest period");
    sigma->add_option("--samples", c.samples, "number of equally spaced periods");
    add_output(sigma, c);

    auto* bifurcate = app.add_subcommand("bifurcate", "locate and certify all bifurcation points");
    add_dim(bifurcate, c);
    add_k(bifurcate, c, true);
    add_output(bifurcate, c);

    auto* resonance = app.add_subcommand("resonance", "search for T_i* = l T_j*");
    add_dim(resonance, c);
    add_k(resonance, c, false);
    resonance->add_option("--kmax", c.k_max, "largest k scanned");
    resonance->add_option("--lmax", c.l_max, "largest multiple l");
    resonance->add_option("--tol", c.tolerance, "relative acceptance tolerance for N >= 2");
    add_output(resonance, c);

    auto* domain = app.add_subcommand("domain", "first-order branch geometry at a bifurcation point");
    add_dim(domain, c);
    add_k(domain, c, true);
    domain->add_option("--branch", c.branch, "interval index i of the bifurcation point");
    domain->add_option("--s", c.s, "branch amplitude");
    domain->add_option("--beta", c.beta, "weight of the cos(2 pi t / T) mode");
    std::vector<std::string> gamma_text;
    domain->add_option("--gamma", gamma_text, "extra kernel mode as l:weight (repeatable)");
    domain->add_option("--resolution", c.resolution, "samples per period (>= 16)");
    domain->add_option("--format", c.format, "csv or json");
    add_output(domain, c);

    auto* verify = app.add_subcommand("verify", "run the built-in oracle and property suites");
    verify->add_option("--suite", c.suite, "all or one suite name");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return cylbif::cli::kArgumentError;
    }

    c.command = app.get_subcommands().front()->get_name();
    try {
        for (const auto& g : gamma_text) c.gammas.push_back(cylbif::cli::parse_gamma(g));
    } catch (const cylbif::DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return cylbif::cli::kArgumentError;
    }
    return cylbif::cli::run(c, std::cout, std::cerr);
}
