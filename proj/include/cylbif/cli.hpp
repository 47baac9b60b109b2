#pragma once

#include "cylbif/domain_builder.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace cylbif::cli {

enum ExitCode : int { kSuccess = 0, kVerifyFailure = 1, kArgumentError = 2, kNumericalFailure = 3 };

struct RunConfig {
    std::string command;
    int dim = 3;
    std::optional<int> k;
    int k_max = 5;
    int l_max = 10;
    int branch = 1;
    double s = 0.05;
    double beta = 1.0;
    std::vector<ModeCoefficient> gammas;
    double t_min = 0.1;
    double t_max = 3.0;
    int samples = 200;
    double tolerance = kDefaultKernelTolerance;
    std::string format = "csv";
    std::string output;
    std::string suite = "all";
    int resolution = 64;
};

/// Each command writes its result to `out` and diagnostics to `err` and
/// returns the process exit code.
int cmd_spectrum(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_sigma_sweep(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_bifurcate(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_resonance(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_domain(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Dispatches on config.command.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses "l:value".
ModeCoefficient parse_gamma(const std::string& text);

/// Names accepted by --suite.
const std::vector<std::string>& verify_suites();

}  // namespace cylbif::cli
