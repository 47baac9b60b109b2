#include "cylbif/cli.hpp"
#include "cylbif/errors.hpp"
#include "cylbif/n1_exact.hpp"
#include "cylbif/serialization.hpp"
#include "cylbif/sigma_spectrum.hpp"

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

using namespace cylbif;
using namespace cylbif::cli;
using nlohmann::json;

namespace {

constexpr double kPi = std::numbers::pi;

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(const RunConfig& c) {
    std::ostringstream out, err;
    const int code = run(c, out, err);
    return {code, out.str(), err.str()};
}

RunConfig make(const std::string& command, int dim, std::optional<int> k = std::nullopt) {
    RunConfig c;
    c.command = command;
    c.dim = dim;
    c.k = k;
    return c;
}

// Data rows of a CSV text: comment lines and the column header are dropped.
std::vector<std::vector<std::string>> rows(const std::string& text) {
    std::vector<std::vector<std::string>> out;
    std::istringstream in(text);
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (header) {
            header = false;
            continue;
        }
        std::vector<std::string> fields;
        std::string f;
        std::istringstream ls(line);
        while (std::getline(ls, f, ',')) fields.push_back(f);
        if (line.back() == ',') fields.emplace_back();
        out.push_back(fields);
    }
    return out;
}

std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

int shell(const std::string& args, const std::filesystem::path& out) {
    const std::string cmd = std::string("\"") + CYLBIF_EXE + "\" " + args + " > \"" + out.string() + "\" 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST(Spectrum, ThreeBall) {
    auto c = make("spectrum", 3);
    c.k_max = 3;
    const auto r = invoke(c);
    ASSERT_EQ(r.code, kSuccess);
    const auto data = rows(r.out);
    ASSERT_EQ(data.size(), 3u);
    for (int k = 1; k <= 3; ++k) EXPECT_NEAR(std::stod(data[k - 1][2]), k * k * kPi * kPi, 1e-10 * k * k);
}

TEST(Spectrum, Interval) {
    auto c = make("spectrum", 1);
    c.k_max = 2;
    const auto data = rows(invoke(c).out);
    ASSERT_EQ(data.size(), 2u);
    EXPECT_EQ(std::stod(data[0][2]), kPi * kPi / 4);
    EXPECT_EQ(std::stod(data[1][2]), 9 * kPi * kPi / 4);
}

TEST(Spectrum, RejectsZeroDimension) {
    auto c = make("spectrum", 0);
    c.k_max = 2;
    const auto r = invoke(c);
    EXPECT_EQ(r.code, kArgumentError);
    EXPECT_NE(r.err.find("error"), std::string::npos);
}

TEST(SigmaSweep, GapsAtSingularPeriods) {
    auto c = make("sigma", 3, 3);
    c.t_min = 0.2;
    c.t_max = 2.0;
    c.samples = 181;
    const auto r = invoke(c);
    ASSERT_EQ(r.code, kSuccess);
    const auto data = rows(r.out);
    const auto singular = singular_points(ProblemConfig(3, 3)).singular_periods;
    int gaps = 0;
    std::vector<double> gap_at;
    for (const auto& row : data) {
        if (row[2] == "1") {
            ++gaps;
            gap_at.push_back(std::stod(row[0]));
            EXPECT_TRUE(row[1].empty());
        } else {
            EXPECT_TRUE(std::isfinite(std::stod(row[1])));
        }
    }
    EXPECT_EQ(gaps, 2);
    ASSERT_EQ(gap_at.size(), singular.size());
    for (std::size_t n = 0; n < gap_at.size(); ++n) EXPECT_EQ(gap_at[n], singular[n]);
}

TEST(SigmaSweep, SampleOnSingularPeriodBecomesGap) {
    auto c = make("sigma", 3, 2);
    c.t_min = 2 / std::sqrt(3.0);
    c.t_max = 2.0;
    c.samples = 5;
    const auto data = rows(invoke(c).out);
    ASSERT_EQ(data.size(), 5u);
    EXPECT_EQ(data[0][2], "1");
}

TEST(SigmaSweep, MonotoneSegments) {
    for (int dim : {1, 2, 3}) {
        auto c = make("sigma", dim, 4);
        c.t_min = 0.1;
        c.t_max = 3.0;
        c.samples = 400;
        const double sign = 1.0;  // k = 4 is even.
        double prev = -INFINITY;
        for (const auto& row : rows(invoke(c).out)) {
            if (row[2] == "1") {
                prev = -INFINITY;
                continue;
            }
            const double v = sign * std::stod(row[1]);
            EXPECT_GT(v, prev) << dim << ' ' << row[0];
            prev = v;
        }
    }
}

TEST(SigmaSweep, IntervalRoutesToClosedForm) {
    auto c = make("sigma", 1, 3);
    c.t_min = 0.5;
    c.t_max = 0.8;
    c.samples = 4;
    const auto data = rows(invoke(c).out);
    EXPECT_EQ(std::stod(data.back()[1]), sigma_exact_n1(3, 0.8));
}

TEST(SigmaSweep, ArgumentErrors) {
    auto c = make("sigma", 3, 2);
    c.t_min = -1;
    EXPECT_EQ(invoke(c).code, kArgumentError);
    EXPECT_EQ(invoke(make("sigma", 3)).code, kArgumentError);
    c = make("sigma", 3, 2);
    c.samples = 1;
    EXPECT_EQ(invoke(c).code, kArgumentError);
}

TEST(Bifurcate, IntervalPoints) {
    const auto r = invoke(make("bifurcate", 1, 3));
    ASSERT_EQ(r.code, kSuccess) << r.err;
    const auto doc = json::parse(r.out);
    ASSERT_EQ(doc["points"].size(), 3u);
    EXPECT_NEAR(doc["points"][0]["T_star"].get<double>(), 0.8, 1e-12);
    EXPECT_NEAR(doc["points"][1]["T_star"].get<double>(), 0.8728715609, 1e-10);
    EXPECT_NEAR(doc["points"][2]["T_star"].get<double>(), 4.0 / 3.0, 1e-12);
}

TEST(Bifurcate, ResonantKernel) {
    const auto r = invoke(make("bifurcate", 1, 53));
    ASSERT_EQ(r.code, kSuccess) << r.err;
    const auto kernel = json::parse(r.out)["points"][52]["kernel"];
    EXPECT_EQ(kernel["modes"], json::array({1, 7}));
    EXPECT_EQ(kernel["partners"][0]["j"], 15);
}

TEST(Bifurcate, RequiresK) { EXPECT_EQ(invoke(make("bifurcate", 3)).code, kArgumentError); }

TEST(Resonance, IntervalScan) {
    auto c = make("resonance", 1);
    c.k_max = 100;
    c.l_max = 10;
    const auto r = invoke(c);
    ASSERT_EQ(r.code, kSuccess);
    const auto data = rows(r.out);
    bool a = false, b = false;
    for (const auto& row : data) {
        EXPECT_EQ(std::stoi(row[3]) % 2, 1);
        a = a || (row[0] == "53" && row[1] == "53" && row[2] == "15" && row[3] == "7");
        b = b || (row[0] == "83" && row[1] == "83" && row[2] == "13" && row[3] == "9");
    }
    EXPECT_TRUE(a);
    EXPECT_TRUE(b);
}

TEST(Resonance, CandidatesForHigherDimensions) {
    auto c = make("resonance", 3, 4);
    c.l_max = 10;
    const auto r = invoke(c);
    ASSERT_EQ(r.code, kSuccess);
    const auto data = rows(r.out);
    EXPECT_FALSE(data.empty());
    for (const auto& row : data) {
        EXPECT_GT(std::stod(row[6]), 0.0);
        EXPECT_EQ(row[8], "candidate");
    }
}

TEST(Resonance, ArgumentErrors) {
    auto c = make("resonance", 1);
    c.l_max = 1;
    EXPECT_EQ(invoke(c).code, kArgumentError);
    c.l_max = 10;
    c.k_max = 20000;
    EXPECT_EQ(invoke(c).code, kArgumentError);
}

TEST(Domain, FlatTraceAndTwoNodalLines) {
    auto c = make("domain", 3, 3);
    c.s = 0.05;
    const auto r = invoke(c);
    ASSERT_EQ(r.code, kSuccess) << r.err;
    const auto profile = io::domain_from_csv(r.out);
    ASSERT_EQ(profile.samples.size(), 64u);
    const double phi1 = make_eigenpair(ProblemConfig(3, 3)).phi_prime_1;
    EXPECT_DOUBLE_EQ(profile.samples[0].radius, 1.05);
    for (const auto& s : profile.samples) {
        EXPECT_EQ(s.nodal.size(), 2u);
        EXPECT_NEAR(s.trace, phi1, 1e-9);
    }
}

TEST(Domain, StraightCylinder) {
    auto c = make("domain", 3, 3);
    c.s = 0.0;
    c.format = "json";
    const auto r = invoke(c);
    ASSERT_EQ(r.code, kSuccess);
    const auto doc = json::parse(r.out);
    for (const auto& s : doc["samples"]) {
        EXPECT_EQ(s["R"].get<double>(), 1.0);
        EXPECT_EQ(s["trace"], doc["samples"][0]["trace"]);
    }
}

TEST(Domain, NonKernelGammaRejected) {
    auto c = make("domain", 3, 3);
    c.gammas = {{2, 0.5}};
    const auto r = invoke(c);
    EXPECT_EQ(r.code, kArgumentError);
    EXPECT_NE(r.err.find("kernel"), std::string::npos);
}

TEST(Domain, ResonantGammaAccepted) {
    auto c = make("domain", 1, 53);
    c.branch = 53;
    c.s = 0.001;
    c.gammas = {parse_gamma("7:1.0")};
    c.format = "json";
    const auto r = invoke(c);
    ASSERT_EQ(r.code, kSuccess) << r.err;
    const auto doc = json::parse(r.out);
    EXPECT_NEAR(doc["beta"].get<double>(), std::sqrt(0.5), 1e-15);
    EXPECT_EQ(doc["gammas"][0]["mode"], 7);
}

TEST(Domain, ArgumentErrors) {
    auto c = make("domain", 3, 3);
    c.branch = 4;
    EXPECT_EQ(invoke(c).code, kArgumentError);
    c = make("domain", 3, 3);
    c.format = "xml";
    EXPECT_EQ(invoke(c).code, kArgumentError);
    c = make("domain", 3, 3);
    c.resolution = 8;
    EXPECT_EQ(invoke(c).code, kArgumentError);
    EXPECT_THROW(parse_gamma("7"), DomainError);
    EXPECT_THROW(parse_gamma("x:1"), DomainError);
    EXPECT_THROW(parse_gamma("7:1.0abc"), DomainError);
    EXPECT_EQ(parse_gamma("3:-0.25").mode, 3);
}

TEST(Verify, SingleSuite) {
    auto c = make("verify", 3);
    c.suite = "bessel";
    const auto r = invoke(c);
    EXPECT_EQ(r.code, kSuccess) << r.out << r.err;
    const auto data = rows(r.out);
    ASSERT_EQ(data.size(), 2u);
    EXPECT_EQ(data[0][0], "bessel");
    EXPECT_EQ(data[1][0], "verify: PASS");
}

TEST(Verify, AllSuitesPass) {
    const auto r = invoke(make("verify", 3));
    EXPECT_EQ(r.code, kSuccess) << r.out << r.err;
    EXPECT_EQ(rows(r.out).size(), verify_suites().size() + 1);
}

TEST(Verify, UnknownSuite) {
    auto c = make("verify", 3);
    c.suite = "nope";
    EXPECT_EQ(invoke(c).code, kArgumentError);
}

TEST(Run, UnknownCommand) { EXPECT_EQ(invoke(make("frobnicate", 3)).code, kArgumentError); }

TEST(Executable, ExitCodesAndOutputFile) {
    const auto dir = std::filesystem::temp_directory_path() / "cylbif_cli_test";
    std::filesystem::create_directories(dir);
    EXPECT_EQ(shell("spectrum --dim 3 --kmax 3", dir / "a.txt"), 0);
    EXPECT_NE(read_file(dir / "a.txt").find("k,j,lambda,phi_prime_1"), std::string::npos);
    EXPECT_EQ(shell("spectrum --dim 0 --kmax 3", dir / "b.txt"), 2);
    EXPECT_EQ(shell("spectrum --kmax 3", dir / "c.txt"), 2);
    EXPECT_EQ(shell("resonance --dim 1 --kmax 10 --lmax 1", dir / "d.txt"), 2);
    EXPECT_EQ(shell("domain --dim 3 --k 3 --gamma 2:0.5", dir / "e.txt"), 2);
    EXPECT_EQ(shell("domain --dim 3 --k 3 --gamma bogus", dir / "f.txt"), 2);
    EXPECT_EQ(shell("verify --suite nope", dir / "g.txt"), 2);

    const auto json_path = dir / "points.json";
    EXPECT_EQ(shell("bifurcate --dim 3 --k 3 -o \"" + json_path.string() + "\"", dir / "h.txt"), 0);
    const auto doc = json::parse(read_file(json_path));
    EXPECT_EQ(doc["points"].size(), 3u);
    std::filesystem::remove_all(dir);
}

TEST(Executable, DeterministicAcrossThreadCounts) {
    const auto dir = std::filesystem::temp_directory_path() / "cylbif_cli_det";
    std::filesystem::create_directories(dir);
    const std::string args = "domain --dim 3 --k 4 --branch 2 --s 0.03 --format json";
    ASSERT_EQ(shell(args, dir / "a.json"), 0);
    ASSERT_EQ(shell(args, dir / "b.json"), 0);
    const std::string one = "CYLBIF_THREADS=1 ";
    const std::string cmd = one + "\"" + CYLBIF_EXE + "\" " + args + " > \"" + (dir / "c.json").string() + "\"";
    ASSERT_EQ(std::system(cmd.c_str()), 0);
    EXPECT_EQ(read_file(dir / "a.json"), read_file(dir / "b.json"));
    EXPECT_EQ(read_file(dir / "a.json"), read_file(dir / "c.json"));
    std::filesystem::remove_all(dir);
}
