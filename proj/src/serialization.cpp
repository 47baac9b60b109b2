#include "cylbif/serialization.hpp"

#include "cylbif/errors.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace cylbif::io {

using nlohmann::json;

namespace {

json finite_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, sep)) out.push_back(field);
    if (!line.empty() && line.back() == sep) out.emplace_back();
    return out;
}

double parse_double(const std::string& s) {
    char* end = nullptr;
    const double x = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size()) throw Error("malformed number: " + s);
    return x;
}

}  // namespace

std::string format_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

json to_json(const KernelSpec& kernel) {
    json partners = json::array();
    for (const auto& p : kernel.partners) partners.push_back({{"j", p.j}, {"l", p.l}, {"residual", p.residual}});
    return {{"dimension", kernel.dimension},
            {"modes", kernel.modes},
            {"partners", partners},
            {"classification", kernel.exact ? "exact" : "candidate"},
            {"warnings", kernel.warnings}};
}

json to_json(const BifurcationPoint& point) {
    return {{"interval_index", point.interval_index},
            {"T_star", point.T_star},
            {"interval", {finite_or_null(point.interval_lower), finite_or_null(point.interval_upper)}},
            {"sigma_residual", point.sigma_residual},
            {"transversality", point.transversality},
            {"certification",
             {{"status", to_string(point.certification.status)},
              {"finite_difference", point.certification.finite_difference},
              {"polynomial_fit", point.certification.polynomial_fit},
              {"scale", point.certification.scale}}},
            {"kernel", to_json(point.kernel)}};
}

json bifurcation_report(const ProblemConfig& config, const std::vector<BifurcationPoint>& points) {
    json list = json::array();
    for (const auto& p : points) list.push_back(to_json(p));
    return {{"schema_version", kSchemaVersion}, {"dim", config.dim()}, {"k", config.k()}, {"points", list}};
}

json to_json(const DomainProfile& profile) {
    json gammas = json::array();
    for (const auto& g : profile.gammas) gammas.push_back({{"mode", g.mode}, {"gamma", g.coefficient}});
    json samples = json::array();
    for (const auto& s : profile.samples) {
        samples.push_back({{"t", s.t}, {"R", s.radius}, {"nodal", s.nodal}, {"trace", s.trace}});
    }
    return {{"schema_version", kSchemaVersion},
            {"dim", profile.config.dim()},
            {"k", profile.config.k()},
            {"branch", profile.branch},
            {"period", profile.period},
            {"s", profile.s},
            {"beta", profile.beta},
            {"gammas", gammas},
            {"samples", samples}};
}

DomainProfile domain_from_json(const json& doc) {
    if (doc.at("schema_version").get<int>() != kSchemaVersion) throw Error("unsupported schema_version");
    DomainProfile p{ProblemConfig(doc.at("dim").get<int>(), doc.at("k").get<int>()),
                    doc.at("branch").get<int>(),
                    doc.at("period").get<double>(),
                    doc.at("s").get<double>(),
                    doc.at("beta").get<double>(),
                    {},
                    {}};
    for (const auto& g : doc.at("gammas")) p.gammas.push_back({g.at("mode").get<int>(), g.at("gamma").get<double>()});
    for (const auto& s : doc.at("samples")) {
        p.samples.push_back({s.at("t").get<double>(), s.at("R").get<double>(),
                             s.at("nodal").get<std::vector<double>>(), s.at("trace").get<double>()});
    }
    return p;
}

std::string domain_csv(const DomainProfile& profile) {
    std::ostringstream os;
    os << "# dim=" << profile.config.dim() << " k=" << profile.config.k() << " branch=" << profile.branch
       << " period=" << format_double(profile.period) << " s=" << format_double(profile.s)
       << " beta=" << format_double(profile.beta) << " gammas=";
    for (std::size_t n = 0; n < profile.gammas.size(); ++n) {
        if (n) os << ';';
        os << profile.gammas[n].mode << ':' << format_double(profile.gammas[n].coefficient);
    }
    os << "\nt,R";
    for (int j = 1; j < profile.config.k(); ++j) os << ",r_" << j;
    os << ",trace\n";
    for (const auto& s : profile.samples) {
        os << format_double(s.t) << ',' << format_double(s.radius);
        for (double r : s.nodal) os << ',' << format_double(r);
        os << ',' << format_double(s.trace) << '\n';
    }
    return os.str();
}

DomainProfile domain_from_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line.rfind("# ", 0) != 0) throw Error("domain CSV: missing header comment");
    int dim = 0, k = 0, branch = 0;
    double period = 0, s = 0, beta = 0;
    std::vector<ModeCoefficient> gammas;
    for (const auto& item : split(line.substr(2), ' ')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) continue;
        const std::string key = item.substr(0, eq), value = item.substr(eq + 1);
        if (key == "dim") dim = std::stoi(value);
        else if (key == "k") k = std::stoi(value);
        else if (key == "branch") branch = std::stoi(value);
        else if (key == "period") period = parse_double(value);
        else if (key == "s") s = parse_double(value);
        else if (key == "beta") beta = parse_double(value);
        else if (key == "gammas" && !value.empty()) {
            for (const auto& g : split(value, ';')) {
                const auto colon = g.find(':');
                if (colon == std::string::npos) throw Error("domain CSV: malformed gamma " + g);
                gammas.push_back({std::stoi(g.substr(0, colon)), parse_double(g.substr(colon + 1))});
            }
        }
    }
    DomainProfile p{ProblemConfig(dim, k), branch, period, s, beta, gammas, {}};
    if (!std::getline(in, line)) throw Error("domain CSV: missing column header");
    const std::size_t columns = static_cast<std::size_t>(k) + 2;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto f = split(line, ',');
        if (f.size() != columns) throw Error("domain CSV: wrong column count");
        ProfileSample sample{parse_double(f[0]), parse_double(f[1]), {}, parse_double(f.back())};
        for (std::size_t c = 2; c + 1 < f.size(); ++c) sample.nodal.push_back(parse_double(f[c]));
        p.samples.push_back(std::move(sample));
    }
    return p;
}

std::string resonance_csv(const std::vector<ResonanceTuple>& tuples) {
    std::ostringstream os;
    os << "k,i,j,l,A_i,A_j\n";
    for (const auto& t : tuples) {
        os << t.k << ',' << t.i << ',' << t.j << ',' << t.l << ',' << t.a_i << ',' << t.a_j << '\n';
    }
    return os.str();
}

}  // namespace cylbif::io
