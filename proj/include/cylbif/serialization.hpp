#pragma once

#include "cylbif/bifurcation.hpp"
#include "cylbif/domain_builder.hpp"
#include "cylbif/n1_exact.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace cylbif::io {

inline constexpr int kSchemaVersion = 1;

/// 17 significant digits, so parsing the text recovers the double exactly.
std::string format_double(double x);

nlohmann::json to_json(const KernelSpec& kernel);
nlohmann::json to_json(const BifurcationPoint& point);
/// {schema_version, dim, k, points: [...]}.
nlohmann::json bifurcation_report(const ProblemConfig& config, const std::vector<BifurcationPoint>& points);

nlohmann::json to_json(const DomainProfile& profile);
DomainProfile domain_from_json(const nlohmann::json& doc);

/// Columns t, R, r_1..r_{k-1}, trace after a `#` header echoing the branch.
std::string domain_csv(const DomainProfile& profile);
DomainProfile domain_from_csv(const std::string& text);

/// Columns k, i, j, l, A_i, A_j.
std::string resonance_csv(const std::vector<ResonanceTuple>& tuples);

}  // namespace cylbif::io
