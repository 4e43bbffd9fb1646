#pragma once

// JSON (canonical, stable key order) and CSV renderings of experiment reports.
// Every report embeds the tool version and an echo of its configuration.

#include <string>
#include <vector>

#include <json.hpp>

#include "exsuff/experiments.hpp"

namespace exsuff {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = EXSUFF_VERSION;

Json config_to_json(const ExperimentConfig& cfg);

Json report_to_json(const ExperimentConfig& cfg, const RankUniformityReport& r);
Json report_to_json(const ExperimentConfig& cfg, const std::vector<VerifyEntry>& entries);
Json report_to_json(const ExperimentConfig& cfg, const RbComparison& r);
Json report_to_json(const ExperimentConfig& cfg, const std::vector<SymmetrizeRecord>& records);

std::string report_to_csv(const RankUniformityReport& r);
std::string report_to_csv(const std::vector<VerifyEntry>& entries);
std::string report_to_csv(const RbComparison& r);
std::string report_to_csv(const std::vector<SymmetrizeRecord>& records);

/// JSON text with two-space indent and a trailing newline.
std::string dump(const Json& j);

}  // namespace exsuff
