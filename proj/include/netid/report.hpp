#pragma once

#include <string>

#include <json.hpp>

#include "netid/circular.hpp"
#include "netid/conditions.hpp"

namespace netid {

inline constexpr int kReportSchemaVersion = 1;

nlohmann::ordered_json model_to_json(const NetworkModel& m);
nlohmann::ordered_json circular_to_json(const CircularSection& c,
                                        const RecoveryCheck* recovery = nullptr);
nlohmann::ordered_json report_to_json(const AnalysisReport& r);

std::string render_text(const AnalysisReport& r);
std::string render_circular_text(const CircularSection& c, const RecoveryCheck* recovery = nullptr);

} // namespace netid
