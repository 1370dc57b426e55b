#pragma once

#include <string>

#include <json.hpp>

#include "commutator.hpp"
#include "order.hpp"

namespace gencomm {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kReportSchema = "gencomm-report/1";

std::uint64_t default_prime();  // GENCOMM_DEFAULT_P override, else 2^61 - 1

nlohmann::json field_to_json(const FieldConfig& f);
FieldConfig field_from(const std::string& kind, std::uint64_t p);

// Top-level report envelopes. Key order is canonical (objects sort their
// keys), so identical configs serialize byte-identically.
nlohmann::json report_envelope(const std::string& command, nlohmann::json config);
nlohmann::json conjecture_report_json(const ConjectureReport& rep);
nlohmann::json al_check_report_json(const AlCheckReport& rep);
nlohmann::json block_report_json(int n, int r, int j, const std::string& method);
nlohmann::json ic_report_json(int n, int r, int j /* -1 = all shifts */);
nlohmann::json maximal_graph_report_json(int n, int r, int a, int j);
nlohmann::json structure_report_json(int n, int r, const FieldConfig& f);
nlohmann::json eulerian_sum_report_json(const LabeledDigraph& g, int start);

}  // namespace gencomm
