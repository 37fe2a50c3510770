#pragma once

#include "bonnet/linalg/chain_complex.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace bonnet::cli {

inline constexpr const char* kReportSchema = "bonnet-report/1";

// {"schema", "version", "command", "input", "status", "result"}; status is
// "pass" or "fail". Nothing time- or machine-dependent goes in.
nlohmann::json make_report(const std::string& command, nlohmann::json input, bool pass, nlohmann::json result);

nlohmann::json betti_json(const std::vector<linalg::BettiEntry>& b);

// Machine-readable form: two-space indented JSON and a newline.
std::string render_json(const nlohmann::json& report);
// Human-readable form, derived from the report alone.
std::string render_text(const nlohmann::json& report);

}  // namespace bonnet::cli
