#include "bonnet/cli/report.hpp"

#include <sstream>

#ifndef BONNET_VERSION
#define BONNET_VERSION "unknown"
#endif

namespace bonnet::cli {

using nlohmann::json;

json make_report(const std::string& command, json input, bool pass, json result) {
  json r = json::object();
  r["schema"] = kReportSchema;
  r["version"] = BONNET_VERSION;
  r["command"] = command;
  r["input"] = std::move(input);
  r["status"] = pass ? "pass" : "fail";
  r["result"] = std::move(result);
  return r;
}

json betti_json(const std::vector<linalg::BettiEntry>& b) {
  json out = json::array();
  for (const auto& e : b) out.push_back({{"degree", e.degree}, {"dim", e.dim}, {"rank_out", e.rank_out}, {"betti", e.betti}});
  return out;
}

std::string render_json(const json& report) { return report.dump(2) + "\n"; }

namespace {

std::string join(const json& a, const char* sep = " ") {
  std::string s;
  for (const auto& x : a) {
    if (!s.empty()) s += sep;
    s += x.is_string() ? x.get<std::string>() : x.dump();
  }
  return s;
}

void betti_table(std::ostream& o, const json& b) {
  o << "  degree  dim  betti\n";
  for (const auto& e : b)
    o << "  " << e["degree"].get<int>() << "  " << e["dim"].get<std::size_t>() << "  " << e["betti"].get<std::size_t>() << "\n";
}

}  // namespace

std::string render_text(const json& r) {
  std::ostringstream o;
  const std::string cmd = r["command"];
  const json& in = r["input"];
  const json& res = r["result"];
  const std::string status = r["status"];

  if (cmd == "builtins") {
    for (const auto& b : res["builtins"]) o << b["key"].get<std::string>() << "  " << b["description"].get<std::string>() << "\n";
    return o.str();
  }
  if (cmd == "validate") {
    o << "validate " << in["algebra"].get<std::string>() << " to arity " << res["arity_checked"].get<int>() << ": " << status
      << "\n";
    for (const auto& c : res["checks"]) {
      o << "  " << c["axiom"].get<std::string>() << " n=" << c["arity"].get<int>() << " "
        << (c["pass"].get<bool>() ? "pass" : "FAIL");
      if (!c["pass"].get<bool>()) o << " at (" << join(c["witness"], ", ") << "): " << c["detail"].get<std::string>();
      o << "\n";
    }
    return o.str();
  }
  if (cmd == "harrison") {
    o << "harrison " << in["algebra"].get<std::string>() << " W=" << in["weight_cap"].get<int>() << ": " << status << "\n";
    if (res.contains("validation")) {
      o << "  algebra does not validate: " << res["validation"].get<std::string>() << "\n";
      if (!res.contains("degrees")) return o.str();
    }
    o << "  degree  dim  betti  complete  weights\n";
    for (const auto& e : res["degrees"])
      o << "  " << e["degree"].get<int>() << "  " << e["dim"].get<std::size_t>() << "  " << e["betti"].get<std::size_t>()
        << "  " << (e["complete"].get<bool>() ? "yes" : "no") << "  " << join(e["weights"], ",") << "\n";
    if (res.contains("oracle")) {
      const auto& d = res["oracle"]["differences"];
      o << "  oracle: " << (d.empty() ? "agrees on all complete degrees" : "DIFFERS") << "\n";
      for (const auto& x : d)
        o << "    degree " << x["degree"].get<int>() << ": betti " << x["betti"].dump() << " vs oracle "
          << x["oracle_betti"].dump() << "\n";
    }
    return o.str();
  }
  if (cmd == "moduli") {
    const std::string what = in["what"];
    o << "moduli " << in["profile"].get<std::string>() << " " << what << ": " << status << "\n";
    if (what == "cells") {
      o << "  cells by dimension: " << join(res["counts"]) << "\n";
      for (const auto& l : res["cells"]) o << "  " << l.get<std::string>() << "\n";
    } else if (what == "homology") {
      o << "  d∘d = 0: " << (res["dd_zero"].get<bool>() ? "yes" : "NO") << "\n";
      betti_table(o, res["betti"]);
      o << "  euler: cells " << res["euler"]["cells"].get<long>() << ", homology " << res["euler"]["betti"].get<long>() << "\n";
    } else {
      o << "  cell dims:  " << join(res["cell_dims"]) << "\n";
      o << "  cobar dims: " << join(res["cobar_dims"]) << "\n";
      for (const auto& m : res["mismatches"]) o << "  " << m.get<std::string>() << "\n";
    }
    return o.str();
  }
  if (cmd == "operad") {
    o << "operad " << in["complex"].get<std::string>() << " n=" << in["n"].get<int>() << ": " << status << "\n";
    o << "  d∘d = 0: " << (res["dd_zero"].get<bool>() ? "yes" : "NO") << "\n";
    betti_table(o, res["betti"]);
    return o.str();
  }
  return render_json(r);
}

}  // namespace bonnet::cli
