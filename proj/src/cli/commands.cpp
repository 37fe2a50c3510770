#include "bonnet/cli/commands.hpp"

#include "bonnet/cinfty/builtins.hpp"
#include "bonnet/cinfty/io.hpp"
#include "bonnet/cinfty/validate.hpp"
#include "bonnet/cli/cache.hpp"
#include "bonnet/cli/report.hpp"
#include "bonnet/harrison/oracle.hpp"
#include "bonnet/harrison/torus.hpp"
#include "bonnet/moduli/cells.hpp"
#include "bonnet/moduli/iso.hpp"
#include "bonnet/operad/bar_cobar.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace bonnet::cli {

using nlohmann::json;

namespace {

const char* command_name(Command c) {
  switch (c) {
    case Command::validate: return "validate";
    case Command::harrison: return "harrison";
    case Command::moduli: return "moduli";
    case Command::operad: return "operad";
    case Command::export_builtin: return "export";
    case Command::builtins: return "builtins";
  }
  return "?";
}

cinfty::CInftyAlgebra load_input(const std::string& input) {
  if (input.rfind("builtin:", 0) == 0) return cinfty::builtin_algebra(input.substr(8));
  if (!std::filesystem::exists(input)) throw std::runtime_error("cannot read " + input + ": no such file");
  return cinfty::load_algebra_file(input);
}

json algebra_input(const cinfty::CInftyAlgebra& a) {
  return {{"algebra", a.name}, {"sha256", sha256_hex(cinfty::save_algebra(a))}};
}

json checks_json(const cinfty::ValidationReport& r) {
  json out = json::array();
  for (const auto& c : r.checks)
    out.push_back({{"axiom", c.axiom}, {"arity", c.arity}, {"pass", c.pass}, {"witness", c.witness}, {"detail", c.detail}});
  return out;
}

std::string failure_line(const cinfty::ValidationReport& r) {
  const auto* f = r.first_failure();
  std::string s = f->axiom + " n=" + std::to_string(f->arity) + " at (";
  for (std::size_t i = 0; i < f->witness.size(); ++i) s += (i ? ", " : "") + f->witness[i];
  return s + "): " + f->detail;
}

json report_validate(const RunConfig& c) {
  auto a = load_input(c.input);
  auto r = cinfty::validate_all(a, c.max_arity);
  json in = algebra_input(a);
  in["max_arity"] = c.max_arity;
  return make_report("validate", in, r.ok(), {{"arity_checked", r.arity_checked}, {"checks", checks_json(r)}});
}

json report_harrison(const RunConfig& c) {
  auto a = load_input(c.input);
  json in = algebra_input(a);
  in["weight_cap"] = c.weight;
  in["oracle"] = c.oracle;
  in["force"] = c.force;
  json res = json::object();
  auto v = cinfty::validate_all(a, std::max(c.max_arity, 2));
  if (!v.ok()) {
    res["validation"] = failure_line(v);
    if (!c.force) return make_report("harrison", in, false, res);
  }
  auto hb = harrison::harrison_betti(a, c.weight, c.jobs);
  json degrees = json::array();
  for (const auto& e : hb)
    degrees.push_back({{"degree", e.degree}, {"dim", e.dim}, {"betti", e.betti}, {"complete", e.complete}, {"weights", e.weights}});
  res["degrees"] = degrees;
  bool pass = v.ok();
  if (c.oracle) {
    auto orc = harrison::harrison_oracle(a, c.weight);
    json diff = json::array();
    for (const auto& e : hb) {
      if (!e.complete) continue;
      auto it = std::find_if(orc.begin(), orc.end(), [&](const auto& o) { return o.degree == e.degree; });
      if (it == orc.end()) {
        diff.push_back({{"degree", e.degree}, {"betti", e.betti}, {"oracle_betti", nullptr}});
      } else if (it->betti != e.betti || it->dim != e.dim) {
        diff.push_back({{"degree", e.degree}, {"betti", e.betti}, {"oracle_betti", it->betti}});
      }
    }
    pass = pass && diff.empty();
    res["oracle"] = {{"differences", diff}};
  }
  return make_report("harrison", in, pass, res);
}

json report_moduli(const RunConfig& c) {
  const auto& v = *c.profile;
  moduli::require_admissible(v);
  if (moduli::max_internal_edges(v) > c.max_edges)
    throw UsageError("profile " + moduli::to_string(v) + " has up to " + std::to_string(moduli::max_internal_edges(v)) +
                     " internal edges, above --max-edges " + std::to_string(c.max_edges));
  json in = {{"profile", moduli::to_string(v)}, {"what", c.what}};
  if (c.what == "iso-check") {
    auto r = moduli::forest_cobar_iso(v);
    return make_report("moduli", in, r.ok,
                       {{"cell_dims", r.cell_dims}, {"cobar_dims", r.cobar_dims}, {"mismatches", r.mismatches}});
  }
  auto x = moduli::xv_complex(v);
  if (c.what == "cells") {
    json counts = json::array(), lines = json::array();
    for (const auto& layer : x.cells) {
      counts.push_back(layer.size());
      for (const auto& cell : layer) lines.push_back(moduli::cell_line(cell));
    }
    return make_report("moduli", in, true, {{"counts", counts}, {"cells", lines}});
  }
  auto dd = linalg::verify_dd_zero(x.complex);
  if (!dd.ok) return make_report("moduli", in, false, {{"dd_zero", false}, {"betti", json::array()}, {"euler", {{"cells", 0}, {"betti", 0}}}});
  auto b = linalg::betti(x.complex, static_cast<int>(c.jobs));
  const long ec = linalg::euler_from_dims(b), eb = linalg::euler_from_betti(b);
  return make_report("moduli", in, ec == eb, {{"dd_zero", true}, {"betti", betti_json(b)}, {"euler", {{"cells", ec}, {"betti", eb}}}});
}

json report_operad(const RunConfig& c) {
  json in = {{"complex", c.what}, {"n", c.arity}};
  const auto complex = c.what == "bar" ? operad::bar_complex(c.arity).complex : operad::cobar_bar_complex(c.arity).complex;
  auto dd = linalg::verify_dd_zero(complex);
  if (!dd.ok) return make_report("operad", in, false, {{"dd_zero", false}, {"betti", json::array()}});
  return make_report("operad", in, true, {{"dd_zero", true}, {"betti", betti_json(linalg::betti(complex, static_cast<int>(c.jobs)))}});
}

json report_builtins() {
  json list = json::array();
  for (const auto& b : cinfty::builtin_list()) list.push_back({{"key", b.key}, {"description", b.description}});
  return make_report("builtins", json::object(), true, {{"builtins", list}});
}

// What the cache key is made of: the inputs a report depends on.
std::string request_text(const RunConfig& c) {
  json r = {{"command", command_name(c.command)}};
  switch (c.command) {
    case Command::validate:
    case Command::harrison:
      r["algebra"] = cinfty::save_algebra(load_input(c.input));
      r["weight"] = c.weight;
      r["max_arity"] = c.max_arity;
      r["oracle"] = c.oracle;
      r["force"] = c.force;
      break;
    case Command::moduli:
      r["profile"] = moduli::to_string(*c.profile);
      r["what"] = c.what;
      break;
    case Command::operad:
      r["n"] = c.arity;
      r["what"] = c.what;
      break;
    default:
      break;
  }
  return r.dump();
}

}  // namespace

void check_config(const RunConfig& c) {
  if (c.weight < 1) throw UsageError("weight cap must be at least 1");
  if (c.max_arity < 2) throw UsageError("max arity must be at least 2");
  if (c.max_edges < 1) throw UsageError("max edges must be positive");
  if (c.jobs < 1) throw UsageError("jobs must be positive");
  switch (c.command) {
    case Command::validate:
    case Command::harrison:
      if (c.input.empty()) throw UsageError("an algebra file is required");
      break;
    case Command::moduli:
      if (!c.profile) throw UsageError("--v is required");
      if (c.what != "cells" && c.what != "homology" && c.what != "iso-check")
        throw UsageError("moduli: expected cells, homology or iso-check");
      break;
    case Command::operad:
      if (c.arity < 2) throw UsageError("operad: n must be at least 2");
      if (c.what != "bar" && c.what != "cobar-bar") throw UsageError("operad: expected bar or cobar-bar");
      break;
    case Command::export_builtin:
      if (c.input.empty()) throw UsageError("export: a built-in key is required");
      break;
    case Command::builtins:
      break;
  }
}

json compute_report(const RunConfig& c) {
  check_config(c);
  switch (c.command) {
    case Command::validate: return report_validate(c);
    case Command::harrison: return report_harrison(c);
    case Command::moduli: return report_moduli(c);
    case Command::operad: return report_operad(c);
    case Command::builtins: return report_builtins();
    case Command::export_builtin: break;
  }
  throw UsageError("export does not produce a report");
}

Outcome run(const RunConfig& c) {
  check_config(c);
  if (c.command == Command::export_builtin) return {kExitPass, cinfty::save_algebra(cinfty::builtin_algebra(c.input)) + "\n"};

  std::optional<Cache> cache;
  const bool cacheable = c.command == Command::harrison || c.command == Command::moduli || c.command == Command::operad;
  if (c.use_cache && cacheable) {
    auto dir = c.cache_dir ? c.cache_dir : Cache::default_dir();
    if (dir) cache.emplace(*dir);
  }
  json report;
  std::string key;
  if (cache) {
    key = Cache::key(request_text(c));
    if (auto hit = cache->get(key)) {
      report = json::parse(*hit, nullptr, false);
      if (report.is_discarded() || !report.is_object() || report.value("schema", "") != kReportSchema) report = json();
    }
  }
  if (report.is_null()) {
    report = compute_report(c);
    if (cache) cache->put(key, render_json(report));
  }
  const int code = report["status"] == "pass" ? kExitPass : kExitFail;
  return {code, c.format == Format::json ? render_json(report) : render_text(report)};
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graph complexes, Bar/Cobar of Comm and Torus(A) with exact rational homology"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig c;
  std::string format = "text", profile, output;
  std::string cache_dir;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--cache-dir", cache_dir, "Cache directory (default: $BONNET_CACHE_DIR)");
  app.add_flag("--no-cache", [&](std::int64_t) { c.use_cache = false; }, "Do not read or write the cache");
  app.add_option("-j,--jobs", c.jobs, "Parallelism degree");

  auto* validate = app.add_subcommand("validate", "Check the A∞, shuffle and cyclic axioms");
  validate->add_option("algebra", c.input, "Algebra JSON file or builtin:KEY")->required();
  validate->add_option("--max-arity", c.max_arity, "Highest arity checked");

  auto* harrison = app.add_subcommand("harrison", "Homology of Torus(A) up to a weight cap");
  harrison->add_option("algebra", c.input, "Algebra JSON file or builtin:KEY")->required();
  harrison->add_option("-W,--weight", c.weight, "Weight cap");
  harrison->add_option("--max-arity", c.max_arity, "Arity used by the validation step");
  harrison->add_flag("--oracle", c.oracle, "Also run the dense oracle and diff");
  harrison->add_flag("--force", c.force, "Compute even if validation fails");

  auto* mod = app.add_subcommand("moduli", "Cells, homology and the forest/cobar check for X_v");
  mod->add_option("--v", profile, "Profile g,e,t or g,i+o,a+b")->required();
  mod->add_option("what", c.what, "cells | homology | iso-check")->required();
  mod->add_option("--max-edges", c.max_edges, "Refuse profiles with more internal edges");

  auto* op = app.add_subcommand("operad", "Bar(Comm)(n) or Cobar(Bar(Comm))(n)");
  op->add_option("--n", c.arity, "Arity")->required();
  op->add_option("what", c.what, "bar | cobar-bar")->required();

  auto* exp = app.add_subcommand("export", "Print a built-in algebra as JSON");
  exp->add_option("key", c.input, "Built-in key")->required();
  exp->add_option("-o,--output", output, "Write to a file instead of stdout");

  auto* list = app.add_subcommand("builtins", "List the built-in algebras");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }
  try {
    if (*validate) c.command = Command::validate;
    if (*harrison) c.command = Command::harrison;
    if (*mod) {
      c.command = Command::moduli;
      c.profile = moduli::parse_profile(profile);
    }
    if (*op) c.command = Command::operad;
    if (*exp) c.command = Command::export_builtin;
    if (*list) c.command = Command::builtins;
    c.format = format == "json" ? Format::json : Format::text;
    if (!cache_dir.empty()) c.cache_dir = cache_dir;
    auto result = run(c);
    if (!output.empty()) {
      std::ofstream f(output, std::ios::binary);
      if (!(f << result.output)) throw std::runtime_error("cannot write " + output);
    } else {
      out << result.output;
    }
    return result.exit_code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace bonnet::cli
