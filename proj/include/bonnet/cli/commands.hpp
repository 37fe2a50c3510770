#pragma once

#include "bonnet/moduli/profile.hpp"

#include <json.hpp>

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

namespace bonnet::cli {

enum class Command { validate, harrison, moduli, operad, export_builtin, builtins };
enum class Format { text, json };

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
  Command command = Command::builtins;
  std::string input;                     // algebra file, "builtin:KEY", or a built-in key for export
  std::optional<moduli::BoundaryProfile> profile;
  std::string what;                      // cells | homology | iso-check, bar | cobar-bar
  int weight = 6;
  int max_arity = 4;
  int max_edges = 8;                     // moduli: refuse larger profiles
  int arity = 0;                         // operad n
  bool oracle = false;
  bool force = false;
  Format format = Format::text;
  std::optional<std::filesystem::path> cache_dir;
  bool use_cache = true;
  unsigned jobs = 1;
};

// Throws UsageError on out-of-range caps or a missing argument.
void check_config(const RunConfig& c);

struct Outcome {
  int exit_code = kExitPass;
  std::string output;  // what goes to stdout
};

// Computes (or fetches) the report and renders it. Throws UsageError,
// std::invalid_argument and std::runtime_error for usage and I/O problems.
Outcome run(const RunConfig& c);

// The report alone, bypassing the cache.
nlohmann::json compute_report(const RunConfig& c);

// Full command line: parse, run, print. Never throws; returns the exit code.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bonnet::cli
