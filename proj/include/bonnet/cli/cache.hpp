#pragma once

#include <filesystem>
#include <optional>
#include <string>

namespace bonnet::cli {

std::string sha256_hex(const std::string& data);

// Reports keyed by a hash of (artifact version, request). Entries live in
// <dir>/<hash>.json and are written to a temporary file, then renamed.
class Cache {
 public:
  explicit Cache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  // BONNET_CACHE_DIR, else $XDG_CACHE_HOME/bonnet, else ~/.cache/bonnet.
  static std::optional<std::filesystem::path> default_dir();

  static std::string key(const std::string& request);
  std::optional<std::string> get(const std::string& key) const;
  // Returns false if the entry could not be written; the cache is best effort.
  bool put(const std::string& key, const std::string& value) const;

  const std::filesystem::path& dir() const { return dir_; }

 private:
  std::filesystem::path dir_;
};

}  // namespace bonnet::cli
