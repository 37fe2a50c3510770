#include "bonnet/cli/cache.hpp"

#include <openssl/evp.h>

#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <system_error>

#ifndef BONNET_VERSION
#define BONNET_VERSION "unknown"
#endif

namespace bonnet::cli {

namespace fs = std::filesystem;

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 15];
  }
  return out;
}

std::optional<fs::path> Cache::default_dir() {
  if (const char* d = std::getenv("BONNET_CACHE_DIR"); d && *d) return fs::path(d);
  if (const char* d = std::getenv("XDG_CACHE_HOME"); d && *d) return fs::path(d) / "bonnet";
  if (const char* d = std::getenv("HOME"); d && *d) return fs::path(d) / ".cache" / "bonnet";
  return std::nullopt;
}

std::string Cache::key(const std::string& request) { return sha256_hex(std::string(BONNET_VERSION) + "\n" + request); }

std::optional<std::string> Cache::get(const std::string& key) const {
  std::ifstream in(dir_ / (key + ".json"), std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

bool Cache::put(const std::string& key, const std::string& value) const {
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec) return false;
  std::random_device rd;
  const fs::path tmp = dir_ / (key + ".tmp" + std::to_string(rd()));
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) return false;
    out << value;
    if (!out.flush()) {
      fs::remove(tmp, ec);
      return false;
    }
  }
  fs::rename(tmp, dir_ / (key + ".json"), ec);
  if (ec) fs::remove(tmp, ec);
  return !ec;
}

}  // namespace bonnet::cli
