#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "posetmat/io.hpp"

namespace posetmat {

/// On-disk store of solved instances, one JSON record per file named by the
/// FNV-1a hash of the instance key. Records carry the full key, so a hash
/// collision reads as a miss.
class ResultCache {
 public:
  static constexpr int kEngineVersion = 1;

  explicit ResultCache(std::filesystem::path dir);

  std::optional<Json> load(const std::string& key) const;
  void store(const std::string& key, Json record) const;

  const std::filesystem::path& dir() const { return dir_; }

 private:
  std::filesystem::path path_for(const std::string& key) const;
  std::filesystem::path dir_;
};

std::string fnv1a_hex(std::string_view text);

}  // namespace posetmat
