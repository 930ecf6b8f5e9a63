#include "posetmat/cache.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>

namespace posetmat {

std::string fnv1a_hex(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

ResultCache::ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path ResultCache::path_for(const std::string& key) const {
  return dir_ / (fnv1a_hex(key) + ".json");
}

std::optional<Json> ResultCache::load(const std::string& key) const {
  std::ifstream in(path_for(key));
  if (!in) return std::nullopt;
  Json record = Json::parse(in, nullptr, false);
  if (record.is_discarded() || !record.is_object()) return std::nullopt;
  if (record.value("key", std::string()) != key) return std::nullopt;
  if (record.value("engine_version", 0) != kEngineVersion) return std::nullopt;
  return record;
}

void ResultCache::store(const std::string& key, Json record) const {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) return;
  record["key"] = key;
  record["hash"] = fnv1a_hex(key);
  record["engine_version"] = kEngineVersion;
  const auto target = path_for(key);
  const auto tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << record.dump(2) << '\n';
  }
  std::filesystem::rename(tmp, target, ec);
}

}  // namespace posetmat
