#include "cache.hpp"

#include <atomic>
#include <cstdint>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include <unistd.h>

namespace parthom::cli {

std::string fnv1a_hex(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) out[static_cast<std::size_t>(i)] = digits[h & 0xf];
  return out;
}

ResultCache::ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path ResultCache::path_for(const std::string& key) const {
  return dir_ / (fnv1a_hex(key) + ".json");
}

std::optional<Json> ResultCache::load(const std::string& key, std::ostream& warn) const {
  const auto path = path_for(key);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    const Json entry = Json::parse(buf.str());
    if (entry.at("schema").get<int>() != kCacheSchemaVersion || entry.at("key").get<std::string>() != key) {
      warn << "warning: cache entry " << path.string() << " does not match its key; recomputing\n";
      return std::nullopt;
    }
    return entry.at("payload");
  } catch (const std::exception&) {
    warn << "warning: ignoring corrupt cache entry " << path.string() << "\n";
    return std::nullopt;
  }
}

void ResultCache::store(const std::string& key, const Json& payload, std::ostream& warn) const {
  static std::atomic<unsigned> counter{0};
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  const auto final_path = path_for(key);
  std::ostringstream tmp_name;
  tmp_name << ".tmp-" << fnv1a_hex(key) << "-" << ::getpid() << "-" << counter++;
  const auto tmp_path = dir_ / tmp_name.str();
  Json entry;
  entry["schema"] = kCacheSchemaVersion;
  entry["key"] = key;
  entry["payload"] = payload;
  {
    std::ofstream out(tmp_path);
    if (!out) {
      warn << "warning: cannot write cache directory " << dir_.string() << "\n";
      return;
    }
    out << entry.dump() << "\n";
    if (!out) {
      warn << "warning: failed writing " << tmp_path.string() << "\n";
      std::filesystem::remove(tmp_path, ec);
      return;
    }
  }
  std::filesystem::rename(tmp_path, final_path, ec);
  if (ec) {
    warn << "warning: cannot install cache entry " << final_path.string() << ": " << ec.message() << "\n";
    std::filesystem::remove(tmp_path, ec);
  }
}

}  // namespace parthom::cli
