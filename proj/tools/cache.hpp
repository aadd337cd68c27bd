#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "parthom/json.hpp"

namespace parthom::cli {

/// Bumped whenever a payload layout changes; old entries then miss.
inline constexpr int kCacheSchemaVersion = 1;

/// 64-bit FNV-1a of `text` as 16 hex digits.
std::string fnv1a_hex(std::string_view text);

/// Content-addressed store of command payloads. Each entry is a JSON file
/// named by the hash of its key and holding the key itself, so hash
/// collisions and truncated writes are detected and treated as misses.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path dir);

  /// The stored payload, or nullopt. Unreadable or mismatched entries log a
  /// warning to `warn` and count as misses.
  std::optional<Json> load(const std::string& key, std::ostream& warn) const;
  /// Writes through a temporary file and renames it into place; failures only warn.
  void store(const std::string& key, const Json& payload, std::ostream& warn) const;

  std::filesystem::path path_for(const std::string& key) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace parthom::cli
