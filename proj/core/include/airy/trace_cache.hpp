#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>

#include "airy/expsum.hpp"

namespace airy {

/// Canonical text key of a table: provenance, p, e, n, λ and f indices.
std::string trace_key(const TraceTable& shape);
/// 64-bit FNV-1a of the key, as 16 hex digits.
std::string fnv1a_hex(const std::string& s);

/// Directory named by AIRY_CACHE_DIR, if set and non-empty.
std::optional<std::filesystem::path> cache_dir_from_env();

/// Content-addressed JSON store, one file per table: <dir>/<fnv>.json.
/// A file whose stored key differs from the requested key is ignored.
class TraceCache {
 public:
  explicit TraceCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  /// Looks up a table matching `shape` (entries of `shape` are ignored).
  std::optional<TraceTable> load(const TraceTable& shape) const;
  /// Writes atomically (temp file + rename). Errors are swallowed: the
  /// cache is an optimization.
  void store(const TraceTable& table) const;

  const std::filesystem::path& dir() const { return dir_; }

 private:
  std::filesystem::path path_for(const std::string& key) const;
  std::filesystem::path dir_;
};

/// Serves `shape` from the AIRY_CACHE_DIR store when present, otherwise
/// builds it and stores the result. Without the variable it just builds.
TraceTable load_or_build(const TraceTable& shape, const std::function<TraceTable()>& build);

}  // namespace airy
