#pragma once

#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>

#include "mzv/index.hpp"

namespace mzv {

/// Persistent store of evaluated MZVs keyed by (index, digits). A cached
/// value is served only when its stored digits cover the request. File
/// format is line-delimited JSON: {"index":[...],"digits":D,"value":"..."};
/// corrupt lines are skipped with a warning on stderr.
class MZVCache {
 public:
  struct Hit {
    int digits;
    std::string value;
  };

  MZVCache() = default;
  /// Binds to a file and loads any existing entries.
  explicit MZVCache(std::filesystem::path file);

  std::optional<Hit> lookup(const Index& k, int digits) const;
  void store(const Index& k, int digits, std::string value);

  /// Writes all entries to the bound file (no-op when unbound).
  void save() const;
  void save_as(const std::filesystem::path& file) const;

  size_t entry_count() const;
  const std::filesystem::path& path() const { return path_; }

 private:
  void load(const std::filesystem::path& file);

  mutable std::mutex mutex_;
  std::map<Index, std::map<int, std::string>> entries_;
  std::filesystem::path path_;
};

}  // namespace mzv
