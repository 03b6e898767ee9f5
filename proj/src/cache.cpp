#include "mzv/cache.hpp"

#include <json.hpp>

#include <fstream>
#include <iostream>

namespace mzv {

MZVCache::MZVCache(std::filesystem::path file) : path_(std::move(file)) {
  if (std::filesystem::exists(path_)) load(path_);
}

void MZVCache::load(const std::filesystem::path& file) {
  std::ifstream in(file);
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      auto j = nlohmann::json::parse(line);
      std::vector<int> parts = j.at("index").get<std::vector<int>>();
      int digits = j.at("digits").get<int>();
      std::string value = j.at("value").get<std::string>();
      if (digits < 1) throw std::runtime_error("bad digits");
      Index k(parts);
      entries_[k][digits] = std::move(value);
    } catch (const std::exception& e) {
      std::cerr << "mzv: skipping corrupt cache line " << lineno << " in "
                << file.string() << ": " << e.what() << "\n";
    }
  }
}

std::optional<MZVCache::Hit> MZVCache::lookup(const Index& k,
                                              int digits) const {
  std::scoped_lock lock(mutex_);
  auto it = entries_.find(k);
  if (it == entries_.end()) return std::nullopt;
  auto jt = it->second.lower_bound(digits);
  if (jt == it->second.end()) return std::nullopt;
  return Hit{jt->first, jt->second};
}

void MZVCache::store(const Index& k, int digits, std::string value) {
  std::scoped_lock lock(mutex_);
  entries_[k][digits] = std::move(value);
}

void MZVCache::save() const {
  if (!path_.empty()) save_as(path_);
}

void MZVCache::save_as(const std::filesystem::path& file) const {
  std::scoped_lock lock(mutex_);
  if (file.has_parent_path())
    std::filesystem::create_directories(file.parent_path());
  std::ofstream out(file, std::ios::trunc);
  for (const auto& [k, by_digits] : entries_) {
    for (const auto& [digits, value] : by_digits) {
      nlohmann::json j;
      j["index"] = k.parts();
      j["digits"] = digits;
      j["value"] = value;
      out << j.dump() << "\n";
    }
  }
}

size_t MZVCache::entry_count() const {
  std::scoped_lock lock(mutex_);
  size_t n = 0;
  for (const auto& [k, m] : entries_) n += m.size();
  return n;
}

}  // namespace mzv
