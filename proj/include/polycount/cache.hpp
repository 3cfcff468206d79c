// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "polycount/lattice_enum.hpp"

namespace polycount {

// Resolution order: explicit flag, $POLYCOUNT_CACHE, $XDG_CACHE_HOME/polycount,
// $HOME/.cache/polycount. Returns nullopt when none is available.
std::optional<std::filesystem::path> resolve_cache_dir(const std::optional<std::string>& flag);

// {"version":1,"k":..,"n":..,"m":..,"counts":["1","4","2"]}
std::string cache_entry_json(const LatticeSpec& spec, const std::vector<Int>& counts);
std::vector<Int> parse_cache_entry(const std::string& text, const LatticeSpec& expected);

// One JSON file per (k, n, m). Writes go through a temp file and a rename.
class CountCache {
 public:
  explicit CountCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path path_for(const LatticeSpec& spec) const;
  std::optional<std::vector<Int>> load(const LatticeSpec& spec) const;
  void store(const LatticeSpec& spec, const std::vector<Int>& counts) const;  // throws IoError

 private:
  std::filesystem::path dir_;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Count source backed by the cache. Misses on lattices whose full table is
// cheap (k^min(n,m) <= full_table_states) are computed in full and stored;
// larger lattices fall back to a truncated transfer DP and are not cached.
class CachedSource : public CountSource {
 public:
  CachedSource(const CountCache* cache, EnumLimits limits = {}, std::int64_t full_table_states = 1 << 12)
      : cache_(cache), limits_(limits), full_states_(full_table_states), fallback_(limits) {}

  Int count(const LatticeSpec& spec, int s) override;
  // Full table, from cache or computed (and stored when a cache is set).
  const std::vector<Int>& table(const LatticeSpec& spec);

  int hits() const { return hits_; }
  int stores() const { return stores_; }

 private:
  bool cheap(const LatticeSpec& spec) const;

  const CountCache* cache_;
  EnumLimits limits_;
  std::int64_t full_states_;
  EnumeratingSource fallback_;
  std::map<std::tuple<int, int, int>, std::vector<Int>> tables_;
  int hits_ = 0;
  int stores_ = 0;
};

}  // namespace polycount
