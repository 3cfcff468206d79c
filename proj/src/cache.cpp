// SPDX-License-Identifier: Apache-2.0
#include "polycount/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "polycount/errors.hpp"

namespace polycount {

namespace fs = std::filesystem;

std::optional<fs::path> resolve_cache_dir(const std::optional<std::string>& flag) {
  if (flag && !flag->empty()) return fs::path(*flag);
  if (const char* env = std::getenv("POLYCOUNT_CACHE"); env && *env) return fs::path(env);
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return fs::path(xdg) / "polycount";
  if (const char* home = std::getenv("HOME"); home && *home) return fs::path(home) / ".cache" / "polycount";
  return std::nullopt;
}

std::string cache_entry_json(const LatticeSpec& spec, const std::vector<Int>& counts) {
  nlohmann::ordered_json j;
  j["version"] = 1;
  j["k"] = spec.k;
  j["n"] = spec.n;
  j["m"] = spec.m;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : counts) arr.push_back(c.get_str());
  j["counts"] = std::move(arr);
  return j.dump() + "\n";
}

std::vector<Int> parse_cache_entry(const std::string& text, const LatticeSpec& expected) {
  auto j = nlohmann::json::parse(text);
  if (j.at("version").get<int>() != 1) throw IoError("unsupported cache entry version");
  if (j.at("k").get<int>() != expected.k || j.at("n").get<int>() != expected.n || j.at("m").get<int>() != expected.m)
    throw IoError("cache entry does not match its key");
  std::vector<Int> out;
  for (const auto& c : j.at("counts")) out.emplace_back(c.get<std::string>());
  return out;
}

fs::path CountCache::path_for(const LatticeSpec& spec) const {
  return dir_ / ("k" + std::to_string(spec.k) + "_n" + std::to_string(spec.n) + "_m" + std::to_string(spec.m) + ".json");
}

std::optional<std::vector<Int>> CountCache::load(const LatticeSpec& spec) const {
  std::ifstream in(path_for(spec), std::ios::binary);
  if (!in) return std::nullopt;
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_cache_entry(buf.str(), spec);
  } catch (const std::exception&) {
    return std::nullopt;  // corrupt or foreign entry; recompute and overwrite
  }
}

void CountCache::store(const LatticeSpec& spec, const std::vector<Int>& counts) const {
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec) throw IoError("cannot create cache directory " + dir_.string() + ": " + ec.message());
  auto target = path_for(spec);
  thread_local std::mt19937_64 rng{std::random_device{}()};
  auto tmp = target;
  tmp += ".tmp" + std::to_string(rng());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + tmp.string());
    out << cache_entry_json(spec, counts);
    if (!out.flush()) throw IoError("cannot write " + tmp.string());
  }
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw IoError("cannot rename into " + target.string());
  }
}

bool CachedSource::cheap(const LatticeSpec& spec) const {
  std::int64_t states = 1;
  for (int r = 0; r < std::min(spec.n, spec.m); ++r) {
    states *= spec.k;
    if (states > full_states_) return false;
  }
  return true;
}

const std::vector<Int>& CachedSource::table(const LatticeSpec& spec) {
  spec.validate();
  auto key = std::make_tuple(spec.k, spec.n, spec.m);
  if (auto it = tables_.find(key); it != tables_.end()) return it->second;
  if (cache_) {
    if (auto hit = cache_->load(spec)) {
      ++hits_;
      return tables_[key] = std::move(*hit);
    }
  }
  auto counts = count_polynomial(spec, limits_).counts;
  if (cache_) {
    cache_->store(spec, counts);
    ++stores_;
  }
  return tables_[key] = std::move(counts);
}

Int CachedSource::count(const LatticeSpec& spec, int s) {
  spec.validate();
  auto key = std::make_tuple(spec.k, spec.n, spec.m);
  bool known = tables_.count(key) || (cache_ && std::filesystem::exists(cache_->path_for(spec)));
  if (known || cheap(spec)) {
    const auto& t = table(spec);
    return s >= 0 && s < static_cast<int>(t.size()) ? t[s] : Int(0);
  }
  return fallback_.count(spec, s);
}

}  // namespace polycount
