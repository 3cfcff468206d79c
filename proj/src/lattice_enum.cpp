// SPDX-License-Identifier: Apache-2.0
#include "polycount/lattice_enum.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "polycount/errors.hpp"

namespace polycount {

namespace {

using Poly = std::vector<Int>;
using Frontier = std::unordered_map<std::uint64_t, Poly>;

void accumulate(Frontier& into, std::uint64_t state, const Poly& p, int shift, int cap) {
  if (shift > cap) return;
  std::size_t len = std::min(p.size(), static_cast<std::size_t>(cap + 1 - shift));
  bool any = false;
  for (std::size_t i = 0; i < len; ++i) {
    if (p[i] != 0) {
      any = true;
      break;
    }
  }
  if (!any) return;
  Poly& dst = into[state];
  if (dst.size() < len + shift) dst.resize(len + shift);
  for (std::size_t i = 0; i < len; ++i) dst[i + shift] += p[i];
}

std::vector<Int> transfer(const LatticeSpec& spec, int s_cap, const EnumLimits& limits) {
  const int w = std::min(spec.n, spec.m);
  const int len = std::max(spec.n, spec.m);
  const int k = spec.k;

  std::vector<std::uint64_t> pw(w + 1, 1);
  for (int r = 1; r <= w; ++r) {
    if (pw[r - 1] > limits.max_states / static_cast<std::uint64_t>(k))
      throw ResourceError("transfer state space k^" + std::to_string(w) + " exceeds cap of " +
                          std::to_string(limits.max_states) + " states");
    pw[r] = pw[r - 1] * static_cast<std::uint64_t>(k);
  }

  std::vector<Frontier> fr(w + 1);
  fr[0][0] = Poly{Int(1)};
  for (int c = 0; c < len; ++c) {
    for (int r = 0; r < w; ++r) {
      for (const auto& [st, p] : fr[r]) {
        const auto d = static_cast<int>((st / pw[r]) % k);
        if (d > 0) {
          accumulate(fr[r + 1], st - pw[r], p, 0, s_cap);
          continue;
        }
        accumulate(fr[r + 1], st, p, 0, s_cap);
        if (c + k <= len) accumulate(fr[r + 1], st + static_cast<std::uint64_t>(k - 1) * pw[r], p, 1, s_cap);
        if (r + k <= w) {
          bool clear = true;
          for (int q = r + 1; q < r + k && clear; ++q) clear = ((st / pw[q]) % k) == 0;
          if (clear) accumulate(fr[r + k], st, p, 1, s_cap);
        }
      }
      fr[r].clear();
    }
    fr[0] = std::move(fr[w]);
    fr[w] = Frontier{};
  }

  std::vector<Int> out(s_cap + 1);
  for (const auto& [st, p] : fr[0]) {
    for (std::size_t i = 0; i < p.size(); ++i) out[i] += p[i];
  }
  return out;
}

}  // namespace

void LatticeSpec::validate() const {
  if (n < 1 || m < 1) throw ParameterError("lattice dimensions must be positive");
  if (k < 2) throw ParameterError("polymer length k must be at least 2");
}

Int CountTable::at(int s) const {
  if (s < 0 || s > s_max()) return 0;
  return counts[s];
}

std::int64_t candidate_positions(const LatticeSpec& spec) {
  std::int64_t n = spec.n, m = spec.m, k = spec.k;
  return n * std::max<std::int64_t>(0, m - k + 1) + m * std::max<std::int64_t>(0, n - k + 1);
}

std::vector<Int> count_truncated(const LatticeSpec& spec, int s_cap, const EnumLimits& limits) {
  spec.validate();
  if (s_cap < 0) throw ParameterError("polymer number must be nonnegative");
  return transfer(spec, s_cap, limits);
}

Int count_configurations(const LatticeSpec& spec, int s, const EnumLimits& limits) {
  spec.validate();
  if (s < 0) throw ParameterError("polymer number must be nonnegative");
  if (s > spec.capacity()) return 0;
  return transfer(spec, s, limits)[s];
}

CountTable count_polynomial(const LatticeSpec& spec, const EnumLimits& limits) {
  spec.validate();
  return CountTable{spec, transfer(spec, spec.capacity(), limits)};
}

Int brute_force_count(const LatticeSpec& spec, int s, const EnumLimits& limits) {
  spec.validate();
  if (s < 0) throw ParameterError("polymer number must be nonnegative");
  const std::int64_t P = candidate_positions(spec);
  if (s > P) return 0;
  if (Int(binom(static_cast<long>(P), s)) > Int(limits.brute_work_cap))
    throw ResourceError("brute-force work C(" + std::to_string(P) + "," + std::to_string(s) +
                        ") exceeds cap");

  const int n = spec.n, m = spec.m, k = spec.k;
  std::vector<std::vector<int>> cand;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c + k <= m; ++c) {
      std::vector<int> cells;
      for (int q = 0; q < k; ++q) cells.push_back(r * m + c + q);
      cand.push_back(std::move(cells));
    }
  for (int c = 0; c < m; ++c)
    for (int r = 0; r + k <= n; ++r) {
      std::vector<int> cells;
      for (int q = 0; q < k; ++q) cells.push_back((r + q) * m + c);
      cand.push_back(std::move(cells));
    }

  std::vector<char> used(static_cast<std::size_t>(n) * m, 0);
  std::uint64_t total = 0;
  const int ncand = static_cast<int>(cand.size());
  auto rec = [&](auto&& self, int from, int left) -> void {
    if (left == 0) {
      ++total;
      return;
    }
    for (int i = from; i <= ncand - left; ++i) {
      const auto& cells = cand[i];
      bool free = std::none_of(cells.begin(), cells.end(), [&](int x) { return used[x] != 0; });
      if (!free) continue;
      for (int x : cells) used[x] = 1;
      self(self, i + 1, left - 1);
      for (int x : cells) used[x] = 0;
    }
  };
  rec(rec, 0, s);
  return Int(static_cast<unsigned long>(total));
}

Int EnumeratingSource::count(const LatticeSpec& spec, int s) {
  spec.validate();
  if (s < 0) throw ParameterError("polymer number must be nonnegative");
  const int cap = spec.capacity();
  if (s > cap) return 0;
  auto key = std::make_tuple(spec.k, std::min(spec.n, spec.m), std::max(spec.n, spec.m));
  std::lock_guard<std::mutex> lock(mu_);
  auto& table = memo_[key];
  if (static_cast<int>(table.size()) <= s) {
    int want = std::min(cap, std::max(s, 2 * static_cast<int>(table.size())));
    table = transfer(spec, want, limits_);
  }
  return table[s];
}

}  // namespace polycount
