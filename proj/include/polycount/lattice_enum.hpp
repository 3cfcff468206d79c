// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <tuple>
#include <vector>

#include "polycount/numeric.hpp"

namespace polycount {

// n rows (width), m columns (length), polymers of k sites. Boundaries are open.
struct LatticeSpec {
  int n = 0;
  int m = 0;
  int k = 2;

  void validate() const;  // throws ParameterError
  LatticeSpec transposed() const { return {m, n, k}; }
  int capacity() const { return (n * m) / k; }
};

struct EnumLimits {
  // Cap on k^w where w = min(n, m), the transfer-state alphabet size.
  std::uint64_t max_states = std::uint64_t{1} << 24;
  // Cap on C(P, s) for the brute-force oracle.
  double brute_work_cap = 5e7;
};

struct CountTable {
  LatticeSpec spec;
  std::vector<Int> counts;  // counts[s] = a(n, m, k, s), s = 0..capacity

  int s_max() const { return static_cast<int>(counts.size()) - 1; }
  Int at(int s) const;  // 0 beyond s_max
};

// Number of candidate k-mer placements n*max(0,m-k+1) + m*max(0,n-k+1).
std::int64_t candidate_positions(const LatticeSpec& spec);

Int count_configurations(const LatticeSpec& spec, int s, const EnumLimits& limits = {});

CountTable count_polynomial(const LatticeSpec& spec, const EnumLimits& limits = {});

// Coefficients for s = 0..s_cap only (cheaper than the full polynomial).
std::vector<Int> count_truncated(const LatticeSpec& spec, int s_cap, const EnumLimits& limits = {});

Int brute_force_count(const LatticeSpec& spec, int s, const EnumLimits& limits = {});

// Source of a(n, m, k, s) values for the verification modules.
class CountSource {
 public:
  virtual ~CountSource() = default;
  virtual Int count(const LatticeSpec& spec, int s) = 0;
};

// Runs the transfer DP on demand and memoizes truncated tables per lattice.
class EnumeratingSource : public CountSource {
 public:
  explicit EnumeratingSource(EnumLimits limits = {}) : limits_(limits) {}
  Int count(const LatticeSpec& spec, int s) override;

 private:
  EnumLimits limits_;
  std::mutex mu_;
  std::map<std::tuple<int, int, int>, std::vector<Int>> memo_;
};

}  // namespace polycount
