// Copyright 2026 The treeshift Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "treeshift/bignum.hpp"
#include "treeshift/matrix.hpp"

namespace treeshift {

enum class CountMode { exact, logdomain };

struct TreeParams {
  unsigned arity = 2;   // k >= 2
  unsigned n_max = 15;  // deepest level computed
};

// Exact mode keeps arbitrary-precision counts up to this level; run()
// continues in the log domain past it.
inline constexpr unsigned kExactLevelCap = 20;

// Number of nodes of the depth-n initial subtree of the k-ary tree,
// (k^(n+1) - 1) / (k - 1).
BigInt node_count(unsigned arity, unsigned depth);

// Per-site normalizer k^(n+1) / (k - 1); equals 2^(n+1) for k = 2.
double level_divisor(unsigned arity, unsigned depth);

// x_i(n): number of M-valid labelings of the depth-n tree with symbol i at
// the root, exactly or as natural logs.
struct CountVector {
  unsigned level = 0;
  CountMode mode = CountMode::logdomain;
  std::vector<BigInt> exact;
  std::vector<double> logs;

  static CountVector initial(std::size_t d, CountMode mode);
  std::size_t size() const {
    return mode == CountMode::exact ? exact.size() : logs.size();
  }
  double log_count(std::size_t i) const;
  double log_total() const;
};

// x_i(n+1) = (sum_j M_ij x_j(n))^k, or y_i(n+1) = k logsumexp_{j: M_ij} y_j(n).
CountVector step(const CountVector& x, const TransitionMatrix& m,
                 unsigned arity);

// log(sum_i exp(v_i)), stable for large arguments.
double log_sum_exp(const std::vector<double>& values);

struct LevelEstimate {
  unsigned n = 0;
  double p_log = 0.0;  // log p(n), p(n) = sum_i x_i(n)
  double h = 0.0;      // p_log / level_divisor
  double h_nodes = 0.0;  // p_log / node_count
  std::optional<double> increment;    // a_n = p_log(n) - k p_log(n-1)
  std::optional<double> accelerated;  // (p_log(n) + a_n/(k-1)) / level_divisor
  std::optional<double> h2;           // log(p_log(n)) / n
  std::vector<double> symbol_logs;    // log x_i(n)
  std::vector<double> symbol_rates;   // log x_i(n) / level_divisor
};

struct EntropySeries {
  unsigned arity = 2;
  CountMode mode = CountMode::logdomain;
  std::vector<LevelEstimate> levels;
  // Exact counts x(n) for every level computed exactly (exact mode only).
  std::vector<std::vector<BigInt>> exact_counts;

  const LevelEstimate& final() const { return levels.back(); }
  double h_estimate() const { return final().h; }
  // Accelerated estimate at the last level (plain h_n when n_max = 0).
  double h_accelerated() const {
    return final().accelerated.value_or(final().h);
  }
  // Experimental: whether h_n is nonincreasing over the computed levels.
  bool monotone_nonincreasing() const;
};

EntropySeries run(const TransitionMatrix& m, const TreeParams& params,
                  CountMode mode = CountMode::logdomain);

// (((k-1)/k) log s, log s) for a symbol with s successors.
std::pair<double, double> kary_bounds(std::size_t s, unsigned arity);

struct EigenvectorBoundLevel {
  unsigned n = 0;
  bool holds = false;
  double log_lhs = 0.0;  // log(x(n) . v)
  double log_rhs = 0.0;  // log(lambda^(2^(n+1)-2) (v . 1))
};

// Dyadic tree only. Checks x(n) . v >= lambda^E (v . 1), E = 2^(n+1) - 2, using exact
// counts against a high-precision Perron root and left eigenvector.
// `bits` = 0 selects max(256, 2^(n_max+1) + 128). Equality (constant row
// sums) is accepted within a relative slack of 2^-(bits/2).
std::vector<EigenvectorBoundLevel> check_eigenvector_bound(
    const TransitionMatrix& m, unsigned n_max, unsigned bits = 0);

}  // namespace treeshift
