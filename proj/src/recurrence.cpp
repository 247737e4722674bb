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

#include "treeshift/recurrence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "treeshift/errors.hpp"
#include "treeshift/spectral.hpp"

namespace treeshift {

BigInt node_count(unsigned arity, unsigned depth) {
  BigInt power = 1;
  for (unsigned i = 0; i <= depth; ++i) power *= arity;
  return (power - 1) / (arity - 1);
}

double level_divisor(unsigned arity, unsigned depth) {
  return std::pow(static_cast<double>(arity), depth + 1.0) / (arity - 1.0);
}

double log_sum_exp(const std::vector<double>& values) {
  if (values.empty()) return -std::numeric_limits<double>::infinity();
  const double top = *std::max_element(values.begin(), values.end());
  if (!std::isfinite(top)) return top;
  double sum = 0.0;
  for (double value : values) sum += std::exp(value - top);
  return top + std::log(sum);
}

CountVector CountVector::initial(std::size_t d, CountMode mode) {
  CountVector x;
  x.mode = mode;
  if (mode == CountMode::exact) {
    x.exact.assign(d, BigInt(1));
  } else {
    x.logs.assign(d, 0.0);
  }
  return x;
}

double CountVector::log_count(std::size_t i) const {
  return mode == CountMode::exact ? log_of(exact[i]) : logs[i];
}

double CountVector::log_total() const {
  if (mode == CountMode::exact) {
    BigInt total = 0;
    for (const auto& value : exact) total += value;
    return log_of(total);
  }
  return log_sum_exp(logs);
}

CountVector step(const CountVector& x, const TransitionMatrix& m,
                 unsigned arity) {
  const std::size_t d = m.size();
  if (x.size() != d) throw InputError("count vector dimension mismatch");
  CountVector next;
  next.level = x.level + 1;
  next.mode = x.mode;
  if (x.mode == CountMode::exact) {
    next.exact.resize(d);
    for (std::size_t i = 0; i < d; ++i) {
      BigInt sum = 0;
      for (std::size_t j = 0; j < d; ++j) {
        if (m(i, j)) sum += x.exact[j];
      }
      if (sum == 0) throw EmptySuccessorSet("symbol has no successors");
      next.exact[i] = boost::multiprecision::pow(sum, arity);
    }
  } else {
    next.logs.resize(d);
    std::vector<double> terms;
    for (std::size_t i = 0; i < d; ++i) {
      terms.clear();
      for (std::size_t j = 0; j < d; ++j) {
        if (m(i, j)) terms.push_back(x.logs[j]);
      }
      if (terms.empty()) throw EmptySuccessorSet("symbol has no successors");
      next.logs[i] = arity * log_sum_exp(terms);
    }
  }
  return next;
}

bool EntropySeries::monotone_nonincreasing() const {
  for (std::size_t i = 1; i < levels.size(); ++i) {
    if (levels[i].h > levels[i - 1].h) return false;
  }
  return true;
}

namespace {

LevelEstimate estimate_level(const CountVector& x, unsigned arity,
                             const LevelEstimate* previous) {
  LevelEstimate level;
  level.n = x.level;
  level.p_log = x.log_total();
  const double divisor = level_divisor(arity, x.level);
  level.h = level.p_log / divisor;
  level.h_nodes = level.p_log / node_count(arity, x.level).convert_to<double>();
  for (std::size_t i = 0; i < x.size(); ++i) {
    level.symbol_logs.push_back(x.log_count(i));
    level.symbol_rates.push_back(level.symbol_logs.back() / divisor);
  }
  if (previous != nullptr) {
    const double a = level.p_log - arity * previous->p_log;
    level.increment = a;
    level.accelerated = (level.p_log + a / (arity - 1.0)) / divisor;
    level.h2 = std::log(level.p_log) / level.n;
  }
  return level;
}

}  // namespace

EntropySeries run(const TransitionMatrix& m, const TreeParams& params,
                  CountMode mode) {
  if (params.arity < 2) throw InputError("tree arity must be at least 2");
  EntropySeries series;
  series.arity = params.arity;
  series.mode = mode;
  auto x = CountVector::initial(m.size(), mode);
  for (unsigned n = 0;; ++n) {
    if (x.mode == CountMode::exact) series.exact_counts.push_back(x.exact);
    const LevelEstimate* previous =
        series.levels.empty() ? nullptr : &series.levels.back();
    series.levels.push_back(estimate_level(x, params.arity, previous));
    if (n == params.n_max) break;
    if (x.mode == CountMode::exact && x.level >= kExactLevelCap) {
      CountVector logs;
      logs.level = x.level;
      logs.mode = CountMode::logdomain;
      for (std::size_t i = 0; i < x.size(); ++i) logs.logs.push_back(x.log_count(i));
      x = std::move(logs);
    }
    x = step(x, m, params.arity);
  }
  return series;
}

std::pair<double, double> kary_bounds(std::size_t s, unsigned arity) {
  if (s < 1) throw InputError("successor count must be at least 1");
  if (arity < 2) throw InputError("tree arity must be at least 2");
  const double log_s = std::log(static_cast<double>(s));
  return {(arity - 1.0) / arity * log_s, log_s};
}

std::vector<EigenvectorBoundLevel> check_eigenvector_bound(
    const TransitionMatrix& m, unsigned n_max, unsigned bits) {
  if (bits == 0) bits = std::max(256u, (2u << n_max) + 128u);
  const auto series = run(m, {2, std::min(n_max, kExactLevelCap)}, CountMode::exact);
  ScopedPrecision precision(bits + 32);
  const auto perron = perron_high_precision(m, bits);
  const std::size_t d = m.size();

  BigFloat v_total = 0;
  for (const auto& value : perron.left) v_total += value;
  const BigFloat slack = 1 - boost::multiprecision::ldexp(BigFloat(1), -static_cast<int>(bits / 2));

  std::vector<EigenvectorBoundLevel> out;
  for (unsigned n = 0; n < series.exact_counts.size(); ++n) {
    BigFloat lhs = 0;
    for (std::size_t i = 0; i < d; ++i) {
      lhs += BigFloat(series.exact_counts[n][i]) * perron.left[i];
    }
    const BigInt exponent = (BigInt(1) << (n + 1)) - 2;
    const BigFloat rhs = pow(perron.lambda, BigFloat(exponent)) * v_total;
    EigenvectorBoundLevel level;
    level.n = n;
    level.holds = lhs >= rhs * slack;
    level.log_lhs = log(lhs).convert_to<double>();
    level.log_rhs = log(rhs).convert_to<double>();
    out.push_back(level);
  }
  return out;
}

}  // namespace treeshift
