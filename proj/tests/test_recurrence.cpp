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

#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "oracles.hpp"
#include "treeshift/errors.hpp"
#include "treeshift/golden.hpp"
#include "treeshift/recurrence.hpp"
#include "treeshift/reports.hpp"
#include "treeshift/spectral.hpp"

using namespace treeshift;
namespace ts = treeshift::testing;

namespace {

std::vector<BigInt> big(std::initializer_list<long> values) {
  std::vector<BigInt> out;
  for (long v : values) out.emplace_back(v);
  return out;
}

const TransitionMatrix& oscillating() {
  static const TransitionMatrix m = parse_matrix("0100,0010,0101,1000");
  return m;
}

}  // namespace

TEST_CASE("golden mean steps") {
  auto m = parse_matrix("11,10");
  auto x = CountVector::initial(2, CountMode::exact);
  CHECK(x.exact == big({1, 1}));
  x = step(x, m, 2);
  CHECK(x.exact == big({4, 1}));
  x = step(x, m, 2);
  CHECK(x.exact == big({25, 16}));
  CHECK(x.level == 2);

  auto y = CountVector::initial(2, CountMode::logdomain);
  y = step(step(y, m, 2), m, 2);
  CHECK(y.log_count(0) == doctest::Approx(std::log(25.0)).epsilon(1e-14));
  CHECK(y.log_total() == doctest::Approx(std::log(41.0)).epsilon(1e-14));
}

TEST_CASE("oscillating example counts") {
  auto series = run(oscillating(), {2, 3}, CountMode::exact);
  REQUIRE(series.exact_counts.size() == 4);
  CHECK(series.exact_counts[1] == big({1, 1, 4, 1}));
  CHECK(series.exact_counts[2] == big({1, 16, 4, 1}));
  CHECK(series.exact_counts[3] == big({256, 16, 289, 1}));
}

TEST_CASE("oscillating example period-two identities") {
  auto series = run(oscillating(), {2, 12}, CountMode::exact);
  const auto& x = series.exact_counts;
  for (unsigned n = 1; n <= 6; ++n) {
    CAPTURE(n);
    CHECK(x[2 * n][0] == x[2 * n - 1][0]);
    CHECK(x[2 * n][2] == x[2 * n - 1][2]);
    CHECK(x[2 * n - 1][1] == x[2 * n - 2][1]);
    CHECK(x[2 * n - 1][3] == x[2 * n - 2][3]);
  }
}

TEST_CASE("oscillating example limsup is twice liminf") {
  auto series = run(oscillating(), {2, 15});
  const auto& a = series.levels[14].symbol_rates;
  const auto& b = series.levels[15].symbol_rates;
  for (std::size_t i = 0; i < 4; ++i) {
    CAPTURE(i);
    const double hi = std::max(a[i], b[i]);
    const double lo = std::min(a[i], b[i]);
    REQUIRE(lo > 0.0);
    CHECK(std::abs(hi / lo - 2.0) <= 0.2);
  }
}

TEST_CASE("single symbol and full shifts") {
  auto one = parse_matrix("1");
  for (unsigned k : {2u, 3u, 5u}) {
    auto s = run(one, {k, 8}, CountMode::exact);
    for (const auto& x : s.exact_counts) CHECK(x == big({1}));
  }

  auto full = parse_matrix("11,11");
  auto s = run(full, {2, 6}, CountMode::exact);
  for (unsigned n = 0; n <= 6; ++n) {
    BigInt expected = BigInt(1) << ((1u << (n + 1)) - 1);
    CHECK(s.exact_counts[n][0] + s.exact_counts[n][1] == expected);
  }
  auto logs = run(full, {2, 15});
  for (const auto& level : logs.levels) {
    const double nodes = std::ldexp(1.0, static_cast<int>(level.n) + 1);
    CHECK(level.h == doctest::Approx(std::log(2.0) * (nodes - 1) / nodes).epsilon(1e-12));
    if (level.accelerated) CHECK(std::abs(*level.accelerated - std::log(2.0)) <= 1e-13);
  }

  auto full3 = parse_matrix("111,111,111");
  for (unsigned k : {2u, 3u, 4u}) {
    auto r = run(full3, {k, 6});
    CHECK(std::abs(r.h_accelerated() - std::log(3.0)) <= 1e-12);
  }
}

TEST_CASE("exact and log-domain agree on table matrices") {
  for (const auto& entry : reports::reference_table()) {
    auto m = parse_matrix(entry.matrix);
    auto exact = run(m, {2, 18}, CountMode::exact);
    auto logs = run(m, {2, 18});
    CAPTURE(entry.name);
    for (unsigned n = 0; n <= 18; ++n) {
      for (std::size_t i = 0; i < m.size(); ++i) {
        const double truth = log_of(exact.exact_counts[n][i]);
        const double y = logs.levels[n].symbol_logs[i];
        CHECK(std::abs(y - truth) <= 1e-6 * std::max(1.0, truth));
      }
    }
  }
}

TEST_CASE("recurrence agrees with brute force") {
  for (const auto& entry : reports::reference_table()) {
    auto m = parse_matrix(entry.matrix);
    auto rows = ts::rows_of(m);
    auto exact = run(m, {2, 3}, CountMode::exact);
    for (unsigned n = 0; n <= 3; ++n) {
      auto counts = ts::naive_counts(rows, 2, n);
      for (std::size_t i = 0; i < m.size(); ++i) CHECK(exact.exact_counts[n][i] == counts[i]);
    }
  }
  auto g = parse_matrix("11,10");
  auto k3 = run(g, {3, 2}, CountMode::exact);
  for (unsigned n = 0; n <= 2; ++n) {
    auto counts = ts::naive_counts(ts::rows_of(g), 3, n);
    CHECK(k3.exact_counts[n][0] == counts[0]);
    CHECK(k3.exact_counts[n][1] == counts[1]);
  }
}

TEST_CASE("eigenvector inequality on irreducible table matrices") {
  for (const auto& entry : reports::reference_table()) {
    auto m = parse_matrix(entry.matrix);
    if (!is_irreducible(m)) continue;
    CAPTURE(entry.name);
    auto levels = check_eigenvector_bound(m, 12);
    REQUIRE(levels.size() == 13);
    for (const auto& level : levels) {
      CAPTURE(level.n);
      CHECK(level.holds);
      CHECK(level.log_lhs >= level.log_rhs - 1e-9);
    }
  }
}

TEST_CASE("normalizations differ by the exact correction") {
  auto m = parse_matrix("011,111,101");
  for (unsigned k : {2u, 3u}) {
    auto s = run(m, {k, 12});
    for (const auto& level : s.levels) {
      const double kn = std::pow(static_cast<double>(k), level.n + 1);
      const double expected = level.p_log * (k - 1) / (kn * (kn - 1));
      CHECK(level.h_nodes - level.h == doctest::Approx(expected).epsilon(1e-9));
      CHECK(level.h >= 0.0);
    }
    for (std::size_t i = 1; i < s.levels.size(); ++i) CHECK(s.levels[i].p_log >= s.levels[i - 1].p_log);
  }
}

TEST_CASE("per-symbol rates converge for primitive matrices") {
  for (const auto& entry : reports::reference_table()) {
    auto m = parse_matrix(entry.matrix);
    auto spectral = analyze_matrix(m);
    if (!spectral.primitive) continue;
    auto s = run(m, {2, 15});
    auto spread = [&](unsigned n) {
      const auto& r = s.levels[n].symbol_rates;
      return *std::max_element(r.begin(), r.end()) - *std::min_element(r.begin(), r.end());
    };
    CAPTURE(entry.name);
    const double early = spread(5), late = spread(15);
    CHECK(late <= early);
    if (early > 0.0) CHECK(late < early);
  }
}

TEST_CASE("golden mean vector recurrence matches the scalar sequences") {
  auto g = parse_matrix("11,10");
  auto exact = run(g, {2, 18}, CountMode::exact);
  auto scalar = golden::golden_scalar(18);
  auto rooted = golden::golden_rooted_zero(18, 64);
  for (unsigned n = 0; n <= 18; ++n) {
    CAPTURE(n);
    CHECK(exact.exact_counts[n][0] + exact.exact_counts[n][1] == scalar.p[n]);
    CHECK(exact.exact_counts[n][0] == rooted.a[n]);
  }
}

TEST_CASE("acceleration settles faster than the raw estimate") {
  // h_acc(n) - h_acc(n-1) = 2 D(n) - D(n-1) with D(n) = h_n - h_(n-1), so the
  // step bound needs D to shrink roughly geometrically. A series that has
  // already converged super-exponentially (A_2) only carries the lag term.
  for (const auto& entry : reports::reference_table()) {
    auto s = run(parse_matrix(entry.matrix), {2, 15});
    CAPTURE(entry.name);
    for (unsigned n = 8; n <= 15; ++n) {
      CAPTURE(n);
      const double acc = std::abs(*s.levels[n].accelerated - *s.levels[n - 1].accelerated);
      const double raw = std::abs(s.levels[n].h - s.levels[n - 1].h);
      const double before = std::abs(s.levels[n - 1].h - s.levels[n - 2].h);
      if (before < 1e-6) {
        CHECK(acc <= before + 1e-15);
      } else {
        CHECK(acc <= raw + 1e-15);
      }
    }
  }
}

TEST_CASE("golden mean estimates") {
  auto s = run(parse_matrix("11,10"), {2, 15});
  CHECK(std::abs(s.final().h - 0.509) <= 5e-3);
  CHECK(std::abs(s.h_accelerated() - 0.509) <= 1e-3);
  CHECK(std::abs(*s.final().h2 - std::log(2.0)) <= 0.01);
  CHECK(std::abs(std::exp(-*s.final().increment) - 0.6823278) <= 1e-3);

  auto x5 = run(parse_matrix("110,011,101"), {2, 15});
  CHECK(x5.h_accelerated() == doctest::Approx(std::log(2.0)).epsilon(1e-9));
}

TEST_CASE("k-ary bounds") {
  auto [lo, hi] = kary_bounds(2, 2);
  CHECK(lo == doctest::Approx(0.3466).epsilon(1e-4));
  CHECK(hi == doctest::Approx(0.6931).epsilon(1e-4));
  auto [lo10, hi10] = kary_bounds(2, 10);
  CHECK(lo10 == doctest::Approx(0.9 * std::log(2.0)));
  CHECK(hi10 == doctest::Approx(std::log(2.0)));
  auto [lo1, hi1] = kary_bounds(1, 7);
  CHECK(lo1 == 0.0);
  CHECK(hi1 == 0.0);
}

TEST_CASE("helpers") {
  CHECK(node_count(2, 3) == 15);
  CHECK(node_count(3, 2) == 13);
  CHECK(level_divisor(2, 3) == 16.0);
  CHECK(level_divisor(3, 1) == 4.5);
  CHECK(log_sum_exp({0.0, 0.0}) == doctest::Approx(std::log(2.0)));
  CHECK(log_sum_exp({1000.0, 1000.0}) == doctest::Approx(1000.0 + std::log(2.0)));
  CHECK_THROWS_AS(run(parse_matrix("11,10"), {1, 3}), InputError);
}

TEST_CASE("exact mode hands over to logs past the cap") {
  auto s = run(parse_matrix("11,10"), {2, kExactLevelCap + 2}, CountMode::exact);
  CHECK(s.exact_counts.size() == kExactLevelCap + 1);
  CHECK(s.levels.size() == kExactLevelCap + 3);
}
