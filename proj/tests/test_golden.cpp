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

#include <cmath>

#include "oracles.hpp"
#include "treeshift/golden.hpp"

using namespace treeshift;
namespace ts = treeshift::testing;

TEST_CASE("scalar sequence") {
  auto s = golden::golden_scalar(6);
  const std::vector<BigInt> expected{
      BigInt(2),
      BigInt(5),
      BigInt(41),
      BigInt(2306),
      BigInt(8143397),
      BigInt("94592167328105"),
      BigInt("13345346031444632841427643906")};
  CHECK(s.p == expected);
  CHECK(s.p[4] == s.p[3] * s.p[3] + s.p[2] * s.p[2] * s.p[2] * s.p[2]);
  CHECK(std::isnan(s.q[0]));
  CHECK(s.q[1] == 1.25);
  CHECK(s.q[2] == doctest::Approx(41.0 / 25.0).epsilon(1e-15));
  CHECK(s.q[3] == doctest::Approx(2306.0 / 1681.0).epsilon(1e-15));
  CHECK(s.q[4] == doctest::Approx(8143397.0 / (2306.0 * 2306.0)).epsilon(1e-15));
}

TEST_CASE("q limit is the real root of x = 1 + 1/x^2") {
  const double x = golden::q_fixed_point();
  CHECK(x == doctest::Approx(1.46557).epsilon(1e-5));
  CHECK(std::abs(x - 1.0 - 1.0 / (x * x)) <= 1e-14);
}

TEST_CASE("q alternates and approaches its limit") {
  auto s = golden::golden_scalar(21);
  for (unsigned n = 3; n <= 15; ++n) {
    const double now = s.q[n] - s.q[n - 1];
    const double before = s.q[n - 1] - s.q[n - 2];
    CAPTURE(n);
    CHECK(now * before < 0.0);
  }
  // The error shrinks geometrically; it crosses 1e-4 only around n = 20.
  for (unsigned n = 6; n <= 21; ++n) {
    CHECK(std::abs(s.q[n] - s.q_limit) < std::abs(s.q[n - 2] - s.q_limit));
  }
  CHECK(std::abs(s.q[21] - s.q_limit) < 1e-4);
}

TEST_CASE("A-sequence prefix and gamma bound") {
  auto r = golden::golden_rooted_zero(10);
  const std::vector<BigInt> prefix{1, 4, 25, 1681, 5317636};
  for (unsigned n = 0; n < prefix.size(); ++n) CHECK(r.a[n] == prefix[n]);
  for (unsigned n = 1; n < 10; ++n) {
    const BigInt base = r.a[n] + r.a[n - 1] * r.a[n - 1];
    CHECK(r.a[n + 1] == base * base);
  }
  REQUIRE(r.bounds.size() == 7);
  for (const auto& b : r.bounds) {
    CAPTURE(b.n);
    const std::size_t e = (std::size_t{1} << (b.n + 1)) - 1;
    CHECK(b.exponent == e);
    CHECK(b.precision_bits >= (1u << (b.n + 1)));
    CHECK(b.holds);
    CHECK(b.holds == ts::at_least_gamma_power(r.a[b.n], e));
    CHECK(b.log_margin > 0.0);
  }
  // gamma^31 is about 2.99e6, well below A_4.
  CHECK(ts::at_least_gamma_power(BigInt(5317636), 31));
  CHECK_FALSE(ts::at_least_gamma_power(BigInt(2000000), 31));
}

TEST_CASE("integer gamma oracle agrees with floating point away from ties") {
  const double log_gamma = std::log((1 + std::sqrt(5.0)) / 2);
  for (long a : {1000L, 1364L, 1365L, 1681L, 3000000L}) {
    for (std::size_t e : {15u, 31u}) {
      CHECK(ts::at_least_gamma_power(BigInt(a), e) == (std::log(double(a)) >= e * log_gamma));
    }
  }
}
