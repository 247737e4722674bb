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
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "treeshift/errors.hpp"
#include "treeshift/reports.hpp"
#include "treeshift/spectral.hpp"

using namespace treeshift;
namespace ts = treeshift::testing;

namespace {

const double kGamma = (1.0 + std::sqrt(5.0)) / 2.0;
const double kPlastic = 1.3247179572447460;

double rel(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

}  // namespace

TEST_CASE("golden mean Perron data") {
  auto s = analyze_matrix(parse_matrix("11,10"));
  CHECK(s.irreducible);
  CHECK(s.primitive);
  CHECK(s.period == 1);
  CHECK(s.lambda == doctest::Approx(kGamma).epsilon(1e-12));
  CHECK(s.htop == doctest::Approx(0.4812118250596034).epsilon(1e-12));
  CHECK(s.c == doctest::Approx(kGamma).epsilon(1e-10));
  CHECK(upper_bound_U(s) == doctest::Approx(1.5 * std::log(kGamma)).epsilon(1e-10));
  REQUIRE(s.parry);
  CHECK((*s.parry)[0] == doctest::Approx(0.7236067977499789).epsilon(1e-10));
  CHECK(heuristic_Um(s) == doctest::Approx(0.5015660116944085).epsilon(1e-10));
}

TEST_CASE("constant row sums give U = log s") {
  for (const char* text : {"110,011,101", "011,101,110", "110,011,110", "11,11"}) {
    auto s = analyze_matrix(parse_matrix(text));
    CHECK(s.lambda == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(s.c == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(upper_bound_U(s) == doctest::Approx(std::log(2.0)).epsilon(1e-10));
    CHECK(heuristic_Um(s) == doctest::Approx(std::log(2.0)).epsilon(1e-10));
  }
}

TEST_CASE("example with plastic root") {
  auto s = analyze_matrix(parse_matrix("010,001,110"));
  CHECK(s.lambda == doctest::Approx(kPlastic).epsilon(1e-11));
  CHECK(s.htop == doctest::Approx(0.2812).epsilon(1e-3));
  CHECK(s.c == doctest::Approx(1.75).epsilon(0.01));
}

TEST_CASE("reducible matrices") {
  auto a1 = analyze_matrix(parse_matrix("110,101,001"));
  CHECK_FALSE(a1.irreducible);
  CHECK(a1.lambda == doctest::Approx(kGamma).epsilon(1e-10));
  CHECK(std::isinf(upper_bound_U(a1)));
  CHECK_FALSE(a1.parry);
  CHECK_THROWS_AS(heuristic_Um(a1), UndefinedForReducible);

  // A_2 is reducible but its final class carries the spectral radius, so a
  // strictly positive right eigenvector still exists.
  auto a2 = analyze_matrix(parse_matrix("110,011,010"));
  CHECK_FALSE(a2.irreducible);
  CHECK(std::isfinite(a2.c));
  CHECK(upper_bound_U(a2) == doctest::Approx(0.962).epsilon(0.002));
}

TEST_CASE("period and components") {
  CHECK(period(parse_matrix("01,10")) == 2);
  CHECK(period(parse_matrix("11,10")) == 1);
  CHECK(period(parse_matrix("0100,0010,0101,1000")) == 2);
  CHECK(period(parse_matrix("010,001,100")) == 3);
  CHECK(strongly_connected_components(parse_matrix("110,101,001")).size() == 2);
  CHECK(is_irreducible(parse_matrix("010,001,110")));

  auto s = analyze_matrix(parse_matrix("01,10"));
  CHECK(s.irreducible);
  CHECK_FALSE(s.primitive);
  CHECK(s.lambda == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("eigen residuals and positivity on table matrices") {
  for (const auto& entry : reports::reference_table()) {
    auto m = parse_matrix(entry.matrix);
    auto s = analyze_matrix(m);
    CAPTURE(entry.name);
    const double maxrow = static_cast<double>(m.max_row_sum());
    CHECK(s.htop >= 0.0);
    CHECK(s.htop <= std::log(maxrow) + 1e-12);
    CHECK(upper_bound_U(s) >= s.htop - 1e-12);
    if (!s.irreducible) continue;
    const std::size_t d = m.size();
    for (std::size_t i = 0; i < d; ++i) {
      CHECK(s.left[i] > 0.0);
      CHECK(s.right[i] > 0.0);
      double vm = 0.0, mr = 0.0;
      for (std::size_t j = 0; j < d; ++j) {
        vm += s.left[j] * (m(j, i) ? 1.0 : 0.0);
        mr += (m(i, j) ? 1.0 : 0.0) * s.right[j];
      }
      CHECK(rel(vm, s.lambda * s.left[i]) <= 1e-10);
      CHECK(rel(mr, s.lambda * s.right[i]) <= 1e-10);
    }
    REQUIRE(s.parry);
    CHECK(std::abs(std::accumulate(s.parry->begin(), s.parry->end(), 0.0) - 1.0) <= 1e-12);
  }
}

TEST_CASE("lambda agrees with the characteristic polynomial oracle") {
  std::mt19937 rng(7);
  std::vector<ts::Rows> cases;
  for (const auto& entry : reports::reference_table()) cases.push_back(ts::rows_of(parse_matrix(entry.matrix)));
  for (int t = 0; t < 40; ++t) cases.push_back(ts::random_matrix(rng, 2 + t % 3));
  for (const auto& rows : cases) {
    auto m = ts::to_matrix(rows);
    auto s = analyze_matrix(m);
    auto coeffs = ts::leibniz_char_poly(rows);
    auto root = static_cast<double>(ts::largest_real_root(ts::squarefree_part(coeffs), static_cast<long double>(m.max_row_sum())));
    CAPTURE(m.to_string());
    CHECK(std::abs(s.lambda - root) <= 1e-9);

    auto ours = characteristic_polynomial(m);
    REQUIRE(ours.size() == coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) CHECK(ours[i] == coeffs[i]);
  }
}

TEST_CASE("permutation invariance") {
  std::mt19937 rng(11);
  for (const auto& entry : reports::reference_table()) {
    auto m = parse_matrix(entry.matrix);
    std::vector<std::size_t> perm(m.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    auto a = analyze_matrix(m);
    auto b = analyze_matrix(m.permuted(perm));
    CAPTURE(entry.name);
    CHECK(a.lambda == doctest::Approx(b.lambda).epsilon(1e-10));
    if (std::isfinite(a.c)) {
      CHECK(a.c == doctest::Approx(b.c).epsilon(1e-9));
    } else {
      CHECK(std::isinf(b.c));
    }
    CHECK(a.irreducible == b.irreducible);
    if (a.parry) {
      REQUIRE(b.parry);
      CHECK(heuristic_Um(a) == doctest::Approx(heuristic_Um(b)).epsilon(1e-9));
      auto pa = *a.parry, pb = *b.parry;
      std::sort(pa.begin(), pa.end());
      std::sort(pb.begin(), pb.end());
      for (std::size_t i = 0; i < pa.size(); ++i) CHECK(pa[i] == doctest::Approx(pb[i]).epsilon(1e-9));
    }
  }
}

TEST_CASE("high precision Perron root") {
  auto hp = perron_high_precision(parse_matrix("11,10"), 512);
  ScopedPrecision guard(512);
  BigFloat gamma = (1 + boost::multiprecision::sqrt(BigFloat(5))) / 2;
  CHECK(boost::multiprecision::abs(hp.lambda - gamma) < BigFloat("1e-140"));
  BigFloat sum = hp.left[0] + hp.left[1];
  CHECK(boost::multiprecision::abs(sum - 1) < BigFloat("1e-140"));
  // v = (gamma, 1) / (gamma + 1)
  CHECK(boost::multiprecision::abs(hp.left[0] - gamma / (gamma + 1)) < BigFloat("1e-140"));

  auto x5 = perron_high_precision(parse_matrix("110,011,101"), 256);
  CHECK(x5.lambda == 2);
  CHECK_THROWS_AS(perron_high_precision(parse_matrix("110,101,001"), 256), UndefinedForReducible);
}

TEST_CASE("iteration cap is enforced") {
  PowerIterationOptions tight;
  tight.max_iterations = 1;
  tight.tolerance = 1e-15;
  CHECK_THROWS_AS(analyze_matrix(parse_matrix("110,001,111"), tight), NoConvergence);
}
