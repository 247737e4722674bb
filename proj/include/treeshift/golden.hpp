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

#include <vector>

#include "treeshift/bignum.hpp"

namespace treeshift::golden {

// Golden-mean tree shift on the dyadic tree: p(0) = 2, p(1) = 5,
// p(n+1) = p(n)^2 + p(n-1)^4.
struct ScalarSequence {
  std::vector<BigInt> p;   // p(0..n_max)
  std::vector<double> q;   // q(n) = p(n) / p(n-1)^2 for n >= 1; q[0] is NaN
  double q_limit = 0.0;    // real root of x = 1 + 1/x^2
};

ScalarSequence golden_scalar(unsigned n_max);

// Real root of x^3 - x^2 - 1 = 0.
double q_fixed_point();

struct GammaBound {
  unsigned n = 0;
  BigInt exponent;          // 2^(n+1) - 1
  bool holds = false;       // A_n >= gamma^exponent
  double log_margin = 0.0;  // log A_n - exponent * log gamma
  unsigned precision_bits = 0;
};

// A_n: dyadic golden-mean labelings of depth n with 0 at the root.
// A_0 = 1, A_1 = 4, A_(n+1) = (A_n + A_(n-1)^2)^2.
struct RootedZero {
  std::vector<BigInt> a;
  std::vector<GammaBound> bounds;  // for 4 <= n <= n_max
};

// `bits` = 0 picks 2^(n+1) + 64 bits per level.
RootedZero golden_rooted_zero(unsigned n_max, unsigned bits = 0);

}  // namespace treeshift::golden
