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

#include "treeshift/golden.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "treeshift/errors.hpp"

namespace treeshift::golden {

double q_fixed_point() {
  double lo = 1.0, hi = 2.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid * mid * mid - mid * mid - 1.0 < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

ScalarSequence golden_scalar(unsigned n_max) {
  if (n_max < 1) throw InputError("golden_scalar needs n_max >= 1");
  ScalarSequence out;
  out.p = {BigInt(2), BigInt(5)};
  for (unsigned n = 2; n <= n_max; ++n) {
    const BigInt& prev = out.p[n - 1];
    const BigInt& prev2 = out.p[n - 2];
    BigInt prev2_sq = prev2 * prev2;
    out.p.push_back(prev * prev + prev2_sq * prev2_sq);
  }
  out.q.assign(n_max + 1, std::numeric_limits<double>::quiet_NaN());
  for (unsigned n = 1; n <= n_max; ++n) {
    const BigRational ratio(out.p[n], out.p[n - 1] * out.p[n - 1]);
    out.q[n] = ratio.convert_to<double>();
  }
  out.q_limit = q_fixed_point();
  return out;
}

RootedZero golden_rooted_zero(unsigned n_max, unsigned bits) {
  if (n_max < 1) throw InputError("golden_rooted_zero needs n_max >= 1");
  RootedZero out;
  out.a = {BigInt(1), BigInt(4)};
  for (unsigned n = 1; n < n_max; ++n) {
    BigInt base = out.a[n] + out.a[n - 1] * out.a[n - 1];
    out.a.push_back(base * base);
  }
  for (unsigned n = 4; n <= n_max; ++n) {
    GammaBound bound;
    bound.n = n;
    bound.exponent = (BigInt(1) << (n + 1)) - 1;
    bound.precision_bits = bits != 0 ? bits : (2u << n) + 64u;
    // A_n must convert exactly, so never drop below its bit length.
    const unsigned working =
        std::max(bound.precision_bits, bit_length(out.a[n]) + 64u);
    ScopedPrecision precision(working);
    const BigFloat gamma = (1 + sqrt(BigFloat(5))) / 2;
    const BigFloat power = pow(gamma, BigFloat(bound.exponent));
    const BigFloat count(out.a[n]);
    bound.holds = count >= power;
    bound.log_margin = (log(count) - log(power)).convert_to<double>();
    out.bounds.push_back(bound);
  }
  return out;
}

}  // namespace treeshift::golden
