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

// Independent oracles used only by the tests. Nothing here calls into the
// library code paths it is used to check.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "treeshift/bignum.hpp"
#include "treeshift/matrix.hpp"

namespace treeshift::testing {

using Rows = std::vector<std::vector<int>>;

inline Rows rows_of(const TransitionMatrix& m) {
  Rows rows(m.size(), std::vector<int>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) rows[i][j] = m(i, j) ? 1 : 0;
  }
  return rows;
}

// det(xI - M) coefficients (highest first) by the Leibniz expansion over all
// permutations, with polynomial entries. Practical for d <= 6.
inline std::vector<long long> leibniz_char_poly(const Rows& m) {
  const std::size_t d = m.size();
  std::vector<std::size_t> perm(d);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<long long> total(d + 1, 0);  // total[k] = coeff of x^(d-k)
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = i + 1; j < d; ++j) inversions += perm[i] > perm[j];
    }
    // product over i of (x delta_{i,perm i} - m[i][perm i])
    std::vector<long long> prod{1};  // coefficients, lowest degree first
    for (std::size_t i = 0; i < d; ++i) {
      const long long constant = -m[i][perm[i]];
      const long long linear = perm[i] == i ? 1 : 0;
      std::vector<long long> next(prod.size() + 1, 0);
      for (std::size_t k = 0; k < prod.size(); ++k) {
        next[k] += prod[k] * constant;
        next[k + 1] += prod[k] * linear;
      }
      prod = std::move(next);
    }
    const long long sign = inversions % 2 == 0 ? 1 : -1;
    for (std::size_t k = 0; k < prod.size() && k <= d; ++k) total[d - k] += sign * prod[k];
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// Square-free part p / gcd(p, p') over the rationals, scaled back to
// integers. Repeated roots would otherwise limit bisection to ~eps^(1/m).
inline std::vector<long long> squarefree_part(const std::vector<long long>& coeffs) {
  using Poly = std::vector<BigRational>;  // highest degree first
  auto trim = [](Poly p) {
    while (p.size() > 1 && p.front() == 0) p.erase(p.begin());
    return p;
  };
  auto remainder = [&](Poly a, const Poly& b) {
    while (a.size() >= b.size() && !(a.size() == 1 && a[0] == 0)) {
      const BigRational f = a[0] / b[0];
      for (std::size_t i = 0; i < b.size(); ++i) a[i] -= f * b[i];
      a.erase(a.begin());
      a = trim(a);
      if (a.empty()) a = {0};
    }
    return a;
  };
  auto quotient = [&](Poly a, const Poly& b) {
    Poly q;
    while (a.size() >= b.size()) {
      const BigRational f = a[0] / b[0];
      q.push_back(f);
      for (std::size_t i = 0; i < b.size(); ++i) a[i] -= f * b[i];
      a.erase(a.begin());
    }
    return q;
  };
  Poly p(coeffs.begin(), coeffs.end());
  Poly dp;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) dp.push_back(p[i] * static_cast<long long>(p.size() - 1 - i));
  if (dp.empty()) return coeffs;
  Poly a = p, b = trim(dp);
  while (!(b.size() == 1 && b[0] == 0)) {
    Poly r = remainder(a, b);
    a = b;
    b = r;
  }
  Poly sf = quotient(p, a);
  // Clear denominators and make the leading coefficient positive.
  BigInt lcm = 1;
  for (const auto& c : sf) lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(c));
  std::vector<long long> out;
  for (const auto& c : sf) {
    BigRational scaled = c * lcm;
    out.push_back(boost::multiprecision::numerator(scaled).convert_to<long long>());
  }
  if (out.front() < 0) {
    for (auto& c : out) c = -c;
  }
  return out;
}

// Largest real root by scanning down from the max row sum bound and then
// bisecting the first sign change.
inline long double largest_real_root(const std::vector<long long>& coeffs, long double upper) {
  auto eval = [&](long double x) {
    long double v = 0;
    for (auto c : coeffs) v = v * x + static_cast<long double>(c);
    return v;
  };
  const long double step = 1e-4L;
  long double hi = upper + 1e-3L;
  // Leading coefficient positive, so p(hi) > 0 above every root.
  long double lo = hi - step;
  while (lo > -upper - 1 && eval(lo) > 0) {
    hi = lo;
    lo -= step;
  }
  if (eval(lo) == 0) return lo;
  for (int i = 0; i < 200; ++i) {
    const long double mid = 0.5L * (lo + hi);
    if (eval(mid) > 0) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5L * (lo + hi);
}

// Counts every labeling of the depth-n k-ary tree (d^nodes candidates)
// satisfying the parent/child constraint, split by root symbol.
inline std::vector<std::uint64_t> naive_counts(const Rows& m, unsigned k, unsigned n) {
  std::size_t nodes = 0;
  std::size_t width = 1;
  for (unsigned l = 0; l <= n; ++l, width *= k) nodes += width;
  const std::size_t d = m.size();
  std::vector<std::size_t> labels(nodes, 0);
  std::vector<std::uint64_t> counts(d, 0);
  for (;;) {
    bool ok = true;
    for (std::size_t v = 1; v < nodes && ok; ++v) ok = m[labels[(v - 1) / k]][labels[v]] == 1;
    if (ok) ++counts[labels[0]];
    std::size_t pos = 0;
    while (pos < nodes && ++labels[pos] == d) labels[pos++] = 0;
    if (pos == nodes) break;
  }
  return counts;
}

// Fibonacci word by iterating 0 -> 01, 1 -> 0.
inline std::string fibonacci_word(std::size_t length) {
  std::string w = "0";
  while (w.size() < length) {
    std::string next;
    for (char c : w) next += c == '0' ? "01" : "0";
    w = std::move(next);
  }
  return w.substr(0, length);
}

// Fibonacci numbers F_0 = 0, F_1 = 1 as big integers.
inline std::vector<BigInt> fibonacci_numbers(std::size_t count) {
  std::vector<BigInt> f{0, 1};
  while (f.size() < count) f.push_back(f[f.size() - 1] + f[f.size() - 2]);
  return f;
}

// A >= gamma^e decided in integers: gamma^e = F_e gamma + F_(e-1), and
// gamma = (1 + sqrt 5)/2, so A >= gamma^e iff 2(A - F_(e-1)) - F_e >= F_e sqrt 5.
inline bool at_least_gamma_power(const BigInt& a, std::size_t e) {
  const auto f = fibonacci_numbers(e + 2);
  const BigInt lhs = 2 * (a - f[e - 1]) - f[e];
  if (lhs < 0) return false;
  return lhs * lhs >= 5 * f[e] * f[e];
}

// Random 0,1 matrix with nonzero rows and columns.
inline Rows random_matrix(std::mt19937& rng, std::size_t d, double density = 0.5) {
  std::bernoulli_distribution bit(density);
  for (;;) {
    Rows m(d, std::vector<int>(d));
    for (auto& row : m) {
      for (auto& x : row) x = bit(rng) ? 1 : 0;
    }
    bool ok = true;
    for (std::size_t i = 0; i < d && ok; ++i) {
      int row = 0, col = 0;
      for (std::size_t j = 0; j < d; ++j) {
        row += m[i][j];
        col += m[j][i];
      }
      ok = row > 0 && col > 0;
    }
    if (ok) return m;
  }
}

inline TransitionMatrix to_matrix(const Rows& rows) {
  std::vector<std::vector<std::uint8_t>> bits;
  for (const auto& row : rows) bits.emplace_back(row.begin(), row.end());
  return TransitionMatrix(std::move(bits));
}

}  // namespace treeshift::testing
