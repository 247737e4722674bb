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

#include <cmath>
#include <utility>

#include "treeshift/errors.hpp"
#include "treeshift/spectral.hpp"

namespace treeshift {

// Faddeev-LeVerrier over the integers; every division by k is exact.
std::vector<BigInt> characteristic_polynomial(const TransitionMatrix& m) {
  const std::size_t d = m.size();
  using Matrix = std::vector<std::vector<BigInt>>;
  Matrix a(d, std::vector<BigInt>(d));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) a[i][j] = m(i, j) ? 1 : 0;
  }
  std::vector<BigInt> coeffs(d + 1);
  coeffs[0] = 1;
  Matrix mk(d, std::vector<BigInt>(d));
  for (std::size_t i = 0; i < d; ++i) mk[i][i] = 1;
  for (std::size_t k = 1; k <= d; ++k) {
    Matrix amk(d, std::vector<BigInt>(d));
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t l = 0; l < d; ++l) {
        if (a[i][l] == 0) continue;
        for (std::size_t j = 0; j < d; ++j) amk[i][j] += mk[l][j];
      }
    }
    BigInt trace = 0;
    for (std::size_t i = 0; i < d; ++i) trace += amk[i][i];
    coeffs[k] = -trace / static_cast<long>(k);
    for (std::size_t i = 0; i < d; ++i) amk[i][i] += coeffs[k];
    mk = std::move(amk);
  }
  return coeffs;
}

namespace {

std::pair<BigFloat, BigFloat> evaluate_with_derivative(
    const std::vector<BigInt>& coeffs, const BigFloat& x) {
  BigFloat value = 0;
  BigFloat slope = 0;
  for (const auto& c : coeffs) {
    slope = slope * x + value;
    value = value * x + BigFloat(c);
  }
  return {value, slope};
}

}  // namespace

HighPrecisionPerron perron_high_precision(const TransitionMatrix& m,
                                          unsigned bits) {
  if (!is_irreducible(m)) {
    throw UndefinedForReducible(
        "high-precision Perron data requires an irreducible matrix");
  }
  const auto spectral = analyze_matrix(m);
  const auto coeffs = characteristic_polynomial(m);
  const std::size_t d = m.size();

  ScopedPrecision precision(bits + 32);
  HighPrecisionPerron out;
  out.bits = bits;

  // Safeguarded Newton inside a bracket around the double-precision root.
  BigFloat lo = spectral.lambda * (1 - 1e-8);
  BigFloat hi = spectral.lambda * (1 + 1e-8);
  if (d == 1 || spectral.lambda == std::round(spectral.lambda)) {
    // Integer roots are common (constant row sums); try them exactly first.
    const BigFloat candidate = std::round(spectral.lambda);
    if (evaluate_with_derivative(coeffs, candidate).first == 0) {
      lo = hi = candidate;
    }
  }
  if (lo != hi) {
    const bool lo_negative = evaluate_with_derivative(coeffs, lo).first < 0;
    if (lo_negative == (evaluate_with_derivative(coeffs, hi).first < 0)) {
      throw NoConvergence("Perron root bracket has no sign change");
    }
    BigFloat x = spectral.lambda;
    const BigFloat eps = boost::multiprecision::ldexp(BigFloat(1), -static_cast<int>(bits));
    for (int it = 0; it < 4 * static_cast<int>(bits) + 100; ++it) {
      const auto [value, slope] = evaluate_with_derivative(coeffs, x);
      if (value == 0) {
        lo = hi = x;
        break;
      }
      if ((value < 0) == lo_negative) {
        lo = x;
      } else {
        hi = x;
      }
      BigFloat next = slope != 0 ? BigFloat(x - value / slope) : BigFloat((lo + hi) / 2);
      if (next <= lo || next >= hi) next = (lo + hi) / 2;
      const BigFloat step = abs(next - x);
      x = next;
      if (step <= eps * x || hi - lo <= eps * x) break;
    }
    out.lambda = x;
  } else {
    out.lambda = lo;
  }

  // Null vector of (M - lambda I)^T by Gaussian elimination with partial
  // pivoting; the single near-zero pivot column is the free variable.
  std::vector<std::vector<BigFloat>> a(d, std::vector<BigFloat>(d));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      a[i][j] = m(j, i) ? 1 : 0;
      if (i == j) a[i][j] -= out.lambda;
    }
  }
  const BigFloat tiny = boost::multiprecision::ldexp(BigFloat(1), -static_cast<int>(bits / 2));
  std::vector<std::size_t> pivot_col_of_row;
  std::vector<bool> is_pivot(d, false);
  std::size_t row = 0;
  for (std::size_t col = 0; col < d && row < d; ++col) {
    std::size_t best = row;
    for (std::size_t r = row + 1; r < d; ++r) {
      if (abs(a[r][col]) > abs(a[best][col])) best = r;
    }
    if (abs(a[best][col]) <= tiny) continue;
    std::swap(a[row], a[best]);
    for (std::size_t r = row + 1; r < d; ++r) {
      if (a[r][col] == 0) continue;
      const BigFloat factor = a[r][col] / a[row][col];
      for (std::size_t j = col; j < d; ++j) a[r][j] -= factor * a[row][j];
    }
    pivot_col_of_row.push_back(col);
    is_pivot[col] = true;
    ++row;
  }
  std::vector<BigFloat> v(d, BigFloat(0));
  std::size_t free_count = 0;
  for (std::size_t j = 0; j < d; ++j) {
    if (!is_pivot[j]) {
      v[j] = 1;
      ++free_count;
    }
  }
  if (free_count != 1) {
    throw NoConvergence("Perron eigenspace is not one-dimensional at this precision");
  }
  for (std::size_t r = pivot_col_of_row.size(); r-- > 0;) {
    const std::size_t col = pivot_col_of_row[r];
    BigFloat sum = 0;
    for (std::size_t j = col + 1; j < d; ++j) sum += a[r][j] * v[j];
    v[col] = -sum / a[r][col];
  }
  BigFloat total = 0;
  for (const auto& value : v) total += value;
  for (auto& value : v) value /= total;
  out.left = std::move(v);
  return out;
}

}  // namespace treeshift
