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
#include <vector>

#include "treeshift/bignum.hpp"
#include "treeshift/matrix.hpp"

namespace treeshift {

// Perron data of a 0,1 transition matrix. All logarithms are natural.
struct SpectralData {
  double lambda = 0.0;               // spectral radius
  double htop = 0.0;                 // log(lambda)
  std::vector<double> left;          // v with v M = lambda v, sum v = 1
  std::vector<double> right;         // r with M r = lambda r, max r = 1
  double c = 0.0;                    // r_max / r_min; +inf when reducible
  std::optional<std::vector<double>> parry;  // v_i r_i / sum_j v_j r_j
  bool irreducible = false;
  bool primitive = false;
  std::vector<std::size_t> row_sums;
  std::size_t period = 1;
  std::size_t iterations = 0;
};

struct PowerIterationOptions {
  double tolerance = 1e-12;
  std::size_t max_iterations = 1'000'000;
};

// Strongly connected components of the graph i -> j iff M(i, j), in reverse
// topological order (sinks first). Each component lists its vertices sorted.
std::vector<std::vector<std::size_t>> strongly_connected_components(
    const TransitionMatrix& m);

bool is_irreducible(const TransitionMatrix& m);

// gcd over SCC-internal edges u -> v of (level[u] + 1 - level[v]) where level
// is a BFS depth inside the component. Components without internal edges do
// not contribute; returns 0 if no SCC has an internal edge.
std::size_t period(const TransitionMatrix& m);

SpectralData analyze_matrix(const TransitionMatrix& m,
                            const PowerIterationOptions& options = {});

// 0.5 log c + log lambda; +inf when c is infinite.
double upper_bound_U(const SpectralData& s);

// Heuristic sum_a mu[a] log t_a. Not a bound; no inequality is implied.
// Throws UndefinedForReducible when the Parry measure is undefined.
double heuristic_Um(const SpectralData& s);

// Coefficients of det(xI - M), highest degree first (leading coefficient 1).
std::vector<BigInt> characteristic_polynomial(const TransitionMatrix& m);

struct HighPrecisionPerron {
  BigFloat lambda;
  std::vector<BigFloat> left;  // sum = 1
  unsigned bits = 0;
};

// Perron root refined on the exact characteristic polynomial and the left
// eigenvector solved by elimination, both at the given binary precision.
// The returned values carry that precision; the caller must hold a
// ScopedPrecision of at least `bits` while using them.
// Requires an irreducible matrix (simple Perron root).
HighPrecisionPerron perron_high_precision(const TransitionMatrix& m,
                                          unsigned bits);

}  // namespace treeshift
