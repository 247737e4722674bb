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

#include "treeshift/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>

#include "treeshift/errors.hpp"

namespace treeshift {

std::vector<std::vector<std::size_t>> strongly_connected_components(
    const TransitionMatrix& m) {
  const std::size_t d = m.size();
  constexpr std::size_t kUnvisited = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> index(d, kUnvisited), low(d, 0);
  std::vector<bool> on_stack(d, false);
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> components;
  std::size_t counter = 0;

  // Tarjan; recursion depth is bounded by the alphabet size.
  std::function<void(std::size_t)> visit = [&](std::size_t u) {
    index[u] = low[u] = counter++;
    stack.push_back(u);
    on_stack[u] = true;
    for (std::size_t w = 0; w < d; ++w) {
      if (!m(u, w)) continue;
      if (index[w] == kUnvisited) {
        visit(w);
        low[u] = std::min(low[u], low[w]);
      } else if (on_stack[w]) {
        low[u] = std::min(low[u], index[w]);
      }
    }
    if (low[u] == index[u]) {
      std::vector<std::size_t> component;
      std::size_t w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        component.push_back(w);
      } while (w != u);
      std::sort(component.begin(), component.end());
      components.push_back(std::move(component));
    }
  };
  for (std::size_t u = 0; u < d; ++u) {
    if (index[u] == kUnvisited) visit(u);
  }
  return components;
}

bool is_irreducible(const TransitionMatrix& m) {
  return strongly_connected_components(m).size() == 1;
}

std::size_t period(const TransitionMatrix& m) {
  const std::size_t d = m.size();
  std::size_t g = 0;
  for (const auto& component : strongly_connected_components(m)) {
    std::vector<bool> inside(d, false);
    for (auto u : component) inside[u] = true;
    constexpr long kUnset = -1;
    std::vector<long> level(d, kUnset);
    std::queue<std::size_t> frontier;
    level[component.front()] = 0;
    frontier.push(component.front());
    while (!frontier.empty()) {
      const auto u = frontier.front();
      frontier.pop();
      for (std::size_t w = 0; w < d; ++w) {
        if (m(u, w) && inside[w] && level[w] == kUnset) {
          level[w] = level[u] + 1;
          frontier.push(w);
        }
      }
    }
    for (auto u : component) {
      for (auto w : component) {
        if (m(u, w)) {
          const long diff = level[u] + 1 - level[w];
          g = std::gcd(g, static_cast<std::size_t>(std::labs(diff)));
        }
      }
    }
  }
  return g;
}

namespace {

struct PowerResult {
  double lambda = 0.0;
  std::vector<double> vec;  // max-normalized
  std::size_t iterations = 0;
  bool converged = false;
};

// Power iteration on (A + shift I) restricted to `vertices`, where A is M or
// its transpose. Convergence is measured by the Collatz-Wielandt bracket
// min_i (Ax)_i/x_i <= lambda <= max_i (Ax)_i/x_i.
PowerResult power_iterate(const TransitionMatrix& m,
                          const std::vector<std::size_t>& vertices,
                          bool transpose, double shift,
                          const PowerIterationOptions& options) {
  const std::size_t n = vertices.size();
  PowerResult result;
  std::vector<double> x(n, 1.0), y(n);
  auto entry = [&](std::size_t a, std::size_t b) {
    return transpose ? m(vertices[b], vertices[a]) : m(vertices[a], vertices[b]);
  };
  for (std::size_t it = 1; it <= options.max_iterations; ++it) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    bool positive = true;
    for (std::size_t a = 0; a < n; ++a) {
      double sum = shift * x[a];
      for (std::size_t b = 0; b < n; ++b) {
        if (entry(a, b)) sum += x[b];
      }
      y[a] = sum;
      if (x[a] > 0.0) {
        lo = std::min(lo, sum / x[a]);
        hi = std::max(hi, sum / x[a]);
      } else {
        positive = false;
      }
    }
    const double top = *std::max_element(y.begin(), y.end());
    if (top <= 0.0) {
      // Nilpotent block: spectral radius zero.
      result.lambda = 0.0;
      result.vec.assign(n, 0.0);
      result.iterations = it;
      result.converged = true;
      return result;
    }
    for (auto& value : y) value /= top;
    std::swap(x, y);
    result.iterations = it;
    if (positive && hi - lo <= options.tolerance * hi) {
      result.lambda = 0.5 * (hi + lo) - shift;
      result.converged = true;
      break;
    }
    result.lambda = top - shift;
  }
  result.vec = std::move(x);
  return result;
}

}  // namespace

SpectralData analyze_matrix(const TransitionMatrix& m,
                            const PowerIterationOptions& options) {
  const std::size_t d = m.size();
  SpectralData s;
  for (std::size_t i = 0; i < d; ++i) s.row_sums.push_back(m.row_sum(i));

  const auto components = strongly_connected_components(m);
  s.irreducible = components.size() == 1;
  s.period = period(m);
  s.primitive = s.irreducible && s.period == 1;

  std::vector<std::size_t> all(d);
  std::iota(all.begin(), all.end(), 0);

  if (s.irreducible) {
    const double shift = s.primitive ? 0.0 : 1.0;
    auto right = power_iterate(m, all, false, shift, options);
    auto left = power_iterate(m, all, true, shift, options);
    if (!right.converged || !left.converged) {
      throw NoConvergence("power iteration did not converge within " +
                          std::to_string(options.max_iterations) +
                          " iterations");
    }
    s.lambda = right.lambda;
    s.iterations = std::max(right.iterations, left.iterations);
    s.right = std::move(right.vec);
    s.left = std::move(left.vec);
    const double total = std::accumulate(s.left.begin(), s.left.end(), 0.0);
    for (auto& value : s.left) value /= total;
    const auto [rmin, rmax] = std::minmax_element(s.right.begin(), s.right.end());
    s.c = *rmax / *rmin;
    std::vector<double> mu(d);
    double norm = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
      mu[i] = s.left[i] * s.right[i];
      norm += mu[i];
    }
    for (auto& value : mu) value /= norm;
    s.parry = std::move(mu);
  } else {
    // The spectral radius of a reducible matrix is the largest Perron root
    // among its irreducible diagonal blocks.
    std::vector<double> block_root;
    for (const auto& component : components) {
      auto block = power_iterate(m, component, false, 1.0, options);
      if (!block.converged) {
        throw NoConvergence("power iteration did not converge on a component");
      }
      block_root.push_back(block.lambda);
      s.lambda = std::max(s.lambda, block.lambda);
      s.iterations = std::max(s.iterations, block.iterations);
    }
    // A strictly positive right eigenvector exists iff the final classes (no
    // edges leaving them) are exactly the classes whose root equals lambda.
    std::vector<std::size_t> class_of(d);
    for (std::size_t c = 0; c < components.size(); ++c) {
      for (auto u : components[c]) class_of[u] = c;
    }
    bool positive_right = true;
    for (std::size_t c = 0; c < components.size(); ++c) {
      bool final_class = true;
      for (auto u : components[c]) {
        for (std::size_t w = 0; w < d; ++w) {
          if (m(u, w) && class_of[w] != c) final_class = false;
        }
      }
      const bool basic = block_root[c] >= s.lambda * (1 - 1e-9);
      if (final_class != basic) positive_right = false;
    }
    // Best-effort eigenvectors of the whole matrix; these may contain zeros.
    PowerIterationOptions bounded = options;
    bounded.max_iterations = std::min<std::size_t>(options.max_iterations, 100'000);
    s.right = power_iterate(m, all, false, 1.0, bounded).vec;
    s.left = power_iterate(m, all, true, 1.0, bounded).vec;
    for (auto* vec : {&s.left, &s.right}) {
      const double top = *std::max_element(vec->begin(), vec->end());
      for (auto& value : *vec) {
        if (value < 1e-15 * top) value = 0.0;
      }
    }
    const double total = std::accumulate(s.left.begin(), s.left.end(), 0.0);
    if (total > 0.0) {
      for (auto& value : s.left) value /= total;
    }
    const auto [rmin, rmax] = std::minmax_element(s.right.begin(), s.right.end());
    s.c = positive_right && *rmin > 0.0 ? *rmax / *rmin
                                        : std::numeric_limits<double>::infinity();
  }
  s.htop = std::log(s.lambda);
  return s;
}

double upper_bound_U(const SpectralData& s) {
  if (!std::isfinite(s.c)) return std::numeric_limits<double>::infinity();
  return 0.5 * std::log(s.c) + std::log(s.lambda);
}

double heuristic_Um(const SpectralData& s) {
  if (!s.parry) {
    throw UndefinedForReducible(
        "U_m needs the measure of maximal entropy, undefined for reducible "
        "matrices");
  }
  double total = 0.0;
  for (std::size_t a = 0; a < s.row_sums.size(); ++a) {
    total += (*s.parry)[a] * std::log(static_cast<double>(s.row_sums[a]));
  }
  return total;
}

}  // namespace treeshift
