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

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "treeshift/bignum.hpp"
#include "treeshift/oracle.hpp"

namespace treeshift::sturmian {

// Irrational slope in (0, 1). A continued fraction [0; a_1, ..., a_m] is
// read with its last term repeating forever, so "0,2,1" is
// [0; 2, 1, 1, 1, ...] = 1/gamma^2 and every such slope is a quadratic
// irrational. Decimal slopes are rationals and flagged approximate.
class Slope {
 public:
  static Slope continued_fraction(std::vector<unsigned> terms);
  static Slope decimal(std::string text, unsigned digits);
  static Slope fibonacci() { return continued_fraction({0, 2, 1}); }

  bool approximate() const { return !decimal_.empty(); }
  const std::vector<unsigned>& terms() const { return terms_; }
  BigFloat value(unsigned bits) const;
  std::string describe() const;

 private:
  std::vector<unsigned> terms_;
  std::string decimal_;
  unsigned digits_ = 0;
};

// Parses "0,2,1,1,1" (a trailing "..." or "…" is ignored).
Slope parse_continued_fraction(std::string_view text);

struct SturmianParams {
  Slope alpha = Slope::fibonacci();
  double rho = 0.0;            // intercept in [0, 1)
  std::size_t max_len = 16;    // longest factor length needed
  unsigned precision_bits = 256;
  unsigned max_depth = 24;     // tree labeling cap
};

// s_n = floor((n+1) alpha + rho) - floor(n alpha + rho) for
// n = first_index .. first_index + length - 1, as '0'/'1' characters. With
// rho = 0 and first_index = 1 this is the characteristic word of alpha
// (the Fibonacci word for alpha = 1/gamma^2); first_index = 0 prepends a 0.
std::string mechanical_word(const SturmianParams& params, std::size_t length,
                            std::size_t first_index = 1);

// Lexicographically least sequence of the system, 0 c_alpha.
std::string lex_minimal_word(const SturmianParams& params, std::size_t length);

// Factors of the Sturmian language up to max_len, stored as a trie so each
// factor carries its admissible successor symbols.
class FactorOracle {
 public:
  struct Node {
    std::string word;
    std::array<int, 2> next{-1, -1};
  };

  std::size_t max_len() const { return max_len_; }
  // Sorted factors of length n, n <= max_len.
  const std::vector<std::string>& factors(std::size_t n) const { return by_length_.at(n); }
  std::size_t complexity(std::size_t n) const { return factors(n).size(); }

  int find(std::string_view word) const;  // -1 if absent
  bool contains(std::string_view word) const { return find(word) >= 0; }
  // Successor symbols ('0'/'1') of a factor of length <= max_len.
  std::string successors(std::string_view word) const;
  // Factors of length n with both successors, n <= max_len.
  std::vector<std::string> right_special(std::size_t n) const;

  const Node& node(int id) const { return nodes_.at(static_cast<std::size_t>(id)); }

 private:
  friend FactorOracle build_factor_oracle(const SturmianParams& params);
  std::size_t max_len_ = 0;
  std::vector<Node> nodes_;  // node 0 is the empty word; depth <= max_len + 1
  std::vector<std::vector<std::string>> by_length_;
};

// Harvests factors from a mechanical word of length max(10 (max_len + 1), 1000)
// and verifies p(n) = n + 1 up to max_len + 1; throws ComplexityViolation
// otherwise.
FactorOracle build_factor_oracle(const SturmianParams& params);

// Dyadic labeling whose root-to-node paths are factors of the language:
// forced successors are copied to both children; at right-special factors the
// left child gets 0 and the right child 1.
LabeledTree label_tree_lex(const SturmianParams& params, unsigned depth);

// Same rule, but each right-special node gets (0,1) or (1,0) from one fair
// bit of std::mt19937_64(seed) (the top bit of each draw), nodes visited in
// breadth-first order.
LabeledTree label_tree_random(const SturmianParams& params, unsigned depth,
                              std::uint64_t seed);

// p_tau(n) for n = 0..n_max.
std::vector<std::size_t> tree_complexity(const LabeledTree& tau, unsigned n_max);

}  // namespace treeshift::sturmian
