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
#include <cstdint>
#include <string>
#include <vector>

#include "treeshift/bignum.hpp"
#include "treeshift/matrix.hpp"

namespace treeshift {

// Labeling of the depth-`depth` initial subtree of the k-ary tree, stored in
// breadth-first order. Node 0 is the root; the children of node i are
// k*i + 1 .. k*i + k.
class LabeledTree {
 public:
  LabeledTree(unsigned arity, unsigned depth);
  LabeledTree(unsigned arity, unsigned depth, std::vector<std::uint8_t> labels);

  static std::size_t node_count(unsigned arity, unsigned depth);

  unsigned arity() const { return arity_; }
  unsigned depth() const { return depth_; }
  std::size_t size() const { return labels_.size(); }

  std::uint8_t operator[](std::size_t node) const { return labels_[node]; }
  std::uint8_t& operator[](std::size_t node) { return labels_[node]; }
  const std::vector<std::uint8_t>& labels() const { return labels_; }

  std::size_t child(std::size_t node, unsigned which) const {
    return arity_ * node + 1 + which;
  }
  std::size_t parent(std::size_t node) const { return (node - 1) / arity_; }
  // Index of the first node at `level`.
  std::size_t level_start(unsigned level) const;

  bool valid_for(const TransitionMatrix& m) const;

  // Labels along the path root -> node, as symbol characters.
  std::string path_word(std::size_t node) const;
  // Path words of every node at `level`, left to right.
  std::vector<std::string> level_path_words(unsigned level) const;

  // Breadth-first symbol-character string of the whole tree.
  std::string to_string() const;

 private:
  unsigned arity_;
  unsigned depth_;
  std::vector<std::uint8_t> labels_;
};

// Distinct depth-n blocks; each block is its breadth-first symbol string.
struct BlockCensus {
  unsigned n = 0;
  unsigned arity = 2;
  std::size_t count = 0;
  std::vector<std::string> blocks;  // sorted
  // terminal_profiles[b][a]: terminal nodes of blocks[b] labeled a.
  std::vector<std::vector<std::uint32_t>> terminal_profiles;
};

inline constexpr std::size_t kMaterializationCap = 40;

struct Enumeration {
  std::vector<BigInt> per_root;  // x_i(n) counted from the materialized blocks
  BigInt total;
  BlockCensus census;
};

// Materializes every M-valid labeling of the depth-n k-ary tree by depth-first
// search over breadth-first positions, symbols ascending. Throws TooLarge
// when the tree has more than kMaterializationCap nodes.
Enumeration enumerate_configs(const TransitionMatrix& m, unsigned arity,
                              unsigned n);

// Counting-only enumeration without a node cap: memoized subtree counts
// where each level sums over every tuple of allowed child labels.
std::vector<BigInt> count_configs(const TransitionMatrix& m, unsigned arity,
                                  unsigned n);

// Distinct depth-n blocks rooted at nodes of depth <= tau.depth - n.
BlockCensus blocks_in_tree(const LabeledTree& tau, unsigned n,
                           std::size_t alphabet_size = 0);

struct PhiIdentityReport {
  unsigned n = 0;
  BigInt lhs;  // |Phi_(n+1)|
  BigInt rhs;  // sum over Phi_n of prod_a (t_a^k)^(s_phi(a))
  bool equal = false;
};

PhiIdentityReport verify_phi_identity(const TransitionMatrix& m, unsigned n,
                                      unsigned arity = 2);

struct SubadditivityReport {
  unsigned m = 0;
  unsigned n = 0;
  // p(m+n) <= p(m) p(n)^(k^m)
  BigInt p_sum, p_m, p_n, product_bound;
  bool product_holds = false;
  // p(j m) <= p(m)^((k^(jm) - 1)/(k^m - 1)) with j = (m+n)/m; absent for m = 0
  unsigned fold = 0;
  BigInt p_fold, power_bound;
  bool power_holds = true;
};

SubadditivityReport check_subadditivity(const TransitionMatrix& m,
                                        unsigned depth_m, unsigned depth_n,
                                        unsigned arity = 2);

// {"n":..,"count":..,"blocks":[...]} with blocks sorted.
std::string census_to_json(const BlockCensus& census);

}  // namespace treeshift
