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

#include "treeshift/oracle.hpp"

#include <algorithm>
#include <limits>
#include <unordered_set>

#include <json.hpp>

#include "treeshift/errors.hpp"

namespace treeshift {

LabeledTree::LabeledTree(unsigned arity, unsigned depth)
    : LabeledTree(arity, depth,
                  std::vector<std::uint8_t>(node_count(arity, depth), 0)) {}

LabeledTree::LabeledTree(unsigned arity, unsigned depth,
                         std::vector<std::uint8_t> labels)
    : arity_(arity), depth_(depth), labels_(std::move(labels)) {
  if (arity_ < 2) throw InputError("tree arity must be at least 2");
  if (labels_.size() != node_count(arity_, depth_)) {
    throw InputError("label count " + std::to_string(labels_.size()) +
                     " does not match a depth-" + std::to_string(depth_) +
                     " tree of arity " + std::to_string(arity_));
  }
}

std::size_t LabeledTree::node_count(unsigned arity, unsigned depth) {
  if (arity < 2) throw InputError("tree arity must be at least 2");
  std::size_t total = 0;
  std::size_t width = 1;
  for (unsigned level = 0; level <= depth; ++level) {
    total += width;
    if (level < depth) {
      if (width > std::numeric_limits<std::size_t>::max() / arity / 2) {
        throw TooLarge("tree too large to store");
      }
      width *= arity;
    }
  }
  return total;
}

std::size_t LabeledTree::level_start(unsigned level) const {
  return level == 0 ? 0 : node_count(arity_, level - 1);
}

bool LabeledTree::valid_for(const TransitionMatrix& m) const {
  for (std::size_t node = 1; node < labels_.size(); ++node) {
    if (labels_[node] >= m.size() || !m(labels_[parent(node)], labels_[node])) {
      return false;
    }
  }
  return labels_.empty() || labels_[0] < m.size();
}

std::string LabeledTree::path_word(std::size_t node) const {
  std::string word;
  for (;;) {
    word.push_back(symbol_char(labels_[node]));
    if (node == 0) break;
    node = parent(node);
  }
  std::reverse(word.begin(), word.end());
  return word;
}

std::vector<std::string> LabeledTree::level_path_words(unsigned level) const {
  if (level > depth_) throw DepthExceeded("level beyond tree depth");
  const std::size_t begin = level_start(level);
  const std::size_t end = level == depth_ ? labels_.size() : level_start(level + 1);
  std::vector<std::string> words;
  words.reserve(end - begin);
  for (std::size_t node = begin; node < end; ++node) words.push_back(path_word(node));
  return words;
}

std::string LabeledTree::to_string() const {
  std::string out;
  out.reserve(labels_.size());
  for (auto label : labels_) out.push_back(symbol_char(label));
  return out;
}

namespace {

std::vector<std::uint32_t> terminal_profile(std::string_view block,
                                            std::size_t terminals,
                                            std::size_t alphabet) {
  std::vector<std::uint32_t> profile(alphabet, 0);
  for (char ch : block.substr(block.size() - terminals)) {
    const std::size_t symbol =
        ch <= '9' ? static_cast<std::size_t>(ch - '0')
                  : static_cast<std::size_t>(ch - 'a') + 10;
    if (symbol >= alphabet) throw InputError("block symbol outside alphabet");
    ++profile[symbol];
  }
  return profile;
}

std::size_t power(std::size_t base, unsigned exponent) {
  std::size_t out = 1;
  for (unsigned i = 0; i < exponent; ++i) out *= base;
  return out;
}

class ConfigEnumerator {
 public:
  ConfigEnumerator(const TransitionMatrix& m, unsigned arity, unsigned n)
      : m_(m), arity_(arity), nodes_(LabeledTree::node_count(arity, n)),
        terminals_(power(arity, n)), labels_(nodes_, 0), block_(nodes_, '0') {
    for (std::size_t i = 0; i < m.size(); ++i) successors_.push_back(m.successors(i));
    result_.per_root.assign(m.size(), BigInt(0));
    result_.census.n = n;
    result_.census.arity = arity;
  }

  Enumeration run() {
    for (std::size_t root = 0; root < m_.size(); ++root) {
      assign(0, root);
      extend(1);
    }
    for (const auto& count : result_.per_root) result_.total += count;
    result_.census.count = result_.census.blocks.size();
    return std::move(result_);
  }

 private:
  void assign(std::size_t pos, std::size_t symbol) {
    labels_[pos] = static_cast<std::uint8_t>(symbol);
    block_[pos] = symbol_char(symbol);
  }

  void extend(std::size_t pos) {
    if (pos == nodes_) {
      emit();
      return;
    }
    const std::size_t parent = (pos - 1) / arity_;
    for (auto symbol : successors_[labels_[parent]]) {
      assign(pos, symbol);
      extend(pos + 1);
    }
  }

  void emit() {
    for (std::size_t pos = 1; pos < nodes_; ++pos) {
      if (!m_(labels_[(pos - 1) / arity_], labels_[pos])) {
        throw Error("enumerator emitted an invalid block " + block_);
      }
    }
    result_.per_root[labels_[0]] += 1;
    result_.census.blocks.push_back(block_);
    result_.census.terminal_profiles.push_back(
        terminal_profile(block_, terminals_, m_.size()));
  }

  const TransitionMatrix& m_;
  unsigned arity_;
  std::size_t nodes_;
  std::size_t terminals_;
  std::vector<std::vector<std::size_t>> successors_;
  std::vector<std::uint8_t> labels_;
  std::string block_;
  Enumeration result_;
};

void sort_census(BlockCensus& census) {
  std::vector<std::size_t> order(census.blocks.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return census.blocks[a] < census.blocks[b];
  });
  BlockCensus sorted;
  sorted.n = census.n;
  sorted.arity = census.arity;
  sorted.count = census.count;
  for (auto i : order) {
    sorted.blocks.push_back(std::move(census.blocks[i]));
    if (!census.terminal_profiles.empty()) {
      sorted.terminal_profiles.push_back(std::move(census.terminal_profiles[i]));
    }
  }
  census = std::move(sorted);
}

}  // namespace

Enumeration enumerate_configs(const TransitionMatrix& m, unsigned arity,
                              unsigned n) {
  const std::size_t nodes = LabeledTree::node_count(arity, n);
  if (nodes > kMaterializationCap) {
    throw TooLarge("depth-" + std::to_string(n) + " tree has " +
                   std::to_string(nodes) + " nodes; materialization cap is " +
                   std::to_string(kMaterializationCap));
  }
  auto result = ConfigEnumerator(m, arity, n).run();
  if (!std::is_sorted(result.census.blocks.begin(), result.census.blocks.end())) {
    sort_census(result.census);
  }
  return result;
}

std::vector<BigInt> count_configs(const TransitionMatrix& m, unsigned arity,
                                  unsigned n) {
  if (arity < 2) throw InputError("tree arity must be at least 2");
  const std::size_t d = m.size();
  std::vector<BigInt> counts(d, BigInt(1));
  for (unsigned level = 1; level <= n; ++level) {
    std::vector<BigInt> next(d, BigInt(0));
    for (std::size_t i = 0; i < d; ++i) {
      const auto succ = m.successors(i);
      // Odometer over every arity-tuple of allowed child symbols.
      std::vector<std::size_t> digits(arity, 0);
      for (;;) {
        BigInt product = 1;
        for (auto digit : digits) product *= counts[succ[digit]];
        next[i] += product;
        unsigned pos = 0;
        while (pos < arity && ++digits[pos] == succ.size()) digits[pos++] = 0;
        if (pos == arity) break;
      }
    }
    counts = std::move(next);
  }
  return counts;
}

BlockCensus blocks_in_tree(const LabeledTree& tau, unsigned n,
                           std::size_t alphabet_size) {
  if (n > tau.depth()) {
    throw DepthExceeded("block depth " + std::to_string(n) +
                        " exceeds tree depth " + std::to_string(tau.depth()));
  }
  if (alphabet_size == 0) {
    for (auto label : tau.labels()) {
      alphabet_size = std::max<std::size_t>(alphabet_size, label + 1u);
    }
  }
  const unsigned k = tau.arity();
  const std::size_t last_root = LabeledTree::node_count(k, tau.depth() - n);
  std::unordered_set<std::string> seen;
  std::string block(LabeledTree::node_count(k, n), '0');
  for (std::size_t root = 0; root < last_root; ++root) {
    std::size_t pos = 0;
    std::size_t first = root;
    std::size_t width = 1;
    for (unsigned level = 0; level <= n; ++level) {
      for (std::size_t i = 0; i < width; ++i) block[pos++] = symbol_char(tau[first + i]);
      first = k * first + 1;
      width *= k;
    }
    seen.insert(block);
  }
  BlockCensus census;
  census.n = n;
  census.arity = k;
  census.blocks.assign(seen.begin(), seen.end());
  std::sort(census.blocks.begin(), census.blocks.end());
  census.count = census.blocks.size();
  const std::size_t terminals = power(k, n);
  for (const auto& b : census.blocks) {
    census.terminal_profiles.push_back(terminal_profile(b, terminals, alphabet_size));
  }
  return census;
}

PhiIdentityReport verify_phi_identity(const TransitionMatrix& m, unsigned n,
                                      unsigned arity) {
  const auto base = enumerate_configs(m, arity, n);
  const auto extended = enumerate_configs(m, arity, n + 1);
  std::vector<BigInt> weight(m.size());
  for (std::size_t a = 0; a < m.size(); ++a) {
    weight[a] = boost::multiprecision::pow(BigInt(m.row_sum(a)), arity);
  }
  PhiIdentityReport report;
  report.n = n;
  report.lhs = extended.total;
  report.rhs = 0;
  for (const auto& profile : base.census.terminal_profiles) {
    BigInt term = 1;
    for (std::size_t a = 0; a < m.size(); ++a) {
      term *= boost::multiprecision::pow(weight[a], profile[a]);
    }
    report.rhs += term;
  }
  report.equal = report.lhs == report.rhs;
  return report;
}

namespace {

BigInt total_configs(const TransitionMatrix& m, unsigned arity, unsigned n) {
  BigInt total = 0;
  for (const auto& value : count_configs(m, arity, n)) total += value;
  return total;
}

}  // namespace

SubadditivityReport check_subadditivity(const TransitionMatrix& m,
                                        unsigned depth_m, unsigned depth_n,
                                        unsigned arity) {
  SubadditivityReport report;
  report.m = depth_m;
  report.n = depth_n;
  report.p_sum = total_configs(m, arity, depth_m + depth_n);
  report.p_m = total_configs(m, arity, depth_m);
  report.p_n = total_configs(m, arity, depth_n);
  const BigInt terminals = boost::multiprecision::pow(BigInt(arity), depth_m);
  report.product_bound =
      report.p_m * boost::multiprecision::pow(report.p_n, terminals.convert_to<unsigned>());
  report.product_holds = report.p_sum <= report.product_bound;
  if (depth_m > 0) {
    report.fold = (depth_m + depth_n) / depth_m;
    report.p_fold = total_configs(m, arity, report.fold * depth_m);
    const BigInt km = boost::multiprecision::pow(BigInt(arity), depth_m);
    const BigInt kjm = boost::multiprecision::pow(BigInt(arity), report.fold * depth_m);
    const BigInt exponent = (kjm - 1) / (km - 1);
    report.power_bound =
        boost::multiprecision::pow(report.p_m, exponent.convert_to<unsigned>());
    report.power_holds = report.p_fold <= report.power_bound;
  }
  return report;
}

std::string census_to_json(const BlockCensus& census) {
  nlohmann::json doc;
  doc["n"] = census.n;
  doc["count"] = census.count;
  doc["blocks"] = census.blocks;
  return doc.dump();
}

}  // namespace treeshift
