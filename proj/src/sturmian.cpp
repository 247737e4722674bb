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

#include "treeshift/sturmian.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <sstream>

#include "treeshift/errors.hpp"

namespace treeshift::sturmian {

Slope Slope::continued_fraction(std::vector<unsigned> terms) {
  if (terms.size() < 2 || terms[0] != 0) {
    throw InputError("slope continued fraction must look like 0,a1,...");
  }
  for (std::size_t i = 1; i < terms.size(); ++i) {
    if (terms[i] == 0) throw InputError("continued fraction terms after a0 must be positive");
  }
  Slope s;
  s.terms_ = std::move(terms);
  return s;
}

Slope Slope::decimal(std::string text, unsigned digits) {
  Slope s;
  try {
    ScopedPrecision precision(std::max(64u, digits * 4));
    const BigFloat value(text);
    if (!(value > 0 && value < 1)) throw InputError("slope must lie in (0, 1)");
  } catch (const std::runtime_error& e) {
    if (dynamic_cast<const InputError*>(&e) != nullptr) throw;
    throw InputError("invalid decimal slope '" + text + "'");
  }
  s.decimal_ = std::move(text);
  s.digits_ = digits;
  return s;
}

BigFloat Slope::value(unsigned bits) const {
  ScopedPrecision precision(bits);
  if (!decimal_.empty()) return BigFloat(decimal_);
  const auto last = static_cast<double>(terms_.back());
  BigFloat tail = (last + sqrt(BigFloat(last * last + 4))) / 2;
  for (std::size_t i = terms_.size() - 1; i-- > 1;) {
    tail = terms_[i] + 1 / tail;
  }
  return 1 / tail;
}

std::string Slope::describe() const {
  if (!decimal_.empty()) {
    return decimal_ + " (decimal, " + std::to_string(digits_) + " digits, approximate)";
  }
  std::ostringstream out;
  out << "[0;";
  for (std::size_t i = 1; i < terms_.size(); ++i) {
    out << terms_[i] << (i + 1 < terms_.size() ? "," : ",...]");
  }
  return out.str();
}

Slope parse_continued_fraction(std::string_view text) {
  std::vector<unsigned> terms;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    if (!std::all_of(token.begin(), token.end(),
                     [](unsigned char c) { return std::isdigit(c); })) {
      throw InputError("bad continued fraction term '" + token + "'");
    }
    terms.push_back(static_cast<unsigned>(std::stoul(token)));
    token.clear();
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (ch == ',' || ch == ';' || std::isspace(static_cast<unsigned char>(ch))) {
      flush();
    } else if (ch == '.' || static_cast<unsigned char>(ch) >= 0x80) {
      // Trailing ellipsis.
      flush();
      break;
    } else {
      token.push_back(ch);
    }
  }
  flush();
  return Slope::continued_fraction(std::move(terms));
}

std::string mechanical_word(const SturmianParams& params, std::size_t length,
                            std::size_t first_index) {
  const unsigned bits = params.precision_bits;
  ScopedPrecision precision(bits);
  const BigFloat alpha = params.alpha.value(bits);
  const BigFloat rho = params.rho;
  // A floor argument this close to an integer cannot be trusted.
  const BigFloat guard = boost::multiprecision::ldexp(BigFloat(1), -static_cast<int>(bits / 2));
  auto floor_at = [&](std::size_t n) {
    const BigFloat x = BigFloat(static_cast<double>(n)) * alpha + rho;
    const BigFloat f = floor(x);
    const BigFloat frac = x - f;
    if ((frac < guard || 1 - frac < guard) && !(n == 0 && rho == 0)) {
      throw PrecisionExhausted(
          "mechanical word floor at n=" + std::to_string(n) +
          " is within rounding distance of an integer; the slope is rational "
          "at this precision or needs more continued-fraction terms");
    }
    return f.convert_to<long long>();
  };
  std::string word;
  word.reserve(length);
  long long previous = floor_at(first_index);
  for (std::size_t n = first_index; n < first_index + length; ++n) {
    const long long next = floor_at(n + 1);
    word.push_back(next - previous == 1 ? '1' : '0');
    previous = next;
  }
  return word;
}

std::string lex_minimal_word(const SturmianParams& params, std::size_t length) {
  SturmianParams base = params;
  base.rho = 0.0;
  return mechanical_word(base, length, 0);
}

int FactorOracle::find(std::string_view word) const {
  int id = 0;
  for (char ch : word) {
    if (ch != '0' && ch != '1') return -1;
    id = nodes_[static_cast<std::size_t>(id)].next[ch - '0'];
    if (id < 0) return -1;
  }
  return id;
}

std::string FactorOracle::successors(std::string_view word) const {
  if (word.size() > max_len_) throw DepthExceeded("factor longer than oracle max_len");
  const int id = find(word);
  if (id < 0) throw InputError("'" + std::string(word) + "' is not a factor");
  std::string out;
  for (int symbol = 0; symbol < 2; ++symbol) {
    if (nodes_[static_cast<std::size_t>(id)].next[symbol] >= 0) {
      out.push_back(static_cast<char>('0' + symbol));
    }
  }
  return out;
}

std::vector<std::string> FactorOracle::right_special(std::size_t n) const {
  std::vector<std::string> out;
  for (const auto& word : factors(n)) {
    if (successors(word).size() == 2) out.push_back(word);
  }
  return out;
}

FactorOracle build_factor_oracle(const SturmianParams& params) {
  if (params.max_len < 1) throw InputError("factor oracle needs max_len >= 1");
  const std::size_t harvest = params.max_len + 1;
  const std::size_t length = std::max<std::size_t>(10 * harvest, 1000);
  const std::string word = mechanical_word(params, length, 1);

  FactorOracle oracle;
  oracle.max_len_ = params.max_len;
  oracle.nodes_.push_back({});
  for (std::size_t start = 0; start + harvest <= word.size(); ++start) {
    int id = 0;
    for (std::size_t i = 0; i < harvest; ++i) {
      const int symbol = word[start + i] - '0';
      int next = oracle.nodes_[static_cast<std::size_t>(id)].next[symbol];
      if (next < 0) {
        next = static_cast<int>(oracle.nodes_.size());
        FactorOracle::Node node;
        node.word = oracle.nodes_[static_cast<std::size_t>(id)].word + word[start + i];
        oracle.nodes_[static_cast<std::size_t>(id)].next[symbol] = next;
        oracle.nodes_.push_back(std::move(node));
      }
      id = next;
    }
  }
  std::vector<std::vector<std::string>> by_length(harvest + 1);
  for (const auto& node : oracle.nodes_) by_length[node.word.size()].push_back(node.word);
  for (std::size_t n = 0; n <= harvest; ++n) {
    if (by_length[n].size() != n + 1) {
      throw ComplexityViolation(
          "harvested " + std::to_string(by_length[n].size()) +
          " factors of length " + std::to_string(n) + ", expected " +
          std::to_string(n + 1));
    }
    std::sort(by_length[n].begin(), by_length[n].end());
  }
  by_length.pop_back();
  oracle.by_length_ = std::move(by_length);
  return oracle;
}

namespace {

template <typename Choose>
LabeledTree label_tree(const SturmianParams& params, unsigned depth,
                       Choose&& choose_swap) {
  if (depth > params.max_depth) {
    throw TooLarge("tree depth " + std::to_string(depth) + " exceeds cap " +
                   std::to_string(params.max_depth));
  }
  SturmianParams oracle_params = params;
  oracle_params.max_len = std::max<std::size_t>(params.max_len, depth + 1);
  const auto oracle = build_factor_oracle(oracle_params);

  LabeledTree tree(2, depth);
  std::vector<int> state(tree.size(), -1);
  // The root carries the first symbol of the least sequence.
  const int root_symbol = oracle.node(0).next[0] >= 0 ? 0 : 1;
  tree[0] = static_cast<std::uint8_t>(root_symbol);
  state[0] = oracle.node(0).next[root_symbol];

  const std::size_t internal = depth == 0 ? 0 : tree.level_start(depth);
  for (std::size_t node = 0; node < internal; ++node) {
    const auto& here = oracle.node(state[node]);
    const std::size_t left = tree.child(node, 0);
    const std::size_t right = tree.child(node, 1);
    if (here.next[0] >= 0 && here.next[1] >= 0) {
      const bool swap = choose_swap();
      tree[left] = swap ? 1 : 0;
      tree[right] = swap ? 0 : 1;
    } else {
      const std::uint8_t forced = here.next[0] >= 0 ? 0 : 1;
      if (here.next[forced] < 0) throw ComplexityViolation("factor has no successor");
      tree[left] = tree[right] = forced;
    }
    state[left] = here.next[tree[left]];
    state[right] = here.next[tree[right]];
  }
  return tree;
}

}  // namespace

LabeledTree label_tree_lex(const SturmianParams& params, unsigned depth) {
  return label_tree(params, depth, [] { return false; });
}

LabeledTree label_tree_random(const SturmianParams& params, unsigned depth,
                              std::uint64_t seed) {
  std::mt19937_64 generator(seed);
  return label_tree(params, depth, [&] { return (generator() >> 63) != 0; });
}

std::vector<std::size_t> tree_complexity(const LabeledTree& tau, unsigned n_max) {
  if (n_max > tau.depth()) {
    throw DepthExceeded("n_max " + std::to_string(n_max) + " exceeds tree depth " +
                        std::to_string(tau.depth()));
  }
  std::vector<std::size_t> out;
  for (unsigned n = 0; n <= n_max; ++n) out.push_back(blocks_in_tree(tau, n, 2).count);
  return out;
}

}  // namespace treeshift::sturmian
