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
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace treeshift {

// A d x d 0,1 matrix M over the alphabet {a_1..a_d}. M(i, j) == true iff
// symbol j may label a child of a node labeled i. Construction rejects empty
// matrices and any all-zero row or column.
class TransitionMatrix {
 public:
  TransitionMatrix(std::vector<std::vector<std::uint8_t>> rows,
                   std::vector<std::string> symbols = {});

  std::size_t size() const { return d_; }
  bool operator()(std::size_t i, std::size_t j) const {
    return bits_[i * d_ + j] != 0;
  }
  std::span<const std::uint8_t> row(std::size_t i) const {
    return {bits_.data() + i * d_, d_};
  }

  std::vector<std::size_t> successors(std::size_t i) const;
  std::size_t row_sum(std::size_t i) const;
  std::size_t max_row_sum() const;

  const std::string& symbol(std::size_t i) const { return symbols_[i]; }
  const std::vector<std::string>& symbols() const { return symbols_; }

  // Row-string notation, e.g. "110,101,001".
  std::string to_string() const;

  // Relabels symbol i as perm[i].
  TransitionMatrix permuted(std::span<const std::size_t> perm) const;

  bool operator==(const TransitionMatrix& other) const {
    return d_ == other.d_ && bits_ == other.bits_;
  }

 private:
  std::size_t d_;
  std::vector<std::uint8_t> bits_;
  std::vector<std::string> symbols_;
};

// Parses "110,101,001" (whitespace around rows ignored) or a JSON array of
// arrays of 0/1 integers. Throws ParseError/BadChar/NonSquare/RowOrColumnZero.
TransitionMatrix parse_matrix(std::string_view text);

// A matrix spec: inline text for parse_matrix, or "@path" naming a file
// holding JSON or one row string per line.
TransitionMatrix parse_matrix_spec(std::string_view spec);

// Single character used for symbol index i in block encodings: '0'-'9'
// then 'a'-'z'.
char symbol_char(std::size_t i);

}  // namespace treeshift
