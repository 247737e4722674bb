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

#include "treeshift/matrix.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <numeric>

#include <json.hpp>

#include "treeshift/errors.hpp"

namespace treeshift {

char symbol_char(std::size_t i) {
  static constexpr std::string_view kDigits =
      "0123456789abcdefghijklmnopqrstuvwxyz";
  if (i >= kDigits.size()) {
    throw InputError("alphabet too large for block encoding (max 36 symbols)");
  }
  return kDigits[i];
}

TransitionMatrix::TransitionMatrix(std::vector<std::vector<std::uint8_t>> rows,
                                   std::vector<std::string> symbols)
    : d_(rows.size()), symbols_(std::move(symbols)) {
  if (d_ == 0) throw NonSquare("matrix must have at least one row");
  bits_.reserve(d_ * d_);
  for (std::size_t i = 0; i < d_; ++i) {
    if (rows[i].size() != d_) {
      throw NonSquare("row " + std::to_string(i + 1) + " has length " +
                      std::to_string(rows[i].size()) + ", expected " +
                      std::to_string(d_));
    }
    for (std::size_t j = 0; j < d_; ++j) {
      if (rows[i][j] > 1) {
        throw BadChar("matrix entries must be 0 or 1", i, j);
      }
      bits_.push_back(rows[i][j]);
    }
  }
  for (std::size_t i = 0; i < d_; ++i) {
    if (row_sum(i) == 0) {
      throw RowOrColumnZero("row " + std::to_string(i + 1) + " is all zeros");
    }
    bool column_hit = false;
    for (std::size_t r = 0; r < d_ && !column_hit; ++r) column_hit = (*this)(r, i);
    if (!column_hit) {
      throw RowOrColumnZero("column " + std::to_string(i + 1) +
                            " is all zeros");
    }
  }
  if (symbols_.empty()) {
    for (std::size_t i = 0; i < d_; ++i) symbols_.push_back(std::to_string(i + 1));
  } else if (symbols_.size() != d_) {
    throw InputError("symbol list size does not match matrix dimension");
  }
}

std::vector<std::size_t> TransitionMatrix::successors(std::size_t i) const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < d_; ++j) {
    if ((*this)(i, j)) out.push_back(j);
  }
  return out;
}

std::size_t TransitionMatrix::row_sum(std::size_t i) const {
  const auto r = row(i);
  return static_cast<std::size_t>(std::count(r.begin(), r.end(), 1));
}

std::size_t TransitionMatrix::max_row_sum() const {
  std::size_t best = 0;
  for (std::size_t i = 0; i < d_; ++i) best = std::max(best, row_sum(i));
  return best;
}

std::string TransitionMatrix::to_string() const {
  std::string out;
  out.reserve(d_ * (d_ + 1));
  for (std::size_t i = 0; i < d_; ++i) {
    if (i > 0) out.push_back(',');
    for (std::size_t j = 0; j < d_; ++j) out.push_back((*this)(i, j) ? '1' : '0');
  }
  return out;
}

TransitionMatrix TransitionMatrix::permuted(
    std::span<const std::size_t> perm) const {
  if (perm.size() != d_) throw InputError("permutation size mismatch");
  std::vector<std::vector<std::uint8_t>> rows(d_, std::vector<std::uint8_t>(d_));
  std::vector<std::string> names(d_);
  for (std::size_t i = 0; i < d_; ++i) {
    names[perm[i]] = symbols_[i];
    for (std::size_t j = 0; j < d_; ++j) rows[perm[i]][perm[j]] = bits_[i * d_ + j];
  }
  return TransitionMatrix(std::move(rows), std::move(names));
}

namespace {

TransitionMatrix parse_json_matrix(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON matrix: ") + e.what(), 0,
                     e.byte > 0 ? e.byte - 1 : 0);
  }
  if (!doc.is_array()) throw ParseError("JSON matrix must be an array", 0, 0);
  std::vector<std::vector<std::uint8_t>> rows;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const auto& row = doc[i];
    if (!row.is_array()) throw ParseError("JSON row must be an array", i, 0);
    std::vector<std::uint8_t> bits;
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (!row[j].is_number_integer() ||
          (row[j].get<long>() != 0 && row[j].get<long>() != 1)) {
        throw BadChar("matrix entries must be 0 or 1", i, j);
      }
      bits.push_back(static_cast<std::uint8_t>(row[j].get<long>()));
    }
    rows.push_back(std::move(bits));
  }
  return TransitionMatrix(std::move(rows));
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

TransitionMatrix parse_matrix(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw ParseError("empty matrix specification", 0, 0);
  if (text.front() == '[') return parse_json_matrix(text);

  std::vector<std::vector<std::uint8_t>> rows;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto end = comma == std::string_view::npos ? text.size() : comma;
    const auto row_text = trim(text.substr(start, end - start));
    const std::size_t r = rows.size();
    if (row_text.empty()) throw ParseError("empty row", r, 0);
    std::vector<std::uint8_t> bits;
    for (std::size_t j = 0; j < row_text.size(); ++j) {
      const char ch = row_text[j];
      if (ch != '0' && ch != '1') {
        throw BadChar(std::string("unexpected character '") + ch + "'", r, j);
      }
      bits.push_back(static_cast<std::uint8_t>(ch - '0'));
    }
    rows.push_back(std::move(bits));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return TransitionMatrix(std::move(rows));
}

TransitionMatrix parse_matrix_spec(std::string_view spec) {
  if (spec.empty() || spec.front() != '@') return parse_matrix(spec);
  const std::string path(spec.substr(1));
  std::ifstream in(path);
  if (!in) throw InputError("cannot open matrix file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string content = buffer.str();
  const auto body = trim(content);
  if (!body.empty() && body.front() == '[') return parse_matrix(body);
  std::string joined;
  std::istringstream lines(content);
  for (std::string line; std::getline(lines, line);) {
    const auto row = trim(line);
    if (row.empty()) continue;
    if (!joined.empty()) joined.push_back(',');
    joined.append(row);
  }
  return parse_matrix(joined);
}

}  // namespace treeshift
