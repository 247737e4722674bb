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

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "treeshift/golden.hpp"
#include "treeshift/matrix.hpp"
#include "treeshift/recurrence.hpp"
#include "treeshift/spectral.hpp"
#include "treeshift/sturmian.hpp"

namespace treeshift::reports {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// Comparison tolerances against the published table (3-decimal print).
inline constexpr double kHtopTolerance = 0.002;
inline constexpr double kHTolerance = 0.005;
inline constexpr double kUTolerance = 0.002;
// Slack for htop <= h_est <= U.
inline constexpr double kInequalitySlack = 0.01;

struct ReferenceEntry {
  std::string name;
  std::string matrix;
  double published_htop;
  double published_h;
  double published_U;  // +inf for the reducible row
};

// Published rows in table order.
const std::vector<ReferenceEntry>& reference_table();

struct ReferenceRow {
  ReferenceEntry entry;
  double htop = 0.0;
  double h_est = 0.0;  // accelerated, n = n_max
  double U = 0.0;
  std::optional<double> Um;
  bool irreducible = false;
  bool htop_ok = false;
  bool h_ok = false;
  bool U_ok = false;
  bool lower_ok = false;  // htop <= h_est + slack (irreducible rows)
  bool upper_ok = false;  // h_est <= U + slack (finite U)

  bool pass() const { return htop_ok && h_ok && U_ok && lower_ok && upper_ok; }
};

ReferenceRow compute_reference_row(const ReferenceEntry& entry, unsigned n_max = 15);
std::vector<ReferenceRow> compute_reference_table(unsigned n_max = 15);

struct AnalyzeReport {
  std::string name;
  TransitionMatrix matrix;
  TreeParams params;
  SpectralData spectral;
  double U = 0.0;
  std::optional<double> Um;
  EntropySeries series;
  std::pair<double, double> kary_bounds;
  bool lower_ok = true;  // htop <= h_acc + slack, irreducible only
  bool upper_ok = true;  // h_acc <= U + slack, finite U only

  bool pass() const { return lower_ok && upper_ok; }
};

AnalyzeReport analyze(const TransitionMatrix& m, const TreeParams& params,
                      CountMode mode, std::string name = {});

struct GoldenReport {
  unsigned n_max = 0;
  golden::ScalarSequence scalar;
  golden::RootedZero rooted_zero;
  EntropySeries series;         // 2x2 golden matrix, exact where possible
  bool vector_agrees = false;   // scalar p(n) == sum_i x_i(n) and A_n == x_0(n)
  unsigned vector_levels = 0;   // levels compared exactly
  bool oracle_agrees = false;   // brute-force p(n), n <= 3
  double h = 0.0;               // accelerated
  double h2 = 0.0;
  double b_estimate = 0.0;      // exp(-a_n)
  double c_estimate = 0.0;      // exp(h / 2)
  bool q_alternates = false;    // sign of q(n) - q(n-1) alternates, n >= 3

  bool pass() const;
};

GoldenReport golden_report(unsigned n_max = 15, unsigned precision_bits = 0);

struct KaryLevel {
  unsigned arity = 2;
  unsigned n_max = 0;
  double h = 0.0;  // accelerated
  double lower = 0.0;
  double upper = 0.0;
  bool within = false;
};

struct KaryReport {
  std::vector<KaryLevel> levels;
  bool increasing = false;  // experimental evidence only
  bool pass() const;
};

// Smallest depth whose k-ary tree has at least `min_nodes` nodes.
unsigned depth_for_nodes(unsigned arity, double min_nodes);

// depth = 0 picks depth_for_nodes(k, 1e4) per arity.
KaryReport kary_report(const TransitionMatrix& m,
                       const std::vector<unsigned>& arities, unsigned depth = 0);

struct SturmianRun {
  std::uint64_t seed = 0;
  std::string tree;                    // breadth-first 0/1 string
  std::vector<std::size_t> complexity; // p_tau(0..n_max)
};

struct SturmianReport {
  std::string mode;  // "lex" or "random"
  unsigned depth = 0;
  unsigned n_max = 0;
  std::string slope;
  std::vector<SturmianRun> runs;
  bool left_edge_ok = false;  // left edge equals the least sequence
  bool paths_are_factors = false;
  bool pass() const { return left_edge_ok && paths_are_factors; }
};

SturmianReport sturmian_report(const sturmian::SturmianParams& params,
                               bool random, unsigned depth, unsigned n_max,
                               const std::vector<std::uint64_t>& seeds);

struct PlasticReport {
  AnalyzeReport analysis;
  double printed_lambda = 0.2812;  // the value the source prints as lambda
  std::string note;
};

PlasticReport plastic_example(unsigned n_max = 15);

// Serializers. JSON exact integers are decimal strings.
nlohmann::json to_json(const EntropySeries& series);
nlohmann::json to_json(const AnalyzeReport& report);
nlohmann::json to_json(const std::vector<ReferenceRow>& rows);
nlohmann::json to_json(const GoldenReport& report);
nlohmann::json to_json(const KaryReport& report);
nlohmann::json to_json(const SturmianReport& report);

// Columns: n,p_log,h_n,a_n,h_acc,h2_n,log_x_1..log_x_d.
std::string series_csv(const EntropySeries& series);
std::string reference_csv(const std::vector<ReferenceRow>& rows);
std::string kary_csv(const KaryReport& report);
std::string sturmian_csv(const SturmianReport& report);

std::string analyze_text(const AnalyzeReport& report);
std::string reference_text(const std::vector<ReferenceRow>& rows);
std::string golden_text(const GoldenReport& report);
std::string kary_text(const KaryReport& report);
std::string sturmian_text(const SturmianReport& report);
std::string plastic_text(const PlasticReport& report);

}  // namespace treeshift::reports
