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

#include "treeshift/reports.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numeric>
#include <sstream>

#include "treeshift/errors.hpp"
#include "treeshift/oracle.hpp"

namespace treeshift::reports {

const std::vector<ReferenceEntry>& reference_table() {
  static const std::vector<ReferenceEntry> rows = {
      {"Gamma", "11,10", 0.481, 0.509, 0.721},
      {"X_0", "010,101,101", 0.481, 0.509, 0.722},
      {"X_1", "110,001,110", 0.481, 0.509, 0.722},
      {"X_2", "011,101,100", 0.481, 0.509, 0.722},
      {"X_3", "011,111,101", 0.81, 0.846, 1.104},
      {"X_4", "111,110,100", 0.81, 0.846, 1.214},
      {"X_5", "110,011,101", 0.693, 0.693, 0.693},
      {"X_6", "011,101,110", 0.693, 0.693, 0.693},
      {"X_7", "110,001,111", 0.693, 0.768, 1.04},
      {"X_8", "110,011,110", 0.693, 0.693, 0.693},
      {"X_9", "011,101,101", 0.693, 0.693, 0.693},
      {"X_10", "011,111,100", 0.693, 0.774, 1.242},
      {"X_11", "111,100,100", 0.693, 0.763, 1.04},
      {"A_1", "110,101,001", 0.481, 0.611, kInfinity},
      {"A_2", "110,011,010", 0.481, 0.575, 0.962},
  };
  return rows;
}

namespace {

std::string fixed(double value, int precision = 6) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (std::isnan(value)) return "nan";
  std::ostringstream out;
  out << std::fixed << std::setprecision(precision) << value;
  return out.str();
}

nlohmann::json number(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (std::isnan(value)) return nullptr;
  return value;
}

template <typename T>
nlohmann::json optional_number(const std::optional<T>& value) {
  return value ? number(*value) : nlohmann::json(nullptr);
}

bool within(double value, double expected, double tolerance) {
  if (std::isinf(expected)) return std::isinf(value) && (value > 0) == (expected > 0);
  return std::abs(value - expected) <= tolerance;
}

}  // namespace

ReferenceRow compute_reference_row(const ReferenceEntry& entry, unsigned n_max) {
  const auto m = parse_matrix(entry.matrix);
  const auto spectral = analyze_matrix(m);
  const auto series = run(m, {2, n_max}, CountMode::logdomain);
  ReferenceRow row;
  row.entry = entry;
  row.htop = spectral.htop;
  row.h_est = series.h_accelerated();
  row.U = upper_bound_U(spectral);
  if (spectral.parry) row.Um = heuristic_Um(spectral);
  row.irreducible = spectral.irreducible;
  row.htop_ok = within(row.htop, entry.published_htop, kHtopTolerance);
  row.h_ok = within(row.h_est, entry.published_h, kHTolerance);
  row.U_ok = within(row.U, entry.published_U, kUTolerance);
  row.lower_ok = !row.irreducible || row.htop <= row.h_est + kInequalitySlack;
  row.upper_ok = std::isinf(row.U) || row.h_est <= row.U + kInequalitySlack;
  return row;
}

std::vector<ReferenceRow> compute_reference_table(unsigned n_max) {
  std::vector<ReferenceRow> rows;
  for (const auto& entry : reference_table()) rows.push_back(compute_reference_row(entry, n_max));
  return rows;
}

AnalyzeReport analyze(const TransitionMatrix& m, const TreeParams& params,
                      CountMode mode, std::string name) {
  AnalyzeReport report{std::move(name), m, params, analyze_matrix(m), 0.0,
                       std::nullopt, run(m, params, mode), {}, true, true};
  report.U = upper_bound_U(report.spectral);
  if (report.spectral.parry) report.Um = heuristic_Um(report.spectral);
  report.kary_bounds = kary_bounds(m.max_row_sum(), params.arity);
  const double h = report.series.h_accelerated();
  if (report.spectral.irreducible) {
    report.lower_ok = report.spectral.htop <= h + kInequalitySlack;
  }
  if (std::isfinite(report.U) && params.arity == 2) {
    report.upper_ok = h <= report.U + kInequalitySlack;
  }
  return report;
}

bool GoldenReport::pass() const {
  bool bounds = std::all_of(rooted_zero.bounds.begin(), rooted_zero.bounds.end(),
                            [](const golden::GammaBound& b) { return b.holds; });
  return vector_agrees && oracle_agrees && bounds && q_alternates;
}

GoldenReport golden_report(unsigned n_max, unsigned precision_bits) {
  if (n_max < 4) throw InputError("golden report needs depth >= 4");
  GoldenReport report;
  report.n_max = n_max;
  report.scalar = golden::golden_scalar(n_max);
  report.rooted_zero = golden::golden_rooted_zero(n_max, precision_bits);
  const auto m = parse_matrix("11,10");
  report.series = run(m, {2, n_max}, CountMode::exact);

  report.vector_levels =
      static_cast<unsigned>(std::min<std::size_t>(report.series.exact_counts.size(), 19));
  report.vector_agrees = true;
  for (unsigned n = 0; n < report.vector_levels; ++n) {
    const auto& x = report.series.exact_counts[n];
    if (x[0] + x[1] != report.scalar.p[n] || x[0] != report.rooted_zero.a[n]) {
      report.vector_agrees = false;
    }
  }
  report.oracle_agrees = true;
  for (unsigned n = 0; n <= 3; ++n) {
    if (enumerate_configs(m, 2, n).total != report.scalar.p[n]) report.oracle_agrees = false;
  }
  const auto& last = report.series.final();
  report.h = report.series.h_accelerated();
  report.h2 = last.h2.value_or(0.0);
  report.b_estimate = std::exp(-last.increment.value_or(0.0));
  report.c_estimate = std::exp(report.h / 2);
  report.q_alternates = true;
  for (unsigned n = 3; n <= n_max; ++n) {
    const double d1 = report.scalar.q[n] - report.scalar.q[n - 1];
    const double d0 = report.scalar.q[n - 1] - report.scalar.q[n - 2];
    if (!(d1 * d0 < 0)) report.q_alternates = false;
  }
  return report;
}

unsigned depth_for_nodes(unsigned arity, double min_nodes) {
  unsigned n = 0;
  while (node_count(arity, n).convert_to<double>() < min_nodes) ++n;
  return n;
}

bool KaryReport::pass() const {
  return std::all_of(levels.begin(), levels.end(),
                     [](const KaryLevel& l) { return l.within; });
}

KaryReport kary_report(const TransitionMatrix& m, const std::vector<unsigned>& arities,
                       unsigned depth) {
  std::vector<unsigned> sorted = arities;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  KaryReport report;
  for (unsigned k : sorted) {
    if (k < 2) throw InputError("arity must be at least 2");
    KaryLevel level;
    level.arity = k;
    level.n_max = depth != 0 ? depth : depth_for_nodes(k, 1e4);
    level.h = run(m, {k, level.n_max}, CountMode::logdomain).h_accelerated();
    std::tie(level.lower, level.upper) = kary_bounds(m.max_row_sum(), k);
    constexpr double kRounding = 1e-12;
    level.within = level.h >= level.lower - kRounding && level.h <= level.upper + kRounding;
    report.levels.push_back(level);
  }
  report.increasing = true;
  for (std::size_t i = 1; i < report.levels.size(); ++i) {
    if (!(report.levels[i].h > report.levels[i - 1].h)) report.increasing = false;
  }
  return report;
}

SturmianReport sturmian_report(const sturmian::SturmianParams& params, bool random,
                               unsigned depth, unsigned n_max,
                               const std::vector<std::uint64_t>& seeds) {
  if (n_max > depth) throw DepthExceeded("n_max exceeds tree depth");
  SturmianReport report;
  report.mode = random ? "random" : "lex";
  report.depth = depth;
  report.n_max = n_max;
  report.slope = params.alpha.describe();

  sturmian::SturmianParams oracle_params = params;
  oracle_params.max_len = std::max<std::size_t>(params.max_len, depth + 1);
  const auto oracle = sturmian::build_factor_oracle(oracle_params);
  const auto least = sturmian::lex_minimal_word(params, depth + 1);

  std::vector<std::uint64_t> run_seeds = random ? seeds : std::vector<std::uint64_t>{0};
  if (run_seeds.empty()) throw InputError("random mode needs at least one seed");
  report.paths_are_factors = true;
  report.left_edge_ok = true;
  for (auto seed : run_seeds) {
    const auto tree = random ? sturmian::label_tree_random(params, depth, seed)
                             : sturmian::label_tree_lex(params, depth);
    for (const auto& word : tree.level_path_words(depth)) {
      if (!oracle.contains(word)) report.paths_are_factors = false;
    }
    if (!random) {
      report.left_edge_ok = tree.path_word(tree.level_start(depth)) == least;
    }
    SturmianRun run;
    run.seed = seed;
    if (run_seeds.size() == 1) run.tree = tree.to_string();
    run.complexity = sturmian::tree_complexity(tree, n_max);
    report.runs.push_back(std::move(run));
  }
  return report;
}

PlasticReport plastic_example(unsigned n_max) {
  PlasticReport report{analyze(parse_matrix("010,001,110"), {2, n_max},
                                 CountMode::logdomain, "plastic"),
                         0.2812, {}};
  std::ostringstream note;
  note << "printed lambda ~ 0.2812 matches log(lambda) = "
       << fixed(report.analysis.spectral.htop, 4)
       << "; the Perron root itself is lambda = "
       << fixed(report.analysis.spectral.lambda, 4)
       << " (real root of x^3 = x + 1)";
  report.note = note.str();
  return report;
}

// ---------------------------------------------------------------- JSON

nlohmann::json to_json(const EntropySeries& series) {
  nlohmann::json levels = nlohmann::json::array();
  for (const auto& level : series.levels) {
    nlohmann::json row;
    row["n"] = level.n;
    row["p_log"] = number(level.p_log);
    row["h_n"] = number(level.h);
    row["a_n"] = optional_number(level.increment);
    row["h_acc"] = optional_number(level.accelerated);
    row["h2_n"] = optional_number(level.h2);
    row["log_x"] = level.symbol_logs;
    if (level.n < series.exact_counts.size()) {
      nlohmann::json exact = nlohmann::json::array();
      for (const auto& value : series.exact_counts[level.n]) exact.push_back(value.str());
      row["x"] = exact;
    }
    levels.push_back(row);
  }
  nlohmann::json doc;
  doc["arity"] = series.arity;
  doc["mode"] = series.mode == CountMode::exact ? "exact" : "logdomain";
  doc["levels"] = levels;
  doc["h_monotone_nonincreasing"] = series.monotone_nonincreasing();
  return doc;
}

nlohmann::json to_json(const AnalyzeReport& report) {
  const auto& s = report.spectral;
  nlohmann::json doc;
  if (!report.name.empty()) doc["name"] = report.name;
  doc["matrix"] = report.matrix.to_string();
  doc["arity"] = report.params.arity;
  doc["depth"] = report.params.n_max;
  doc["lambda"] = number(s.lambda);
  doc["htop"] = number(s.htop);
  doc["irreducible"] = s.irreducible;
  doc["primitive"] = s.primitive;
  doc["period"] = s.period;
  doc["left_eigenvector"] = s.left;
  doc["right_eigenvector"] = s.right;
  doc["c"] = number(s.c);
  doc["parry_measure"] = s.parry ? nlohmann::json(*s.parry) : nlohmann::json(nullptr);
  doc["row_sums"] = s.row_sums;
  doc["U"] = number(report.U);
  doc["U_m_heuristic"] = optional_number(report.Um);
  doc["h_n"] = number(report.series.h_estimate());
  doc["h_acc"] = number(report.series.h_accelerated());
  doc["kary_lower"] = number(report.kary_bounds.first);
  doc["kary_upper"] = number(report.kary_bounds.second);
  doc["htop_le_h"] = report.lower_ok;
  doc["h_le_U"] = report.upper_ok;
  doc["series"] = to_json(report.series);
  return doc;
}

nlohmann::json to_json(const std::vector<ReferenceRow>& rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& row : rows) {
    nlohmann::json r;
    r["name"] = row.entry.name;
    r["matrix"] = row.entry.matrix;
    r["htop"] = number(row.htop);
    r["h_est"] = number(row.h_est);
    r["U"] = number(row.U);
    r["U_m_heuristic"] = optional_number(row.Um);
    r["published_htop"] = number(row.entry.published_htop);
    r["published_h"] = number(row.entry.published_h);
    r["published_U"] = number(row.entry.published_U);
    r["irreducible"] = row.irreducible;
    r["htop_ok"] = row.htop_ok;
    r["h_ok"] = row.h_ok;
    r["U_ok"] = row.U_ok;
    r["htop_le_h"] = row.lower_ok;
    r["h_le_U"] = row.upper_ok;
    r["pass"] = row.pass();
    out.push_back(r);
  }
  return out;
}

nlohmann::json to_json(const GoldenReport& report) {
  nlohmann::json doc;
  nlohmann::json p = nlohmann::json::array();
  for (const auto& value : report.scalar.p) p.push_back(value.str());
  doc["p"] = p;
  nlohmann::json q = nlohmann::json::array();
  for (std::size_t n = 1; n < report.scalar.q.size(); ++n) {
    q.push_back({{"n", n}, {"q", number(report.scalar.q[n])}});
  }
  doc["q"] = q;
  doc["q_limit"] = report.scalar.q_limit;
  doc["q_alternates"] = report.q_alternates;
  nlohmann::json a = nlohmann::json::array();
  for (const auto& value : report.rooted_zero.a) a.push_back(value.str());
  doc["A"] = a;
  nlohmann::json bounds = nlohmann::json::array();
  for (const auto& b : report.rooted_zero.bounds) {
    bounds.push_back({{"n", b.n},
                      {"exponent", b.exponent.str()},
                      {"holds", b.holds},
                      {"log_margin", b.log_margin},
                      {"precision_bits", b.precision_bits}});
  }
  doc["gamma_bounds"] = bounds;
  doc["vector_recurrence_agrees"] = report.vector_agrees;
  doc["vector_levels_compared"] = report.vector_levels;
  doc["oracle_agrees"] = report.oracle_agrees;
  doc["h"] = report.h;
  doc["h2"] = report.h2;
  doc["b_estimate"] = report.b_estimate;
  doc["c_estimate"] = report.c_estimate;
  doc["pass"] = report.pass();
  return doc;
}

nlohmann::json to_json(const KaryReport& report) {
  nlohmann::json doc;
  nlohmann::json levels = nlohmann::json::array();
  for (const auto& l : report.levels) {
    levels.push_back({{"arity", l.arity},
                      {"depth", l.n_max},
                      {"h", l.h},
                      {"lower", l.lower},
                      {"upper", l.upper},
                      {"within_bounds", l.within}});
  }
  doc["levels"] = levels;
  doc["increasing_in_k"] = report.increasing;
  doc["pass"] = report.pass();
  return doc;
}

nlohmann::json to_json(const SturmianReport& report) {
  nlohmann::json doc;
  doc["mode"] = report.mode;
  doc["depth"] = report.depth;
  doc["n_max"] = report.n_max;
  doc["slope"] = report.slope;
  nlohmann::json runs = nlohmann::json::array();
  for (const auto& r : report.runs) {
    nlohmann::json run;
    run["seed"] = r.seed;
    run["complexity"] = r.complexity;
    if (!r.tree.empty()) run["tree"] = r.tree;
    runs.push_back(run);
  }
  doc["runs"] = runs;
  doc["left_edge_is_least_sequence"] = report.left_edge_ok;
  doc["paths_are_factors"] = report.paths_are_factors;
  return doc;
}

// ---------------------------------------------------------------- CSV

std::string series_csv(const EntropySeries& series) {
  std::ostringstream out;
  out << "n,p_log,h_n,a_n,h_acc,h2_n";
  const std::size_t d = series.levels.front().symbol_logs.size();
  for (std::size_t i = 0; i < d; ++i) out << ",log_x_" << (i + 1);
  out << '\n';
  auto opt = [](const std::optional<double>& v) { return v ? fixed(*v, 12) : std::string(); };
  for (const auto& level : series.levels) {
    out << level.n << ',' << fixed(level.p_log, 12) << ',' << fixed(level.h, 12) << ','
        << opt(level.increment) << ',' << opt(level.accelerated) << ',' << opt(level.h2);
    for (double value : level.symbol_logs) out << ',' << fixed(value, 12);
    out << '\n';
  }
  return out.str();
}

std::string reference_csv(const std::vector<ReferenceRow>& rows) {
  std::ostringstream out;
  out << "name,matrix,htop,h_est,U,U_m,published_htop,published_h,published_U,pass\n";
  for (const auto& r : rows) {
    out << r.entry.name << ",\"" << r.entry.matrix << "\"," << fixed(r.htop) << ','
        << fixed(r.h_est) << ',' << fixed(r.U) << ',' << (r.Um ? fixed(*r.Um) : "") << ','
        << fixed(r.entry.published_htop, 3) << ',' << fixed(r.entry.published_h, 3) << ','
        << fixed(r.entry.published_U, 3) << ',' << (r.pass() ? "pass" : "FAIL") << '\n';
  }
  return out.str();
}

std::string kary_csv(const KaryReport& report) {
  std::ostringstream out;
  out << "k,depth,h,lower,upper,within\n";
  for (const auto& l : report.levels) {
    out << l.arity << ',' << l.n_max << ',' << fixed(l.h, 9) << ',' << fixed(l.lower, 9)
        << ',' << fixed(l.upper, 9) << ',' << (l.within ? 1 : 0) << '\n';
  }
  return out.str();
}

std::string sturmian_csv(const SturmianReport& report) {
  std::ostringstream out;
  out << "seed";
  for (unsigned n = 0; n <= report.n_max; ++n) out << ",p_" << n;
  out << '\n';
  for (const auto& r : report.runs) {
    out << r.seed;
    for (auto value : r.complexity) out << ',' << value;
    out << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------- text

std::string analyze_text(const AnalyzeReport& report) {
  const auto& s = report.spectral;
  std::ostringstream out;
  if (!report.name.empty()) out << report.name << "  ";
  out << "M = " << report.matrix.to_string() << "  (k = " << report.params.arity
      << ", n = " << report.params.n_max << ")\n";
  out << "  lambda        " << fixed(s.lambda, 6) << '\n';
  out << "  htop          " << fixed(s.htop, 6) << '\n';
  out << "  irreducible   " << (s.irreducible ? "yes" : "no") << "   primitive "
      << (s.primitive ? "yes" : "no") << "   period " << s.period << '\n';
  out << "  c             " << fixed(s.c, 6) << '\n';
  out << "  h_n           " << fixed(report.series.h_estimate(), 6) << '\n';
  out << "  h_acc         " << fixed(report.series.h_accelerated(), 6) << '\n';
  out << "  U             " << fixed(report.U, 6) << '\n';
  out << "  U_m (heur.)   " << (report.Um ? fixed(*report.Um, 6) : "undefined") << '\n';
  out << "  k-ary bounds  [" << fixed(report.kary_bounds.first, 6) << ", "
      << fixed(report.kary_bounds.second, 6) << "]\n";
  out << "  htop <= h     " << (report.lower_ok ? "ok" : "VIOLATED") << '\n';
  out << "  h <= U        " << (report.upper_ok ? "ok" : "VIOLATED") << '\n';
  return out.str();
}

std::string reference_text(const std::vector<ReferenceRow>& rows) {
  std::ostringstream out;
  out << std::left << std::setw(7) << "name" << std::setw(14) << "matrix" << std::setw(18)
      << "htop (published)" << std::setw(18) << "h (published)" << std::setw(18) << "U (published)"
      << std::setw(10) << "U_m*" << "check\n";
  for (const auto& r : rows) {
    out << std::left << std::setw(7) << r.entry.name << std::setw(14) << r.entry.matrix
        << std::setw(18) << (fixed(r.htop, 4) + " (" + fixed(r.entry.published_htop, 3) + ")")
        << std::setw(18) << (fixed(r.h_est, 4) + " (" + fixed(r.entry.published_h, 3) + ")")
        << std::setw(18) << (fixed(r.U, 4) + " (" + fixed(r.entry.published_U, 3) + ")")
        << std::setw(10) << (r.Um ? fixed(*r.Um, 4) : "-") << (r.pass() ? "pass" : "FAIL")
        << '\n';
  }
  out << "* U_m is a heuristic, not a bound.\n";
  return out.str();
}

std::string golden_text(const GoldenReport& report) {
  std::ostringstream out;
  out << "golden mean tree shift, n <= " << report.n_max << '\n';
  out << "  p(0..3)            ";
  for (unsigned n = 0; n <= 3; ++n) out << report.scalar.p[n].str() << (n < 3 ? ", " : "\n");
  out << "  q(n) = p(n)/p(n-1)^2\n";
  for (unsigned n = 1; n <= report.n_max; ++n) {
    out << "    q(" << n << ") = " << fixed(report.scalar.q[n], 8) << '\n';
  }
  out << "  q limit (x = 1 + 1/x^2)  " << fixed(report.scalar.q_limit, 8) << '\n';
  out << "  q alternates       " << (report.q_alternates ? "yes" : "no") << '\n';
  out << "  A(0..4)            ";
  for (unsigned n = 0; n <= 4; ++n) out << report.rooted_zero.a[n].str() << (n < 4 ? ", " : "\n");
  for (const auto& b : report.rooted_zero.bounds) {
    out << "    A_" << b.n << " >= gamma^" << b.exponent.str() << "  "
        << (b.holds ? "holds" : "FAILS") << "  (log margin " << fixed(b.log_margin, 4)
        << ", " << b.precision_bits << " bits)\n";
  }
  out << "  vector recurrence agrees (" << report.vector_levels << " levels)  "
      << (report.vector_agrees ? "yes" : "NO") << '\n';
  out << "  brute-force oracle agrees (n <= 3)  " << (report.oracle_agrees ? "yes" : "NO")
      << '\n';
  out << "  h (accelerated)    " << fixed(report.h, 6) << '\n';
  out << "  h2                 " << fixed(report.h2, 6) << '\n';
  out << "  b estimate         " << fixed(report.b_estimate, 7) << '\n';
  out << "  c estimate         " << fixed(report.c_estimate, 6) << '\n';
  return out.str();
}

std::string kary_text(const KaryReport& report) {
  std::ostringstream out;
  out << "k  depth  h^(k)      lower      upper      within\n";
  for (const auto& l : report.levels) {
    out << std::left << std::setw(3) << l.arity << std::setw(7) << l.n_max << std::setw(11)
        << fixed(l.h, 6) << std::setw(11) << fixed(l.lower, 6) << std::setw(11)
        << fixed(l.upper, 6) << (l.within ? "yes" : "NO") << '\n';
  }
  out << "increasing in k (experimental): " << (report.increasing ? "yes" : "no") << '\n';
  return out.str();
}

std::string sturmian_text(const SturmianReport& report) {
  std::ostringstream out;
  out << "sturmian tree (" << report.mode << "), slope " << report.slope << ", depth "
      << report.depth << '\n';
  if (report.runs.size() == 1) {
    out << "  p_tau(n):";
    for (auto value : report.runs.front().complexity) out << ' ' << value;
    out << '\n';
  } else {
    out << "  " << report.runs.size() << " seeds\n  n   mean        min    max\n";
    for (unsigned n = 0; n <= report.n_max; ++n) {
      std::size_t lo = report.runs.front().complexity[n], hi = lo;
      double sum = 0.0;
      for (const auto& r : report.runs) {
        lo = std::min(lo, r.complexity[n]);
        hi = std::max(hi, r.complexity[n]);
        sum += static_cast<double>(r.complexity[n]);
      }
      out << "  " << std::left << std::setw(4) << n << std::setw(12)
          << fixed(sum / static_cast<double>(report.runs.size()), 3) << std::setw(7) << lo
          << hi << '\n';
    }
  }
  if (report.mode == "lex") {
    out << "  left edge is least sequence: " << (report.left_edge_ok ? "yes" : "NO") << '\n';
  }
  out << "  all paths are factors: " << (report.paths_are_factors ? "yes" : "NO") << '\n';
  return out.str();
}

std::string plastic_text(const PlasticReport& report) {
  return analyze_text(report.analysis) + "  note: " + report.note + '\n';
}

}  // namespace treeshift::reports
