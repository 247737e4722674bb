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

// treeshift: entropy of tree shifts of finite type.
//
// Exit codes: 0 all checks pass, 1 a numeric check failed, 2 input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "treeshift/errors.hpp"
#include "treeshift/matrix.hpp"
#include "treeshift/oracle.hpp"
#include "treeshift/reports.hpp"

namespace {

using namespace treeshift;

struct Options {
  std::string matrix;
  unsigned arity = 2;
  unsigned depth = 15;
  bool exact = false;
  std::string format = "table";
  std::vector<std::uint64_t> seeds{1};
  std::string alpha_cf = "0,2,1";
  std::string alpha_decimal;
  unsigned alpha_digits = 30;
  double rho = 0.0;
  std::string out_path;
  std::vector<unsigned> arities{2, 3, 4, 5};
  bool random = false;
  std::string sturmian_mode = "lex";
  unsigned block_depth = 6;
};

unsigned precision_from_env() {
  if (const char* value = std::getenv("TREESHIFT_PRECISION")) {
    try {
      return static_cast<unsigned>(std::stoul(value));
    } catch (const std::exception&) {
      throw InputError("TREESHIFT_PRECISION must be a positive integer");
    }
  }
  return 0;
}

void emit(const Options& options, const std::string& text) {
  if (options.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(options.out_path);
  if (!out) throw InputError("cannot write '" + options.out_path + "'");
  out << text;
}

std::string render_json(const nlohmann::json& doc) { return doc.dump(2) + "\n"; }

sturmian::SturmianParams sturmian_params(const Options& options) {
  sturmian::SturmianParams params;
  params.alpha = options.alpha_decimal.empty()
                     ? sturmian::parse_continued_fraction(options.alpha_cf)
                     : sturmian::Slope::decimal(options.alpha_decimal, options.alpha_digits);
  params.rho = options.rho;
  if (params.rho < 0.0 || params.rho >= 1.0) throw InputError("--rho must lie in [0, 1)");
  if (!options.alpha_decimal.empty()) {
    params.precision_bits = std::max(params.precision_bits, options.alpha_digits * 4);
  }
  return params;
}

int cmd_analyze(const Options& o) {
  const auto m = parse_matrix_spec(o.matrix);
  const auto report = reports::analyze(m, {o.arity, o.depth},
                                       o.exact ? CountMode::exact : CountMode::logdomain);
  if (o.format == "json") {
    emit(o, render_json(reports::to_json(report)));
  } else if (o.format == "csv") {
    emit(o, reports::series_csv(report.series));
  } else {
    emit(o, reports::analyze_text(report));
  }
  return report.pass() ? 0 : 1;
}

int cmd_reference(const Options& o) {
  const auto rows = reports::compute_reference_table(o.depth);
  if (o.format == "json") {
    emit(o, render_json(reports::to_json(rows)));
  } else if (o.format == "csv") {
    emit(o, reports::reference_csv(rows));
  } else {
    emit(o, reports::reference_text(rows));
  }
  for (const auto& row : rows) {
    if (!row.pass()) return 1;
  }
  return 0;
}

int cmd_golden(const Options& o) {
  const auto report = reports::golden_report(o.depth, precision_from_env());
  if (o.format == "json") {
    emit(o, render_json(reports::to_json(report)));
  } else if (o.format == "csv") {
    emit(o, reports::series_csv(report.series));
  } else {
    emit(o, reports::golden_text(report));
  }
  return report.pass() ? 0 : 1;
}

int cmd_kary(const Options& o, bool depth_given) {
  const auto m = parse_matrix_spec(o.matrix.empty() ? "11,10" : o.matrix);
  const auto report = reports::kary_report(m, o.arities, depth_given ? o.depth : 0);
  if (o.format == "json") {
    emit(o, render_json(reports::to_json(report)));
  } else if (o.format == "csv") {
    emit(o, reports::kary_csv(report));
  } else {
    emit(o, reports::kary_text(report));
  }
  return report.pass() ? 0 : 1;
}

int cmd_sturmian(const Options& o) {
  if (o.sturmian_mode != "lex" && o.sturmian_mode != "random") {
    throw InputError("--mode must be lex or random");
  }
  const auto report = reports::sturmian_report(sturmian_params(o), o.sturmian_mode == "random",
                                               o.depth, o.block_depth, o.seeds);
  if (o.format == "json") {
    emit(o, render_json(reports::to_json(report)));
  } else if (o.format == "csv") {
    emit(o, reports::sturmian_csv(report));
  } else {
    std::string text = reports::sturmian_text(report);
    if (report.runs.size() == 1) text += "  tree: " + report.runs.front().tree + '\n';
    emit(o, text);
  }
  return report.pass() ? 0 : 1;
}

int cmd_census(const Options& o) {
  const auto m = parse_matrix_spec(o.matrix);
  const auto enumeration = enumerate_configs(m, o.arity, o.depth);
  emit(o, census_to_json(enumeration.census) + "\n");
  return 0;
}

int cmd_plastic(const Options& o) {
  const auto report = reports::plastic_example(o.depth);
  if (o.format == "json") {
    auto doc = reports::to_json(report.analysis);
    doc["printed_lambda"] = report.printed_lambda;
    doc["note"] = report.note;
    emit(o, render_json(doc));
  } else if (o.format == "csv") {
    emit(o, reports::series_csv(report.analysis.series));
  } else {
    emit(o, reports::plastic_text(report));
  }
  return report.analysis.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entropy of tree shifts of finite type"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"table", "json", "csv"}));
    sub->add_option("--out", o.out_path, "Write output to this file");
  };

  auto* analyze = app.add_subcommand("analyze", "Spectral data, entropy series and bounds");
  analyze->add_option("-m,--matrix", o.matrix, "Row strings like 110,101,001, JSON, or @file")
      ->required();
  analyze->add_option("-k,--arity", o.arity, "Tree arity")->check(CLI::Range(2u, 64u));
  analyze->add_option("-n,--depth", o.depth, "Deepest tree level");
  analyze->add_flag("--exact", o.exact, "Exact big-integer counts");
  add_common(analyze);

  auto* reference = app.add_subcommand("reference", "Reproduce the 15-matrix reference entropy table");
  reference->add_option("-n,--depth", o.depth, "Recurrence depth");
  add_common(reference);

  auto* golden = app.add_subcommand("golden", "Golden-mean recurrences and bounds");
  golden->add_option("-n,--depth", o.depth, "Deepest level");
  add_common(golden);

  auto* kary = app.add_subcommand("kary", "k-ary entropy estimates with sandwich bounds");
  kary->add_option("-m,--matrix", o.matrix, "Matrix (default golden mean 11,10)");
  kary->add_option("--arities", o.arities, "Arity list")->delimiter(',');
  auto* kary_depth = kary->add_option("-n,--depth", o.depth,
                                      "Depth for every k (default: >= 10^4 nodes per k)");
  add_common(kary);

  auto* sturm = app.add_subcommand("sturmian", "Sturmian tree-labeling experiments");
  sturm->add_option("--mode", o.sturmian_mode, "lex or random");
  sturm->add_option("-n,--depth", o.depth, "Tree depth");
  sturm->add_option("--blocks", o.block_depth, "Largest block depth for p_tau");
  sturm->add_option("--seed", o.seeds, "Seed list for random mode")->delimiter(',');
  sturm->add_option("--alpha-cf", o.alpha_cf, "Slope as continued fraction 0,a1,a2,...");
  sturm->add_option("--alpha", o.alpha_decimal, "Slope as a decimal (approximate)");
  sturm->add_option("--alpha-digits", o.alpha_digits, "Stated precision of --alpha");
  sturm->add_option("--rho", o.rho, "Intercept in [0, 1)");
  add_common(sturm);

  auto* census = app.add_subcommand("census", "Brute-force block census as JSON");
  census->add_option("-m,--matrix", o.matrix, "Matrix spec")->required();
  census->add_option("-k,--arity", o.arity, "Tree arity")->check(CLI::Range(2u, 64u));
  census->add_option("-n,--depth", o.depth, "Block depth")->required();
  census->add_option("--out", o.out_path, "Write output to this file");

  auto* example = app.add_subcommand("plastic", "The 010,001,110 example (plastic-number Perron root)");
  example->add_option("-n,--depth", o.depth, "Recurrence depth");
  add_common(example);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(o);
    if (reference->parsed()) return cmd_reference(o);
    if (golden->parsed()) return cmd_golden(o);
    if (kary->parsed()) return cmd_kary(o, kary_depth->count() > 0);
    if (sturm->parsed()) return cmd_sturmian(o);
    if (census->parsed()) return cmd_census(o);
    if (example->parsed()) return cmd_plastic(o);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
