// Copyright 2026 The svineq Authors
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

#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "svineq/bounds.hpp"
#include "svineq/campaign.hpp"
#include "svineq/spectra.hpp"

namespace {

using svineq::json;

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw svineq::Error("cannot open input file: " + path);
  json j;
  in >> j;
  return j;
}

std::string csv_escape(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

// CSV renderings exist for the flat report shapes; everything else falls
// back to JSON.
std::string render(const json& j, const std::string& format) {
  if (format != "csv") return j.dump(2) + "\n";
  std::ostringstream out;
  if (j.contains("slack")) {  // GapReport
    out << "name,lhs,rhs,slack,scale,holds,tol_rel\n";
    out << csv_escape(j.at("name")) << "," << j.at("lhs") << ","
        << j.at("rhs") << "," << j.at("slack") << "," << j.at("scale") << ","
        << j.at("holds") << "," << j.at("tol_rel") << "\n";
  } else if (j.contains("steps")) {  // TraceReport
    out << "theorem,step,lhs,rhs,slack,holds\n";
    for (const auto& s : j.at("steps")) {
      const json& g = s.at("gap");
      out << csv_escape(j.at("theorem")) << "," << csv_escape(s.at("name"))
          << "," << g.at("lhs") << "," << g.at("rhs") << "," << g.at("slack")
          << "," << g.at("holds") << "\n";
    }
  } else if (j.contains("per_check")) {  // CampaignSummary
    out << "check,checked,held,violated,near_tight\n";
    for (const auto& [name, c] : j.at("per_check").items())
      out << name << "," << c.at("checked") << "," << c.at("held") << ","
          << c.at("violated") << "," << c.at("near_tight") << "\n";
  } else {
    return j.dump(2) + "\n";
  }
  return out.str();
}

void emit(const json& j, const std::string& out_path,
          const std::string& format) {
  const std::string text = render(j, format);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) throw svineq::Error("cannot open output file: " + out_path);
    out << text;
  }
}

bool report_clean(const json& report) {
  if (report.contains("holds")) return report.at("holds").get<bool>();
  if (report.contains("all_hold")) return report.at("all_hold").get<bool>();
  if (report.contains("gap")) return report.at("gap").at("holds").get<bool>();
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"singular-value inequality checkers and proof traces"};
  app.require_subcommand(1);

  std::string out_path;
  std::string format = "json";
  double tol_rel = svineq::kDefaultTolRel;
  uint64_t seed = 0;
  app.add_option("--out", out_path, "write the report to this path");
  app.add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--tol-rel", tol_rel, "relative tolerance")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "campaign / sampling seed");

  // check: one instance payload, same schema the witness store uses
  auto* check = app.add_subcommand(
      "check", "evaluate one inequality instance from a payload file");
  std::string check_input;
  check->add_option("input", check_input, "payload JSON file")->required();

  // trace: proof walk-through on one instance
  auto* trace =
      app.add_subcommand("trace", "numerically replay one proof on an instance");
  std::string trace_theorem, trace_input;
  trace->add_option("theorem", trace_theorem, "theorem1|theorem2|theorem3")
      ->required()
      ->check(CLI::IsMember({"theorem1", "theorem2", "theorem3"}));
  trace->add_option("input", trace_input, "instance JSON file")->required();

  // fuzz: campaign from a config file
  auto* fuzz = app.add_subcommand("fuzz", "run a randomized check campaign");
  std::string fuzz_config;
  fuzz->add_option("config", fuzz_config, "campaign config JSON file")
      ->required();

  // oracle: exhaustive small-n coverage
  auto* oracle = app.add_subcommand(
      "oracle", "exhaustively check every index configuration at small n");
  int oracle_n = 3;
  int oracle_count = 10;
  std::string oracle_instances, oracle_ensemble = "ginibre";
  oracle->add_option("--n", oracle_n, "dimension, at most 6")->required();
  oracle->add_option("--count", oracle_count,
                     "number of random instances when no file is given");
  oracle->add_option("--instances", oracle_instances,
                     "JSON file: list of {\"X\":matrix, \"Y\":matrix}");
  oracle->add_option("--ensemble", oracle_ensemble,
                     "ginibre|hermitian|diagonal|lowrank");

  // bound: certified perturbation bound on a matrix pair
  auto* bound =
      app.add_subcommand("bound", "perturbation bound for a matrix pair");
  std::string bound_x, bound_y, bound_f, bound_idx;
  double bound_p = 0.0;
  bound->add_option("--x", bound_x, "matrix JSON file")->required();
  bound->add_option("--y", bound_y, "matrix JSON file")->required();
  bound->add_option("--f", bound_f, "concave function JSON file");
  bound->add_option("--idx", bound_idx, "index sequence JSON file");
  bound->add_option("--p", bound_p, "Schatten exponent in (0,1]");

  // decompose: hook decomposition of a concave function
  auto* decompose = app.add_subcommand(
      "decompose", "decompose a concave function into hook atoms");
  std::string dec_f;
  double dec_xmax = 0.0;
  int dec_segments = 200;
  decompose->add_option("f", dec_f, "concave function JSON file")->required();
  decompose->add_option("--x-max", dec_xmax,
                        "approximation range for non-piecewise forms");
  decompose->add_option("--segments", dec_segments,
                        "approximation segment count");

  // compact: deduplicate a witness store
  auto* compact =
      app.add_subcommand("compact", "deduplicate a witness JSON-lines file");
  std::string compact_in, compact_out;
  compact->add_option("input", compact_in, "witness file")->required();
  compact->add_option("output", compact_out, "deduplicated output file")
      ->required();

  // global flags stay usable after the subcommand name
  for (CLI::App* sc : {check, trace, fuzz, oracle, bound, decompose, compact})
    sc->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*check) {
      json payload = load_json(check_input);
      payload["tol_rel"] = tol_rel;
      const json report = svineq::replay_witness(payload);
      emit(report, out_path, format);
      return report_clean(report) ? 0 : 1;
    }

    if (*trace) {
      json payload = load_json(trace_input);
      payload["check"] = "trace_" + trace_theorem;
      payload["tol_rel"] = tol_rel;
      const json report = svineq::replay_witness(payload);
      emit(report, out_path, format);
      return report_clean(report) ? 0 : 1;
    }

    if (*fuzz) {
      svineq::CampaignConfig cfg =
          svineq::campaign_config_from_json(load_json(fuzz_config));
      if (seed != 0) cfg.seed = seed;
      if (app.count("--tol-rel") > 0) cfg.tol_rel = tol_rel;
      std::vector<svineq::Witness> witnesses;
      const svineq::CampaignSummary summary =
          svineq::run_campaign(cfg, &witnesses);
      emit(svineq::to_json(summary), out_path, format);
      return summary.any_violation() ? 1 : 0;
    }

    if (*oracle) {
      std::vector<std::pair<svineq::ComplexMatrix, svineq::ComplexMatrix>>
          instances;
      if (!oracle_instances.empty()) {
        for (const auto& item : load_json(oracle_instances))
          instances.emplace_back(svineq::matrix_from_json(item.at("X")),
                                 svineq::matrix_from_json(item.at("Y")));
      } else {
        svineq::Ensemble e{svineq::ensemble_kind_from_name(oracle_ensemble),
                           oracle_n, seed, std::min(1, oracle_n), 0.1};
        for (int i = 0; i < oracle_count; ++i)
          instances.emplace_back(
              svineq::sample(e, 2 * static_cast<uint64_t>(i)),
              svineq::sample(e, 2 * static_cast<uint64_t>(i) + 1));
      }
      const std::vector<svineq::ConcaveFn> family = {
          svineq::ConcaveFn::hook(0.5), svineq::ConcaveFn::hook(1.0),
          svineq::ConcaveFn::power(0.5), svineq::ConcaveFn::power(1.0)};
      const svineq::OracleReport report =
          svineq::exhaustive_oracle(oracle_n, instances, family, tol_rel);
      emit(svineq::to_json(report), out_path, format);
      return report.failures.empty() ? 0 : 1;
    }

    if (*bound) {
      const svineq::ComplexMatrix x = svineq::matrix_from_json(load_json(bound_x));
      const svineq::ComplexMatrix y = svineq::matrix_from_json(load_json(bound_y));
      svineq::BoundResult result;
      if (bound_p > 0.0) {
        result = svineq::schatten_p_deviation(x, y, bound_p, tol_rel);
      } else {
        if (bound_f.empty())
          throw svineq::InvalidInput("bound needs either --f or --p");
        const svineq::ConcaveFn f = svineq::concave_from_json(load_json(bound_f));
        svineq::IndexSeq idx;
        if (!bound_idx.empty()) {
          idx = svineq::index_seq_from_json(load_json(bound_idx));
        } else {
          std::vector<int> full(static_cast<size_t>(x.n()));
          std::iota(full.begin(), full.end(), 1);
          idx = svineq::IndexSeq(x.n(), std::move(full));
        }
        result = svineq::spectral_deviation_bound(x, y, f, idx, tol_rel);
      }
      emit(svineq::to_json(result), out_path, format);
      return result.gap.holds ? 0 : 1;
    }

    if (*decompose) {
      svineq::ConcaveFn f = svineq::concave_from_json(load_json(dec_f));
      json report;
      if (f.form() == svineq::ConcaveForm::PiecewiseLinear) {
        report = json{{"measure", svineq::to_json(svineq::hook_decompose(f))},
                      {"sup_error", 0.0}};
      } else {
        if (!(dec_xmax > 0.0))
          throw svineq::InvalidInput(
              "closed-form functions need --x-max for the approximation range");
        const svineq::PwlApprox approx =
            svineq::pwl_approximate(f, dec_xmax, dec_segments);
        report =
            json{{"measure", svineq::to_json(svineq::hook_decompose(approx.fn))},
                 {"sup_error", approx.sup_error}};
      }
      emit(report, out_path, format);
      return 0;
    }

    if (*compact) {
      const long kept = svineq::compact_witness_file(compact_in, compact_out);
      emit(json{{"kept", kept}}, out_path, format);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
