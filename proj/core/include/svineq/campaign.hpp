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

#ifndef SVINEQ_CAMPAIGN_HPP
#define SVINEQ_CAMPAIGN_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "svineq/engine.hpp"
#include "svineq/ensemble.hpp"
#include "svineq/json_io.hpp"

namespace svineq {

enum class CheckKind { Tf, FTf, Mirsky, Theorem3, Traces, Bounds };

struct EnsembleSpec {
  EnsembleKind kind = EnsembleKind::GinibreComplex;
  int rank = 1;
  double noise_scale = 0.1;
};

struct CampaignConfig {
  std::vector<EnsembleSpec> ensembles;  // defaults to all four kinds
  int n_min = 2;
  int n_max = 6;
  long instance_count = 0;
  std::vector<ConcaveFn> f_family;  // defaults to {hook(1), power(0.5)}
  double tol_rel = kDefaultTolRel;
  std::vector<CheckKind> checks;  // defaults to all
  double tight_threshold = 0.999;
  uint64_t seed = 0;
  std::string witness_path;  // JSON-lines, append-ordered; empty = no file
  std::string summary_path;  // JSON; empty = no file
  int sampled_indices = 12;  // index draws per instance when n > 6
  int max_near_tight = 100;  // stored near-tight witnesses per check
  // Test-only hook: negates every RHS so the violation path can be
  // exercised end to end.
  bool corrupt_rhs = false;
};

struct Witness {
  enum class Kind { Violation, NearTight };
  Kind kind = Kind::Violation;
  std::string check;
  json payload;  // full input echo; replayable on its own
  json report;
};

struct CheckCounts {
  long checked = 0;
  long held = 0;
  long violated = 0;
  long near_tight = 0;
};

struct CampaignSummary {
  long instances = 0;
  std::map<std::string, CheckCounts> per_check;

  bool any_violation() const;
};

CampaignSummary run_campaign(const CampaignConfig& cfg,
                             std::vector<Witness>* witnesses = nullptr);

// Re-evaluates a witness payload from scratch; returns the recomputed report.
json replay_witness(const json& payload);

struct OracleReport {
  long instances = 0;
  long configurations = 0;
  std::map<std::string, long> per_inequality;  // eq1, eq2, eq5, eq11
  std::vector<Witness> failures;
};

// Brute-force coverage at n <= 6: every admissible TF pair (all m), every
// index sequence, every (flags, b) partition configuration, on the given
// (X, Y) instances with A=X, B=Y, C=-(X+Y).
OracleReport exhaustive_oracle(
    int n, const std::vector<std::pair<ComplexMatrix, ComplexMatrix>>& instances,
    const std::vector<ConcaveFn>& f_family, double tol_rel = kDefaultTolRel);

json to_json(const CampaignSummary& s);
json to_json(const Witness& w);
json to_json(const OracleReport& r);

CampaignConfig campaign_config_from_json(const json& j);
json to_json(const CampaignConfig& cfg);

std::string check_kind_name(CheckKind k);
CheckKind check_kind_from_name(const std::string& name);

void write_witness_file(const std::string& path,
                        const std::vector<Witness>& witnesses);

// Deduplicates a witness JSON-lines file by payload hash; returns the number
// of lines kept.
long compact_witness_file(const std::string& in_path,
                          const std::string& out_path);

}  // namespace svineq

#endif  // SVINEQ_CAMPAIGN_HPP
