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

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "svineq/campaign.hpp"
#include "svineq/spectra.hpp"

using namespace svineq;

namespace {

long binom(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace

TEST_CASE("sampling is a pure function of ensemble and index") {
  for (EnsembleKind kind :
       {EnsembleKind::GinibreComplex, EnsembleKind::HermitianGaussian,
        EnsembleKind::DiagonalNonNegative, EnsembleKind::LowRankPlusNoise}) {
    Ensemble e{kind, 4, 99, 2, 0.25};
    CHECK(sample(e, 7) == sample(e, 7));
    CHECK_FALSE(sample(e, 7) == sample(e, 8));
  }
}

TEST_CASE("hermitian samples are exactly hermitian") {
  Ensemble e{EnsembleKind::HermitianGaussian, 5, 101};
  for (uint64_t i = 0; i < 20; ++i) {
    const ComplexMatrix a = sample(e, i);
    CHECK(a.is_hermitian());
    CHECK_NOTHROW(hermitian_eigenvalues(a));
  }
}

TEST_CASE("noise-free low-rank samples have the advertised rank") {
  Ensemble e{EnsembleKind::LowRankPlusNoise, 3, 103, 1, 0.0};
  for (uint64_t i = 0; i < 20; ++i) {
    const Spectrum s = singular_values(sample(e, i));
    CHECK(std::abs(s(2)) <= 1e-10);
    CHECK(std::abs(s(3)) <= 1e-10);
  }
}

TEST_CASE("empty campaign returns all-zero counts") {
  CampaignConfig cfg;
  cfg.instance_count = 0;
  const CampaignSummary s = run_campaign(cfg);
  CHECK(s.instances == 0);
  CHECK_FALSE(s.any_violation());
  for (const auto& [name, c] : s.per_check) CHECK(c.checked == 0);
}

TEST_CASE("diagonal ensemble produces near-tight witnesses, no violations") {
  CampaignConfig cfg;
  cfg.ensembles = {{EnsembleKind::DiagonalNonNegative}};
  cfg.instance_count = 20;
  cfg.n_min = 2;
  cfg.n_max = 4;
  cfg.seed = 7;
  cfg.checks = {CheckKind::Mirsky};
  cfg.f_family = {ConcaveFn::power(1.0)};
  std::vector<Witness> witnesses;
  const CampaignSummary s = run_campaign(cfg, &witnesses);
  CHECK(s.per_check.at("mirsky").violated == 0);
  CHECK(s.per_check.at("mirsky").near_tight > 0);
  bool found = false;
  for (const Witness& w : witnesses)
    found = found || w.kind == Witness::Kind::NearTight;
  CHECK(found);
}

TEST_CASE("corrupted comparison trips the violation path everywhere") {
  CampaignConfig cfg;
  cfg.instance_count = 6;
  cfg.n_min = 2;
  cfg.n_max = 3;
  cfg.seed = 9;
  cfg.checks = {CheckKind::Tf, CheckKind::Mirsky};
  cfg.corrupt_rhs = true;
  const CampaignSummary s = run_campaign(cfg);
  CHECK(s.any_violation());
  for (const auto& [name, c] : s.per_check) {
    CHECK(c.checked > 0);
    CHECK(c.violated == c.checked);
  }
}

TEST_CASE("campaigns are deterministic byte for byte") {
  CampaignConfig cfg;
  cfg.instance_count = 8;
  cfg.n_min = 2;
  cfg.n_max = 8;
  cfg.seed = 11;
  cfg.witness_path = "wit_a.jsonl";
  std::vector<Witness> wa;
  const json sa = to_json(run_campaign(cfg, &wa));
  cfg.witness_path = "wit_b.jsonl";
  std::vector<Witness> wb;
  const json sb = to_json(run_campaign(cfg, &wb));
  CHECK(sa.dump() == sb.dump());
  CHECK(slurp("wit_a.jsonl") == slurp("wit_b.jsonl"));
  CHECK_FALSE(slurp("wit_a.jsonl").empty());
  std::remove("wit_a.jsonl");
  std::remove("wit_b.jsonl");
}

TEST_CASE("witness replay reproduces the stored report") {
  CampaignConfig cfg;
  cfg.instance_count = 10;
  cfg.n_min = 2;
  cfg.n_max = 7;
  cfg.seed = 13;
  std::vector<Witness> witnesses;
  run_campaign(cfg, &witnesses);
  REQUIRE_FALSE(witnesses.empty());
  for (const Witness& w : witnesses) {
    const json replayed = replay_witness(w.payload);
    for (const auto& [key, value] : w.report.items()) {
      if (!value.is_number()) continue;
      CHECK(std::abs(replayed.at(key).get<double>() - value.get<double>()) <=
            1e-12);
    }
  }
}

TEST_CASE("exhaustive coverage counts match the closed form") {
  const int n = 2;
  Ensemble e{EnsembleKind::DiagonalNonNegative, n, 17};
  std::vector<std::pair<ComplexMatrix, ComplexMatrix>> instances;
  instances.emplace_back(sample(e, 0), sample(e, 1));
  const std::vector<ConcaveFn> fam = {ConcaveFn::hook(1.0),
                                      ConcaveFn::power(0.5)};
  const OracleReport r = exhaustive_oracle(n, instances, fam);
  CHECK(r.failures.empty());

  long tf = 0, seqs = 0, parts = 0;
  for (int m = 1; m <= n; ++m) {
    tf += static_cast<long>(enumerate_tf_pairs(n, m).size());
    seqs += binom(n, m);
    parts += binom(n, m) * (m + 1) * (1L << m);
  }
  CHECK(r.per_inequality.at("eq2") == tf);
  CHECK(r.per_inequality.at("eq5") == tf * static_cast<long>(fam.size()));
  CHECK(r.per_inequality.at("eq1") == seqs * static_cast<long>(fam.size()));
  CHECK(r.per_inequality.at("eq11") == parts);
  CHECK(r.configurations ==
        r.per_inequality.at("eq2") + r.per_inequality.at("eq5") +
            r.per_inequality.at("eq1") + r.per_inequality.at("eq11"));
}

TEST_CASE("exhaustive coverage at n=1 and the budget guard") {
  Ensemble e{EnsembleKind::GinibreComplex, 1, 19};
  std::vector<std::pair<ComplexMatrix, ComplexMatrix>> one;
  one.emplace_back(sample(e, 0), sample(e, 1));
  const OracleReport r = exhaustive_oracle(1, one, {ConcaveFn::hook(1.0)});
  CHECK(r.failures.empty());
  CHECK(r.per_inequality.at("eq2") == 1);

  CHECK_THROWS_AS(exhaustive_oracle(7, {}, {}), BudgetExceeded);
}

TEST_CASE("campaign config round-trips through its serial form") {
  CampaignConfig cfg;
  cfg.ensembles = {{EnsembleKind::LowRankPlusNoise, 2, 0.5}};
  cfg.n_min = 3;
  cfg.n_max = 9;
  cfg.instance_count = 17;
  cfg.f_family = {ConcaveFn::hook(0.25)};
  cfg.checks = {CheckKind::Bounds, CheckKind::Traces};
  cfg.seed = 77;
  cfg.tight_threshold = 0.9;
  const CampaignConfig back = campaign_config_from_json(to_json(cfg));
  CHECK(to_json(back).dump() == to_json(cfg).dump());
}

TEST_CASE("witness compaction removes duplicate payloads") {
  const std::string in = "wit_dup.jsonl", out = "wit_dedup.jsonl";
  {
    std::ofstream f(in);
    f << R"({"kind":"violation","check":"tf","payload":{"a":1},"report":{}})" << "\n";
    f << R"({"kind":"violation","check":"tf","payload":{"a":1},"report":{}})" << "\n";
    f << R"({"kind":"violation","check":"tf","payload":{"a":2},"report":{}})" << "\n";
  }
  CHECK(compact_witness_file(in, out) == 2);
  std::remove(in.c_str());
  std::remove(out.c_str());
}
