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
//
// End-to-end acceptance gate. Each criterion prints a single pass/fail line;
// the process exits nonzero if any criterion fails.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "support/oracles.hpp"
#include "svineq/bounds.hpp"
#include "svineq/campaign.hpp"
#include "svineq/spectra.hpp"

using namespace svineq;

namespace {

int failures = 0;

void report(int number, const std::string& label, bool ok,
            const std::string& detail = "") {
  std::cout << "criterion " << number << " (" << label << "): "
            << (ok ? "PASS" : "FAIL");
  if (!detail.empty()) std::cout << "  [" << detail << "]";
  std::cout << "\n" << std::flush;
  if (!ok) ++failures;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

// 1. exhaustive enumeration at n <= 6, four ensembles, nine weight functions
void criterion1() {
  CounterRng fam_rng(2024, 1);
  std::vector<ConcaveFn> family;
  for (double t : {0.1, 0.5, 1.0, 2.0, 5.0}) family.push_back(ConcaveFn::hook(t));
  family.push_back(ConcaveFn::power(0.25));
  family.push_back(ConcaveFn::power(0.5));
  family.push_back(ConcaveFn::power(1.0));
  family.push_back(test::random_pwl(fam_rng));

  const EnsembleKind kinds[] = {
      EnsembleKind::GinibreComplex, EnsembleKind::HermitianGaussian,
      EnsembleKind::DiagonalNonNegative, EnsembleKind::LowRankPlusNoise};
  long total_failures = 0, total_configs = 0;
  for (int n = 1; n <= 6; ++n) {
    std::vector<std::pair<ComplexMatrix, ComplexMatrix>> instances;
    for (int i = 0; i < 50; ++i) {
      Ensemble e{kinds[i % 4], n, 2024, std::min(2, n), 0.1};
      instances.emplace_back(sample(e, 2 * static_cast<uint64_t>(i)),
                             sample(e, 2 * static_cast<uint64_t>(i) + 1));
    }
    const OracleReport r = exhaustive_oracle(n, instances, family, 1e-9);
    total_failures += static_cast<long>(r.failures.size());
    total_configs += r.configurations;
  }
  report(1, "exhaustive small-n coverage", total_failures == 0,
         std::to_string(total_configs) + " configurations");
}

// 2. fuzz at scale, all checkers, plus a diagonal near-tight witness
void criterion2() {
  CampaignConfig cfg;
  cfg.instance_count = 10000;
  cfg.n_min = 2;
  cfg.n_max = 16;
  cfg.seed = 505;
  const CampaignSummary s = run_campaign(cfg);
  long near_tight = 0;
  for (const auto& [name, c] : s.per_check) near_tight += c.near_tight;

  CampaignConfig diag;
  diag.ensembles = {{EnsembleKind::DiagonalNonNegative}};
  diag.instance_count = 50;
  diag.n_min = 2;
  diag.n_max = 6;
  diag.seed = 506;
  std::vector<Witness> witnesses;
  const CampaignSummary ds = run_campaign(diag, &witnesses);
  bool diag_tight = false;
  for (const Witness& w : witnesses)
    diag_tight = diag_tight || w.kind == Witness::Kind::NearTight;

  report(2, "fuzz at scale",
         !s.any_violation() && !ds.any_violation() && near_tight > 0 &&
             diag_tight,
         std::to_string(s.instances) + " instances");
}

// 3. all three proof traces hold and end on the top-level gap
void criterion3() {
  bool ok = true;
  long count = 0;
  for (int i = 0; i < 1000 && ok; ++i) {
    const int n = 2 + i % 5;
    Ensemble e{EnsembleKind::GinibreComplex, n, 607};
    const ComplexMatrix x = sample(e, 2 * static_cast<uint64_t>(i));
    const ComplexMatrix y = sample(e, 2 * static_cast<uint64_t>(i) + 1);
    CounterRng rng(607, 0x1000 + static_cast<uint64_t>(i));
    const Spectrum sx = singular_values(x), sy = singular_values(y);
    const Spectrum ssum = singular_values(x + y);
    const double t = rng.uniform(0.05, 1.2) * (sx(1) + sy(1) + 1.0);

    const int m = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(n)));
    const auto seqs = enumerate_index_seqs(n, m);
    const IndexSeq idx = seqs[rng.below(seqs.size())];

    const auto rel_match = [](const GapReport& a, const GapReport& b) {
      const double scale = 1.0 + std::abs(b.lhs) + std::abs(b.rhs);
      return std::abs(a.lhs - b.lhs) <= 1e-12 * scale &&
             std::abs(a.rhs - b.rhs) <= 1e-12 * scale;
    };

    const TraceReport t1 =
        trace_theorem1(x, y, idx, t, sign_flags(sx, sy, idx));
    ok = ok && t1.all_hold &&
         rel_match(t1.steps.back().gap,
                   mirsky_f_gap(x, y, idx, ConcaveFn::hook(t)));

    const auto pairs = enumerate_tf_pairs(n, m);
    const TFPair pair = pairs[rng.below(pairs.size())];
    const TraceReport t2 = trace_theorem2(sx, sy, ssum, pair, t, 1e-9, 607);
    ok = ok && t2.all_hold &&
         rel_match(t2.steps.back().gap,
                   f_tf_gap(sx, sy, ssum, pair, ConcaveFn::hook(t)));

    const int b = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(m + 1)));
    std::vector<PartFlag> flags;
    for (int k = 0; k < m; ++k)
      flags.push_back(rng.below(2) == 0 ? PartFlag::C : PartFlag::A);
    const IndexPartition part(idx, b, flags);
    const TraceReport t3 = trace_theorem3(x, y, part);
    ok = ok && t3.all_hold &&
         rel_match(t3.steps.back().gap, theorem3_gap(sx, sy, ssum, part));
    if (ok) ++count;
  }
  report(3, "proof-trace soundness", ok, std::to_string(count) + " instances");
}

// 4. spectral routines against closed-form oracles
void criterion4() {
  bool ok = true;
  for (int i = 0; i < 1000 && ok; ++i) {
    const int n = 1 + i % 3;
    Ensemble e{EnsembleKind::GinibreComplex, n, 701};
    const ComplexMatrix x = sample(e, static_cast<uint64_t>(i));
    const Spectrum s = singular_values(x);
    const std::vector<double> ref = test::svd_oracle_small(x);
    for (int k = 1; k <= n; ++k)
      ok = ok && std::abs(s(k) - ref[static_cast<size_t>(k - 1)]) <=
                     1e-10 * (1.0 + ref[0]);
  }
  for (int i = 0; i < 1000 && ok; ++i) {
    Ensemble e{EnsembleKind::HermitianGaussian, 2, 703};
    const ComplexMatrix a = sample(e, static_cast<uint64_t>(i));
    const Spectrum s = hermitian_eigenvalues(a);
    const std::vector<double> ref = test::hermitian2_oracle(a);
    const double scale = 1.0 + std::abs(ref[0]) + std::abs(ref[1]);
    ok = ok && std::abs(s(1) - ref[0]) <= 1e-12 * scale &&
         std::abs(s(2) - ref[1]) <= 1e-12 * scale;
  }
  for (int i = 0; i < 1000 && ok; ++i) {
    const int n = 1 + i % 8;
    Ensemble e{EnsembleKind::GinibreComplex, n, 709};
    const ComplexMatrix a = sample(e, static_cast<uint64_t>(i));
    const Spectrum sv = singular_values(a);
    const Spectrum emb = hermitian_eigenvalues(wielandt_embed(a));
    const double tol = 1e-10 * (1.0 + sv(1));
    for (int k = 1; k <= n; ++k)
      ok = ok && std::abs(emb(k) - sv(k)) <= tol &&
           std::abs(emb(2 * n + 1 - k) + sv(k)) <= tol;
  }
  report(4, "spectral oracles", ok);
}

// 5. hook decomposition exactness and the certified approximation error
void criterion5() {
  bool ok = true;
  CounterRng rng(809, 0);
  for (int trial = 0; trial < 1000 && ok; ++trial) {
    const ConcaveFn f = test::random_pwl(rng);
    const HookMeasure m = hook_decompose(f);
    for (double bp : f.breakpoints())
      ok = ok && std::abs(m.eval(bp) - f(bp)) <= 1e-12;
    double prev = 0.0;
    for (size_t seg = 0; seg <= f.breakpoints().size() && ok; ++seg) {
      const double hi = seg < f.breakpoints().size() ? f.breakpoints()[seg]
                                                     : prev + 3.0;
      for (int k = 0; k < 10; ++k) {
        const double x = rng.uniform(prev, hi);
        ok = ok && std::abs(m.eval(x) - f(x)) <= 1e-12;
      }
      prev = hi;
    }
  }

  const PwlApprox approx = pwl_approximate(ConcaveFn::power(0.5), 4.0, 200);
  ok = ok && approx.sup_error < 0.01;
  double grid_max = 0.0;
  for (int k = 0; k <= 100000; ++k) {
    const double x = 4.0 * k / 100000.0;
    grid_max = std::max(grid_max, std::sqrt(x) - approx.fn(x));
  }
  ok = ok && grid_max <= approx.sup_error + 1e-12;
  report(5, "hook machinery", ok,
         "sup error " + std::to_string(approx.sup_error));
}

// 6. reduction identities are bit-identical
void criterion6() {
  bool ok = true;
  for (int i = 0; i < 1000 && ok; ++i) {
    const int n = 2 + i % 4;
    Ensemble e{EnsembleKind::GinibreComplex, n, 907};
    const ComplexMatrix a = sample(e, 2 * static_cast<uint64_t>(i));
    const ComplexMatrix b = sample(e, 2 * static_cast<uint64_t>(i) + 1);
    const Spectrum alpha = singular_values(a), beta = singular_values(b);
    const Spectrum gamma = singular_values(a + b);
    CounterRng rng(907, 0x2000 + static_cast<uint64_t>(i));
    const int m = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(n)));

    const auto seqs = enumerate_index_seqs(n, m);
    const IndexSeq idx = seqs[rng.below(seqs.size())];
    const IndexPartition allc(idx, 1, std::vector<PartFlag>(m, PartFlag::C));
    const GapReport ex = theorem3_gap(alpha, beta, gamma, allc);
    double lhs = 0.0, asum = 0.0, bsum = 0.0;
    for (int k = 1; k <= m; ++k) lhs += gamma(idx[k]);
    for (int k = 1; k <= m; ++k) asum += alpha(idx[k]);
    for (int k = 1; k <= m; ++k) bsum += beta(k);
    const double rhs = asum + bsum;
    ok = ok && ex.lhs == lhs && ex.rhs == rhs;

    const auto pairs = enumerate_tf_pairs(n, m);
    const TFPair pair = pairs[rng.below(pairs.size())];
    const GapReport plain = tf_gap(alpha, beta, gamma, pair);
    const GapReport ident =
        f_tf_gap(alpha, beta, gamma, pair, ConcaveFn::power(1.0));
    ok = ok && plain.lhs == ident.lhs && plain.rhs == ident.rhs;
  }
  report(6, "reduction identities", ok);
}

// 7. PSD search finds nothing; a corrupted campaign trips everywhere
void criterion7() {
  bool ok = true;
  for (NegativeConvention conv :
       {NegativeConvention::SkipNegative, NegativeConvention::OddExtension}) {
    ok = ok && hermitian_fversion_search(200, ConcaveFn::hook(1.0), conv, 1009,
                                         4, /*psd=*/true)
                   .empty();
    ok = ok && hermitian_fversion_search(200, ConcaveFn::power(0.5), conv,
                                         1013, 3, /*psd=*/true)
                   .empty();
  }

  CampaignConfig cfg;
  cfg.instance_count = 50;
  cfg.n_min = 2;
  cfg.n_max = 5;
  cfg.seed = 1019;
  cfg.checks = {CheckKind::Tf, CheckKind::FTf, CheckKind::Mirsky,
                CheckKind::Theorem3, CheckKind::Bounds};
  cfg.corrupt_rhs = true;
  const CampaignSummary s = run_campaign(cfg);
  for (const auto& [name, c] : s.per_check)
    ok = ok && c.checked > 0 && c.violated == c.checked;
  report(7, "convention-gated search and planted violations", ok);
}

// 8. byte-identical outputs across reruns
void criterion8() {
  CampaignConfig cfg;
  cfg.instance_count = 200;
  cfg.n_min = 2;
  cfg.n_max = 10;
  cfg.seed = 1103;
  cfg.witness_path = "acc_wit_a.jsonl";
  cfg.summary_path = "acc_sum_a.json";
  std::vector<Witness> wa;
  run_campaign(cfg, &wa);
  cfg.witness_path = "acc_wit_b.jsonl";
  cfg.summary_path = "acc_sum_b.json";
  std::vector<Witness> wb;
  run_campaign(cfg, &wb);
  const bool ok = slurp("acc_wit_a.jsonl") == slurp("acc_wit_b.jsonl") &&
                  slurp("acc_sum_a.json") == slurp("acc_sum_b.json") &&
                  !slurp("acc_sum_a.json").empty();
  for (const char* p :
       {"acc_wit_a.jsonl", "acc_wit_b.jsonl", "acc_sum_a.json", "acc_sum_b.json"})
    std::remove(p);
  report(8, "determinism", ok);
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  if (failures > 0) {
    std::cout << failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all acceptance criteria passed\n";
  return 0;
}
