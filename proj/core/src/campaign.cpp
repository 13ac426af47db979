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

#include "svineq/campaign.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <numeric>
#include <set>

#include "svineq/bounds.hpp"
#include "svineq/rng.hpp"
#include "svineq/spectra.hpp"

namespace svineq {

namespace {

IndexSeq sample_index_seq(CounterRng& rng, int n, int m) {
  std::vector<int> all(static_cast<size_t>(n));
  std::iota(all.begin(), all.end(), 1);
  // partial Fisher-Yates, then sort the chosen prefix
  for (int k = 0; k < m; ++k) {
    const int j = k + static_cast<int>(rng.below(static_cast<uint64_t>(n - k)));
    std::swap(all[static_cast<size_t>(k)], all[static_cast<size_t>(j)]);
  }
  all.resize(static_cast<size_t>(m));
  std::sort(all.begin(), all.end());
  return IndexSeq(n, std::move(all));
}

TFPair sample_tf_pair(CounterRng& rng, int n) {
  const int m = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(n)));
  while (true) {
    IndexSeq i = sample_index_seq(rng, n, m);
    IndexSeq j = sample_index_seq(rng, n, m);
    if (i[m] + j[m] <= n + m) return TFPair(std::move(i), std::move(j));
  }
}

IndexPartition sample_partition(CounterRng& rng, int n) {
  const int m = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(n)));
  IndexSeq i = sample_index_seq(rng, n, m);
  const int b = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(m + 1)));
  std::vector<PartFlag> flags;
  for (int k = 0; k < m; ++k)
    flags.push_back(rng.below(2) == 0 ? PartFlag::C : PartFlag::A);
  return IndexPartition(std::move(i), b, std::move(flags));
}

std::vector<PartFlag> flags_from_json(const json& j) {
  std::vector<PartFlag> out;
  for (const auto& f : j)
    out.push_back(f.get<std::string>() == "C" ? PartFlag::C : PartFlag::A);
  return out;
}

json flags_to_json(const std::vector<PartFlag>& flags) {
  json out = json::array();
  for (PartFlag f : flags) out.push_back(f == PartFlag::C ? "C" : "A");
  return out;
}

}  // namespace

std::string check_kind_name(CheckKind k) {
  switch (k) {
    case CheckKind::Tf:
      return "tf";
    case CheckKind::FTf:
      return "f_tf";
    case CheckKind::Mirsky:
      return "mirsky";
    case CheckKind::Theorem3:
      return "theorem3";
    case CheckKind::Traces:
      return "traces";
    case CheckKind::Bounds:
      return "bounds";
  }
  throw InvalidInput("unknown check kind");
}

CheckKind check_kind_from_name(const std::string& name) {
  if (name == "tf") return CheckKind::Tf;
  if (name == "f_tf") return CheckKind::FTf;
  if (name == "mirsky") return CheckKind::Mirsky;
  if (name == "theorem3") return CheckKind::Theorem3;
  if (name == "traces") return CheckKind::Traces;
  if (name == "bounds") return CheckKind::Bounds;
  throw InvalidInput("unknown check kind: " + name);
}

bool CampaignSummary::any_violation() const {
  for (const auto& [name, counts] : per_check)
    if (counts.violated > 0) return true;
  return false;
}

namespace {

// Shared bookkeeping for one campaign or oracle run.
class Recorder {
 public:
  Recorder(const CampaignConfig& cfg, CampaignSummary* summary,
           std::vector<Witness>* witnesses)
      : cfg_(cfg), summary_(summary), witnesses_(witnesses) {}

  // Applies the corrupt-RHS self-test hook, counts the result, and stores
  // violation / near-tight witnesses.
  GapReport record(const std::string& check, GapReport gap,
                   const std::function<json()>& payload) {
    if (cfg_.corrupt_rhs) {
      // subtracting the scale forces slack <= -1 whatever the signs are
      const double scale = 1.0 + std::abs(gap.lhs) + std::abs(gap.rhs);
      gap = make_gap(gap.name, gap.lhs, gap.rhs - scale, gap.tol_rel);
    }
    CheckCounts& c = summary_->per_check[check];
    ++c.checked;
    if (gap.holds)
      ++c.held;
    else
      ++c.violated;
    const bool near_tight =
        gap.holds && gap.rhs > 0.0 && gap.lhs / gap.rhs >= cfg_.tight_threshold;
    if (near_tight) ++c.near_tight;
    if (witnesses_) {
      if (!gap.holds) {
        witnesses_->push_back(
            {Witness::Kind::Violation, check, payload(), to_json(gap)});
      } else if (near_tight &&
                 near_tight_stored_[check] < cfg_.max_near_tight) {
        ++near_tight_stored_[check];
        witnesses_->push_back(
            {Witness::Kind::NearTight, check, payload(), to_json(gap)});
      }
    }
    return gap;
  }

  void record_trace(const std::string& check, const TraceReport& tr,
                    const std::function<json()>& payload) {
    CheckCounts& c = summary_->per_check[check];
    ++c.checked;
    if (tr.all_hold)
      ++c.held;
    else {
      ++c.violated;
      if (witnesses_)
        witnesses_->push_back(
            {Witness::Kind::Violation, check, payload(), to_json(tr)});
    }
  }

 private:
  const CampaignConfig& cfg_;
  CampaignSummary* summary_;
  std::vector<Witness>* witnesses_;
  std::map<std::string, int> near_tight_stored_;
};

}  // namespace

CampaignSummary run_campaign(const CampaignConfig& cfg_in,
                             std::vector<Witness>* witnesses) {
  CampaignConfig cfg = cfg_in;
  if (cfg.ensembles.empty())
    cfg.ensembles = {{EnsembleKind::GinibreComplex},
                     {EnsembleKind::HermitianGaussian},
                     {EnsembleKind::DiagonalNonNegative},
                     {EnsembleKind::LowRankPlusNoise, 1, 0.1}};
  if (cfg.f_family.empty())
    cfg.f_family = {ConcaveFn::hook(1.0), ConcaveFn::power(0.5)};
  if (cfg.checks.empty())
    cfg.checks = {CheckKind::Tf,       CheckKind::FTf,    CheckKind::Mirsky,
                  CheckKind::Theorem3, CheckKind::Traces, CheckKind::Bounds};
  if (cfg.instance_count < 0) throw InvalidInput("instance_count must be >= 0");
  if (!(cfg.tol_rel > 0.0)) throw InvalidInput("tol_rel must be positive");
  if (!(cfg.tight_threshold > 0.0 && cfg.tight_threshold <= 1.0))
    throw InvalidInput("tight_threshold must lie in (0, 1]");
  if (cfg.n_min < 1 || cfg.n_max < cfg.n_min)
    throw InvalidInput("need 1 <= n_min <= n_max");
  for (const ConcaveFn& f : cfg.f_family) f.require_valid();

  CampaignSummary summary;
  Recorder rec(cfg, &summary, witnesses);
  const auto enabled = [&](CheckKind k) {
    return std::find(cfg.checks.begin(), cfg.checks.end(), k) != cfg.checks.end();
  };
  const int span = cfg.n_max - cfg.n_min + 1;

  for (long i = 0; i < cfg.instance_count; ++i) {
    const int n = cfg.n_min + static_cast<int>(i % span);
    const EnsembleSpec& spec =
        cfg.ensembles[static_cast<size_t>(i) % cfg.ensembles.size()];
    Ensemble e{spec.kind, n, cfg.seed, std::min(spec.rank, n), spec.noise_scale};
    const ComplexMatrix x = sample(e, 2 * static_cast<uint64_t>(i));
    const ComplexMatrix y = sample(e, 2 * static_cast<uint64_t>(i) + 1);
    ++summary.instances;

    const Spectrum alpha = singular_values(x);
    const Spectrum beta = singular_values(y);
    const Spectrum gamma = singular_values(x + y);
    const Spectrum sdiff = singular_values(x - y);

    // Hermitian route for the plain TF check.
    ComplexMatrix xh(n), yh(n);
    {
      const ComplexMatrix xa = x.adjoint(), ya = y.adjoint();
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
          xh(r, c) = 0.5 * (x(r, c) + xa(r, c));
          yh(r, c) = 0.5 * (y(r, c) + ya(r, c));
        }
    }
    const Spectrum halpha = hermitian_eigenvalues(xh);
    const Spectrum hbeta = hermitian_eigenvalues(yh);
    const Spectrum hgamma = hermitian_eigenvalues(xh + yh);

    // Admissible index inputs: exhaustive at n <= 6, sampled above.
    std::vector<TFPair> pairs;
    std::vector<IndexSeq> seqs;
    std::vector<IndexPartition> parts;
    CounterRng rng(cfg.seed, 0xC000000000000000ULL | static_cast<uint64_t>(i));
    if (n <= 6) {
      for (int m = 1; m <= n; ++m) {
        for (TFPair& p : enumerate_tf_pairs(n, m)) pairs.push_back(std::move(p));
        for (IndexSeq& s : enumerate_index_seqs(n, m)) {
          for (int b = 1; b <= m + 1; ++b) {
            const int combos = 1 << m;
            for (int mask = 0; mask < combos; ++mask) {
              std::vector<PartFlag> flags;
              for (int k = 0; k < m; ++k)
                flags.push_back((mask >> k) & 1 ? PartFlag::A : PartFlag::C);
              parts.emplace_back(s, b, std::move(flags));
            }
          }
          seqs.push_back(std::move(s));
        }
      }
    } else {
      for (int k = 0; k < cfg.sampled_indices; ++k) {
        pairs.push_back(sample_tf_pair(rng, n));
        seqs.push_back(sample_index_seq(
            rng, n, 1 + static_cast<int>(rng.below(static_cast<uint64_t>(n)))));
        parts.push_back(sample_partition(rng, n));
      }
    }

    const json jx = to_json(x), jy = to_json(y);

    if (enabled(CheckKind::Tf)) {
      for (const TFPair& p : pairs) {
        rec.record("tf_singular", tf_gap(alpha, beta, gamma, p, cfg.tol_rel),
                   [&] {
                     return json{{"check", "tf"},
                                 {"alpha", to_json(alpha)},
                                 {"beta", to_json(beta)},
                                 {"gamma", to_json(gamma)},
                                 {"pair", to_json(p)},
                                 {"tol_rel", cfg.tol_rel}};
                   });
        rec.record("tf_hermitian",
                   tf_gap(halpha, hbeta, hgamma, p, cfg.tol_rel), [&] {
                     return json{{"check", "tf"},
                                 {"alpha", to_json(halpha)},
                                 {"beta", to_json(hbeta)},
                                 {"gamma", to_json(hgamma)},
                                 {"pair", to_json(p)},
                                 {"tol_rel", cfg.tol_rel}};
                   });
      }
    }

    if (enabled(CheckKind::FTf)) {
      for (const TFPair& p : pairs)
        for (const ConcaveFn& f : cfg.f_family)
          rec.record("f_tf", f_tf_gap(alpha, beta, gamma, p, f, cfg.tol_rel),
                     [&] {
                       return json{{"check", "f_tf"},
                                   {"alpha", to_json(alpha)},
                                   {"beta", to_json(beta)},
                                   {"gamma", to_json(gamma)},
                                   {"pair", to_json(p)},
                                   {"f", to_json(f)},
                                   {"tol_rel", cfg.tol_rel}};
                     });
    }

    if (enabled(CheckKind::Mirsky)) {
      for (const IndexSeq& s : seqs)
        for (const ConcaveFn& f : cfg.f_family)
          rec.record("mirsky",
                     mirsky_f_gap_from_spectra(alpha, beta, sdiff, s, f,
                                               cfg.tol_rel),
                     [&] {
                       return json{{"check", "mirsky"}, {"X", jx},
                                   {"Y", jy},           {"idx", to_json(s)},
                                   {"f", to_json(f)},   {"tol_rel", cfg.tol_rel}};
                     });
    }

    if (enabled(CheckKind::Theorem3)) {
      for (const IndexPartition& p : parts)
        rec.record("theorem3", theorem3_gap(alpha, beta, gamma, p, cfg.tol_rel),
                   [&] {
                     return json{{"check", "theorem3"},
                                 {"alpha", to_json(alpha)},
                                 {"beta", to_json(beta)},
                                 {"gamma", to_json(gamma)},
                                 {"partition", to_json(p)},
                                 {"tol_rel", cfg.tol_rel}};
                   });
    }

    if (enabled(CheckKind::Traces)) {
      const double sigma_top = alpha(1) + beta(1) + 1.0;
      const double t = rng.uniform(0.05, 1.0) * sigma_top;

      const IndexSeq idx = seqs[rng.below(seqs.size())];
      // difference-trace roles: C = X, A = Y
      const std::vector<PartFlag> t1_flags = sign_flags(alpha, beta, idx);
      rec.record_trace(
          "trace_theorem1", trace_theorem1(x, y, idx, t, t1_flags, cfg.tol_rel),
          [&] {
            return json{{"check", "trace_theorem1"},
                        {"X", jx},
                        {"Y", jy},
                        {"idx", to_json(idx)},
                        {"t", t},
                        {"flags", flags_to_json(t1_flags)},
                        {"tol_rel", cfg.tol_rel}};
          });

      const TFPair& pair = pairs[rng.below(pairs.size())];
      rec.record_trace(
          "trace_theorem2",
          trace_theorem2(alpha, beta, gamma, pair, t, cfg.tol_rel, cfg.seed),
          [&] {
            return json{{"check", "trace_theorem2"},
                        {"alpha", to_json(alpha)},
                        {"beta", to_json(beta)},
                        {"gamma", to_json(gamma)},
                        {"pair", to_json(pair)},
                        {"t", t},
                        {"tol_rel", cfg.tol_rel}};
          });

      const IndexPartition& part = parts[rng.below(parts.size())];
      rec.record_trace("trace_theorem3",
                       trace_theorem3(x, y, part, cfg.tol_rel), [&] {
                         return json{{"check", "trace_theorem3"},
                                     {"A", jx},
                                     {"B", jy},
                                     {"partition", to_json(part)},
                                     {"tol_rel", cfg.tol_rel}};
                       });
    }

    if (enabled(CheckKind::Bounds)) {
      for (const ConcaveFn& f : cfg.f_family) {
        const IndexSeq& s = seqs[rng.below(seqs.size())];
        const BoundResult br =
            spectral_deviation_bound(x, y, f, s, cfg.tol_rel);
        rec.record("bound", br.gap, [&] {
          return json{{"check", "bound"}, {"X", jx},
                      {"Y", jy},          {"idx", to_json(s)},
                      {"f", to_json(f)},  {"tol_rel", cfg.tol_rel}};
        });
      }
      for (double p : {0.25, 0.5, 1.0}) {
        const BoundResult br = schatten_p_deviation(x, y, p, cfg.tol_rel);
        rec.record("bound", br.gap, [&] {
          return json{{"check", "bound"},
                      {"X", jx},
                      {"Y", jy},
                      {"idx", to_json(br.idx)},
                      {"f", to_json(br.f)},
                      {"tol_rel", cfg.tol_rel}};
        });
      }
    }
  }

  if (!cfg.summary_path.empty()) {
    std::ofstream out(cfg.summary_path);
    if (!out) throw Error("cannot open summary path: " + cfg.summary_path);
    out << to_json(summary).dump(2) << "\n";
  }
  if (!cfg.witness_path.empty() && witnesses)
    write_witness_file(cfg.witness_path, *witnesses);
  return summary;
}

json replay_witness(const json& payload) {
  const std::string check = payload.at("check").get<std::string>();
  const double tol = payload.value("tol_rel", kDefaultTolRel);
  if (check == "tf")
    return to_json(tf_gap(spectrum_from_json(payload.at("alpha")),
                          spectrum_from_json(payload.at("beta")),
                          spectrum_from_json(payload.at("gamma")),
                          tf_pair_from_json(payload.at("pair")), tol));
  if (check == "f_tf")
    return to_json(f_tf_gap(spectrum_from_json(payload.at("alpha")),
                            spectrum_from_json(payload.at("beta")),
                            spectrum_from_json(payload.at("gamma")),
                            tf_pair_from_json(payload.at("pair")),
                            concave_from_json(payload.at("f")), tol));
  if (check == "mirsky")
    return to_json(mirsky_f_gap(matrix_from_json(payload.at("X")),
                                matrix_from_json(payload.at("Y")),
                                index_seq_from_json(payload.at("idx")),
                                concave_from_json(payload.at("f")), tol));
  if (check == "theorem3")
    return to_json(theorem3_gap(spectrum_from_json(payload.at("alpha")),
                                spectrum_from_json(payload.at("beta")),
                                spectrum_from_json(payload.at("gamma")),
                                partition_from_json(payload.at("partition")),
                                tol));
  if (check == "trace_theorem1")
    return to_json(trace_theorem1(matrix_from_json(payload.at("X")),
                                  matrix_from_json(payload.at("Y")),
                                  index_seq_from_json(payload.at("idx")),
                                  payload.at("t").get<double>(),
                                  flags_from_json(payload.at("flags")), tol));
  if (check == "trace_theorem2")
    return to_json(trace_theorem2(spectrum_from_json(payload.at("alpha")),
                                  spectrum_from_json(payload.at("beta")),
                                  spectrum_from_json(payload.at("gamma")),
                                  tf_pair_from_json(payload.at("pair")),
                                  payload.at("t").get<double>(), tol));
  if (check == "trace_theorem3")
    return to_json(trace_theorem3(matrix_from_json(payload.at("A")),
                                  matrix_from_json(payload.at("B")),
                                  partition_from_json(payload.at("partition")),
                                  tol));
  if (check == "bound")
    return to_json(spectral_deviation_bound(
                       matrix_from_json(payload.at("X")),
                       matrix_from_json(payload.at("Y")),
                       concave_from_json(payload.at("f")),
                       index_seq_from_json(payload.at("idx")), tol)
                       .gap);
  throw InvalidInput("cannot replay check: " + check);
}

OracleReport exhaustive_oracle(
    int n, const std::vector<std::pair<ComplexMatrix, ComplexMatrix>>& instances,
    const std::vector<ConcaveFn>& f_family, double tol_rel) {
  if (n > 6) throw BudgetExceeded("exhaustive enumeration is limited to n <= 6");
  if (n < 1) throw InvalidDims("need n >= 1");
  for (const ConcaveFn& f : f_family) f.require_valid();

  OracleReport report;
  auto fail = [&](const std::string& eq, const GapReport& g, json payload) {
    report.failures.push_back(
        {Witness::Kind::Violation, eq, std::move(payload), to_json(g)});
  };

  for (const auto& [x, y] : instances) {
    if (x.n() != n || y.n() != n)
      throw DimMismatch("oracle instance does not match the requested n");
    ++report.instances;
    const Spectrum alpha = singular_values(x);
    const Spectrum beta = singular_values(y);
    const Spectrum gamma = singular_values(x + y);
    const Spectrum sdiff = singular_values(x - y);
    const json jx = to_json(x), jy = to_json(y);

    for (int m = 1; m <= n; ++m) {
      for (const TFPair& p : enumerate_tf_pairs(n, m)) {
        ++report.configurations;
        ++report.per_inequality["eq2"];
        GapReport g = tf_gap(alpha, beta, gamma, p, tol_rel);
        if (!g.holds)
          fail("eq2", g,
               json{{"check", "tf"},
                    {"alpha", to_json(alpha)},
                    {"beta", to_json(beta)},
                    {"gamma", to_json(gamma)},
                    {"pair", to_json(p)},
                    {"tol_rel", tol_rel}});
        for (const ConcaveFn& f : f_family) {
          ++report.configurations;
          ++report.per_inequality["eq5"];
          g = f_tf_gap(alpha, beta, gamma, p, f, tol_rel);
          if (!g.holds)
            fail("eq5", g,
                 json{{"check", "f_tf"},
                      {"alpha", to_json(alpha)},
                      {"beta", to_json(beta)},
                      {"gamma", to_json(gamma)},
                      {"pair", to_json(p)},
                      {"f", to_json(f)},
                      {"tol_rel", tol_rel}});
        }
      }

      for (const IndexSeq& s : enumerate_index_seqs(n, m)) {
        for (const ConcaveFn& f : f_family) {
          ++report.configurations;
          ++report.per_inequality["eq1"];
          const GapReport g =
              mirsky_f_gap_from_spectra(alpha, beta, sdiff, s, f, tol_rel);
          if (!g.holds)
            fail("eq1", g,
                 json{{"check", "mirsky"}, {"X", jx},
                      {"Y", jy},           {"idx", to_json(s)},
                      {"f", to_json(f)},   {"tol_rel", tol_rel}});
        }
        for (int b = 1; b <= m + 1; ++b) {
          for (int mask = 0; mask < (1 << m); ++mask) {
            std::vector<PartFlag> flags;
            for (int k = 0; k < m; ++k)
              flags.push_back((mask >> k) & 1 ? PartFlag::A : PartFlag::C);
            const IndexPartition part(s, b, std::move(flags));
            ++report.configurations;
            ++report.per_inequality["eq11"];
            const GapReport g = theorem3_gap(alpha, beta, gamma, part, tol_rel);
            if (!g.holds)
              fail("eq11", g,
                   json{{"check", "theorem3"},
                        {"alpha", to_json(alpha)},
                        {"beta", to_json(beta)},
                        {"gamma", to_json(gamma)},
                        {"partition", to_json(part)},
                        {"tol_rel", tol_rel}});
          }
        }
      }
    }
  }
  return report;
}

json to_json(const CampaignSummary& s) {
  json per = json::object();
  for (const auto& [name, c] : s.per_check)
    per[name] = json{{"checked", c.checked},
                     {"held", c.held},
                     {"violated", c.violated},
                     {"near_tight", c.near_tight}};
  return json{{"instances", s.instances}, {"per_check", std::move(per)}};
}

json to_json(const Witness& w) {
  return json{
      {"kind", w.kind == Witness::Kind::Violation ? "violation" : "near_tight"},
      {"check", w.check},
      {"payload", w.payload},
      {"report", w.report}};
}

json to_json(const OracleReport& r) {
  json per = json::object();
  for (const auto& [name, count] : r.per_inequality) per[name] = count;
  json failures = json::array();
  for (const Witness& w : r.failures) failures.push_back(to_json(w));
  return json{{"instances", r.instances},
              {"configurations", r.configurations},
              {"per_inequality", std::move(per)},
              {"failures", std::move(failures)}};
}

CampaignConfig campaign_config_from_json(const json& j) {
  CampaignConfig cfg;
  if (j.contains("ensembles"))
    for (const auto& e : j.at("ensembles"))
      cfg.ensembles.push_back(
          {ensemble_kind_from_name(e.at("kind").get<std::string>()),
           e.value("rank", 1), e.value("noise_scale", 0.1)});
  if (j.contains("n_range")) {
    cfg.n_min = j.at("n_range").at(0).get<int>();
    cfg.n_max = j.at("n_range").at(1).get<int>();
  }
  cfg.instance_count = j.value("instance_count", 0L);
  if (j.contains("f_family"))
    for (const auto& f : j.at("f_family"))
      cfg.f_family.push_back(concave_from_json(f));
  cfg.tol_rel = j.value("tol_rel", kDefaultTolRel);
  if (j.contains("checks"))
    for (const auto& c : j.at("checks"))
      cfg.checks.push_back(check_kind_from_name(c.get<std::string>()));
  cfg.tight_threshold = j.value("tight_threshold", 0.999);
  cfg.seed = j.value("seed", 0ULL);
  cfg.witness_path = j.value("witness_path", std::string());
  cfg.summary_path = j.value("summary_path", std::string());
  cfg.sampled_indices = j.value("sampled_indices", 12);
  cfg.max_near_tight = j.value("max_near_tight", 100);
  cfg.corrupt_rhs = j.value("corrupt_rhs", false);
  return cfg;
}

json to_json(const CampaignConfig& cfg) {
  json ensembles = json::array();
  for (const EnsembleSpec& e : cfg.ensembles)
    ensembles.push_back(json{{"kind", ensemble_kind_name(e.kind)},
                             {"rank", e.rank},
                             {"noise_scale", e.noise_scale}});
  json fs = json::array();
  for (const ConcaveFn& f : cfg.f_family) fs.push_back(to_json(f));
  json checks = json::array();
  for (CheckKind c : cfg.checks) checks.push_back(check_kind_name(c));
  return json{{"ensembles", std::move(ensembles)},
              {"n_range", {cfg.n_min, cfg.n_max}},
              {"instance_count", cfg.instance_count},
              {"f_family", std::move(fs)},
              {"tol_rel", cfg.tol_rel},
              {"checks", std::move(checks)},
              {"tight_threshold", cfg.tight_threshold},
              {"seed", cfg.seed},
              {"witness_path", cfg.witness_path},
              {"summary_path", cfg.summary_path},
              {"sampled_indices", cfg.sampled_indices},
              {"max_near_tight", cfg.max_near_tight},
              {"corrupt_rhs", cfg.corrupt_rhs}};
}

void write_witness_file(const std::string& path,
                        const std::vector<Witness>& witnesses) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open witness path: " + path);
  for (const Witness& w : witnesses) out << to_json(w).dump() << "\n";
}

long compact_witness_file(const std::string& in_path,
                          const std::string& out_path) {
  std::ifstream in(in_path);
  if (!in) throw Error("cannot open witness file: " + in_path);
  std::ofstream out(out_path);
  if (!out) throw Error("cannot open output file: " + out_path);
  std::set<size_t> seen;
  std::string line;
  long kept = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const json w = json::parse(line);
    const size_t h = std::hash<std::string>{}(w.at("payload").dump());
    if (seen.insert(h).second) {
      out << line << "\n";
      ++kept;
    }
  }
  return kept;
}

}  // namespace svineq
