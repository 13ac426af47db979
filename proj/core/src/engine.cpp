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

#include "svineq/engine.hpp"

#include <algorithm>
#include <cmath>

#include "svineq/rng.hpp"
#include "svineq/spectra.hpp"

namespace svineq {

namespace {

double hook_at(double x, double t) { return std::min(x, t); }

double sum_at(const Spectrum& s, const std::vector<int>& idx) {
  double v = 0.0;
  for (int i : idx) v += s(i);
  return v;
}

double hook_sum_at(const Spectrum& s, const std::vector<int>& idx, double t) {
  double v = 0.0;
  for (int i : idx) v += hook_at(s(i), t);
  return v;
}

// Sum of beta over positions lo..hi (empty when lo > hi).
double beta_window(const Spectrum& beta, int lo, int hi) {
  double v = 0.0;
  for (int k = lo; k <= hi; ++k) v += beta(k);
  return v;
}

int first_below(const Spectrum& s, const std::vector<int>& at, double t) {
  for (size_t k = 0; k < at.size(); ++k)
    if (s(at[k]) < t) return static_cast<int>(k) + 1;
  return static_cast<int>(at.size()) + 1;
}

std::vector<int> positions(int lo, int hi) {
  std::vector<int> out;
  for (int k = lo; k <= hi; ++k) out.push_back(k);
  return out;
}

}  // namespace

GapReport make_gap(std::string name, double lhs, double rhs, double tol_rel) {
  GapReport g;
  g.name = std::move(name);
  g.lhs = lhs;
  g.rhs = rhs;
  g.slack = rhs - lhs;
  g.scale = 1.0 + std::abs(lhs) + std::abs(rhs);
  g.tol_rel = tol_rel;
  g.holds = g.slack >= -tol_rel * g.scale;
  return g;
}

GapReport tf_gap(const Spectrum& alpha, const Spectrum& beta,
                 const Spectrum& gamma, const TFPair& pair, double tol_rel) {
  const int m = pair.m();
  double lhs = 0.0, rhs = 0.0;
  for (int k = 1; k <= m; ++k) {
    lhs += gamma(pair.i_seq()[k] + pair.j_seq()[k] - k);
    rhs += alpha(pair.i_seq()[k]);
  }
  for (int k = 1; k <= m; ++k) rhs += beta(pair.j_seq()[k]);
  return make_gap("tf", lhs, rhs, tol_rel);
}

GapReport f_tf_gap(const Spectrum& alpha, const Spectrum& beta,
                   const Spectrum& gamma, const TFPair& pair,
                   const ConcaveFn& f, double tol_rel) {
  if (!alpha.non_negative() || !beta.non_negative() || !gamma.non_negative())
    throw NegativeSpectrum("f-version requires non-negative sequences");
  f.require_valid();
  const int m = pair.m();
  double lhs = 0.0, rhs = 0.0;
  for (int k = 1; k <= m; ++k) {
    lhs += f(gamma(pair.i_seq()[k] + pair.j_seq()[k] - k));
    rhs += f(alpha(pair.i_seq()[k]));
  }
  for (int k = 1; k <= m; ++k) rhs += f(beta(pair.j_seq()[k]));
  return make_gap("f_tf", lhs, rhs, tol_rel);
}

GapReport mirsky_f_gap(const ComplexMatrix& x, const ComplexMatrix& y,
                       const IndexSeq& idx, const ConcaveFn& f,
                       double tol_rel) {
  if (x.n() != y.n()) throw DimMismatch("X and Y must share the same n");
  if (idx.n() != x.n())
    throw DimMismatch("index sequence ambient dimension must equal n");
  f.require_valid();
  return mirsky_f_gap_from_spectra(singular_values(x), singular_values(y),
                                   singular_values(x - y), idx, f, tol_rel);
}

GapReport mirsky_f_gap_from_spectra(const Spectrum& sx, const Spectrum& sy,
                                    const Spectrum& sdiff, const IndexSeq& idx,
                                    const ConcaveFn& f, double tol_rel) {
  f.require_valid();
  double lhs = 0.0, rhs = 0.0;
  for (int k = 1; k <= idx.m(); ++k) {
    lhs += std::abs(f(sx(idx[k])) - f(sy(idx[k])));
    rhs += f(sdiff(k));
  }
  return make_gap("mirsky_f", lhs, rhs, tol_rel);
}

GapReport theorem3_gap(const Spectrum& alpha, const Spectrum& beta,
                       const Spectrum& gamma, const IndexPartition& p,
                       double tol_rel) {
  if (p.I().n() > alpha.size() || p.I().n() > beta.size() ||
      p.I().n() > gamma.size())
    throw DimMismatch("partition ambient dimension exceeds spectrum length");
  const double lhs = sum_at(gamma, p.select(PartFlag::C, Window::Left)) +
                     sum_at(alpha, p.select(PartFlag::A, Window::Left));
  const double rhs = sum_at(alpha, p.select(PartFlag::C, Window::Right)) +
                     sum_at(gamma, p.select(PartFlag::A, Window::Right)) +
                     beta_window(beta, p.b(), p.m());
  return make_gap("theorem3", lhs, rhs, tol_rel);
}

ThresholdIndices threshold_indices(const Spectrum& alpha, const Spectrum& beta,
                                   const Spectrum& gamma, const IndexSeq& idx,
                                   double t) {
  if (!(t > 0.0)) throw InvalidInput("threshold must be positive");
  ThresholdIndices out;
  out.t = t;
  out.a = first_below(alpha, idx.indices(), t);
  out.c = first_below(gamma, idx.indices(), t);
  out.b = static_cast<int>(idx.indices().size()) + 1;
  for (int k = 1; k <= idx.m(); ++k)
    if (beta(k) < t) {
      out.b = k;
      break;
    }
  return out;
}

std::vector<PartFlag> sign_flags(const Spectrum& gamma, const Spectrum& alpha,
                                 const IndexSeq& idx) {
  std::vector<PartFlag> flags;
  for (int k = 1; k <= idx.m(); ++k)
    flags.push_back(gamma(idx[k]) >= alpha(idx[k]) ? PartFlag::C : PartFlag::A);
  return flags;
}

// --------------------------------------------------------------------------
// Proof trace: f-version of the TF inequalities via a single hook.
// --------------------------------------------------------------------------

TraceReport trace_theorem2(const Spectrum& alpha, const Spectrum& beta,
                           const Spectrum& gamma, const TFPair& pair, double t,
                           double tol_rel, uint64_t premise_seed) {
  if (!alpha.non_negative() || !beta.non_negative() || !gamma.non_negative())
    throw NegativeSpectrum("trace requires non-negative sequences");
  if (!(t > 0.0)) throw InvalidInput("hook threshold must be positive");
  const int n = pair.n();
  const int m = pair.m();
  if (alpha.size() < n || beta.size() < n || gamma.size() < n)
    throw DimMismatch("spectra shorter than the pair's ambient dimension");

  TraceReport tr;
  tr.theorem = "theorem2";

  // Premise: the plain TF inequalities. Exhaustive for n <= 6, sampled above.
  if (n <= 6) {
    for (int mm = 1; mm <= n && !tr.premise_violation; ++mm)
      for (const TFPair& q : enumerate_tf_pairs(n, mm)) {
        GapReport g = tf_gap(alpha, beta, gamma, q, tol_rel);
        if (!g.holds) {
          g.name = "tf_premise";
          tr.premise_violation = g;
          break;
        }
      }
  } else {
    CounterRng rng(premise_seed, 0x7F2u);
    for (int s = 0; s < 200 && !tr.premise_violation; ++s) {
      const int mm = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(n)));
      std::vector<int> iv, jv;
      // rejection sampling of an admissible pair
      for (int tries = 0; tries < 64; ++tries) {
        iv.clear();
        jv.clear();
        std::vector<bool> pick(static_cast<size_t>(n));
        while (static_cast<int>(iv.size()) < mm) {
          const int v = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(n)));
          if (!pick[static_cast<size_t>(v - 1)]) {
            pick[static_cast<size_t>(v - 1)] = true;
            iv.push_back(v);
          }
        }
        std::sort(iv.begin(), iv.end());
        std::vector<bool> pick2(static_cast<size_t>(n));
        while (static_cast<int>(jv.size()) < mm) {
          const int v = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(n)));
          if (!pick2[static_cast<size_t>(v - 1)]) {
            pick2[static_cast<size_t>(v - 1)] = true;
            jv.push_back(v);
          }
        }
        std::sort(jv.begin(), jv.end());
        if (iv.back() + jv.back() <= n + mm) break;
        iv.clear();
      }
      if (iv.empty()) continue;
      GapReport g = tf_gap(alpha, beta, gamma,
                           TFPair(IndexSeq(n, iv), IndexSeq(n, jv)), tol_rel);
      if (!g.holds) {
        g.name = "tf_premise";
        tr.premise_violation = g;
      }
    }
  }

  std::vector<int> ivals, jvals;
  for (int k = 1; k <= m; ++k) {
    ivals.push_back(pair.i_seq()[k]);
    jvals.push_back(pair.j_seq()[k]);
  }
  const int a = first_below(alpha, ivals, t);
  const int b = first_below(beta, jvals, t);

  auto step = [&](std::string name, double lhs, double rhs) {
    tr.steps.push_back({name, make_gap(name, lhs, rhs, tol_rel)});
  };

  // Shifted TF instance; degenerate branch is an explicit lhs=rhs=0 step.
  double shifted_lhs = 0.0, shifted_rhs = 0.0;
  const int mprime = m - (a - 1) - (b - 1);
  if (a + b - 1 <= m) {
    for (int k = 1; k <= mprime; ++k) {
      shifted_lhs += gamma(pair.i_seq()[k + a - 1] + pair.j_seq()[k + b - 1] - k);
      shifted_rhs += alpha(pair.i_seq()[k + a - 1]);
    }
    for (int k = 1; k <= mprime; ++k) shifted_rhs += beta(pair.j_seq()[k + b - 1]);
  }
  step("shifted_tf", shifted_lhs, shifted_rhs);

  double tail = 0.0;
  for (int k = a + b - 1; k <= m; ++k)
    tail += gamma(pair.i_seq()[k] + pair.j_seq()[k] - k);
  step("gamma_monotone", tail, shifted_lhs);

  double hook_tail = 0.0;
  for (int k = a + b - 1; k <= m; ++k)
    hook_tail += hook_at(gamma(pair.i_seq()[k] + pair.j_seq()[k] - k), t);
  double range_rhs = 0.0;
  for (int k = a; k <= m; ++k) range_rhs += alpha(pair.i_seq()[k]);
  for (int k = b; k <= m; ++k) range_rhs += beta(pair.j_seq()[k]);
  step("hook_bound", hook_tail, range_rhs);

  double head = 0.0;
  for (int k = 1; k <= std::min(a + b - 2, m); ++k)
    head += hook_at(gamma(pair.i_seq()[k] + pair.j_seq()[k] - k), t);
  step("head_bound", head, static_cast<double>(a + b - 2) * t);

  GapReport final_gap = f_tf_gap(alpha, beta, gamma, pair, ConcaveFn::hook(t),
                                 tol_rel);
  final_gap.name = "f_tf";
  tr.steps.push_back({"f_tf", final_gap});

  tr.context = json{{"t", t}, {"a", a}, {"b", b}, {"m", m}, {"n", n}};
  tr.all_hold = !tr.premise_violation.has_value();
  for (const TraceStep& s : tr.steps) tr.all_hold = tr.all_hold && s.gap.holds;
  return tr;
}

// --------------------------------------------------------------------------
// Proof trace: hook-Mirsky via threshold reductions and the exchange theorem.
// --------------------------------------------------------------------------

TraceReport trace_theorem1(const ComplexMatrix& x, const ComplexMatrix& y,
                           const IndexSeq& idx, double t,
                           const std::vector<PartFlag>& flags_in,
                           double tol_rel) {
  if (x.n() != y.n()) throw DimMismatch("X and Y must share the same n");
  if (idx.n() != x.n())
    throw DimMismatch("index sequence ambient dimension must equal n");
  if (flags_in.size() != static_cast<size_t>(idx.m()))
    throw InvalidDims("need one C/A flag per index");
  if (!(t > 0.0)) throw InvalidInput("hook threshold must be positive");

  Spectrum gamma = singular_values(x);   // gamma = sigma(X)
  Spectrum alpha = singular_values(y);   // alpha = sigma(Y)
  const Spectrum beta = singular_values(x - y);  // beta = sigma(X - Y)

  const int m = idx.m();
  int a = first_below(alpha, idx.indices(), t);
  int c = first_below(gamma, idx.indices(), t);
  std::vector<PartFlag> flags = flags_in;
  const bool swapped = a > c;
  if (swapped) {
    std::swap(gamma, alpha);
    std::swap(a, c);
    for (PartFlag& f : flags)
      f = (f == PartFlag::C) ? PartFlag::A : PartFlag::C;
  }

  // Strip the first a-1 positions: their contribution to the LHS is zero,
  // and the matching a-1 smallest betas leave the RHS.
  const int mprime = m - (a - 1);
  std::vector<int> stripped;
  std::vector<PartFlag> sflags;
  for (int k = a; k <= m; ++k) {
    stripped.push_back(idx[k]);
    sflags.push_back(flags[static_cast<size_t>(k - 1)]);
  }
  const int cprime = c - (a - 1);
  int bprime = mprime + 1;
  for (int k = 1; k <= mprime; ++k)
    if (beta(k) < t) {
      bprime = k;
      break;
    }

  for (int k = 1; k <= std::min(cprime - 1, mprime); ++k)
    if (sflags[static_cast<size_t>(k - 1)] != PartFlag::C)
      throw FlagConflict("position " + std::to_string(k) +
                         " must carry flag C (it precedes c)");

  const IndexPartition part(IndexSeq(idx.n(), stripped), bprime, sflags);

  TraceReport tr;
  tr.theorem = "theorem1";
  auto push = [&](std::string name, double lhs, double rhs) {
    GapReport g = make_gap(name, lhs, rhs, tol_rel);
    tr.steps.push_back({std::move(name), std::move(g)});
  };

  GapReport ex = theorem3_gap(alpha, beta, gamma, part, tol_rel);
  ex.name = "theorem3_instance";
  tr.steps.push_back({"theorem3_instance", ex});

  push("head_window_bound",
       hook_sum_at(gamma, part.select(PartFlag::C, Window::LeftBar), t) +
           sum_at(alpha, part.select(PartFlag::A, Window::LeftBar)),
       static_cast<double>(bprime - 1) * t);

  push("tail_window_nonneg", 0.0,
       sum_at(alpha, part.select(PartFlag::C, Window::RightBar)) +
           sum_at(gamma, part.select(PartFlag::A, Window::RightBar)));

  std::vector<int> all_c, all_a;
  for (int k = 1; k <= mprime; ++k)
    (sflags[static_cast<size_t>(k - 1)] == PartFlag::C ? all_c : all_a)
        .push_back(stripped[static_cast<size_t>(k - 1)]);
  const double beta_rhs =
      static_cast<double>(bprime - 1) * t + beta_window(beta, bprime, mprime);
  push("exchange_hook",
       hook_sum_at(gamma, all_c, t) + sum_at(alpha, all_a),
       sum_at(alpha, all_c) + sum_at(gamma, all_a) + beta_rhs);

  double abs_lhs = 0.0;
  for (int k = 1; k <= std::min(cprime - 1, mprime); ++k)
    abs_lhs += t - alpha(stripped[static_cast<size_t>(k - 1)]);
  for (int k = cprime; k <= mprime; ++k)
    abs_lhs += std::abs(gamma(stripped[static_cast<size_t>(k - 1)]) -
                        alpha(stripped[static_cast<size_t>(k - 1)]));
  push("abs_reduction", abs_lhs, beta_rhs);

  GapReport final_gap = mirsky_f_gap(x, y, idx, ConcaveFn::hook(t), tol_rel);
  final_gap.name = "hook_mirsky";
  tr.steps.push_back({"hook_mirsky", final_gap});

  tr.context = json{{"t", t},       {"a", a},         {"b", bprime},
                    {"c", c},       {"swapped", swapped},
                    {"m", m},       {"m_stripped", mprime}};
  tr.all_hold = true;
  for (const TraceStep& s : tr.steps) tr.all_hold = tr.all_hold && s.gap.holds;
  return tr;
}

// --------------------------------------------------------------------------
// Proof trace: exchange inequality via the Wielandt embedding.
// --------------------------------------------------------------------------

TraceReport trace_theorem3(const ComplexMatrix& a_mat, const ComplexMatrix& b_mat,
                           const IndexPartition& p, double tol_rel) {
  if (a_mat.n() != b_mat.n()) throw DimMismatch("A and B must share the same n");
  const int n = a_mat.n();
  if (p.I().n() != n)
    throw DimMismatch("partition ambient dimension must equal n");

  const ComplexMatrix sum = a_mat + b_mat;  // C = -(A+B); sigma(C) = sigma(A+B)
  const Spectrum alpha = singular_values(a_mat);
  const Spectrum beta = singular_values(b_mat);
  const Spectrum gamma = singular_values(sum);

  const PairClassification cls = classify_pairs(p);
  const int b = p.b();

  const Spectrum ea = hermitian_eigenvalues(wielandt_embed(a_mat));
  const Spectrum eb = hermitian_eigenvalues(wielandt_embed(b_mat));
  const Spectrum ec = hermitian_eigenvalues(wielandt_embed(sum));

  auto t_of = [&](int k) { return cls.pairs[static_cast<size_t>(k - 1)].first; };
  auto s_of = [&](int k) { return cls.pairs[static_cast<size_t>(k - 1)].second; };

  TraceReport tr;
  tr.theorem = "theorem3";
  auto push = [&](std::string name, double lhs, double rhs) {
    tr.steps.push_back({name, make_gap(name, lhs, rhs, tol_rel)});
  };

  double l = 0.0, r = 0.0;
  for (int k : cls.k1) {
    l += gamma(s_of(k));
    r += gamma(t_of(k));
  }
  push("k1_monotone", l, r);

  l = r = 0.0;
  for (int k : cls.k2) {
    l += alpha(s_of(k));
    r += alpha(t_of(k));
  }
  push("k2_monotone", l, r);

  // TF instance on the doubled dimension.
  const IndexSeq wi = tfw_index_build(cls, n, b);
  std::vector<int> jv;
  for (int lidx = 1; lidx <= cls.r; ++lidx) jv.push_back(lidx + b - 1);
  const TFPair wpair(wi, IndexSeq(2 * n, jv));
  GapReport wtf = tf_gap(ea, eb, ec, wpair, tol_rel);
  wtf.name = "wielandt_tf";
  tr.steps.push_back({"wielandt_tf", wtf});

  double weak_lhs = 0.0;
  for (int k : cls.k3) weak_lhs += ec(s_of(k));
  for (int k : cls.k4) weak_lhs += ec(2 * n + 1 - t_of(k));
  push("wielandt_weaken", weak_lhs, wtf.lhs);

  double weak_rhs = 0.0;
  for (int k : cls.k3) weak_rhs += ea(t_of(k));
  for (int k : cls.k4) weak_rhs += ea(2 * n + 1 - s_of(k));
  for (int lidx = b; lidx <= b + cls.r - 1; ++lidx) weak_rhs += eb(lidx);
  push("wielandt_relaxed", weak_lhs, weak_rhs);

  l = r = 0.0;
  for (int k : cls.k3) {
    l += gamma(s_of(k));
    r += alpha(t_of(k));
  }
  for (int k : cls.k4) {
    l -= gamma(t_of(k));
    r -= alpha(s_of(k));
  }
  for (int k = b; k <= b + cls.r - 1; ++k) r += beta(k);
  push("exchange_signed", l, r);

  l = r = 0.0;
  for (int k : cls.k3) {
    l += gamma(s_of(k));
    r += alpha(t_of(k));
  }
  for (int k : cls.k4) {
    l += alpha(s_of(k));
    r += gamma(t_of(k));
  }
  for (int k = b; k <= b + cls.r - 1; ++k) r += beta(k);
  push("exchange_sum", l, r);

  GapReport fin = theorem3_gap(alpha, beta, gamma, p, tol_rel);
  fin.name = "exchange";
  tr.steps.push_back({"exchange", fin});

  tr.context = json{{"n", n},
                    {"b", b},
                    {"r", cls.r},
                    {"k1", cls.k1},
                    {"k2", cls.k2},
                    {"k3", cls.k3},
                    {"k4", cls.k4}};
  tr.all_hold = true;
  for (const TraceStep& s : tr.steps) tr.all_hold = tr.all_hold && s.gap.holds;
  return tr;
}

// --------------------------------------------------------------------------
// Hermitian eigenvalue f-version search.
// --------------------------------------------------------------------------

namespace {

ComplexMatrix random_hermitian(CounterRng& rng, int n, bool psd) {
  ComplexMatrix g(n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      g(r, c) = cplx(rng.gaussian(), rng.gaussian()) / std::sqrt(2.0);
  if (psd) return g * g.adjoint();
  ComplexMatrix h(n);
  const ComplexMatrix ga = g.adjoint();
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) h(r, c) = 0.5 * (g(r, c) + ga(r, c));
  return h;
}

}  // namespace

std::vector<SearchWitness> hermitian_fversion_search(
    int budget, const ConcaveFn& f, NegativeConvention convention,
    uint64_t seed, int n, bool psd, double tol_rel) {
  f.require_valid();
  if (n < 1) throw InvalidDims("need n >= 1");
  std::vector<SearchWitness> out;

  auto f_signed = [&](double v) {
    return v < 0.0 ? -f(-v) : f(v);
  };

  for (int inst = 0; inst < budget; ++inst) {
    CounterRng rng(seed, static_cast<uint64_t>(inst));
    const ComplexMatrix a = random_hermitian(rng, n, psd);
    const ComplexMatrix b = random_hermitian(rng, n, psd);
    const Spectrum alpha = hermitian_eigenvalues(a);
    const Spectrum beta = hermitian_eigenvalues(b);
    const Spectrum gamma = hermitian_eigenvalues(a + b);

    for (int m = 1; m <= std::min(n, 6); ++m) {
      for (const TFPair& pair : enumerate_tf_pairs(n, m)) {
        const GapReport plain = tf_gap(alpha, beta, gamma, pair, tol_rel);
        double lhs = 0.0, rhs = 0.0;
        bool skip = false;
        for (int k = 1; k <= m && !skip; ++k) {
          const double gv = gamma(pair.i_seq()[k] + pair.j_seq()[k] - k);
          const double av = alpha(pair.i_seq()[k]);
          const double bv = beta(pair.j_seq()[k]);
          if (convention == NegativeConvention::SkipNegative &&
              (gv < 0.0 || av < 0.0 || bv < 0.0)) {
            skip = true;
            break;
          }
          lhs += f_signed(gv);
          rhs += f_signed(av) + f_signed(bv);
        }
        if (skip) continue;
        const GapReport fg = make_gap("f_tf_hermitian", lhs, rhs, tol_rel);
        if (plain.holds && !fg.holds)
          out.push_back({a, b, pair, plain, fg});
      }
    }
  }
  return out;
}

}  // namespace svineq
