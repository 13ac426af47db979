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

#include "svineq/json_io.hpp"

namespace svineq {

json to_json(const ComplexMatrix& m) {
  json entries = json::array();
  for (const cplx& e : m.entries()) entries.push_back({e.real(), e.imag()});
  return json{{"n", m.n()}, {"entries", std::move(entries)}};
}

ComplexMatrix matrix_from_json(const json& j) {
  const int n = j.at("n").get<int>();
  std::vector<cplx> entries;
  for (const auto& e : j.at("entries"))
    entries.emplace_back(e.at(0).get<double>(), e.at(1).get<double>());
  return ComplexMatrix(n, std::move(entries));
}

json to_json(const Spectrum& s) {
  return json{{"kind", s.kind() == SpectrumKind::Singular ? "singular" : "hermitian"},
              {"values", s.values()}};
}

Spectrum spectrum_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind != "singular" && kind != "hermitian")
    throw InvalidInput("unknown spectrum kind: " + kind);
  return Spectrum(kind == "singular" ? SpectrumKind::Singular
                                     : SpectrumKind::HermitianEigen,
                  j.at("values").get<std::vector<double>>());
}

json to_json(const ConcaveFn& f) {
  switch (f.form()) {
    case ConcaveForm::Hook:
      return json{{"form", "hook"}, {"t", f.param()}};
    case ConcaveForm::Power:
      return json{{"form", "power"}, {"p", f.param()}};
    case ConcaveForm::Log1p:
      return json{{"form", "log1p"}, {"scale", f.param()}};
    case ConcaveForm::PiecewiseLinear:
      return json{{"form", "pwl"},
                  {"breakpoints", f.breakpoints()},
                  {"slopes", f.slopes()}};
  }
  throw InvalidInput("unknown concave form");
}

ConcaveFn concave_from_json(const json& j) {
  const std::string form = j.at("form").get<std::string>();
  if (form == "hook") return ConcaveFn::hook(j.at("t").get<double>());
  if (form == "power") return ConcaveFn::power(j.at("p").get<double>());
  if (form == "log1p") return ConcaveFn::log1p(j.at("scale").get<double>());
  if (form == "pwl")
    return ConcaveFn::piecewise_linear(
        j.at("breakpoints").get<std::vector<double>>(),
        j.at("slopes").get<std::vector<double>>());
  throw InvalidInput("unknown concave form: " + form);
}

json to_json(const HookMeasure& m) {
  json atoms = json::array();
  for (const auto& a : m.atoms) atoms.push_back({{"t", a.t}, {"weight", a.weight}});
  return json{{"atoms", std::move(atoms)}, {"linear_tail", m.linear_tail}};
}

HookMeasure hook_measure_from_json(const json& j) {
  HookMeasure m;
  for (const auto& a : j.at("atoms"))
    m.atoms.push_back({a.at("t").get<double>(), a.at("weight").get<double>()});
  m.linear_tail = j.at("linear_tail").get<double>();
  return m;
}

json to_json(const IndexSeq& s) {
  return json{{"n", s.n()}, {"indices", s.indices()}};
}

IndexSeq index_seq_from_json(const json& j) {
  return IndexSeq(j.at("n").get<int>(), j.at("indices").get<std::vector<int>>());
}

json to_json(const TFPair& p) {
  return json{{"i_seq", to_json(p.i_seq())}, {"j_seq", to_json(p.j_seq())}};
}

TFPair tf_pair_from_json(const json& j) {
  return TFPair(index_seq_from_json(j.at("i_seq")),
                index_seq_from_json(j.at("j_seq")));
}

json to_json(const IndexPartition& p) {
  json flags = json::array();
  for (PartFlag f : p.flags()) flags.push_back(f == PartFlag::C ? "C" : "A");
  return json{{"n", p.I().n()},
              {"indices", p.I().indices()},
              {"b", p.b()},
              {"flags", std::move(flags)}};
}

IndexPartition partition_from_json(const json& j) {
  std::vector<PartFlag> flags;
  for (const auto& f : j.at("flags")) {
    const std::string s = f.get<std::string>();
    if (s != "C" && s != "A") throw InvalidInput("flags must be \"C\" or \"A\"");
    flags.push_back(s == "C" ? PartFlag::C : PartFlag::A);
  }
  return IndexPartition(
      IndexSeq(j.at("n").get<int>(), j.at("indices").get<std::vector<int>>()),
      j.at("b").get<int>(), std::move(flags));
}

json to_json(const GapReport& g) {
  return json{{"name", g.name},   {"lhs", g.lhs},     {"rhs", g.rhs},
              {"slack", g.slack}, {"scale", g.scale}, {"holds", g.holds},
              {"tol_rel", g.tol_rel}};
}

GapReport gap_from_json(const json& j) {
  GapReport g;
  g.name = j.at("name").get<std::string>();
  g.lhs = j.at("lhs").get<double>();
  g.rhs = j.at("rhs").get<double>();
  g.slack = j.at("slack").get<double>();
  g.scale = j.at("scale").get<double>();
  g.holds = j.at("holds").get<bool>();
  g.tol_rel = j.at("tol_rel").get<double>();
  return g;
}

json to_json(const TraceReport& t) {
  json steps = json::array();
  for (const TraceStep& s : t.steps)
    steps.push_back({{"name", s.name}, {"gap", to_json(s.gap)}});
  json out{{"theorem", t.theorem},
           {"steps", std::move(steps)},
           {"context", t.context},
           {"all_hold", t.all_hold}};
  if (t.premise_violation) out["premise_violation"] = to_json(*t.premise_violation);
  return out;
}

json to_json(const BoundResult& b) {
  return json{{"bound", b.bound},         {"actual", b.actual},
              {"tightness", b.tightness}, {"f", to_json(b.f)},
              {"idx", to_json(b.idx)},    {"gap", to_json(b.gap)}};
}

std::string ensemble_kind_name(EnsembleKind k) {
  switch (k) {
    case EnsembleKind::GinibreComplex:
      return "ginibre";
    case EnsembleKind::HermitianGaussian:
      return "hermitian";
    case EnsembleKind::DiagonalNonNegative:
      return "diagonal";
    case EnsembleKind::LowRankPlusNoise:
      return "lowrank";
  }
  throw InvalidInput("unknown ensemble kind");
}

EnsembleKind ensemble_kind_from_name(const std::string& name) {
  if (name == "ginibre") return EnsembleKind::GinibreComplex;
  if (name == "hermitian") return EnsembleKind::HermitianGaussian;
  if (name == "diagonal") return EnsembleKind::DiagonalNonNegative;
  if (name == "lowrank") return EnsembleKind::LowRankPlusNoise;
  throw InvalidInput("unknown ensemble kind: " + name);
}

json to_json(const Ensemble& e) {
  return json{{"kind", ensemble_kind_name(e.kind)},
              {"n", e.n},
              {"seed", e.seed},
              {"rank", e.rank},
              {"noise_scale", e.noise_scale}};
}

Ensemble ensemble_from_json(const json& j) {
  Ensemble e;
  e.kind = ensemble_kind_from_name(j.at("kind").get<std::string>());
  e.n = j.at("n").get<int>();
  e.seed = j.at("seed").get<uint64_t>();
  e.rank = j.value("rank", 1);
  e.noise_scale = j.value("noise_scale", 0.0);
  return e;
}

}  // namespace svineq
