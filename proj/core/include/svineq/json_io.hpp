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

#ifndef SVINEQ_JSON_IO_HPP
#define SVINEQ_JSON_IO_HPP

#include "json.hpp"
#include "svineq/bounds.hpp"
#include "svineq/concave.hpp"
#include "svineq/engine.hpp"
#include "svineq/ensemble.hpp"
#include "svineq/index_comb.hpp"
#include "svineq/matrix.hpp"
#include "svineq/spectrum.hpp"

namespace svineq {

// Wire formats. Keys are emitted in a fixed order so identical inputs
// serialize to identical bytes.
//
//   matrix:   {"n": int, "entries": [[re, im], ...]} row-major, n^2 entries
//   spectrum: {"kind": "singular"|"hermitian", "values": [..]}
//   concave:  {"form": "hook"|"power"|"log1p"|"pwl", ...form fields}
//   index:    {"n": int, "indices": [..]}
//   partition:{"n": int, "indices": [..], "b": int, "flags": ["C"|"A", ..]}

json to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const json& j);

json to_json(const Spectrum& s);
Spectrum spectrum_from_json(const json& j);

json to_json(const ConcaveFn& f);
ConcaveFn concave_from_json(const json& j);

json to_json(const HookMeasure& m);
HookMeasure hook_measure_from_json(const json& j);

json to_json(const IndexSeq& s);
IndexSeq index_seq_from_json(const json& j);

json to_json(const TFPair& p);
TFPair tf_pair_from_json(const json& j);

json to_json(const IndexPartition& p);
IndexPartition partition_from_json(const json& j);

json to_json(const GapReport& g);
GapReport gap_from_json(const json& j);

json to_json(const TraceReport& t);

json to_json(const BoundResult& b);

json to_json(const Ensemble& e);
Ensemble ensemble_from_json(const json& j);

std::string ensemble_kind_name(EnsembleKind k);
EnsembleKind ensemble_kind_from_name(const std::string& name);

}  // namespace svineq

#endif  // SVINEQ_JSON_IO_HPP
