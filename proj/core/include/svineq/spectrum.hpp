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

#ifndef SVINEQ_SPECTRUM_HPP
#define SVINEQ_SPECTRUM_HPP

#include <vector>

#include "svineq/errors.hpp"

namespace svineq {

enum class SpectrumKind { Singular, HermitianEigen };

// Non-increasing sequence of spectral values. Singular spectra are
// additionally non-negative.
class Spectrum {
 public:
  Spectrum() = default;
  Spectrum(SpectrumKind kind, std::vector<double> values);

  SpectrumKind kind() const { return kind_; }
  const std::vector<double>& values() const { return values_; }
  int size() const { return static_cast<int>(values_.size()); }

  // 1-based access, matching the usual spectral indexing.
  double operator()(int i) const;

  bool non_negative() const;

 private:
  SpectrumKind kind_ = SpectrumKind::Singular;
  std::vector<double> values_;
};

}  // namespace svineq

#endif  // SVINEQ_SPECTRUM_HPP
