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

#ifndef SVINEQ_ERRORS_HPP
#define SVINEQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace svineq {

// Base class of everything this library throws.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct NonFiniteEntry : Error {
  explicit NonFiniteEntry(const std::string& msg) : Error(msg) {}
};
struct NotHermitian : Error {
  explicit NotHermitian(const std::string& msg) : Error(msg) {}
};
struct DimMismatch : Error {
  explicit DimMismatch(const std::string& msg) : Error(msg) {}
};
struct InvalidDims : Error {
  explicit InvalidDims(const std::string& msg) : Error(msg) {}
};
struct NegativeArgument : Error {
  explicit NegativeArgument(const std::string& msg) : Error(msg) {}
};
struct InvalidConcaveFn : Error {
  explicit InvalidConcaveFn(const std::string& msg) : Error(msg) {}
};
struct NotPiecewiseLinear : Error {
  explicit NotPiecewiseLinear(const std::string& msg) : Error(msg) {}
};
struct NegativeSpectrum : Error {
  explicit NegativeSpectrum(const std::string& msg) : Error(msg) {}
};
struct TFViolation : Error {
  explicit TFViolation(const std::string& msg) : Error(msg) {}
};
struct FlagConflict : Error {
  explicit FlagConflict(const std::string& msg) : Error(msg) {}
};
struct InvalidP : Error {
  explicit InvalidP(const std::string& msg) : Error(msg) {}
};
struct BudgetExceeded : Error {
  explicit BudgetExceeded(const std::string& msg) : Error(msg) {}
};
struct InvalidInput : Error {
  explicit InvalidInput(const std::string& msg) : Error(msg) {}
};

}  // namespace svineq

#endif  // SVINEQ_ERRORS_HPP
