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

#include "svineq/concave.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace svineq {

ConcaveFn ConcaveFn::hook(double t) {
  ConcaveFn f;
  f.form_ = ConcaveForm::Hook;
  f.param_ = t;
  return f;
}

ConcaveFn ConcaveFn::power(double p) {
  ConcaveFn f;
  f.form_ = ConcaveForm::Power;
  f.param_ = p;
  return f;
}

ConcaveFn ConcaveFn::log1p(double scale) {
  ConcaveFn f;
  f.form_ = ConcaveForm::Log1p;
  f.param_ = scale;
  return f;
}

ConcaveFn ConcaveFn::piecewise_linear(std::vector<double> breakpoints,
                                      std::vector<double> slopes) {
  if (breakpoints.empty())
    throw InvalidConcaveFn("piecewise-linear form needs at least one breakpoint");
  if (slopes.size() != breakpoints.size() + 1)
    throw InvalidConcaveFn("need exactly breakpoints+1 slopes, got " +
                           std::to_string(slopes.size()));
  for (size_t i = 0; i < breakpoints.size(); ++i) {
    if (!std::isfinite(breakpoints[i]) || breakpoints[i] <= 0.0)
      throw InvalidConcaveFn("breakpoints must be positive and finite");
    if (i > 0 && breakpoints[i] <= breakpoints[i - 1])
      throw InvalidConcaveFn("breakpoints must be strictly increasing");
  }
  for (double s : slopes)
    if (!std::isfinite(s)) throw InvalidConcaveFn("slopes must be finite");
  ConcaveFn f;
  f.form_ = ConcaveForm::PiecewiseLinear;
  f.breakpoints_ = std::move(breakpoints);
  f.slopes_ = std::move(slopes);
  return f;
}

double ConcaveFn::operator()(double x) const {
  if (x < 0.0) throw NegativeArgument("f is only defined for x >= 0");
  switch (form_) {
    case ConcaveForm::Hook:
      return std::min(x, param_);
    case ConcaveForm::Power:
      return std::pow(x, param_);
    case ConcaveForm::Log1p:
      return param_ * std::log1p(x / param_);
    case ConcaveForm::PiecewiseLinear: {
      double val = 0.0, prev = 0.0;
      for (size_t i = 0; i < breakpoints_.size(); ++i) {
        if (x <= breakpoints_[i]) return val + slopes_[i] * (x - prev);
        val += slopes_[i] * (breakpoints_[i] - prev);
        prev = breakpoints_[i];
      }
      return val + slopes_.back() * (x - prev);
    }
  }
  return 0.0;  // unreachable
}

ValidationResult ConcaveFn::validate() const {
  switch (form_) {
    case ConcaveForm::Hook:
      if (!(param_ > 0.0)) return {false, "hook threshold must be positive"};
      return {};
    case ConcaveForm::Power:
      if (!(param_ > 0.0 && param_ <= 1.0))
        return {false, "power exponent must lie in (0, 1]"};
      return {};
    case ConcaveForm::Log1p:
      if (!(param_ > 0.0)) return {false, "log1p scale must be positive"};
      return {};
    case ConcaveForm::PiecewiseLinear:
      for (size_t i = 0; i < slopes_.size(); ++i) {
        if (slopes_[i] < 0.0)
          return {false, "negative slope at segment " + std::to_string(i)};
        if (i > 0 && slopes_[i] > slopes_[i - 1])
          return {false, "slopes not non-increasing at segment " + std::to_string(i)};
      }
      return {};
  }
  return {};
}

void ConcaveFn::require_valid() const {
  const ValidationResult r = validate();
  if (!r.ok) throw InvalidConcaveFn(r.message);
}

ConcaveFn ConcaveFn::scaled(double c) const {
  if (form_ != ConcaveForm::PiecewiseLinear)
    throw InvalidInput("scaled() applies to piecewise-linear functions only");
  if (!(c > 0.0)) throw InvalidInput("scale factor must be positive");
  std::vector<double> s = slopes_;
  for (double& v : s) v *= c;
  return piecewise_linear(breakpoints_, std::move(s));
}

std::string ConcaveFn::describe() const {
  std::ostringstream os;
  switch (form_) {
    case ConcaveForm::Hook:
      os << "hook(t=" << param_ << ")";
      break;
    case ConcaveForm::Power:
      os << "power(p=" << param_ << ")";
      break;
    case ConcaveForm::Log1p:
      os << "log1p(scale=" << param_ << ")";
      break;
    case ConcaveForm::PiecewiseLinear:
      os << "pwl(" << breakpoints_.size() << " breakpoints)";
      break;
  }
  return os.str();
}

double HookMeasure::eval(double x) const {
  double v = linear_tail * x;
  for (const Atom& a : atoms) v += a.weight * std::min(x, a.t);
  return v;
}

HookMeasure hook_decompose(const ConcaveFn& f) {
  if (f.form() != ConcaveForm::PiecewiseLinear)
    throw NotPiecewiseLinear(
        "hook_decompose takes a piecewise-linear function; use pwl_approximate "
        "to bridge closed forms");
  f.require_valid();
  HookMeasure m;
  const auto& bp = f.breakpoints();
  const auto& sl = f.slopes();
  for (size_t b = 0; b < bp.size(); ++b)
    m.atoms.push_back({bp[b], sl[b] - sl[b + 1]});
  m.linear_tail = sl.back();
  return m;
}

PwlApprox pwl_approximate(const ConcaveFn& f, double x_max, int segments) {
  f.require_valid();
  if (!(x_max > 0.0)) throw InvalidInput("x_max must be positive");
  if (segments < 1) throw InvalidInput("need at least one segment");

  // Geometric nodes: concave functions curve most near 0.
  const double x_lo = x_max / (static_cast<double>(segments) * segments + 1.0);
  std::vector<double> nodes;
  for (int k = 0; k <= segments; ++k)
    nodes.push_back(x_lo * std::pow(x_max / x_lo, static_cast<double>(k) / segments));
  nodes.back() = x_max;
  // Insert the input's own kinks so hooks and PWLs reproduce exactly.
  if (f.form() == ConcaveForm::Hook && f.param() < x_max)
    nodes.push_back(f.param());
  if (f.form() == ConcaveForm::PiecewiseLinear)
    for (double b : f.breakpoints())
      if (b < x_max) nodes.push_back(b);
  std::sort(nodes.begin(), nodes.end());
  std::vector<double> uniq;
  for (double x : nodes)
    if (uniq.empty() || x - uniq.back() > 1e-15 * x_max) uniq.push_back(x);

  std::vector<double> slopes;
  slopes.push_back(f(uniq[0]) / uniq[0]);
  for (size_t k = 0; k + 1 < uniq.size(); ++k) {
    double s = (f(uniq[k + 1]) - f(uniq[k])) / (uniq[k + 1] - uniq[k]);
    // guard against rounding breaking the layered-slope invariant
    s = std::min(s, slopes.back());
    slopes.push_back(std::max(s, 0.0));
  }
  slopes.push_back(slopes.back());  // extend at the final chord slope

  PwlApprox out{ConcaveFn::piecewise_linear(uniq, slopes), 0.0};

  // For concave f the error on each segment is a concave function vanishing
  // at both endpoints, so its max is at most twice its midpoint value.
  double err = 0.0;
  double prev = 0.0;
  for (double x : uniq) {
    const double mid = 0.5 * (prev + x);
    err = std::max(err, 2.0 * (f(mid) - out.fn(mid)));
    prev = x;
  }
  out.sup_error = std::max(err, 0.0);
  return out;
}

}  // namespace svineq
