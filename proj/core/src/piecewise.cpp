// Copyright 2026 The fanocalc Authors
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

#include "fanocalc/piecewise.hpp"

#include "fanocalc/errors.hpp"

namespace fanocalc {

PiecewisePoly::PiecewisePoly(std::vector<Rational> breakpoints, std::vector<Poly1> pieces)
    : b_(std::move(breakpoints)), p_(std::move(pieces)) {
  if (p_.empty() && b_.empty()) return;
  if (b_.size() != p_.size() + 1) throw DomainError("piecewise polynomial needs one more breakpoint than pieces");
  for (std::size_t i = 1; i < b_.size(); ++i) {
    if (b_[i] < b_[i - 1]) throw DomainError("piecewise breakpoints must be non-decreasing");
  }
}

Rational PiecewisePoly::operator()(const Rational& t) const {
  if (p_.empty() || t < b_.front() || t > b_.back()) throw DomainError("evaluation outside the piecewise domain");
  for (std::size_t i = 0; i < p_.size(); ++i) {
    if (t <= b_[i + 1]) return p_[i](t);
  }
  return p_.back()(t);
}

std::vector<Discontinuity> PiecewisePoly::continuity_report() const {
  std::vector<Discontinuity> out;
  for (std::size_t i = 1; i < p_.size(); ++i) {
    Rational l = p_[i - 1](b_[i]), r = p_[i](b_[i]);
    if (l != r) out.push_back({b_[i], l, r});
  }
  return out;
}

std::string PiecewisePoly::str(const std::string& var) const {
  std::string out;
  for (std::size_t i = 0; i < p_.size(); ++i) {
    if (i) out += "; ";
    out += "[" + to_string(b_[i]) + ", " + to_string(b_[i + 1]) + "]: " + p_[i].str(var);
  }
  return out;
}

Rational integrate_piecewise(const PiecewisePoly& f) {
  Rational total = 0;
  for (std::size_t i = 0; i < f.pieces().size(); ++i) {
    total += integrate_poly(f.pieces()[i], f.breakpoints()[i], f.breakpoints()[i + 1]);
  }
  return total;
}

}  // namespace fanocalc
