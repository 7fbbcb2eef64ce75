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

#ifndef FANOCALC_PIECEWISE_HPP_
#define FANOCALC_PIECEWISE_HPP_

#include <string>
#include <vector>

#include "fanocalc/poly1.hpp"
#include "fanocalc/rational.hpp"

namespace fanocalc {

// A jump between two adjacent pieces at a shared breakpoint.
struct Discontinuity {
  Rational at;
  Rational left_value;
  Rational right_value;
};

// Piecewise polynomial on [b_0, b_k]. Piece i lives on the closed
// interval [b_i, b_{i+1}]; breakpoints are non-decreasing, so a
// zero-length piece is allowed and contributes nothing to integrals. At a
// shared breakpoint the value is taken from the left piece.
class PiecewisePoly {
 public:
  PiecewisePoly() = default;
  // Throws DomainError unless breakpoints.size() == pieces.size() + 1
  // and breakpoints are non-decreasing.
  PiecewisePoly(std::vector<Rational> breakpoints, std::vector<Poly1> pieces);

  const std::vector<Rational>& breakpoints() const { return b_; }
  const std::vector<Poly1>& pieces() const { return p_; }
  bool empty() const { return p_.empty(); }
  Rational domain_start() const { return b_.front(); }
  Rational domain_end() const { return b_.back(); }

  Rational operator()(const Rational& t) const;
  // Jumps at interior breakpoints; empty when continuous.
  std::vector<Discontinuity> continuity_report() const;

  std::string str(const std::string& var = "u") const;

 private:
  std::vector<Rational> b_;
  std::vector<Poly1> p_;
};

Rational integrate_piecewise(const PiecewisePoly& f);

}  // namespace fanocalc

#endif  // FANOCALC_PIECEWISE_HPP_
