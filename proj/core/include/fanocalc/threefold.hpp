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

#ifndef FANOCALC_THREEFOLD_HPP_
#define FANOCALC_THREEFOLD_HPP_

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "fanocalc/piecewise.hpp"
#include "fanocalc/poly1.hpp"
#include "fanocalc/rational.hpp"

namespace fanocalc::threefold {

// One triple product D_i . D_j . D_k with i <= j <= k.
struct TripleEntry {
  std::array<std::size_t, 3> index;
  Rational value;
};

// Divisor-class basis with a symmetric trilinear intersection form.
class ThreefoldModel {
 public:
  ThreefoldModel() = default;
  // Each entry fills every permutation of its indices; repeated or
  // conflicting entries and a nonpositive anticanonical volume throw
  // ValidationError.
  ThreefoldModel(std::string name, std::vector<std::string> basis, const std::vector<TripleEntry>& entries,
                 std::vector<Rational> anticanonical);

  const std::string& name() const { return name_; }
  const std::vector<std::string>& basis() const { return basis_; }
  std::size_t rank() const { return basis_.size(); }
  const std::vector<Rational>& anticanonical() const { return anticanonical_; }
  const Rational& tri(std::size_t i, std::size_t j, std::size_t k) const;
  // Distinct entries i <= j <= k in lexicographic order.
  std::vector<TripleEntry> entries() const;
  std::size_t index_of(const std::string& label) const;

 private:
  std::string name_;
  std::vector<std::string> basis_;
  std::vector<Rational> tri_;
  std::vector<Rational> anticanonical_;
};

// Blowup of a Fano threefold V with H^3 = degree and -K_V = index * H
// along a smooth curve of the given degree and genus. Basis (H, E).
ThreefoldModel blowup_curve_model(const std::string& name, const Rational& degree, const Rational& index,
                                  const Rational& curve_degree, int curve_genus);

struct ChamberSpec {
  Rational lo;
  Rational hi;
  std::vector<Poly1> positive;
  std::vector<std::pair<std::string, Poly1>> negative;
};

struct DivisorFamilySpec {
  std::string name;
  std::vector<Rational> divisor;  // class Y of the family -K - uY
  std::vector<ChamberSpec> chambers;
  Rational tau;
};

struct Diagnostic {
  enum class Kind { kPartition, kContinuity, kNegativity, kMonotonicity, kDecomposition, kShape };
  Kind kind;
  Rational at;
  std::string message;
};

std::string kind_name(Diagnostic::Kind k);

Rational triple(const ThreefoldModel& m, const std::vector<Rational>& a, const std::vector<Rational>& b,
                const std::vector<Rational>& c);
Rational anticanonical_volume(const ThreefoldModel& m);
Poly1 cube(const ThreefoldModel& m, const std::vector<Poly1>& fam);
// P(u)^3 chamber by chamber.
PiecewisePoly cube_profile(const ThreefoldModel& m, const DivisorFamilySpec& spec);
std::vector<Diagnostic> validate_chambers(const ThreefoldModel& m, const DivisorFamilySpec& spec);
// Throws ValidationError listing the diagnostics when the spec is invalid.
Rational s_invariant(const ThreefoldModel& m, const DivisorFamilySpec& spec);

}  // namespace fanocalc::threefold

#endif  // FANOCALC_THREEFOLD_HPP_
