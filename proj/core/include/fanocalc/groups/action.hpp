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

#ifndef FANOCALC_GROUPS_ACTION_HPP_
#define FANOCALC_GROUPS_ACTION_HPP_

#include <optional>
#include <string>
#include <vector>

#include "fanocalc/cyclotomic.hpp"
#include "fanocalc/groups/mpoly.hpp"
#include "fanocalc/linalg.hpp"

namespace fanocalc::groups {

// P^{n_1} x ... x P^{n_k}.
struct MultiProjectiveSpace {
  std::vector<int> dims;

  std::size_t factors() const { return dims.size(); }
  std::size_t coords(std::size_t factor) const { return static_cast<std::size_t>(dims[factor]) + 1; }
  std::size_t total_coords() const;
  std::size_t offset(std::size_t factor) const;
  int dimension() const;
  bool operator==(const MultiProjectiveSpace& o) const { return dims == o.dims; }
  void validate() const;  // throws ValidationError
};

// A point with one coordinate vector per factor.
using Point = std::vector<std::vector<Cyclotomic>>;

// Monomial matrix M with (M x)_r = diag[r] * x_{perm[r]}.
struct MonomialMatrix {
  std::vector<int> perm;
  std::vector<Cyclotomic> diag;

  static MonomialMatrix identity(std::size_t n);
  std::size_t size() const { return perm.size(); }
  std::vector<Cyclotomic> apply(const std::vector<Cyclotomic>& x) const;
  Matrix<Cyclotomic> dense() const;
  // this * o
  MonomialMatrix compose(const MonomialMatrix& o) const;
  bool operator==(const MonomialMatrix& o) const { return perm == o.perm && diag == o.diag; }
};

// Group element acting on a multiprojective space: the image point has
// factor j equal to maps[j] applied to factor source[j] of the input.
struct GroupElement {
  std::vector<int> source;
  std::vector<MonomialMatrix> maps;

  static GroupElement identity(const MultiProjectiveSpace& space);
  void validate(const MultiProjectiveSpace& space) const;  // throws ValidationError
  Point apply(const Point& p) const;
  // (this o o)(p) = this(o(p))
  GroupElement compose(const GroupElement& o) const;
  // Representative with the first diagonal entry of each factor equal to 1.
  GroupElement normalized() const;
  bool projectively_equal(const GroupElement& o) const;
  bool is_projective_identity() const;
  GroupElement pow(unsigned k) const;
  // Pullback g^* f = f o g on the variables of the space.
  MPoly pullback(const MPoly& f, const MultiProjectiveSpace& space) const;
  std::string str(const MultiProjectiveSpace& space, const std::vector<std::string>& names) const;
  bool operator==(const GroupElement& o) const { return source == o.source && maps == o.maps; }
  bool operator<(const GroupElement& o) const;
  int conductor() const;
};

struct FiniteAbelianAction {
  MultiProjectiveSpace space;
  std::vector<GroupElement> generators;
  std::vector<int> claimed_structure;  // invariant factors, e.g. {2, 2, 2, 2}
};

struct GroupSummary {
  std::size_t order;
  std::vector<GroupElement> elements;  // normalized, sorted
};

// Enumerates the projective group generated by `gens`; throws
// UnsupportedAction when the order exceeds `limit`.
std::vector<GroupElement> enumerate_group(const MultiProjectiveSpace& space, const std::vector<GroupElement>& gens,
                                          std::size_t limit = 4096);
// Projective order of an element.
unsigned element_order(const GroupElement& g, unsigned limit = 4096);
// Checks generators, commutativity and the claimed invariant factors;
// throws ValidationError on failure.
GroupSummary validate_action(const FiniteAbelianAction& act);
std::string structure_str(const std::vector<int>& invariant_factors);

// Multihomogeneous equations on a space. `weights` holds one weight
// vector per variable; when empty the standard multigrading (one unit
// weight per factor) is used.
struct VarietyModel {
  MultiProjectiveSpace space;
  std::vector<std::string> variables;
  std::vector<MPoly> equations;
  std::vector<std::vector<int>> weights;

  std::vector<std::vector<int>> grading() const;
  // Degree of each equation; throws ValidationError when an equation is
  // not homogeneous.
  std::vector<std::vector<int>> multidegrees() const;
  void validate() const;
};

struct InvarianceRow {
  std::size_t generator;
  std::size_t equation;
  std::size_t image;  // index of the equation the pullback is proportional to
  Cyclotomic scalar;
};

struct InvarianceReport {
  std::vector<InvarianceRow> rows;
  // Distinct scalars in first-seen order.
  std::vector<Cyclotomic> characters() const;
};

// For every generator g and equation f, finds an equation f' and scalar
// c with g^* f = c f'. Throws NotInvariant naming the first failure.
InvarianceReport check_invariance(const FiniteAbelianAction& act, const VarietyModel& v);

// Fallback names v<factor>_<k> used when no names are supplied.
std::vector<std::string> default_variable_names(const MultiProjectiveSpace& space);

// Parses the image notation "[x2:x3:x1:x4:x5]" or, for several factors,
// "([y1:y2],[x1:x2])". Every coordinate must be a scalar times a single
// variable. Throws ParseError.
GroupElement parse_generator(const std::string& text, const MultiProjectiveSpace& space,
                             const std::vector<std::string>& names);

}  // namespace fanocalc::groups

#endif  // FANOCALC_GROUPS_ACTION_HPP_
