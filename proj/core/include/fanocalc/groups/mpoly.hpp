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

#ifndef FANOCALC_GROUPS_MPOLY_HPP_
#define FANOCALC_GROUPS_MPOLY_HPP_

#include <map>
#include <string>
#include <vector>

#include "fanocalc/cyclotomic.hpp"

namespace fanocalc::groups {

using Exponents = std::vector<int>;

// Sparse multivariate polynomial over the supported cyclotomic fields.
class MPoly {
 public:
  MPoly() = default;
  explicit MPoly(std::size_t nvars) : nvars_(nvars) {}
  MPoly(std::size_t nvars, const Cyclotomic& c);

  static MPoly variable(std::size_t nvars, std::size_t index);

  std::size_t nvars() const { return nvars_; }
  const std::map<Exponents, Cyclotomic>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Cyclotomic constant_term() const;
  // Largest field conductor among the coefficients.
  int conductor() const;

  void add_term(const Exponents& e, const Cyclotomic& c);

  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const;
  MPoly operator*(const MPoly& o) const;
  MPoly operator*(const Cyclotomic& c) const;
  MPoly operator-() const;
  bool operator==(const MPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
  bool operator!=(const MPoly& o) const { return !(*this == o); }
  MPoly pow(unsigned k) const;

  Cyclotomic eval(const std::vector<Cyclotomic>& point) const;
  // Replaces variable i by images[i]; all images share a variable count.
  MPoly substitute(const std::vector<MPoly>& images) const;

  // Weighted degree of every term under the weights (one weight vector
  // per variable); empty when the polynomial is zero. Throws
  // ValidationError when terms disagree.
  std::vector<int> homogeneous_degree(const std::vector<std::vector<int>>& weights) const;

  std::string str(const std::vector<std::string>& names) const;

 private:
  std::size_t nvars_ = 0;
  std::map<Exponents, Cyclotomic> terms_;
};

// Parses an expression such as "x1^2 + zeta3*x2*x3 - 2/3*x4" over the
// given variable names. Root-of-unity symbols are zeta1 .. zeta12 for
// supported conductors. Multiplication must be explicit. Throws
// ParseError with the offending offset.
MPoly parse_mpoly(const std::string& text, const std::vector<std::string>& names);
Cyclotomic parse_scalar(const std::string& text);

}  // namespace fanocalc::groups

#endif  // FANOCALC_GROUPS_MPOLY_HPP_
