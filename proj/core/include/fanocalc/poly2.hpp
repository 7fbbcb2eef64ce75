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

#ifndef FANOCALC_POLY2_HPP_
#define FANOCALC_POLY2_HPP_

#include <string>
#include <vector>

#include "fanocalc/poly1.hpp"
#include "fanocalc/rational.hpp"

namespace fanocalc {

// Bivariate polynomial in (u, v) with rational coefficients. Entry
// (i, j) is the coefficient of u^i v^j. Trailing all-zero rows and
// columns are removed.
class Poly2 {
 public:
  Poly2() = default;
  Poly2(const Rational& c);  // NOLINT(runtime/explicit)
  Poly2(int c) : Poly2(Rational(c)) {}  // NOLINT(runtime/explicit)
  explicit Poly2(std::vector<std::vector<Rational>> coeffs);

  static Poly2 u();
  static Poly2 v();
  static Poly2 in_u(const Poly1& p);
  static Poly2 in_v(const Poly1& p);

  const std::vector<std::vector<Rational>>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree_u() const { return static_cast<int>(c_.size()) - 1; }
  int degree_v() const;
  Rational coeff(std::size_t i, std::size_t j) const;

  Rational operator()(const Rational& u0, const Rational& v0) const;
  // F(u0, v) as a polynomial in v.
  Poly1 at_u(const Rational& u0) const;
  // F(u, g(u)) as a polynomial in u.
  Poly1 substitute_v(const Poly1& g) const;
  // Coefficient of v^j as a polynomial in u.
  Poly1 coeff_v(std::size_t j) const;
  // Antiderivative in v with zero constant term.
  Poly2 antiderivative_v() const;

  Poly2 operator+(const Poly2& o) const;
  Poly2 operator-(const Poly2& o) const;
  Poly2 operator*(const Poly2& o) const;
  Poly2 operator-() const;
  bool operator==(const Poly2& o) const { return c_ == o.c_; }
  bool operator!=(const Poly2& o) const { return c_ != o.c_; }

  std::string str() const;

 private:
  void trim();
  std::vector<std::vector<Rational>> c_;
};

// Exact integral over v from lower(u) to upper(u) of F(u, v), as a
// polynomial in u.
Poly1 integrate_inner(const Poly2& f, const Poly1& lower, const Poly1& upper);

}  // namespace fanocalc

#endif  // FANOCALC_POLY2_HPP_
