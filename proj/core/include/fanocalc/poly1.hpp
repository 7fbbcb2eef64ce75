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

#ifndef FANOCALC_POLY1_HPP_
#define FANOCALC_POLY1_HPP_

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "fanocalc/rational.hpp"

namespace fanocalc {

// Univariate polynomial with rational coefficients in ascending degree.
// The zero polynomial has no coefficients; otherwise the leading
// coefficient is nonzero.
class Poly1 {
 public:
  Poly1() = default;
  Poly1(const Rational& c);  // NOLINT(runtime/explicit)
  Poly1(int c) : Poly1(Rational(c)) {}  // NOLINT(runtime/explicit)
  explicit Poly1(std::vector<Rational> coeffs);
  Poly1(std::initializer_list<Rational> coeffs);

  static Poly1 x() { return Poly1({Rational(0), Rational(1)}); }
  // a + b x
  static Poly1 linear(const Rational& a, const Rational& b) { return Poly1({a, b}); }

  const std::vector<Rational>& coeffs() const { return c_; }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

  Rational operator()(const Rational& t) const;
  Poly1 compose(const Poly1& inner) const;

  Poly1 operator+(const Poly1& o) const;
  Poly1 operator-(const Poly1& o) const;
  Poly1 operator*(const Poly1& o) const;
  Poly1 operator-() const;
  Poly1 operator*(const Rational& s) const;
  Poly1& operator+=(const Poly1& o) { return *this = *this + o; }
  Poly1& operator-=(const Poly1& o) { return *this = *this - o; }
  Poly1& operator*=(const Poly1& o) { return *this = *this * o; }
  bool operator==(const Poly1& o) const { return c_ == o.c_; }
  bool operator!=(const Poly1& o) const { return c_ != o.c_; }

  Poly1 pow(unsigned k) const;
  Poly1 derivative() const;
  // Antiderivative with zero constant term.
  Poly1 antiderivative() const;

  // Euclidean division: *this = q * d + r with deg r < deg d.
  std::pair<Poly1, Poly1> divmod(const Poly1& d) const;
  Poly1 monic() const;

  // Exact square root when this polynomial is the square of a rational
  // polynomial with nonnegative leading coefficient; false otherwise.
  bool exact_sqrt(Poly1* out) const;

  std::string str(const std::string& var = "u") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

Poly1 operator*(const Rational& s, const Poly1& p);

Poly1 gcd(Poly1 a, Poly1 b);  // monic, or zero if both are zero

// Exact definite integral of p over [a, b].
Rational integrate_poly(const Poly1& p, const Rational& a, const Rational& b);

// All rational roots with multiplicity, ascending. p must be nonzero.
std::vector<Rational> rational_roots(const Poly1& p);

// Distinct rational roots of p lying in the open interval (a, b).
std::vector<Rational> rational_roots_in(const Poly1& p, const Rational& a, const Rational& b);

// Number of distinct real roots of p in the open interval (a, b), by a
// Sturm sequence. p must be nonzero.
int count_real_roots(const Poly1& p, const Rational& a, const Rational& b);

// Sign of p on the open interval (a, b) when p has no roots there:
// -1, 0 (p identically zero) or 1. Throws IrrationalWall when p changes
// sign or vanishes inside the interval.
int sign_on_open_interval(const Poly1& p, const Rational& a, const Rational& b);

}  // namespace fanocalc

#endif  // FANOCALC_POLY1_HPP_
