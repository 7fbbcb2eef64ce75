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

#ifndef FANOCALC_CYCLOTOMIC_HPP_
#define FANOCALC_CYCLOTOMIC_HPP_

#include <string>
#include <vector>

#include "fanocalc/rational.hpp"

namespace fanocalc {

// Element of the cyclotomic field Q(zeta_n) for n in {1,2,3,4,6,8,12}.
//
// Values are kept in canonical form: the conductor is the smallest
// supported n whose field contains the value, so n is always one of
// 1, 3, 4, 8, 12 after construction. Coordinates are in the power basis
// 1, zeta_n, ..., zeta_n^(phi(n)-1). Mixed arithmetic lifts both operands
// to the lcm of their conductors; an unsupported lcm (24) throws
// DomainError.
class Cyclotomic {
 public:
  Cyclotomic() : Cyclotomic(Rational(0)) {}
  Cyclotomic(int v) : Cyclotomic(Rational(v)) {}  // NOLINT(runtime/explicit)
  Cyclotomic(const Rational& q);                   // NOLINT(runtime/explicit)
  Cyclotomic(int conductor, std::vector<Rational> coords);

  // zeta_n^k for a supported n.
  static Cyclotomic zeta(int n, long k = 1);
  static bool supported_conductor(int n);
  static int phi(int n);
  // Coefficients of the n-th cyclotomic polynomial, ascending degree.
  static const std::vector<int>& minimal_polynomial(int n);

  int conductor() const { return n_; }
  const std::vector<Rational>& coords() const { return c_; }
  // Coordinates after lifting to Q(zeta_m); requires conductor() | m.
  std::vector<Rational> coords_in(int m) const;

  bool is_zero() const;
  bool is_rational() const { return n_ == 1; }
  Rational rational_value() const;  // throws DomainError if not rational

  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic operator/(const Cyclotomic& o) const;
  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }
  Cyclotomic& operator/=(const Cyclotomic& o) { return *this = *this / o; }
  bool operator==(const Cyclotomic& o) const { return n_ == o.n_ && c_ == o.c_; }
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }
  bool operator<(const Cyclotomic& o) const;  // arbitrary total order for containers

  Cyclotomic inverse() const;  // throws DomainError on zero
  Cyclotomic pow(long k) const;

  // If this value is a root of unity of order dividing 24, its order;
  // otherwise 0.
  int root_of_unity_order() const;

  // Human-readable form such as "1/2 - zeta3 + 2*zeta3^2".
  std::string str() const;

 private:
  void normalize();

  int n_ = 1;
  std::vector<Rational> c_;
};

std::string to_string(const Cyclotomic& x);

}  // namespace fanocalc

#endif  // FANOCALC_CYCLOTOMIC_HPP_
