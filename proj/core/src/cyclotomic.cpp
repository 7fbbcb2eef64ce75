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

#include "fanocalc/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <utility>

#include "fanocalc/errors.hpp"
#include "fanocalc/linalg.hpp"

namespace fanocalc {
namespace {

// Reduces a polynomial in zeta (ascending coefficients) modulo Phi_n.
std::vector<Rational> reduce_mod_phi(std::vector<Rational> p, int n) {
  const std::vector<int>& phi = Cyclotomic::minimal_polynomial(n);
  std::size_t d = phi.size() - 1;
  for (std::size_t k = p.size(); k-- > d;) {
    if (p[k] == 0) continue;
    Rational c = p[k];
    for (std::size_t j = 0; j <= d; ++j) {
      if (phi[j] != 0) p[k - d + j] -= c * phi[j];
    }
  }
  p.resize(d, Rational(0));
  return p;
}

// Coordinates of an element of Q(zeta_m) inside Q(zeta_big), m | big.
std::vector<Rational> lift_coords(const std::vector<Rational>& c, int m, int big) {
  if (m == big) return c;
  int step = big / m;
  std::vector<Rational> p(step * (c.size() == 0 ? 1 : c.size()), Rational(0));
  for (std::size_t k = 0; k < c.size(); ++k) p[k * step] = c[k];
  return reduce_mod_phi(std::move(p), big);
}

const std::vector<int>& subfield_candidates(int n) {
  static const std::vector<int> none;
  static const std::vector<int> only_q = {1};
  static const std::vector<int> of8 = {1, 4};
  static const std::vector<int> of12 = {1, 3, 4};
  switch (n) {
    case 3:
    case 4:
      return only_q;
    case 8:
      return of8;
    case 12:
      return of12;
    default:
      return none;
  }
}

// Embedding matrix of Q(zeta_m) into Q(zeta_n), columns are images of
// the power basis of the subfield.
const Matrix<Rational>& embedding(int m, int n) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, Matrix<Rational>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(m, n);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  int pm = Cyclotomic::phi(m);
  std::vector<std::vector<Rational>> cols;
  for (int k = 0; k < pm; ++k) {
    std::vector<Rational> e(pm, Rational(0));
    e[k] = 1;
    cols.push_back(lift_coords(e, m, n));
  }
  return cache.emplace(key, Matrix<Rational>::from_columns(cols, Cyclotomic::phi(n))).first->second;
}

int common_conductor(int a, int b) {
  int l = std::lcm(a, b);
  if (!Cyclotomic::supported_conductor(l)) {
    throw DomainError("mixed arithmetic needs unsupported conductor " + std::to_string(l));
  }
  return l;
}

}  // namespace

bool Cyclotomic::supported_conductor(int n) {
  return n == 1 || n == 2 || n == 3 || n == 4 || n == 6 || n == 8 || n == 12;
}

int Cyclotomic::phi(int n) {
  return static_cast<int>(minimal_polynomial(n).size()) - 1;
}

const std::vector<int>& Cyclotomic::minimal_polynomial(int n) {
  static const std::map<int, std::vector<int>> table = {
      {1, {-1, 1}},        {2, {1, 1}},          {3, {1, 1, 1}},         {4, {1, 0, 1}},
      {6, {1, -1, 1}},     {8, {1, 0, 0, 0, 1}}, {12, {1, 0, -1, 0, 1}},
  };
  auto it = table.find(n);
  if (it == table.end()) throw DomainError("unsupported cyclotomic conductor " + std::to_string(n));
  return it->second;
}

Cyclotomic::Cyclotomic(const Rational& q) : n_(1), c_{q} {}

Cyclotomic::Cyclotomic(int conductor, std::vector<Rational> coords) {
  if (!supported_conductor(conductor)) {
    throw DomainError("unsupported cyclotomic conductor " + std::to_string(conductor));
  }
  std::vector<Rational> c = reduce_mod_phi(std::move(coords), conductor);
  // Q(zeta_2) = Q and Q(zeta_6) = Q(zeta_3); route both through a field
  // that normalize() knows how to shrink.
  if (conductor == 2 || conductor == 6) {
    int up = conductor == 2 ? 4 : 12;
    c = lift_coords(c, conductor, up);
    conductor = up;
  }
  n_ = conductor;
  c_ = std::move(c);
  normalize();
}

void Cyclotomic::normalize() {
  for (int m : subfield_candidates(n_)) {
    auto y = embedding(m, n_).solve(c_);
    if (y) {
      n_ = m;
      c_ = std::move(*y);
      return;
    }
  }
}

Cyclotomic Cyclotomic::zeta(int n, long k) {
  if (!supported_conductor(n)) throw DomainError("unsupported cyclotomic conductor " + std::to_string(n));
  long e = ((k % n) + n) % n;
  std::vector<Rational> p(e + 1, Rational(0));
  p[e] = 1;
  return Cyclotomic(n, std::move(p));
}

std::vector<Rational> Cyclotomic::coords_in(int m) const {
  if (m % n_ != 0) throw DomainError("conductor does not divide target");
  return lift_coords(c_, n_, m);
}

bool Cyclotomic::is_zero() const {
  for (const Rational& x : c_) {
    if (x != 0) return false;
  }
  return true;
}

Rational Cyclotomic::rational_value() const {
  if (n_ != 1) throw DomainError("value " + str() + " is not rational");
  return c_[0];
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  int l = common_conductor(n_, o.n_);
  std::vector<Rational> a = coords_in(l), b = o.coords_in(l);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return Cyclotomic(l, std::move(a));
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (Rational& x : r.c_) x = -x;
  return r;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  if (n_ == 1 && o.n_ == 1) return Cyclotomic(Rational(c_[0] * o.c_[0]));
  int l = common_conductor(n_, o.n_);
  std::vector<Rational> a = coords_in(l), b = o.coords_in(l);
  std::vector<Rational> p(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) p[i + j] += a[i] * b[j];
  }
  return Cyclotomic(l, std::move(p));
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero");
  if (n_ == 1) return Cyclotomic(Rational(1 / c_[0]));
  int d = phi(n_);
  std::vector<std::vector<Rational>> cols;
  for (int j = 0; j < d; ++j) cols.push_back((*this * zeta(n_, j)).coords_in(n_));
  std::vector<Rational> e(d, Rational(0));
  e[0] = 1;
  auto y = Matrix<Rational>::from_columns(cols, d).solve(e);
  if (!y) throw DomainError("singular multiplication matrix");
  return Cyclotomic(n_, std::move(*y));
}

Cyclotomic Cyclotomic::operator/(const Cyclotomic& o) const { return *this * o.inverse(); }

Cyclotomic Cyclotomic::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  Cyclotomic result(1), base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    base *= base;
    k >>= 1;
  }
  return result;
}

int Cyclotomic::root_of_unity_order() const {
  if (is_zero()) return 0;
  Cyclotomic p = *this;
  for (int k = 1; k <= 24; ++k) {
    if (p == Cyclotomic(1)) return k;
    p *= *this;
  }
  return 0;
}

bool Cyclotomic::operator<(const Cyclotomic& o) const {
  if (n_ != o.n_) return n_ < o.n_;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    int s = cmp(c_[i], o.c_[i]);
    if (s != 0) return s < 0;
  }
  return false;
}

std::string Cyclotomic::str() const {
  std::string out;
  std::string sym = "zeta" + std::to_string(n_);
  for (std::size_t k = 0; k < c_.size(); ++k) {
    const Rational& c = c_[k];
    if (c == 0) continue;
    bool neg = c < 0;
    Rational a = neg ? Rational(-c) : c;
    std::string mag;
    if (k == 0) {
      mag = to_string(a);
    } else {
      std::string mono = k == 1 ? sym : sym + "^" + std::to_string(k);
      mag = a == 1 ? mono : to_string(a) + "*" + mono;
    }
    if (out.empty()) {
      out = neg ? "-" + mag : mag;
    } else {
      out += neg ? " - " : " + ";
      out += mag;
    }
  }
  return out.empty() ? "0" : out;
}

std::string to_string(const Cyclotomic& x) { return x.str(); }

}  // namespace fanocalc
