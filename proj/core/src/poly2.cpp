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

#include "fanocalc/poly2.hpp"

#include <algorithm>

namespace fanocalc {

Poly2::Poly2(const Rational& c) : c_{{c}} { trim(); }

Poly2::Poly2(std::vector<std::vector<Rational>> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly2 Poly2::u() { return Poly2({{Rational(0)}, {Rational(1)}}); }

Poly2 Poly2::v() { return Poly2({{Rational(0), Rational(1)}}); }

Poly2 Poly2::in_u(const Poly1& p) {
  std::vector<std::vector<Rational>> c;
  for (const Rational& a : p.coeffs()) c.push_back({a});
  return Poly2(std::move(c));
}

Poly2 Poly2::in_v(const Poly1& p) { return Poly2(std::vector<std::vector<Rational>>{p.coeffs()}); }

void Poly2::trim() {
  std::size_t width = 0;
  for (auto& row : c_) {
    while (!row.empty() && row.back() == 0) row.pop_back();
    width = std::max(width, row.size());
  }
  while (!c_.empty() && c_.back().empty()) c_.pop_back();
  for (auto& row : c_) row.resize(width, Rational(0));
}

int Poly2::degree_v() const { return c_.empty() ? -1 : static_cast<int>(c_[0].size()) - 1; }

Rational Poly2::coeff(std::size_t i, std::size_t j) const {
  if (i >= c_.size() || j >= c_[i].size()) return Rational(0);
  return c_[i][j];
}

Rational Poly2::operator()(const Rational& u0, const Rational& v0) const { return at_u(u0)(v0); }

Poly1 Poly2::at_u(const Rational& u0) const {
  std::size_t w = c_.empty() ? 0 : c_[0].size();
  std::vector<Rational> r(w, Rational(0));
  Rational pw = 1;
  for (const auto& row : c_) {
    for (std::size_t j = 0; j < w; ++j) r[j] += row[j] * pw;
    pw *= u0;
  }
  return Poly1(std::move(r));
}

Poly1 Poly2::coeff_v(std::size_t j) const {
  std::vector<Rational> r;
  for (const auto& row : c_) r.push_back(j < row.size() ? row[j] : Rational(0));
  return Poly1(std::move(r));
}

Poly1 Poly2::substitute_v(const Poly1& g) const {
  Poly1 acc;
  for (int j = degree_v(); j >= 0; --j) acc = acc * g + coeff_v(j);
  return acc;
}

Poly2 Poly2::antiderivative_v() const {
  std::vector<std::vector<Rational>> r;
  for (const auto& row : c_) {
    std::vector<Rational> nr(row.size() + 1, Rational(0));
    for (std::size_t j = 0; j < row.size(); ++j) nr[j + 1] = row[j] / static_cast<long>(j + 1);
    r.push_back(std::move(nr));
  }
  return Poly2(std::move(r));
}

Poly2 Poly2::operator+(const Poly2& o) const {
  std::size_t rows = std::max(c_.size(), o.c_.size());
  std::size_t cols = std::max(degree_v() + 1, o.degree_v() + 1);
  std::vector<std::vector<Rational>> r(rows, std::vector<Rational>(cols, Rational(0)));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < c_[i].size(); ++j) r[i][j] += c_[i][j];
  for (std::size_t i = 0; i < o.c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_[i].size(); ++j) r[i][j] += o.c_[i][j];
  return Poly2(std::move(r));
}

Poly2 Poly2::operator-() const {
  Poly2 r = *this;
  for (auto& row : r.c_)
    for (Rational& x : row) x = -x;
  return r;
}

Poly2 Poly2::operator-(const Poly2& o) const { return *this + (-o); }

Poly2 Poly2::operator*(const Poly2& o) const {
  if (is_zero() || o.is_zero()) return Poly2();
  std::size_t rows = c_.size() + o.c_.size() - 1;
  std::size_t cols = degree_v() + o.degree_v() + 1;
  std::vector<std::vector<Rational>> r(rows, std::vector<Rational>(cols, Rational(0)));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < c_[i].size(); ++j) {
      if (c_[i][j] == 0) continue;
      for (std::size_t k = 0; k < o.c_.size(); ++k)
        for (std::size_t l = 0; l < o.c_[k].size(); ++l) r[i + k][j + l] += c_[i][j] * o.c_[k][l];
    }
  return Poly2(std::move(r));
}

std::string Poly2::str() const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    for (std::size_t j = c_[i].size(); j-- > 0;) {
      const Rational& c = c_[i][j];
      if (c == 0) continue;
      bool neg = c < 0;
      Rational a = neg ? Rational(-c) : c;
      std::string mono;
      if (i > 0) mono += i == 1 ? "u" : "u^" + std::to_string(i);
      if (j > 0) {
        if (!mono.empty()) mono += "*";
        mono += j == 1 ? "v" : "v^" + std::to_string(j);
      }
      std::string mag = mono.empty() ? to_string(a) : (a == 1 ? mono : to_string(a) + "*" + mono);
      if (out.empty()) {
        out = neg ? "-" + mag : mag;
      } else {
        out += neg ? " - " : " + ";
        out += mag;
      }
    }
  }
  return out;
}

Poly1 integrate_inner(const Poly2& f, const Poly1& lower, const Poly1& upper) {
  Poly2 anti = f.antiderivative_v();
  return anti.substitute_v(upper) - anti.substitute_v(lower);
}

}  // namespace fanocalc
