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

#include "fanocalc/groups/mpoly.hpp"

#include <algorithm>

#include "fanocalc/errors.hpp"

namespace fanocalc::groups {

MPoly::MPoly(std::size_t nvars, const Cyclotomic& c) : nvars_(nvars) {
  if (!c.is_zero()) terms_.emplace(Exponents(nvars, 0), c);
}

MPoly MPoly::variable(std::size_t nvars, std::size_t index) {
  MPoly p(nvars);
  Exponents e(nvars, 0);
  e.at(index) = 1;
  p.terms_.emplace(e, Cyclotomic(1));
  return p;
}

bool MPoly::is_constant() const {
  for (const auto& [e, c] : terms_) {
    for (int k : e)
      if (k != 0) return false;
  }
  return true;
}

Cyclotomic MPoly::constant_term() const {
  auto it = terms_.find(Exponents(nvars_, 0));
  return it == terms_.end() ? Cyclotomic(0) : it->second;
}

int MPoly::conductor() const {
  int n = 1;
  for (const auto& [e, c] : terms_) n = std::max(n, c.conductor());
  return n;
}

void MPoly::add_term(const Exponents& e, const Cyclotomic& c) {
  if (e.size() != nvars_) throw DimensionMismatch("exponent vector length mismatch");
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

MPoly MPoly::operator+(const MPoly& o) const {
  if (nvars_ != o.nvars_) throw DimensionMismatch("polynomial variable count mismatch");
  MPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MPoly MPoly::operator-(const MPoly& o) const { return *this + (-o); }

MPoly MPoly::operator*(const MPoly& o) const {
  if (nvars_ != o.nvars_) throw DimensionMismatch("polynomial variable count mismatch");
  MPoly r(nvars_);
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) {
      Exponents e(nvars_);
      for (std::size_t i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
      r.add_term(e, c1 * c2);
    }
  }
  return r;
}

MPoly MPoly::operator*(const Cyclotomic& c) const {
  if (c.is_zero()) return MPoly(nvars_);
  MPoly r = *this;
  for (auto& [e, x] : r.terms_) x *= c;
  return r;
}

MPoly MPoly::pow(unsigned k) const {
  MPoly r(nvars_, Cyclotomic(1)), b = *this;
  while (k > 0) {
    if (k & 1) r = r * b;
    b = b * b;
    k >>= 1;
  }
  return r;
}

Cyclotomic MPoly::eval(const std::vector<Cyclotomic>& point) const {
  if (point.size() != nvars_) throw DimensionMismatch("evaluation point has wrong length");
  Cyclotomic acc(0);
  for (const auto& [e, c] : terms_) {
    Cyclotomic t = c;
    for (std::size_t i = 0; i < nvars_; ++i)
      if (e[i] > 0) t *= point[i].pow(e[i]);
    acc += t;
  }
  return acc;
}

MPoly MPoly::substitute(const std::vector<MPoly>& images) const {
  if (images.size() != nvars_) throw DimensionMismatch("substitution has wrong length");
  std::size_t m = images.empty() ? 0 : images[0].nvars();
  std::vector<std::vector<MPoly>> powers(nvars_);
  MPoly r(m);
  for (const auto& [e, c] : terms_) {
    MPoly t(m, c);
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      auto& cache = powers[i];
      if (cache.empty()) cache.push_back(MPoly(m, Cyclotomic(1)));
      while (static_cast<int>(cache.size()) <= e[i]) cache.push_back(cache.back() * images[i]);
      t = t * cache[e[i]];
    }
    r = r + t;
  }
  return r;
}

std::vector<int> MPoly::homogeneous_degree(const std::vector<std::vector<int>>& weights) const {
  if (weights.size() != nvars_) throw DimensionMismatch("grading has wrong length");
  std::vector<int> deg;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::vector<int> d(weights.empty() ? 0 : weights[0].size(), 0);
    for (std::size_t i = 0; i < nvars_; ++i)
      for (std::size_t k = 0; k < d.size(); ++k) d[k] += e[i] * weights[i][k];
    if (first) {
      deg = d;
      first = false;
    } else if (d != deg) {
      throw ValidationError("polynomial is not homogeneous for the declared grading");
    }
  }
  return deg;
}

std::string MPoly::str(const std::vector<std::string>& names) const {
  if (names.size() != nvars_) throw DimensionMismatch("variable name list has wrong length");
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    bool neg = false;
    std::string coef;
    if (c.is_rational()) {
      Rational q = c.rational_value();
      neg = q < 0;
      Rational a = neg ? Rational(-q) : q;
      coef = (a == 1 && !mono.empty()) ? "" : to_string(a);
    } else {
      coef = "(" + c.str() + ")";
    }
    std::string body = coef.empty() ? mono : (mono.empty() ? coef : coef + "*" + mono);
    if (out.empty()) {
      out = neg ? "-" + body : body;
    } else {
      out += neg ? " - " : " + ";
      out += body;
    }
  }
  return out;
}

}  // namespace fanocalc::groups
