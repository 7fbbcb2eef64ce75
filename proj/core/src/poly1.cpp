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

#include "fanocalc/poly1.hpp"

#include <algorithm>

#include "fanocalc/errors.hpp"

namespace fanocalc {

Poly1::Poly1(const Rational& c) : c_{c} { trim(); }

Poly1::Poly1(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly1::Poly1(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

void Poly1::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Poly1::operator()(const Rational& t) const {
  Rational acc = 0;
  for (std::size_t k = c_.size(); k-- > 0;) acc = acc * t + c_[k];
  return acc;
}

Poly1 Poly1::compose(const Poly1& inner) const {
  Poly1 acc;
  for (std::size_t k = c_.size(); k-- > 0;) acc = acc * inner + Poly1(c_[k]);
  return acc;
}

Poly1 Poly1::operator+(const Poly1& o) const {
  std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return Poly1(std::move(r));
}

Poly1 Poly1::operator-(const Poly1& o) const { return *this + (-o); }

Poly1 Poly1::operator-() const {
  std::vector<Rational> r = c_;
  for (Rational& x : r) x = -x;
  return Poly1(std::move(r));
}

Poly1 Poly1::operator*(const Poly1& o) const {
  if (is_zero() || o.is_zero()) return Poly1();
  std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  return Poly1(std::move(r));
}

Poly1 Poly1::operator*(const Rational& s) const {
  std::vector<Rational> r = c_;
  for (Rational& x : r) x *= s;
  return Poly1(std::move(r));
}

Poly1 operator*(const Rational& s, const Poly1& p) { return p * s; }

Poly1 Poly1::pow(unsigned k) const {
  Poly1 r(1), b = *this;
  while (k > 0) {
    if (k & 1) r *= b;
    b *= b;
    k >>= 1;
  }
  return r;
}

Poly1 Poly1::derivative() const {
  if (c_.size() <= 1) return Poly1();
  std::vector<Rational> r(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) r[k - 1] = c_[k] * static_cast<long>(k);
  return Poly1(std::move(r));
}

Poly1 Poly1::antiderivative() const {
  if (c_.empty()) return Poly1();
  std::vector<Rational> r(c_.size() + 1, Rational(0));
  for (std::size_t k = 0; k < c_.size(); ++k) r[k + 1] = c_[k] / static_cast<long>(k + 1);
  return Poly1(std::move(r));
}

std::pair<Poly1, Poly1> Poly1::divmod(const Poly1& d) const {
  if (d.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Rational> rem = c_;
  int dd = d.degree();
  if (degree() < dd) return {Poly1(), *this};
  std::vector<Rational> q(degree() - dd + 1, Rational(0));
  for (int k = degree(); k >= dd; --k) {
    if (rem[k] == 0) continue;
    Rational f = rem[k] / d.c_.back();
    q[k - dd] = f;
    for (int j = 0; j <= dd; ++j) rem[k - dd + j] -= f * d.c_[j];
  }
  rem.resize(dd);
  return {Poly1(std::move(q)), Poly1(std::move(rem))};
}

Poly1 Poly1::monic() const {
  if (is_zero()) return *this;
  return *this * Rational(1 / c_.back());
}

namespace {

bool rational_sqrt(const Rational& q, Rational* out) {
  if (q < 0) return false;
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) return false;
  Integer n = sqrt(q.get_num()), d = sqrt(q.get_den());
  *out = Rational(n, d);
  out->canonicalize();
  return true;
}

}  // namespace

bool Poly1::exact_sqrt(Poly1* out) const {
  if (is_zero()) {
    *out = Poly1();
    return true;
  }
  if (degree() % 2 != 0) return false;
  int m = degree() / 2;
  std::vector<Rational> r(m + 1, Rational(0));
  if (!rational_sqrt(c_.back(), &r[m])) return false;
  for (int k = m - 1; k >= 0; --k) {
    Rational s = coeff(m + k);
    for (int i = k + 1; i < m; ++i) {
      int j = m + k - i;
      if (j > k && j < m) s -= r[i] * r[j];
    }
    r[k] = s / (2 * r[m]);
  }
  Poly1 cand(std::move(r));
  if (cand * cand != *this) return false;
  *out = cand;
  return true;
}

std::string Poly1::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t k = c_.size(); k-- > 0;) {
    const Rational& c = c_[k];
    if (c == 0) continue;
    bool neg = c < 0;
    Rational a = neg ? Rational(-c) : c;
    std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
    std::string mag = k == 0 ? to_string(a) : (a == 1 ? mono : to_string(a) + "*" + mono);
    if (out.empty()) {
      out = neg ? "-" + mag : mag;
    } else {
      out += neg ? " - " : " + ";
      out += mag;
    }
  }
  return out;
}

Poly1 gcd(Poly1 a, Poly1 b) {
  while (!b.is_zero()) {
    Poly1 r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Rational integrate_poly(const Poly1& p, const Rational& a, const Rational& b) {
  Poly1 anti = p.antiderivative();
  return anti(b) - anti(a);
}

namespace {

std::vector<Integer> divisors(Integer n) {
  if (n < 0) n = -n;
  std::vector<std::pair<Integer, unsigned>> factors;
  for (Integer p = 2; p * p <= n; ++p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) factors.emplace_back(p, e);
  }
  if (n > 1) factors.emplace_back(n, 1);
  std::vector<Integer> out = {Integer(1)};
  for (const auto& [p, e] : factors) {
    std::size_t base = out.size();
    Integer pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Rational> rational_roots(const Poly1& p) {
  if (p.is_zero()) throw DomainError("rational_roots of the zero polynomial");
  std::vector<Rational> roots;
  // Strip the factor x^k.
  std::size_t low = 0;
  while (p.coeffs()[low] == 0) ++low;
  for (std::size_t i = 0; i < low; ++i) roots.push_back(Rational(0));
  std::vector<Rational> rest(p.coeffs().begin() + low, p.coeffs().end());
  Poly1 q(std::move(rest));
  if (q.degree() > 0) {
    Integer den_lcm = 1;
    for (const Rational& c : q.coeffs()) den_lcm = lcm(den_lcm, c.get_den());
    std::vector<Integer> ic;
    for (const Rational& c : q.coeffs()) ic.push_back(Integer(Rational(c * den_lcm)));
    std::vector<Integer> num_div = divisors(ic.front());
    std::vector<Integer> den_div = divisors(ic.back());
    std::vector<Rational> cands;
    for (const Integer& a : num_div) {
      for (const Integer& b : den_div) {
        Rational r(a, b);
        r.canonicalize();
        cands.push_back(r);
        cands.push_back(-r);
      }
    }
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    for (const Rational& r : cands) {
      Poly1 lin = Poly1::linear(-r, 1);
      while (q.degree() > 0 && q(r) == 0) {
        q = q.divmod(lin).first;
        roots.push_back(r);
      }
      if (q.degree() <= 0) break;
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<Rational> rational_roots_in(const Poly1& p, const Rational& a, const Rational& b) {
  std::vector<Rational> out;
  if (p.is_zero()) return out;
  for (const Rational& r : rational_roots(p)) {
    if (r > a && r < b && (out.empty() || out.back() != r)) out.push_back(r);
  }
  return out;
}

namespace {

int sign_changes(const std::vector<Poly1>& seq, const Rational& t) {
  int changes = 0;
  int last = 0;
  for (const Poly1& s : seq) {
    Rational v = s(t);
    int sg = sgn(v);
    if (sg == 0) continue;
    if (last != 0 && sg != last) ++changes;
    last = sg;
  }
  return changes;
}

}  // namespace

int count_real_roots(const Poly1& p, const Rational& a, const Rational& b) {
  if (p.is_zero()) throw DomainError("count_real_roots of the zero polynomial");
  if (!(a < b)) return 0;
  Poly1 sf = p.divmod(gcd(p, p.derivative())).first;
  for (const Rational* e : {&a, &b}) {
    Poly1 lin = Poly1::linear(-*e, 1);
    while (sf.degree() > 0 && sf(*e) == 0) sf = sf.divmod(lin).first;
  }
  if (sf.degree() <= 0) return 0;
  std::vector<Poly1> seq = {sf, sf.derivative()};
  while (!seq.back().is_zero()) {
    Poly1 r = seq[seq.size() - 2].divmod(seq.back()).second;
    seq.push_back(-r);
  }
  seq.pop_back();
  return sign_changes(seq, a) - sign_changes(seq, b);
}

int sign_on_open_interval(const Poly1& p, const Rational& a, const Rational& b) {
  if (p.is_zero()) return 0;
  if (count_real_roots(p, a, b) > 0) {
    throw IrrationalWall("polynomial " + p.str() + " has an unresolved (non-rational) root in (" + to_string(a) + ", " +
                         to_string(b) + ")");
  }
  Rational mid = (a + b) / 2;
  return sgn(p(mid));
}

}  // namespace fanocalc
