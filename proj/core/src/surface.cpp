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

#include "fanocalc/surface.hpp"

#include <algorithm>
#include <map>

#include "fanocalc/errors.hpp"
#include "fanocalc/poly2.hpp"

namespace fanocalc::surface {

SurfClass SurfClass::operator+(const SurfClass& o) const {
  if (size() != o.size()) throw DimensionMismatch("class length mismatch");
  SurfClass r = *this;
  for (std::size_t i = 0; i < size(); ++i) r.coeffs[i] += o.coeffs[i];
  return r;
}

SurfClass SurfClass::operator-(const SurfClass& o) const { return *this + o * Rational(-1); }

SurfClass SurfClass::operator*(const Rational& t) const {
  SurfClass r = *this;
  for (Rational& c : r.coeffs) c *= t;
  return r;
}

SurfClass SurfFamily::at(const Rational& u) const {
  SurfClass r;
  for (const Poly1& p : coeffs) r.coeffs.push_back(p(u));
  return r;
}

namespace {

template <typename T>
T form(const Matrix<Rational>& g, const std::vector<T>& a, const std::vector<T>& b) {
  if (a.size() != g.rows() || b.size() != g.rows()) throw DimensionMismatch("class length does not match lattice rank");
  T acc(0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (g(i, j) == 0) continue;
      acc = acc + (a[i] * b[j]) * T(g(i, j));
    }
  return acc;
}

template <typename T>
std::vector<T> lift(const SurfClass& c) {
  std::vector<T> out;
  for (const Rational& x : c.coeffs) out.push_back(T(x));
  return out;
}

}  // namespace

SurfaceLattice::SurfaceLattice(std::string name, std::vector<std::string> basis, Matrix<Rational> gram,
                               SurfClass canonical, std::vector<NegCurve> negcurves, SurfClass ample)
    : name_(std::move(name)),
      basis_(std::move(basis)),
      gram_(std::move(gram)),
      canonical_(std::move(canonical)),
      negcurves_(std::move(negcurves)),
      ample_(std::move(ample)) {
  const std::size_t n = basis_.size();
  const std::string where = "lattice '" + name_ + "': ";
  if (n == 0) throw ValidationError(where + "empty basis");
  if (gram_.rows() != n || gram_.cols() != n) throw ValidationError(where + "gram matrix does not match basis size");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (gram_(i, j) != gram_(j, i)) throw ValidationError(where + "gram matrix is not symmetric");
  if (canonical_.size() != n) throw ValidationError(where + "canonical class has wrong length");
  if (ample_.size() != n) throw ValidationError(where + "ample class has wrong length");
  if (intersect(*this, ample_, ample_) <= 0) throw ValidationError(where + "reference ample class has A^2 <= 0");
  for (const NegCurve& c : negcurves_) {
    if (c.cls.size() != n) throw ValidationError(where + "curve '" + c.label + "' has wrong length");
    Rational self = intersect(*this, c.cls, c.cls);
    if (self >= 0) {
      throw ValidationError(where + "declared negative curve '" + c.label + "' has self-intersection " +
                            to_string(self));
    }
    if (intersect(*this, ample_, c.cls) <= 0) {
      throw ValidationError(where + "curve '" + c.label + "' is not positive on the ample class");
    }
    if (c.genus) {
      if (*c.genus < 0) throw ValidationError(where + "curve '" + c.label + "' has negative genus");
      Rational adj = intersect(*this, canonical_ + c.cls, c.cls);
      if (adj != 2 * *c.genus - 2) {
        throw ValidationError(where + "curve '" + c.label + "' violates adjunction: (K+C).C = " + to_string(adj));
      }
    }
  }
}

SurfClass SurfaceLattice::class_of(const std::string& label) const {
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (basis_[i] == label) {
      SurfClass c = SurfClass::zero(basis_.size());
      c.coeffs[i] = 1;
      return c;
    }
  }
  for (const NegCurve& c : negcurves_) {
    if (c.label == label) return c.cls;
  }
  if (label == "K") return canonical_;
  if (label == "-K") return anticanonical();
  if (label == "A") return ample_;
  throw ValidationError("lattice '" + name_ + "': unknown class label '" + label + "'");
}

Rational intersect(const SurfaceLattice& lat, const SurfClass& c1, const SurfClass& c2) {
  return form<Rational>(lat.gram(), c1.coeffs, c2.coeffs);
}

Poly1 intersect(const SurfaceLattice& lat, const std::vector<Poly1>& c1, const std::vector<Poly1>& c2) {
  return form<Poly1>(lat.gram(), c1, c2);
}

bool is_negative_definite(const Matrix<Rational>& m) {
  const std::size_t n = m.rows();
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix<Rational> minor(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) minor(i, j) = -m(i, j);
    if (minor.determinant() <= 0) return false;
  }
  return true;
}

namespace {

Matrix<Rational> support_gram(const SurfaceLattice& lat, const std::vector<std::size_t>& support) {
  Matrix<Rational> g(support.size(), support.size());
  for (std::size_t i = 0; i < support.size(); ++i)
    for (std::size_t j = 0; j < support.size(); ++j)
      g(i, j) = intersect(lat, lat.negcurves()[support[i]].cls, lat.negcurves()[support[j]].cls);
  return g;
}

void require_negative_definite(const Matrix<Rational>& g, const std::string& what) {
  if (is_negative_definite(g)) return;
  throw NotPseudoeffective(what + " is not pseudoeffective (support Gram is not negative definite)");
}

using Mask = unsigned long;

std::vector<std::size_t> mask_members(Mask m, std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i)
    if (m & (Mask(1) << i)) out.push_back(i);
  return out;
}

// Symbolic Zariski data for a fixed support: N coefficients solve the
// orthogonality system, P = D - N. T is Poly1 (one parameter) or Poly2.
template <typename T>
struct Symbolic {
  std::vector<std::size_t> support;
  std::vector<T> x;
  std::vector<T> positive;
};

template <typename T>
Symbolic<T> symbolic_support(const SurfaceLattice& lat, const std::vector<T>& d, const std::vector<std::size_t>& support) {
  Symbolic<T> s;
  s.support = support;
  s.positive = d;
  if (support.empty()) return s;
  Matrix<Rational> g = support_gram(lat, support);
  auto inv = g.solve(Matrix<Rational>::identity(support.size()));
  if (!inv) throw SingularGram("singular support Gram matrix");
  std::vector<T> rhs;
  for (std::size_t j : support) rhs.push_back(form<T>(lat.gram(), d, lift<T>(lat.negcurves()[j].cls)));
  for (std::size_t i = 0; i < support.size(); ++i) {
    T xi(0);
    for (std::size_t j = 0; j < support.size(); ++j) {
      if ((*inv)(i, j) != 0) xi = xi + rhs[j] * T((*inv)(i, j));
    }
    s.x.push_back(xi);
    const SurfClass& c = lat.negcurves()[support[i]].cls;
    for (std::size_t k = 0; k < d.size(); ++k) {
      if (c.coeffs[k] != 0) s.positive[k] = s.positive[k] - xi * T(c.coeffs[k]);
    }
  }
  return s;
}

Mask support_mask(const SurfaceLattice& lat, const ZariskiResult& z) {
  Mask m = 0;
  for (const auto& [label, coeff] : z.negative) {
    for (std::size_t i = 0; i < lat.negcurves().size(); ++i)
      if (lat.negcurves()[i].label == label) m |= Mask(1) << i;
  }
  return m;
}

void add_roots(std::vector<Rational>* pts, const Poly1& p, const Rational& a, const Rational& b) {
  if (p.is_zero()) return;
  for (const Rational& r : rational_roots_in(p, a, b)) pts->push_back(r);
}

ZariskiChamber make_chamber(const SurfaceLattice& lat, const Symbolic<Poly1>& s, const Rational& lo,
                            const Rational& hi) {
  ZariskiChamber ch{lo, hi, s.positive, {}};
  for (std::size_t i = 0; i < s.support.size(); ++i) {
    ch.negative.emplace_back(lat.negcurves()[s.support[i]].label, s.x[i]);
  }
  return ch;
}

}  // namespace

ZariskiResult zariski(const SurfaceLattice& lat, const SurfClass& c) {
  if (c.size() != lat.rank()) throw DimensionMismatch("class length does not match lattice rank");
  if (lat.gram().determinant() == 0) throw SingularGram("lattice '" + lat.name() + "' has a degenerate intersection form");
  const auto& curves = lat.negcurves();
  std::vector<std::size_t> support;
  std::vector<Rational> x;
  SurfClass p = c;
  for (std::size_t iter = 0; iter <= curves.size(); ++iter) {
    if (!support.empty()) {
      Matrix<Rational> g = support_gram(lat, support);
      require_negative_definite(g, "class");
      std::vector<Rational> rhs;
      for (std::size_t j : support) rhs.push_back(intersect(lat, c, curves[j].cls));
      x = *g.solve(rhs);
      for (const Rational& xi : x) {
        if (xi < 0) throw NotPseudoeffective("class is not pseudoeffective (negative part has a negative coefficient)");
      }
      p = c;
      for (std::size_t i = 0; i < support.size(); ++i) p = p - curves[support[i]].cls * x[i];
    }
    std::vector<std::size_t> added;
    for (std::size_t j = 0; j < curves.size(); ++j) {
      if (std::find(support.begin(), support.end(), j) != support.end()) continue;
      if (intersect(lat, p, curves[j].cls) < 0) added.push_back(j);
    }
    if (added.empty()) break;
    support.insert(support.end(), added.begin(), added.end());
    std::sort(support.begin(), support.end());
  }
  if (intersect(lat, p, lat.ample()) < 0 || intersect(lat, p, p) < 0) {
    throw NotPseudoeffective("class is not pseudoeffective (positive part is not in the positive cone)");
  }
  ZariskiResult r{p, {}};
  for (std::size_t i = 0; i < support.size(); ++i) {
    if (x[i] != 0) r.negative.emplace_back(curves[support[i]].label, x[i]);
  }
  return r;
}

Rational volume(const SurfaceLattice& lat, const SurfClass& c) {
  try {
    ZariskiResult z = zariski(lat, c);
    return intersect(lat, z.positive, z.positive);
  } catch (const NotPseudoeffective&) {
    return Rational(0);
  }
}

PiecewisePoly ZariskiProfile::volume(const SurfaceLattice& lat) const {
  std::vector<Rational> b;
  std::vector<Poly1> p;
  for (const ZariskiChamber& ch : chambers) {
    if (b.empty()) b.push_back(ch.lo);
    b.push_back(ch.hi);
    p.push_back(intersect(lat, ch.positive, ch.positive));
  }
  return PiecewisePoly(std::move(b), std::move(p));
}

std::vector<Poly1> ZariskiProfile::full_class(std::size_t chamber, const SurfaceLattice& lat) const {
  const ZariskiChamber& ch = chambers.at(chamber);
  std::vector<Poly1> d = ch.positive;
  for (const auto& [label, coeff] : ch.negative) {
    SurfClass c = lat.class_of(label);
    for (std::size_t k = 0; k < d.size(); ++k) d[k] += coeff * c.coeffs[k];
  }
  return d;
}

ZariskiProfile zariski_profile(const SurfaceLattice& lat, const SurfFamily& fam) {
  if (fam.coeffs.size() != lat.rank()) throw DimensionMismatch("family length does not match lattice rank");
  if (fam.b < fam.a) throw DomainError("family domain is empty");
  const std::size_t n = lat.negcurves().size();
  if (n > 20) throw DomainError("too many declared curves for exhaustive support search");

  std::map<Mask, Symbolic<Poly1>> cands;
  std::vector<Rational> pts = {fam.a, fam.b};
  const std::vector<Poly1> amp = lift<Poly1>(lat.ample());
  for (Mask m = 0; m < (Mask(1) << n); ++m) {
    std::vector<std::size_t> s = mask_members(m, n);
    if (!s.empty() && !is_negative_definite(support_gram(lat, s))) continue;
    Symbolic<Poly1> sym = symbolic_support(lat, fam.coeffs, s);
    for (const NegCurve& c : lat.negcurves()) add_roots(&pts, intersect(lat, sym.positive, lift<Poly1>(c.cls)), fam.a, fam.b);
    for (const Poly1& xi : sym.x) add_roots(&pts, xi, fam.a, fam.b);
    add_roots(&pts, intersect(lat, sym.positive, sym.positive), fam.a, fam.b);
    add_roots(&pts, intersect(lat, sym.positive, amp), fam.a, fam.b);
    cands.emplace(m, std::move(sym));
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  ZariskiProfile prof;
  Mask last_mask = 0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const Rational &lo = pts[i], &hi = pts[i + 1];
    Rational mid = (lo + hi) / 2;
    ZariskiResult z;
    try {
      z = zariski(lat, fam.at(mid));
    } catch (const NotPseudoeffective&) {
      break;
    }
    Mask m = support_mask(lat, z);
    const Symbolic<Poly1>& sym = cands.at(m);
    for (const NegCurve& c : lat.negcurves()) {
      if (sign_on_open_interval(intersect(lat, sym.positive, lift<Poly1>(c.cls)), lo, hi) < 0) {
        throw Error("inconsistent Zariski chamber: positive part negative on curve " + c.label);
      }
    }
    for (const Poly1& xi : sym.x) {
      if (sign_on_open_interval(xi, lo, hi) <= 0) throw Error("inconsistent Zariski chamber: vanishing negative part");
    }
    if (sign_on_open_interval(intersect(lat, sym.positive, sym.positive), lo, hi) < 0 ||
        sign_on_open_interval(intersect(lat, sym.positive, amp), lo, hi) < 0) {
      throw Error("inconsistent Zariski chamber: positive part outside the positive cone");
    }
    if (!prof.chambers.empty() && m == last_mask && prof.chambers.back().hi == lo) {
      prof.chambers.back().hi = hi;
    } else {
      prof.chambers.push_back(make_chamber(lat, sym, lo, hi));
    }
    last_mask = m;
  }
  if (prof.chambers.empty()) {
    ZariskiResult z = zariski(lat, fam.at(fam.a));
    prof.chambers.push_back(make_chamber(lat, cands.at(support_mask(lat, z)), fam.a, fam.a));
  }
  return prof;
}

Rational pseff_threshold(const SurfaceLattice& lat, const SurfFamily& fam) {
  ZariskiProfile prof = zariski_profile(lat, fam);
  for (std::size_t i = prof.chambers.size(); i-- > 0;) {
    const ZariskiChamber& ch = prof.chambers[i];
    if (!intersect(lat, ch.positive, ch.positive).is_zero()) return ch.hi;
  }
  return fam.a;
}

Rational beta_curve(const SurfaceLattice& lat, const SurfClass& curve) {
  SurfClass mk = lat.anticanonical();
  Rational k2 = intersect(lat, mk, mk);
  if (k2 <= 0) throw DomainError("anticanonical class is not big");
  Rational ca = intersect(lat, curve, lat.ample());
  if (ca <= 0) return Rational(1);
  Rational t = intersect(lat, mk, lat.ample()) / ca;
  SurfFamily fam{{}, Rational(0), t};
  for (std::size_t i = 0; i < lat.rank(); ++i) fam.coeffs.push_back(Poly1::linear(mk.coeffs[i], -curve.coeffs[i]));
  ZariskiProfile prof = zariski_profile(lat, fam);
  return 1 - integrate_piecewise(prof.volume(lat)) / k2;
}

namespace {

Rational eval_class_dot(const SurfaceLattice& lat, const std::vector<Poly1>& d, const Rational& u, const SurfClass& c) {
  SurfClass at;
  for (const Poly1& p : d) at.coeffs.push_back(p(u));
  return intersect(lat, at, c);
}

// Solves alpha(u) + beta(u) v = 0 for v as a polynomial in u.
bool linear_wall(const Poly2& cond, Poly1* out) {
  if (cond.degree_v() != 1) return false;
  Poly1 alpha = cond.coeff_v(0), beta = cond.coeff_v(1);
  auto [q, r] = (-alpha).divmod(beta);
  if (!r.is_zero()) throw IrrationalWall("chamber wall " + cond.str() + " = 0 is not polynomial in u");
  *out = q;
  return true;
}

std::vector<Poly1> end_wall_candidates(const Poly2& vol, const Poly2& pa) {
  std::vector<Poly1> out;
  Poly1 w;
  if (pa.degree_v() == 1 && linear_wall(pa, &w)) out.push_back(w);
  Poly1 a2 = vol.coeff_v(2), a1 = vol.coeff_v(1), a0 = vol.coeff_v(0);
  if (vol.degree_v() > 2) throw Error("volume is not quadratic in v");
  if (a2.is_zero()) {
    if (!a1.is_zero()) {
      auto [q, r] = (-a0).divmod(a1);
      if (r.is_zero()) out.push_back(q);
    }
    return out;
  }
  Poly1 disc = a1 * a1 - Rational(4) * a2 * a0, s;
  if (!disc.exact_sqrt(&s)) return out;
  for (const Poly1& num : {-a1 + s, -a1 - s}) {
    auto [q, r] = num.divmod(Rational(2) * a2);
    if (r.is_zero()) out.push_back(q);
  }
  return out;
}

Rational integrate_u_chamber(const SurfaceLattice& lat, const std::vector<Poly1>& d, const SurfClass& f,
                             const Rational& a, const Rational& b, int depth) {
  if (a == b) return Rational(0);
  if (depth > 24) throw Error("double integral: chamber subdivision does not terminate");
  const std::size_t n = lat.rank();
  const Rational fa = intersect(lat, f, lat.ample());
  const Rational m = (a + b) / 2;

  // One-parameter profile in v at the midpoint.
  SurfFamily vfam{{}, Rational(0), eval_class_dot(lat, d, m, lat.ample()) / fa};
  if (vfam.b <= 0) {
    Poly1 reach = intersect(lat, d, lift<Poly1>(lat.ample()));
    if (!rational_roots_in(reach, a, b).empty()) {
      std::vector<Rational> cuts = rational_roots_in(reach, a, b);
      Rational total = 0, lo = a;
      for (const Rational& c : cuts) {
        total += integrate_u_chamber(lat, d, f, lo, c, depth + 1);
        lo = c;
      }
      return total + integrate_u_chamber(lat, d, f, lo, b, depth + 1);
    }
    return Rational(0);
  }
  for (std::size_t i = 0; i < n; ++i) vfam.coeffs.push_back(Poly1::linear(d[i](m), -f.coeffs[i]));
  ZariskiProfile vprof = zariski_profile(lat, vfam);
  while (!vprof.chambers.empty() &&
         intersect(lat, vprof.chambers.back().positive, vprof.chambers.back().positive).is_zero()) {
    vprof.chambers.pop_back();
  }
  if (vprof.chambers.empty()) return Rational(0);

  // Symbolic data per v-chamber.
  std::vector<Poly2> dv;
  for (std::size_t i = 0; i < n; ++i) dv.push_back(Poly2::in_u(d[i]) - Poly2::v() * Poly2(f.coeffs[i]));
  const std::vector<Poly2> amp = lift<Poly2>(lat.ample());
  std::vector<Symbolic<Poly2>> syms;
  for (const ZariskiChamber& ch : vprof.chambers) {
    std::vector<std::size_t> s;
    for (const auto& [label, coeff] : ch.negative) {
      for (std::size_t i = 0; i < lat.negcurves().size(); ++i)
        if (lat.negcurves()[i].label == label) s.push_back(i);
    }
    std::sort(s.begin(), s.end());
    syms.push_back(symbolic_support(lat, dv, s));
  }
  const std::size_t k = syms.size();
  std::vector<Poly1> walls = {Poly1()};
  for (std::size_t j = 0; j + 1 < k; ++j) {
    const Symbolic<Poly2>& cur = syms[j];
    const Symbolic<Poly2>& next = syms[j + 1];
    Poly1 w;
    bool found = false;
    for (std::size_t c : next.support) {
      if (std::find(cur.support.begin(), cur.support.end(), c) != cur.support.end()) continue;
      Poly2 cond = form<Poly2>(lat.gram(), cur.positive, lift<Poly2>(lat.negcurves()[c].cls));
      if (linear_wall(cond, &w)) {
        found = true;
        break;
      }
    }
    for (std::size_t i = 0; !found && i < cur.support.size(); ++i) {
      if (std::find(next.support.begin(), next.support.end(), cur.support[i]) != next.support.end()) continue;
      if (linear_wall(cur.x[i], &w)) found = true;
    }
    if (!found || w(m) != vprof.chambers[j].hi) throw Error("double integral: cannot locate a v-chamber wall");
    walls.push_back(w);
  }
  {
    const Symbolic<Poly2>& last = syms.back();
    Poly2 vol = form<Poly2>(lat.gram(), last.positive, last.positive);
    Poly2 pa = form<Poly2>(lat.gram(), last.positive, amp);
    bool found = false;
    for (const Poly1& w : end_wall_candidates(vol, pa)) {
      if (w(m) == vprof.chambers.back().hi) {
        walls.push_back(w);
        found = true;
        break;
      }
    }
    if (!found) throw IrrationalWall("end of the v-range is not polynomial in u");
  }

  // Quantities whose sign must stay fixed across the u-chamber.
  std::vector<Poly1> checks;
  for (std::size_t j = 0; j < k; ++j) {
    checks.push_back(walls[j + 1] - walls[j]);
    const Symbolic<Poly2>& s = syms[j];
    std::vector<Poly2> qty;
    for (std::size_t c = 0; c < lat.negcurves().size(); ++c) {
      if (std::find(s.support.begin(), s.support.end(), c) != s.support.end()) continue;
      qty.push_back(form<Poly2>(lat.gram(), s.positive, lift<Poly2>(lat.negcurves()[c].cls)));
    }
    for (const Poly2& x : s.x) qty.push_back(x);
    qty.push_back(form<Poly2>(lat.gram(), s.positive, amp));
    qty.push_back(form<Poly2>(lat.gram(), s.positive, s.positive));
    for (const Poly2& q : qty) {
      checks.push_back(q.substitute_v(walls[j]));
      checks.push_back(q.substitute_v(walls[j + 1]));
    }
  }
  std::vector<Rational> cuts;
  for (const Poly1& c : checks) add_roots(&cuts, c, a, b);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  if (!cuts.empty()) {
    Rational total = 0, lo = a;
    for (const Rational& c : cuts) {
      total += integrate_u_chamber(lat, d, f, lo, c, depth + 1);
      lo = c;
    }
    return total + integrate_u_chamber(lat, d, f, lo, b, depth + 1);
  }
  for (const Poly1& c : checks) {
    if (sign_on_open_interval(c, a, b) < 0) throw Error("double integral: chamber structure is not constant in u");
  }

  Rational total = 0;
  for (std::size_t j = 0; j < k; ++j) {
    Poly2 vol = form<Poly2>(lat.gram(), syms[j].positive, syms[j].positive);
    total += integrate_poly(integrate_inner(vol, walls[j], walls[j + 1]), a, b);
  }
  return total;
}

}  // namespace

Rational double_integral_volume(const SurfaceLattice& lat, const ZariskiProfile& profile, const SurfClass& f) {
  if (f.size() != lat.rank()) throw DimensionMismatch("flag class length does not match lattice rank");
  if (intersect(lat, f, lat.ample()) <= 0) return Rational(0);
  Rational total = 0;
  for (std::size_t c = 0; c < profile.chambers.size(); ++c) {
    const ZariskiChamber& ch = profile.chambers[c];
    total += integrate_u_chamber(lat, profile.full_class(c, lat), f, ch.lo, ch.hi, 0);
  }
  return total;
}

}  // namespace fanocalc::surface
