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

#include "fanocalc/threefold.hpp"

#include <algorithm>

#include "fanocalc/errors.hpp"

namespace fanocalc::threefold {

ThreefoldModel::ThreefoldModel(std::string name, std::vector<std::string> basis,
                               const std::vector<TripleEntry>& entries, std::vector<Rational> anticanonical)
    : name_(std::move(name)), basis_(std::move(basis)), anticanonical_(std::move(anticanonical)) {
  const std::size_t n = basis_.size();
  const std::string where = "model '" + name_ + "': ";
  if (n == 0) throw ValidationError(where + "empty basis");
  if (anticanonical_.size() != n) throw ValidationError(where + "anticanonical class has wrong length");
  tri_.assign(n * n * n, Rational(0));
  std::vector<bool> seen(n * n * n, false);
  for (const TripleEntry& e : entries) {
    std::array<std::size_t, 3> idx = e.index;
    for (std::size_t i : idx)
      if (i >= n) throw ValidationError(where + "triple index out of range");
    std::sort(idx.begin(), idx.end());
    std::size_t key = (idx[0] * n + idx[1]) * n + idx[2];
    if (seen[key]) throw ValidationError(where + "duplicate triple entry");
    seen[key] = true;
    do {
      tri_[(idx[0] * n + idx[1]) * n + idx[2]] = e.value;
    } while (std::next_permutation(idx.begin(), idx.end()));
  }
  if (anticanonical_volume(*this) <= 0) throw ValidationError(where + "anticanonical volume is not positive");
}

const Rational& ThreefoldModel::tri(std::size_t i, std::size_t j, std::size_t k) const {
  const std::size_t n = basis_.size();
  return tri_[(i * n + j) * n + k];
}

std::vector<TripleEntry> ThreefoldModel::entries() const {
  std::vector<TripleEntry> out;
  const std::size_t n = basis_.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = j; k < n; ++k)
        if (tri(i, j, k) != 0) out.push_back({{i, j, k}, tri(i, j, k)});
  return out;
}

std::size_t ThreefoldModel::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i] == label) return i;
  throw ValidationError("model '" + name_ + "': unknown basis label '" + label + "'");
}

ThreefoldModel blowup_curve_model(const std::string& name, const Rational& degree, const Rational& index,
                                  const Rational& curve_degree, int curve_genus) {
  std::vector<TripleEntry> e = {
      {{0, 0, 0}, degree},
      {{0, 1, 1}, Rational(-curve_degree)},
      {{1, 1, 1}, Rational(-(index * curve_degree + 2 * curve_genus - 2))},
  };
  return ThreefoldModel(name, {"H", "E"}, e, {index, Rational(-1)});
}

std::string kind_name(Diagnostic::Kind k) {
  switch (k) {
    case Diagnostic::Kind::kPartition:
      return "partition";
    case Diagnostic::Kind::kContinuity:
      return "continuity";
    case Diagnostic::Kind::kNegativity:
      return "negativity";
    case Diagnostic::Kind::kMonotonicity:
      return "monotonicity";
    case Diagnostic::Kind::kDecomposition:
      return "decomposition";
    case Diagnostic::Kind::kShape:
      return "shape";
  }
  return "unknown";
}

namespace {

template <typename T>
T trilinear(const ThreefoldModel& m, const std::vector<T>& a, const std::vector<T>& b, const std::vector<T>& c) {
  const std::size_t n = m.rank();
  if (a.size() != n || b.size() != n || c.size() != n) throw DimensionMismatch("class length does not match model rank");
  T acc(0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Rational& t = m.tri(i, j, k);
        if (t == 0) continue;
        acc = acc + (a[i] * b[j] * c[k]) * T(t);
      }
  return acc;
}

// Whether p >= 0 on [lo, hi]; false also when an irrational root makes
// the sign undecidable.
bool nonnegative_on(const Poly1& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) return true;
  if (p(lo) < 0 || p(hi) < 0) return false;
  std::vector<Rational> pts = {lo};
  for (const Rational& r : rational_roots_in(p, lo, hi)) pts.push_back(r);
  pts.push_back(hi);
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    if (pts[i] == pts[i + 1]) continue;
    try {
      if (sign_on_open_interval(p, pts[i], pts[i + 1]) < 0) return false;
    } catch (const IrrationalWall&) {
      return false;
    }
  }
  return true;
}

}  // namespace

Rational triple(const ThreefoldModel& m, const std::vector<Rational>& a, const std::vector<Rational>& b,
                const std::vector<Rational>& c) {
  return trilinear<Rational>(m, a, b, c);
}

Rational anticanonical_volume(const ThreefoldModel& m) {
  return triple(m, m.anticanonical(), m.anticanonical(), m.anticanonical());
}

Poly1 cube(const ThreefoldModel& m, const std::vector<Poly1>& fam) { return trilinear<Poly1>(m, fam, fam, fam); }

PiecewisePoly cube_profile(const ThreefoldModel& m, const DivisorFamilySpec& spec) {
  std::vector<Rational> b;
  std::vector<Poly1> p;
  for (const ChamberSpec& ch : spec.chambers) {
    if (b.empty()) b.push_back(ch.lo);
    b.push_back(ch.hi);
    p.push_back(cube(m, ch.positive));
  }
  return PiecewisePoly(std::move(b), std::move(p));
}

std::vector<Diagnostic> validate_chambers(const ThreefoldModel& m, const DivisorFamilySpec& spec) {
  using K = Diagnostic::Kind;
  std::vector<Diagnostic> out;
  const std::size_t n = m.rank();
  if (spec.divisor.size() != n) {
    out.push_back({K::kShape, Rational(0), "divisor class has wrong length"});
    return out;
  }
  if (spec.chambers.empty()) {
    out.push_back({K::kPartition, Rational(0), "no chambers"});
    return out;
  }
  for (const ChamberSpec& ch : spec.chambers) {
    if (ch.positive.size() != n) {
      out.push_back({K::kShape, ch.lo, "positive part has wrong length"});
      return out;
    }
    for (const auto& [label, coeff] : ch.negative) {
      if (std::find(m.basis().begin(), m.basis().end(), label) == m.basis().end()) {
        out.push_back({K::kShape, ch.lo, "negative part names unknown class '" + label + "'"});
        return out;
      }
    }
  }

  if (spec.chambers.front().lo != 0) {
    out.push_back({K::kPartition, spec.chambers.front().lo, "chambers do not start at 0"});
  }
  if (spec.chambers.back().hi != spec.tau) {
    out.push_back({K::kPartition, spec.chambers.back().hi, "chambers do not end at tau"});
  }
  for (std::size_t i = 0; i < spec.chambers.size(); ++i) {
    const ChamberSpec& ch = spec.chambers[i];
    if (ch.hi < ch.lo) out.push_back({K::kPartition, ch.lo, "chamber interval is reversed"});
    if (i > 0 && spec.chambers[i - 1].hi != ch.lo) {
      out.push_back({K::kPartition, ch.lo, "gap or overlap between chambers"});
    }
  }

  std::vector<Poly1> cubes;
  for (const ChamberSpec& ch : spec.chambers) cubes.push_back(cube(m, ch.positive));
  for (std::size_t i = 1; i < spec.chambers.size(); ++i) {
    const Rational& w = spec.chambers[i].lo;
    if (cubes[i - 1](w) != cubes[i](w)) {
      out.push_back({K::kContinuity, w,
                     "P^3 jumps from " + to_string(cubes[i - 1](w)) + " to " + to_string(cubes[i](w))});
    }
  }

  for (std::size_t i = 0; i < spec.chambers.size(); ++i) {
    const ChamberSpec& ch = spec.chambers[i];
    for (const auto& [label, coeff] : ch.negative) {
      if (!nonnegative_on(coeff, ch.lo, ch.hi)) {
        out.push_back({K::kNegativity, ch.lo, "coefficient of " + label + " is negative somewhere on the chamber"});
      }
    }
    Poly1 slope = cubes[i].derivative();
    bool mono = slope(ch.lo) <= 0 && slope(ch.hi) <= 0;
    for (int s = 0; mono && s <= 8; ++s) {
      Rational t = ch.lo + (ch.hi - ch.lo) * Rational(s, 8);
      Rational t2 = ch.lo + (ch.hi - ch.lo) * Rational(s + 1, 8);
      if (s < 8 && cubes[i](t2) > cubes[i](t)) mono = false;
    }
    if (!mono) out.push_back({K::kMonotonicity, ch.lo, "P^3 increases on the chamber"});

    std::vector<Poly1> sum = ch.positive;
    for (const auto& [label, coeff] : ch.negative) sum[m.index_of(label)] += coeff;
    bool ok = true;
    for (std::size_t k = 0; k < n; ++k) {
      if (sum[k] != Poly1::linear(m.anticanonical()[k], -spec.divisor[k])) ok = false;
    }
    if (!ok) out.push_back({K::kDecomposition, ch.lo, "P + N differs from -K - uY"});
  }
  return out;
}

Rational s_invariant(const ThreefoldModel& m, const DivisorFamilySpec& spec) {
  std::vector<Diagnostic> diags = validate_chambers(m, spec);
  if (!diags.empty()) {
    std::string msg = "family '" + spec.name + "' is invalid:";
    for (const Diagnostic& d : diags) msg += " [" + kind_name(d.kind) + " at " + to_string(d.at) + "] " + d.message;
    throw ValidationError(msg);
  }
  return integrate_piecewise(cube_profile(m, spec)) / anticanonical_volume(m);
}

}  // namespace fanocalc::threefold
