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

#include "fanocalc/flags.hpp"

#include <algorithm>

#include "fanocalc/errors.hpp"

namespace fanocalc::flags {

void validate_flag(const FlagCandidate& f) {
  if (f.log_discrepancy < 1) {
    throw ValidationError("flag '" + f.name + "': log discrepancy below 1");
  }
  for (const OrdPiece& p : f.ord_profile) {
    if (p.hi < p.lo) throw ValidationError("flag '" + f.name + "': reversed ord interval");
    for (int s = 0; s <= 8; ++s) {
      Rational t = p.lo + (p.hi - p.lo) * Rational(s, 8);
      if (p.ord(t) < 0) throw ValidationError("flag '" + f.name + "': ord profile negative at " + to_string(t));
    }
  }
}

Rational s_w_flag(const threefold::ThreefoldModel& m, const SurfaceRestrictionData& data, const FlagCandidate& f) {
  validate_flag(f);
  const surface::SurfaceLattice& lat = data.lattice;
  Rational ord_term = 0;
  for (const OrdPiece& piece : f.ord_profile) {
    for (std::size_t c = 0; c < data.restricted.chambers.size(); ++c) {
      const surface::ZariskiChamber& ch = data.restricted.chambers[c];
      Rational lo = std::max(ch.lo, piece.lo), hi = std::min(ch.hi, piece.hi);
      if (hi <= lo) continue;
      std::vector<Poly1> d = data.restricted.full_class(c, lat);
      ord_term += integrate_poly(surface::intersect(lat, d, d) * piece.ord, lo, hi);
    }
  }
  Rational dbl = surface::double_integral_volume(lat, data.restricted, f.flag_class);
  return Rational(3) / threefold::anticanonical_volume(m) * (ord_term + dbl);
}

DeltaBound delta_point_bound(const Rational& s_of_s, const std::vector<std::pair<Rational, Rational>>& candidates) {
  if (s_of_s <= 0) throw DomainError("S-invariant of the surface must be positive");
  DeltaBound out{1 / s_of_s, std::nullopt};
  if (candidates.empty()) {
    out.warning = "no flag candidates supplied; bound uses the surface term only";
    return out;
  }
  for (const auto& [a, s] : candidates) {
    if (s <= 0) throw DomainError("flag S-value must be positive");
    Rational r = a / s;
    if (r < out.value) out.value = r;
  }
  return out;
}

std::pair<Poly1, Poly1> delta_dp4_formula(Fiber fiber) {
  if (fiber == Fiber::kIrreducible) return {Poly1(24), Poly1({28, -10, 1})};
  return {Poly1({48, -24}), Poly1({61, -54, 12})};
}

Rational delta_dp4(const Rational& u, Fiber fiber) {
  if (u < 0 || (fiber == Fiber::kIrreducible ? u > 1 : u >= 2)) {
    throw DomainError("delta_dp4 evaluated outside its domain at u = " + to_string(u));
  }
  auto [num, den] = delta_dp4_formula(fiber);
  Rational d = den(u);
  if (d <= 0) throw DomainError("delta_dp4 denominator is not positive");
  return num(u) / d;
}

Rational head_weight(Fiber fiber, const Poly1& restricted_volume, const Rational& normalization, const Rational& lo,
                     const Rational& hi) {
  auto [num, den] = delta_dp4_formula(fiber);
  auto [q, r] = (restricted_volume * den).divmod(num);
  if (!r.is_zero()) throw DomainError("head integrand is not polynomial");
  return normalization * integrate_poly(q, lo, hi);
}

Rational tail_bound_weight(const Rational& delta_floor) {
  if (delta_floor <= 0) throw DomainError("delta floor must be positive");
  Poly1 tail = Poly1({2, -1}).pow(3);
  return Rational(3, 22) * (4 / delta_floor) * integrate_poly(tail, 1, 2);
}

Rational fibration_delta_bound(const Rational& delta_s) {
  if (delta_s <= 0) throw DomainError("surface delta must be positive");
  Rational cap(16, 11);
  Rational scaled = Rational(16, 15) * delta_s;
  return scaled < cap ? scaled : cap;
}

Rational head_plus_tail(const Rational& head, const Rational& tail) {
  if (head < 0 || tail < 0) throw DomainError("weights must be nonnegative");
  return head + tail;
}

}  // namespace fanocalc::flags
