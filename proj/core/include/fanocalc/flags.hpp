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

#ifndef FANOCALC_FLAGS_HPP_
#define FANOCALC_FLAGS_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fanocalc/poly1.hpp"
#include "fanocalc/rational.hpp"
#include "fanocalc/surface.hpp"
#include "fanocalc/threefold.hpp"

namespace fanocalc::flags {

// ord_F(N(u)|_S) on one interval.
struct OrdPiece {
  Rational lo;
  Rational hi;
  Poly1 ord;
};

struct FlagCandidate {
  std::string name;
  Rational log_discrepancy;
  surface::SurfClass flag_class;
  std::vector<OrdPiece> ord_profile;
};

struct SurfaceRestrictionData {
  surface::SurfaceLattice lattice;
  surface::ZariskiProfile restricted;  // profile of P(u)|_S
  Rational s_invariant_of_s;
};

// Throws ValidationError when an ord profile is negative at a sample.
void validate_flag(const FlagCandidate& f);

// 3/(-K)^3 times the sum of the ord term and the double volume integral.
Rational s_w_flag(const threefold::ThreefoldModel& m, const SurfaceRestrictionData& data, const FlagCandidate& f);

struct DeltaBound {
  Rational value;
  std::optional<std::string> warning;
};

// min(1/s_of_s, min A/S_w). Inputs must be positive.
DeltaBound delta_point_bound(const Rational& s_of_s, const std::vector<std::pair<Rational, Rational>>& candidates);

enum class Fiber { kIrreducible, kReducible };

// Local delta estimate on the quartic del Pezzo fiber as a ratio of
// polynomials in u: numerator / denominator.
std::pair<Poly1, Poly1> delta_dp4_formula(Fiber fiber);
Rational delta_dp4(const Rational& u, Fiber fiber);

// normalization * integral over [lo, hi] of restricted_volume / delta_dp4.
// The quotient must be polynomial.
Rational head_weight(Fiber fiber, const Poly1& restricted_volume, const Rational& normalization, const Rational& lo,
                     const Rational& hi);
// (3/22) * (4/delta_floor) * integral over [1, 2] of (2-u)^3.
Rational tail_bound_weight(const Rational& delta_floor);
Rational fibration_delta_bound(const Rational& delta_s);
Rational head_plus_tail(const Rational& head, const Rational& tail);

}  // namespace fanocalc::flags

#endif  // FANOCALC_FLAGS_HPP_
