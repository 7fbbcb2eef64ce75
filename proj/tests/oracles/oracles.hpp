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

// Independent reference computations used by the unit and acceptance tests.
// None of these routines call into the library code paths they check.

#ifndef FANOCALC_TESTS_ORACLES_HPP_
#define FANOCALC_TESTS_ORACLES_HPP_

#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "fanocalc/groups/fixed_locus.hpp"
#include "fanocalc/surface.hpp"
#include "fanocalc/threefold.hpp"

namespace fanocalc::oracle {

// ---- finite field F_13, which contains all 12th roots of unity --------------

inline constexpr int kPrime = 13;

int reduce(const Rational& q);
// Throws DomainError for conductors not dividing 12.
int reduce(const Cyclotomic& c);

using FPoint = std::vector<std::vector<int>>;

// Number of F_13 points of the ambient multiprojective space.
std::size_t point_count(const groups::MultiProjectiveSpace& space);

// Every F_13 point fixed by all generators, found by exhaustive search.
std::set<FPoint> brute_force_fixed_points(const groups::FiniteAbelianAction& act);

// F_13 points of the pieces returned by the library. Sets `degenerate` when a
// basis loses rank modulo 13, in which case the comparison is meaningless.
std::set<FPoint> reduce_locus(const groups::FixedLocus& loc, const groups::MultiProjectiveSpace& space,
                              bool* degenerate);

// ---- exact integration and expansion ----------------------------------------

// Closed Newton-Cotes rule on deg+1 equally spaced nodes, exact for p.
Rational newton_cotes(const Poly1& p, const Rational& a, const Rational& b);

// (sum_i fam_i D_i)^3 evaluated through all 27 ordered tensor entries at
// 3*deg+1 sample points, then recovered by Lagrange interpolation.
Poly1 cube_by_interpolation(const threefold::ThreefoldModel& m, const std::vector<Poly1>& fam);

struct BlowupTriples {
  Rational hhh, hhe, hee, eee;
};
// Intersection numbers on the blowup of a curve of degree c and genus g in
// a threefold with H^3 = deg and -K = index*H.
BlowupTriples blowup_rules(const Rational& deg, const Rational& index, const Rational& c, int genus);

// ---- surfaces ---------------------------------------------------------------

Rational dot(const surface::SurfaceLattice& lat, const surface::SurfClass& a, const surface::SurfClass& b);
Rational determinant(std::vector<std::vector<Rational>> m);
bool negative_definite(const std::vector<std::vector<Rational>>& m);

// Empty when every Zariski axiom holds, otherwise a description of the failure.
std::optional<std::string> zariski_violation(const surface::SurfaceLattice& lat, const surface::SurfClass& input,
                                             const surface::ZariskiResult& z);

Rational random_rational(std::mt19937& rng, int num_lo, int num_hi, int den_hi);
Poly1 random_poly(std::mt19937& rng, int max_degree);

}  // namespace fanocalc::oracle

#endif  // FANOCALC_TESTS_ORACLES_HPP_
