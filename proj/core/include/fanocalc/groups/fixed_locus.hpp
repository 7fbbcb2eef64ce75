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

#ifndef FANOCALC_GROUPS_FIXED_LOCUS_HPP_
#define FANOCALC_GROUPS_FIXED_LOCUS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "fanocalc/groups/action.hpp"
#include "fanocalc/linalg.hpp"

namespace fanocalc::groups {

// A product of projective linear subspaces, possibly glued along twisted
// diagonals. Factors sharing a block are parametrized by one common
// coordinate vector y: the point on factor i is basis[i] * y.
struct LinearPiece {
  std::vector<std::size_t> block_of;          // block index per factor
  std::vector<std::size_t> block_dims;        // affine dimension of each block
  std::vector<Matrix<Cyclotomic>> basis;      // per factor, coords(i) x block_dims[block_of[i]]

  int dimension() const;  // projective dimension of the piece
  // Point from per-block coordinate vectors.
  Point point(const std::vector<std::vector<Cyclotomic>>& y) const;
  bool contains(const Point& p) const;
  std::string str(const MultiProjectiveSpace& space, const std::vector<std::string>& names) const;
};

struct FixedLocus {
  std::vector<LinearPiece> pieces;

  bool empty() const { return pieces.empty(); }
  bool contains(const Point& p) const;
  std::string summary() const;
};

struct Verdict {
  enum class Kind { kEmpty, kNonempty, kUndecided };
  Kind kind = Kind::kUndecided;
  std::optional<Point> witness;
  std::string reason;

  static Verdict empty() { return {Kind::kEmpty, std::nullopt, {}}; }
  static Verdict nonempty(std::optional<Point> w, std::string why = {}) {
    return {Kind::kNonempty, std::move(w), std::move(why)};
  }
  static Verdict undecided(std::string why) { return {Kind::kUndecided, std::nullopt, std::move(why)}; }
};

std::string kind_name(Verdict::Kind k);

// Joint fixed points of the generated group. Throws UnsupportedAction when
// an eigenvalue falls outside the supported roots of unity.
FixedLocus fixed_locus(const FiniteAbelianAction& act);

// Fixed points on the variety. Witnesses are normalized so that the first
// nonzero coordinate of every factor equals 1.
Verdict intersect_with_variety(const FixedLocus& loc, const VarietyModel& v);

Point normalize_point(Point p);
bool point_on_variety(const Point& p, const VarietyModel& v);
std::string point_str(const Point& p);

}  // namespace fanocalc::groups

#endif  // FANOCALC_GROUPS_FIXED_LOCUS_HPP_
