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

#include <gtest/gtest.h>

#include <random>

#include "fanocalc/catalog.hpp"
#include "fanocalc/errors.hpp"
#include "fanocalc/threefold.hpp"
#include "oracles.hpp"

namespace fanocalc::threefold {
namespace {

ThreefoldModel from_rules(const std::string& name, int deg, int index, int c, int genus) {
  oracle::BlowupTriples t = oracle::blowup_rules(deg, index, c, genus);
  return ThreefoldModel(name, {"H", "E"},
                        {{{0, 0, 0}, t.hhh}, {{0, 0, 1}, t.hhe}, {{0, 1, 1}, t.hee}, {{1, 1, 1}, t.eee}},
                        {Rational(index), Rational(-1)});
}

ThreefoldModel fam216() { return from_rules("2.16", 4, 2, 2, 0); }

DivisorFamilySpec e_family(const Rational& tau, const Rational& index) {
  return {"E", {0, 1}, {{0, tau, {Poly1{index}, Poly1{-1, -1}}, {}}}, tau};
}

DivisorFamilySpec s_family() {
  DivisorFamilySpec s;
  s.name = "S";
  s.divisor = {1, -1};
  s.tau = 2;
  s.chambers.push_back({0, 1, {Poly1{2, -1}, Poly1{-1, 1}}, {}});
  s.chambers.push_back({1, 2, {Poly1{2, -1}, Poly1()}, {{"E", Poly1{-1, 1}}}});
  return s;
}

TEST(ThreefoldModelTest, TensorIsSymmetric) {
  ThreefoldModel m = fam216();
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k) {
        EXPECT_EQ(m.tri(i, j, k), m.tri(j, i, k));
        EXPECT_EQ(m.tri(i, j, k), m.tri(k, j, i));
      }
  EXPECT_EQ(m.tri(1, 0, 1), -2);
}

TEST(ThreefoldModelTest, RejectsBadData) {
  EXPECT_THROW(ThreefoldModel("x", {"H"}, {{{0, 0, 0}, 1}}, {Rational(-1)}), ValidationError);
  EXPECT_THROW(ThreefoldModel("x", {"H"}, {{{0, 0, 0}, 1}, {{0, 0, 0}, 1}}, {Rational(4)}), ValidationError);
  EXPECT_THROW(ThreefoldModel("x", {"H"}, {{{0, 0, 3}, 1}}, {Rational(4)}), ValidationError);
  EXPECT_THROW(ThreefoldModel("x", {"H"}, {{{0, 0, 0}, 1}}, {Rational(4), Rational(1)}), ValidationError);
}

TEST(ThreefoldModelTest, LibraryBlowupModelMatchesRules) {
  for (auto [deg, c, g] : std::vector<std::tuple<int, int, int>>{{3, 3, 1}, {4, 4, 1}, {6, 6, 1}, {4, 2, 0}}) {
    ThreefoldModel lib = blowup_curve_model("m", deg, 2, c, g);
    ThreefoldModel ref = from_rules("m", deg, 2, c, g);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j)
        for (std::size_t k = 0; k < 2; ++k) EXPECT_EQ(lib.tri(i, j, k), ref.tri(i, j, k));
  }
}

TEST(AnticanonicalVolumeTest, SpecExamples) {
  EXPECT_EQ(anticanonical_volume(fam216()), 22);
  EXPECT_EQ(anticanonical_volume(ThreefoldModel("P3", {"H"}, {{{0, 0, 0}, 1}}, {Rational(4)})), 64);
  EXPECT_EQ(anticanonical_volume(from_rules("2.5", 3, 2, 3, 1)), 12);
  for (int d : {3, 4, 6}) EXPECT_EQ(anticanonical_volume(from_rules("d", d, 2, d, 1)), 4 * d);
}

TEST(CubeTest, SpecExamples) {
  EXPECT_EQ(cube(fam216(), {Poly1{2}, Poly1{-1, -1}}), (Poly1{22, -18, -6, 2}));
  EXPECT_TRUE(cube(fam216(), {Poly1(), Poly1()}).is_zero());
  for (int d : {3, 4, 6})
    EXPECT_EQ(cube(from_rules("d", d, 2, d, 1), {Poly1{2}, Poly1{-1, -1}}), (Poly1{4, -6, 0, 2} * Rational(d)));
  EXPECT_THROW(cube(fam216(), {Poly1{1}}), DimensionMismatch);
}

TEST(CubeTest, MatchesInterpolationOracleOnRandomFamilies) {
  std::mt19937 rng(42);
  ThreefoldModel three("T", {"A", "B", "C"},
                       {{{0, 0, 0}, 2}, {{0, 1, 2}, 3}, {{1, 1, 1}, -1}, {{0, 0, 2}, make_rational(1, 2)}, {{2, 2, 2}, 5}},
                       {Rational(1), Rational(0), Rational(1)});
  for (const ThreefoldModel& m : {fam216(), three}) {
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<Poly1> fam;
      for (std::size_t i = 0; i < m.rank(); ++i) fam.push_back(oracle::random_poly(rng, 3));
      ASSERT_EQ(cube(m, fam), oracle::cube_by_interpolation(m, fam));
    }
  }
}

TEST(CubeTest, PolarizationIdentity) {
  // (a+b)^3 - a^3 - b^3 = 3 a^2 b + 3 a b^2, each term read off the tensor directly.
  std::mt19937 rng(43);
  ThreefoldModel m = fam216();
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Poly1> a{oracle::random_poly(rng, 2), oracle::random_poly(rng, 2)};
    std::vector<Poly1> b{oracle::random_poly(rng, 2), oracle::random_poly(rng, 2)};
    std::vector<Poly1> ab{a[0] + b[0], a[1] + b[1]};
    Poly1 mixed;
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j)
        for (std::size_t k = 0; k < 2; ++k)
          mixed += (a[i] * a[j] * b[k] + a[i] * b[j] * b[k]) * (Rational(3) * m.tri(i, j, k));
    ASSERT_EQ(cube(m, ab) - cube(m, a) - cube(m, b), mixed);
  }
}

TEST(TripleTest, MultilinearAndSymmetric) {
  ThreefoldModel m = fam216();
  std::vector<Rational> a{1, 2}, b{-3, make_rational(1, 2)}, c{5, 7};
  EXPECT_EQ(triple(m, a, b, c), triple(m, c, a, b));
  EXPECT_EQ(triple(m, a, b, c), triple(m, b, a, c));
  std::vector<Rational> a2{2, 4};
  EXPECT_EQ(triple(m, a2, b, c), 2 * triple(m, a, b, c));
}

TEST(SInvariantTest, SpecExamples) {
  for (int d : {3, 4, 6}) EXPECT_EQ(s_invariant(from_rules("d", d, 2, d, 1), e_family(1, 2)), make_rational(3, 8));
  EXPECT_EQ(s_invariant(fam216(), e_family(1, 2)), make_rational(23, 44));
  EXPECT_EQ(s_invariant(fam216(), s_family()), make_rational(13, 22));
}

TEST(SInvariantTest, InvariantUnderChamberRefinement) {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    DivisorFamilySpec spec = s_family();
    std::size_t k = static_cast<std::size_t>(trial % 2);
    ChamberSpec left = spec.chambers[k], right = spec.chambers[k];
    std::uniform_int_distribution<int> num(1, 16);
    Rational cut = left.lo + (left.hi - left.lo) * make_rational(num(rng), 17);
    left.hi = cut;
    right.lo = cut;
    spec.chambers[k] = left;
    spec.chambers.insert(spec.chambers.begin() + static_cast<long>(k) + 1, right);
    EXPECT_TRUE(validate_chambers(fam216(), spec).empty());
    ASSERT_EQ(s_invariant(fam216(), spec), make_rational(13, 22));
  }
}

TEST(ValidateChambersTest, SpecExamples) {
  EXPECT_TRUE(validate_chambers(fam216(), s_family()).empty());

  DivisorFamilySpec jump = s_family();
  jump.chambers[1].positive[0] = Poly1{make_rational(21, 10), -1};
  auto d1 = validate_chambers(fam216(), jump);
  ASSERT_FALSE(d1.empty());
  EXPECT_TRUE(std::any_of(d1.begin(), d1.end(),
                          [](const Diagnostic& d) { return d.kind == Diagnostic::Kind::kContinuity && d.at == 1; }));
  EXPECT_THROW(s_invariant(fam216(), jump), ValidationError);

  DivisorFamilySpec flipped = s_family();
  flipped.chambers[1].negative[0].second = Poly1{1, -1};
  auto d2 = validate_chambers(fam216(), flipped);
  EXPECT_TRUE(std::any_of(d2.begin(), d2.end(),
                          [](const Diagnostic& d) { return d.kind == Diagnostic::Kind::kNegativity; }));
}

TEST(ValidateChambersTest, GapsAndIncreasingCubeAreReported) {
  DivisorFamilySpec gap = s_family();
  gap.chambers[1].lo = make_rational(3, 2);
  auto d = validate_chambers(fam216(), gap);
  EXPECT_TRUE(std::any_of(d.begin(), d.end(), [](const Diagnostic& x) { return x.kind == Diagnostic::Kind::kPartition; }));

  DivisorFamilySpec growing = e_family(1, 2);
  growing.chambers[0].positive[1] = Poly1{-1, 1};
  auto g = validate_chambers(fam216(), growing);
  EXPECT_TRUE(
      std::any_of(g.begin(), g.end(), [](const Diagnostic& x) { return x.kind == Diagnostic::Kind::kMonotonicity; }));
}

TEST(CatalogFamiliesTest, CubeIsContinuousAtEveryWall) {
  catalog::Catalog cat = catalog::load_catalog(FANOCALC_TEST_CATALOG);
  int families = 0;
  for (const auto& [id, e] : cat.entries()) {
    if (e.kind != catalog::Kind::kDivisorFamily) continue;
    ++families;
    const auto& fam = std::get<catalog::FamilyPayload>(e.payload);
    const ThreefoldModel& m = cat.payload<catalog::ModelPayload>(fam.model).model;
    EXPECT_TRUE(validate_chambers(m, fam.spec).empty()) << id;
    for (std::size_t k = 1; k < fam.spec.chambers.size(); ++k) {
      const Rational& wall = fam.spec.chambers[k].lo;
      EXPECT_EQ(cube(m, fam.spec.chambers[k - 1].positive)(wall), cube(m, fam.spec.chambers[k].positive)(wall)) << id;
    }
  }
  EXPECT_GE(families, 5);
}

TEST(CatalogFamiliesTest, BlowupModelsMatchRulesAndPublishedVolumes) {
  catalog::Catalog cat = catalog::load_catalog(FANOCALC_TEST_CATALOG);
  for (const auto& [id, e] : cat.entries()) {
    if (e.kind != catalog::Kind::kThreefoldModel) continue;
    const auto& mp = std::get<catalog::ModelPayload>(e.payload);
    if (!mp.blowup) continue;
    oracle::BlowupTriples t =
        oracle::blowup_rules(mp.blowup->degree, mp.blowup->index, mp.blowup->curve_degree, mp.blowup->curve_genus);
    EXPECT_EQ(mp.model.tri(0, 0, 0), t.hhh) << id;
    EXPECT_EQ(mp.model.tri(0, 0, 1), t.hhe) << id;
    EXPECT_EQ(mp.model.tri(0, 1, 1), t.hee) << id;
    EXPECT_EQ(mp.model.tri(1, 1, 1), t.eee) << id;
  }
  EXPECT_EQ(anticanonical_volume(cat.payload<catalog::ModelPayload>("fam-2.16").model), 22);
  EXPECT_EQ(anticanonical_volume(cat.payload<catalog::ModelPayload>("model-P3").model), 64);
}

}  // namespace
}  // namespace fanocalc::threefold
