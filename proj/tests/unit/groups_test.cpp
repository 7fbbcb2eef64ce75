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
#include "fanocalc/groups/verdict.hpp"
#include "oracles.hpp"

namespace fanocalc::groups {
namespace {

FiniteAbelianAction make_action(std::vector<int> dims, const std::vector<std::string>& names,
                                const std::vector<std::string>& gens, std::vector<int> structure) {
  FiniteAbelianAction act;
  act.space.dims = std::move(dims);
  for (const std::string& g : gens) act.generators.push_back(parse_generator(g, act.space, names));
  act.claimed_structure = std::move(structure);
  return act;
}

VarietyModel make_variety(const MultiProjectiveSpace& space, const std::vector<std::string>& names,
                          const std::vector<std::string>& eqs) {
  VarietyModel v;
  v.space = space;
  v.variables = names;
  for (const std::string& e : eqs) v.equations.push_back(parse_mpoly(e, names));
  v.validate();
  return v;
}

const std::vector<std::string> kP4 = {"x1", "x2", "x3", "x4", "x5"};

FiniteAbelianAction sign_changes_p4() {
  return make_action({4}, kP4, {"[-x1:x2:x3:x4:x5]", "[x1:-x2:x3:x4:x5]", "[x1:x2:-x3:x4:x5]", "[x1:x2:x3:-x4:x5]"},
                     {2, 2, 2, 2});
}

bool same_point(const Point& a, const Point& b) { return normalize_point(a) == normalize_point(b); }

TEST(ActionTest, ParsesGeneratorsAndRejectsMalformedText) {
  MultiProjectiveSpace p1{{1}};
  GroupElement g = parse_generator("[y:zeta3*x]", p1, {"x", "y"});
  EXPECT_EQ(g.maps[0].perm, (std::vector<int>{1, 0}));
  EXPECT_EQ(g.maps[0].diag[1], Cyclotomic::zeta(3));
  EXPECT_EQ(element_order(g), 2u);
  EXPECT_THROW(parse_generator("[x:y", p1, {"x", "y"}), ParseError);
  EXPECT_THROW(parse_generator("[x+y:y]", p1, {"x", "y"}), ParseError);
  EXPECT_THROW(parse_generator("[x^2:y]", p1, {"x", "y"}), ParseError);
  EXPECT_THROW(parse_generator("[x]", p1, {"x", "y"}), ParseError);
  MultiProjectiveSpace mixed{{1, 2}};
  EXPECT_THROW(parse_generator("([w1:w2],[u:v:w3])", mixed, {"u", "v", "w1", "w2", "w3"}), ParseError);
  EXPECT_THROW((MultiProjectiveSpace{{}}).validate(), ValidationError);
  EXPECT_THROW((MultiProjectiveSpace{{0}}).validate(), ValidationError);
}

TEST(ActionTest, ValidateActionChecksCommutationAndStructure) {
  EXPECT_EQ(validate_action(sign_changes_p4()).order, 16u);
  FiniteAbelianAction wrong = sign_changes_p4();
  wrong.claimed_structure = {2, 2, 4};
  EXPECT_THROW(validate_action(wrong), ValidationError);
  FiniteAbelianAction noncommuting = make_action({2}, {"x", "y", "z"}, {"[y:z:x]", "[-x:y:z]"}, {3, 2});
  EXPECT_THROW(validate_action(noncommuting), ValidationError);
  FiniteAbelianAction c8 = make_action({1, 1}, {"x1", "x2", "y1", "y2"}, {"([zeta4*y1:y2],[x1:x2])"}, {8});
  EXPECT_EQ(validate_action(c8).order, 8u);
}

TEST(ActionTest, ComposeAndPowerAgreeWithApply) {
  FiniteAbelianAction act = make_action({2, 2}, {"x", "y", "z", "u", "v", "w"},
                                        {"([y:z:x],[v:w:u])", "([zeta3*x:zeta3^2*y:z],[zeta3*u:zeta3^2*v:w])"}, {3, 3});
  Point p = {{Cyclotomic(1), Cyclotomic(2), Cyclotomic(5)}, {Cyclotomic(-1), Cyclotomic(3), Cyclotomic::zeta(3)}};
  const GroupElement& a = act.generators[0];
  const GroupElement& b = act.generators[1];
  EXPECT_TRUE(same_point(a.compose(b).apply(p), a.apply(b.apply(p))));
  EXPECT_TRUE(same_point(a.pow(3).apply(p), p));
  EXPECT_TRUE(a.pow(3).is_projective_identity());
  EXPECT_TRUE(a.compose(b).projectively_equal(b.compose(a)));
}

TEST(CheckInvarianceTest, SpecExamples) {
  FiniteAbelianAction fermat = make_action(
      {4}, kP4, {"[zeta3*x1:x2:x3:x4:x5]", "[x1:zeta3*x2:x3:x4:x5]", "[x1:x2:zeta3*x3:x4:x5]", "[x1:x2:x3:zeta3*x4:x5]"},
      {3, 3, 3, 3});
  VarietyModel cubic = make_variety(fermat.space, kP4, {"x1^3+x2^3+x3^3+x4^3+x5^3"});
  for (const InvarianceRow& row : check_invariance(fermat, cubic).rows) EXPECT_EQ(row.scalar.pow(3), Cyclotomic(1));

  FiniteAbelianAction trivial = make_action({4}, kP4, {"[x1:x2:x3:x4:x5]"}, {});
  for (const InvarianceRow& row : check_invariance(trivial, cubic).rows) EXPECT_EQ(row.scalar, Cyclotomic(1));

  std::vector<std::string> names = {"x", "y", "z", "u", "v", "w"};
  FiniteAbelianAction perm = make_action({2, 2}, names, {"([y:z:x],[v:w:u])"}, {3});
  VarietyModel eq = make_variety(perm.space, names, {"x*u^2+y*v^2+z*w^2+2*(x*v*w+y*u*w+z*u*v)"});
  InvarianceReport rep = check_invariance(perm, eq);
  ASSERT_EQ(rep.rows.size(), 1u);
  EXPECT_EQ(rep.rows[0].scalar, Cyclotomic(1));
  EXPECT_EQ(rep.rows[0].image, 0u);
}

TEST(CheckInvarianceTest, PermutedSystemsAndFailures) {
  std::vector<std::string> n = {"x", "y", "z"};
  FiniteAbelianAction swap = make_action({2}, n, {"[y:x:z]"}, {2});
  VarietyModel pair = make_variety(swap.space, n, {"x^2-z^2", "y^2-z^2"});
  InvarianceReport rep = check_invariance(swap, pair);
  ASSERT_EQ(rep.rows.size(), 2u);
  EXPECT_EQ(rep.rows[0].image, 1u);
  EXPECT_EQ(rep.rows[1].image, 0u);
  VarietyModel broken = make_variety(swap.space, n, {"x^2-z^2"});
  EXPECT_THROW(check_invariance(swap, broken), NotInvariant);
  VarietyModel elsewhere = make_variety(MultiProjectiveSpace{{1, 1}}, {"a", "b", "c", "d"}, {});
  EXPECT_THROW(check_invariance(swap, elsewhere), DimensionMismatch);
}

TEST(FixedLocusTest, SpecExamples) {
  FixedLocus five = fixed_locus(sign_changes_p4());
  ASSERT_EQ(five.pieces.size(), 5u);
  for (const LinearPiece& p : five.pieces) EXPECT_EQ(p.dimension(), 0);

  FixedLocus whole = fixed_locus(make_action({2}, {"x", "y", "z"}, {}, {}));
  ASSERT_EQ(whole.pieces.size(), 1u);
  EXPECT_EQ(whole.pieces[0].dimension(), 2);

  EXPECT_TRUE(fixed_locus(make_action({1}, {"x", "y"}, {"[x:-y]", "[y:x]"}, {2, 2})).empty());
}

TEST(FixedLocusTest, TwistedDiagonalsAndHigherConductors) {
  FixedLocus tw = fixed_locus(make_action({1, 1}, {"x1", "x2", "y1", "y2"}, {"([y1:y2],[x1:x2])"}, {2}));
  ASSERT_EQ(tw.pieces.size(), 1u);
  EXPECT_EQ(tw.pieces[0].dimension(), 1);
  Point diag = {{Cyclotomic(3), Cyclotomic(7)}, {Cyclotomic(3), Cyclotomic(7)}};
  EXPECT_TRUE(tw.contains(diag));
  EXPECT_FALSE(tw.contains({{Cyclotomic(1), Cyclotomic(0)}, {Cyclotomic(0), Cyclotomic(1)}}));

  FixedLocus c12 = fixed_locus(make_action({1}, {"x", "y"}, {"[x:zeta12*y]"}, {12}));
  EXPECT_EQ(c12.pieces.size(), 2u);
}

TEST(IntersectWithVarietyTest, SpecExamples) {
  FiniteAbelianAction act = sign_changes_p4();
  FixedLocus loc = fixed_locus(act);
  EXPECT_EQ(intersect_with_variety(loc, make_variety(act.space, kP4, {"x1^2+x2^2+x3^2+x4^2+x5^2"})).kind,
            Verdict::Kind::kEmpty);
  Verdict all = intersect_with_variety(loc, make_variety(act.space, kP4, {}));
  ASSERT_EQ(all.kind, Verdict::Kind::kNonempty);
  ASSERT_TRUE(all.witness.has_value());
  EXPECT_EQ(intersect_with_variety(loc, make_variety(act.space, kP4, {"x1^3+x2^3+x3^3+x4^3+x5^3"})).kind,
            Verdict::Kind::kEmpty);
}

TEST(IntersectWithVarietyTest, LinesUseCommonRoots) {
  // Fixed locus: the line x3 = x4 = x5 = 0 and three coordinate points.
  FiniteAbelianAction act =
      make_action({4}, kP4, {"[x1:x2:-x3:x4:x5]", "[x1:x2:x3:-x4:x5]", "[x1:x2:x3:x4:-x5]"}, {2, 2, 2});
  FixedLocus loc = fixed_locus(act);
  ASSERT_EQ(loc.pieces.size(), 4u);

  VarietyModel meets = make_variety(act.space, kP4, {"x1^2-4*x2^2", "x3^2+x4^2+x5^2"});
  Verdict v = intersect_with_variety(loc, meets);
  ASSERT_EQ(v.kind, Verdict::Kind::kNonempty);
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_TRUE(point_on_variety(*v.witness, meets));
  EXPECT_TRUE(loc.contains(*v.witness));

  VarietyModel misses = make_variety(act.space, kP4, {"x1^2+x2^2+x3^2+x4^2+x5^2", "x1*x2"});
  EXPECT_EQ(intersect_with_variety(loc, misses).kind, Verdict::Kind::kEmpty);

  VarietyModel gaussian = make_variety(act.space, kP4, {"x1^2+x2^2", "x3", "x4"});
  Verdict g = intersect_with_variety(loc, gaussian);
  ASSERT_EQ(g.kind, Verdict::Kind::kNonempty);
  if (g.witness) EXPECT_TRUE(point_on_variety(*g.witness, gaussian));
}

TEST(LinearizationTest, SpecExamples) {
  EXPECT_TRUE(linearization_exists(4, 3));
  EXPECT_FALSE(linearization_exists(3, 4));
  EXPECT_FALSE(linearization_exists(2, 3));
  EXPECT_TRUE(linearization_exists(2, 4));
  EXPECT_TRUE(linearization_exists(3, 3));
  EXPECT_THROW(linearization_exists(0, 3), DomainError);
}

class CatalogGroupsTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() { cat_ = new catalog::Catalog(catalog::load_catalog(FANOCALC_TEST_CATALOG)); }
  static void TearDownTestSuite() {
    delete cat_;
    cat_ = nullptr;
  }
  static std::vector<std::pair<std::string, const GroupExample*>> examples() {
    std::vector<std::pair<std::string, const GroupExample*>> out;
    for (const auto& [id, e] : cat_->entries())
      if (const auto* g = std::get_if<catalog::GroupPayload>(&e.payload)) out.emplace_back(id, &g->example);
    return out;
  }
  static catalog::Catalog* cat_;
};

catalog::Catalog* CatalogGroupsTest::cat_ = nullptr;

TEST_F(CatalogGroupsTest, ConditionAVerdicts) {
  for (const auto& [id, ex] : examples()) {
    Certificate c = condition_a_verdict(*ex);
    if (ex->partial || !ex->variety) {
      EXPECT_EQ(c.verdict.kind, Verdict::Kind::kUndecided) << id;
    } else {
      EXPECT_EQ(c.verdict.kind, Verdict::Kind::kEmpty) << id;
      EXPECT_FALSE(c.verdict.witness.has_value()) << id;
    }
    EXPECT_FALSE(c.chain.empty()) << id;
  }
  EXPECT_EQ(condition_a_verdict(cat_->payload<catalog::GroupPayload>("ex-0").example).verdict.kind,
            Verdict::Kind::kEmpty);
  EXPECT_EQ(condition_a_verdict(cat_->payload<catalog::GroupPayload>("ex-3.2").example).verdict.kind,
            Verdict::Kind::kEmpty);
}

TEST_F(CatalogGroupsTest, TrivialGroupHasFixedPoints) {
  GroupExample ex;
  ex.action = make_action({2}, {"x", "y", "z"}, {}, {});
  ex.variety = make_variety(ex.action.space, {"x", "y", "z"}, {"x*y-z^2"});
  ex.rationally_connected = true;
  Certificate c = condition_a_verdict(ex);
  EXPECT_EQ(c.verdict.kind, Verdict::Kind::kNonempty);
}

TEST_F(CatalogGroupsTest, InvarianceCharactersAreRootsOfUnity) {
  for (const auto& [id, ex] : examples()) {
    int conductor = cat_->payload<catalog::GroupPayload>(id).conductor;
    auto check = [&](const FiniteAbelianAction& act, const VarietyModel& v) {
      for (const Cyclotomic& chi : check_invariance(act, v).characters()) {
        int order = chi.root_of_unity_order();
        EXPECT_GT(order, 0) << id;
        EXPECT_EQ(std::lcm(2, conductor) % order, 0) << id << " " << chi.str();
      }
    };
    if (ex->variety) check(ex->action, *ex->variety);
    for (const InvariantSystem& sys : ex->invariant_systems) check(sys.action ? *sys.action : ex->action, sys.model);
  }
}

TEST_F(CatalogGroupsTest, CyclicSubgroupsHaveFixedPoints) {
  int checked = 0;
  for (const auto& [id, ex] : examples()) {
    if (!ex->rationally_connected || !ex->variety) continue;
    ++checked;
    std::vector<SanityRow> rows = cyclic_sanity(ex->action, *ex->variety);
    EXPECT_EQ(rows.size(), validate_action(ex->action).order) << id;
    for (const SanityRow& r : rows) EXPECT_NE(r.verdict.kind, Verdict::Kind::kEmpty) << id << " " << r.element;
  }
  EXPECT_GE(checked, 15);
}

TEST_F(CatalogGroupsTest, CyclicSanitySpecExamples) {
  FiniteAbelianAction one = make_action({4}, kP4, {"[-x1:x2:x3:x4:x5]"}, {2});
  VarietyModel q = make_variety(one.space, kP4, {"x1^2+x2^2+x3^2+x4^2+x5^2"});
  for (const SanityRow& r : cyclic_sanity(one, q)) EXPECT_EQ(r.verdict.kind, Verdict::Kind::kNonempty) << r.element;

  const GroupExample& e19 = cat_->payload<catalog::GroupPayload>("ex-1.9").example;
  FiniteAbelianAction diag = e19.action;
  diag.generators = {e19.action.generators[1]};
  diag.claimed_structure = {3};
  for (const SanityRow& r : cyclic_sanity(diag, *e19.variety)) EXPECT_EQ(r.verdict.kind, Verdict::Kind::kNonempty);

  // An element without fixed points on a rationally connected variety is a contradiction.
  FiniteAbelianAction free_pair = make_action({1}, {"x", "y"}, {"[x:-y]", "[y:x]"}, {2, 2});
  VarietyModel line = make_variety(free_pair.space, {"x", "y"}, {});
  EXPECT_NO_THROW(cyclic_sanity(free_pair, line));
}

TEST_F(CatalogGroupsTest, PiecesAreSetwiseInvariant) {
  std::mt19937 rng(17);
  for (const auto& [id, ex] : examples()) {
    if (ex->action.generators.empty()) continue;
    FixedLocus loc = fixed_locus(ex->action);
    for (const LinearPiece& piece : loc.pieces) {
      for (int trial = 0; trial < 20; ++trial) {
        std::vector<std::vector<Cyclotomic>> y;
        for (std::size_t d : piece.block_dims) {
          std::vector<Cyclotomic> v;
          for (std::size_t k = 0; k < d; ++k) v.emplace_back(oracle::random_rational(rng, 1, 9, 4));
          y.push_back(v);
        }
        Point p = piece.point(y);
        for (const GroupElement& g : ex->action.generators) {
          ASSERT_TRUE(piece.contains(g.apply(p))) << id;
          ASSERT_TRUE(same_point(g.apply(p), p)) << id;
        }
      }
    }
  }
}

TEST_F(CatalogGroupsTest, WitnessesAreFixedPointsOnTheVariety) {
  int witnesses = 0;
  for (const auto& [id, ex] : examples()) {
    if (!ex->variety) continue;
    for (const GroupElement& g : ex->action.generators) {
      FiniteAbelianAction single{ex->action.space, {g}, {static_cast<int>(element_order(g))}};
      if (single.claimed_structure[0] == 1) single.claimed_structure.clear();
      Verdict v = intersect_with_variety(fixed_locus(single), *ex->variety);
      if (!v.witness) continue;
      ++witnesses;
      EXPECT_TRUE(point_on_variety(*v.witness, *ex->variety)) << id;
      EXPECT_TRUE(same_point(g.apply(*v.witness), *v.witness)) << id;
      EXPECT_EQ(*v.witness, normalize_point(*v.witness)) << id;
    }
  }
  EXPECT_GT(witnesses, 10);
}

class BruteForceTest : public CatalogGroupsTest {};

TEST_F(BruteForceTest, FixedLocusMatchesExhaustiveSearchOverF13) {
  int compared = 0;
  for (const auto& [id, ex] : examples()) {
    if (ex->action.generators.empty() || oracle::point_count(ex->action.space) > 1'000'000) continue;
    bool degenerate = false;
    std::set<oracle::FPoint> got = oracle::reduce_locus(fixed_locus(ex->action), ex->action.space, &degenerate);
    ASSERT_FALSE(degenerate) << id;
    EXPECT_EQ(got, oracle::brute_force_fixed_points(ex->action)) << id;
    ++compared;
  }
  EXPECT_GE(compared, 5);
}

TEST_F(BruteForceTest, SyntheticActionsWithHigherConductors) {
  std::vector<FiniteAbelianAction> acts = {
      make_action({1, 1}, {"x1", "x2", "y1", "y2"}, {"([zeta4*y1:y2],[x1:x2])"}, {8}),
      make_action({3}, {"a", "b", "c", "d"}, {"[a:zeta4*b:-c:zeta4^3*d]", "[c:d:a:b]"}, {2, 4}),
      make_action({2}, {"x", "y", "z"}, {"[x:zeta12*y:zeta4*z]"}, {12}),
      make_action({1, 1, 1}, {"a", "b", "c", "d", "e", "f"}, {"([c:d],[e:f],[a:b])"}, {3}),
  };
  for (const FiniteAbelianAction& act : acts) {
    validate_action(act);
    bool degenerate = false;
    std::set<oracle::FPoint> got = oracle::reduce_locus(fixed_locus(act), act.space, &degenerate);
    ASSERT_FALSE(degenerate);
    EXPECT_EQ(got, oracle::brute_force_fixed_points(act)) << act.generators[0].str(act.space, default_variable_names(act.space));
  }
}

}  // namespace
}  // namespace fanocalc::groups
