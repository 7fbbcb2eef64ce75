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

// Acceptance suite: prints one PASS/FAIL line per criterion and exits
// nonzero when any criterion fails.

#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fanocalc/catalog.hpp"
#include "fanocalc/flags.hpp"
#include "fanocalc/groups/verdict.hpp"
#include "fanocalc/report.hpp"
#include "fanocalc/scenario.hpp"
#include "oracles.hpp"

namespace fc = fanocalc;
namespace cat = fanocalc::catalog;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << "[failed: " << what << "] ";
    }
  }
  template <typename A, typename B>
  void expect_eq(const A& got, const B& want, const std::string& what) {
    if (!(got == want)) {
      ok = false;
      detail << "[" << what << ": got " << got << ", want " << want << "] ";
    }
  }
};

fc::Rational R(const char* s) { return fc::parse_rational(s); }

std::ostream& operator<<(std::ostream& os, const fc::Poly1& p) { return os << p.str(); }

void s_invariants(const cat::Catalog& c, Outcome& o) {
  auto s_of = [&](const std::string& id) {
    const auto& fam = c.payload<cat::FamilyPayload>(id);
    return fc::threefold::s_invariant(c.payload<cat::ModelPayload>(fam.model).model, fam.spec);
  };
  for (const char* id : {"fam-2.5/E", "fam-2.10/E", "fam-3.7/E"}) o.expect_eq(s_of(id), R("3/8"), id);
  o.expect_eq(s_of("fam-2.16/E"), R("23/44"), "fam-2.16/E");
  o.expect_eq(s_of("fam-2.16/S"), R("13/22"), "fam-2.16/S");
  o.detail << "3/8 for d in {3,4,6}, 23/44, 13/22";
}

void cube_polynomial(const cat::Catalog& c, Outcome& o) {
  const fc::threefold::ThreefoldModel& m = c.payload<cat::ModelPayload>("fam-2.16").model;
  fc::oracle::BlowupTriples t = fc::oracle::blowup_rules(4, 2, 2, 0);
  o.expect_eq(m.tri(0, 0, 0), t.hhh, "H^3");
  o.expect_eq(m.tri(0, 0, 1), t.hhe, "H^2E");
  o.expect_eq(m.tri(0, 1, 1), t.hee, "HE^2");
  o.expect_eq(m.tri(1, 1, 1), t.eee, "E^3");
  fc::threefold::ThreefoldModel rules("rules", {"H", "E"},
                                      {{{0, 0, 0}, t.hhh}, {{0, 0, 1}, t.hhe}, {{0, 1, 1}, t.hee}, {{1, 1, 1}, t.eee}},
                                      {fc::Rational(2), fc::Rational(-1)});
  o.expect_eq(fc::threefold::anticanonical_volume(rules), fc::Rational(22), "(-K)^3 from rules");
  std::vector<fc::Poly1> fam{fc::Poly1{2}, fc::Poly1{-1, -1}};
  fc::Poly1 want{22, -18, -6, 2};
  o.expect_eq(fc::threefold::cube(m, fam), want, "cube on catalog model");
  o.expect_eq(fc::oracle::cube_by_interpolation(rules, fam), want, "interpolated cube on rules model");
  o.detail << "2u^3 - 6u^2 - 18u + 22, (-K)^3 = 22";
}

void flag_estimates(const cat::Catalog& c, Outcome& o) {
  auto run = [&](const std::string& id) {
    const auto& f = c.payload<cat::FlagPayload>(id);
    return fc::flags::s_w_flag(c.payload<cat::ModelPayload>(f.model).model, cat::restriction_data(c, f), f.flag);
  };
  for (const char* id : {"fam-2.5/flag-s", "fam-2.10/flag-s", "fam-3.7/flag-s"}) o.expect_eq(run(id), R("11/16"), id);
  o.expect_eq(run("fam-2.16/flag-P1xP1"), R("67/88"), "P1xP1 flag");
  o.expect_eq(run("fam-2.16/flag-F2"), R("41/44"), "F2 flag");
  o.detail << "11/16 x3, 67/88, 41/44";
}

void delta_chains(const cat::Catalog& c, Outcome& o) {
  using fc::flags::Fiber;
  const auto& s_fam = c.payload<cat::FamilyPayload>("fam-2.16/S");
  fc::Rational s_of_s = fc::threefold::s_invariant(c.payload<cat::ModelPayload>(s_fam.model).model, s_fam.spec);
  fc::Poly1 vol{8, -4};
  fc::Rational head = fc::flags::head_weight(Fiber::kIrreducible, vol, R("3/22"), 0, 1);
  fc::Rational tail = fc::flags::tail_bound_weight(R("4/3"));
  fc::Rational sum = fc::flags::head_plus_tail(head, tail);
  o.expect_eq(head, R("13/16"), "head");
  o.expect_eq(tail, R("9/88"), "tail");
  o.expect_eq(sum, R("161/176"), "sum");
  o.expect_eq(fc::flags::delta_point_bound(s_of_s, {{1, sum}}).value, R("176/161"), "irreducible bound");
  fc::Rational red = fc::flags::head_plus_tail(fc::flags::head_weight(Fiber::kReducible, vol, R("3/22"), 0, 1), tail);
  o.expect_eq(fc::flags::delta_point_bound(s_of_s, {{1, red}}).value, R("88/85"), "reducible bound");
  for (const char* id : {"fam-2.16/delta-chain-irreducible", "fam-2.16/delta-chain-reducible"})
    o.expect(cat::run_scenario(c, id).status == cat::Status::kPass, id);
  o.detail << "13/16 + 9/88 = 161/176, bounds 176/161 and 88/85";
}

void closed_forms(const cat::Catalog&, Outcome& o) {
  using fc::flags::Fiber;
  o.expect_eq(fc::flags::delta_dp4(0, Fiber::kIrreducible), R("6/7"), "dp4(0, irreducible)");
  o.expect_eq(fc::flags::delta_dp4(1, Fiber::kIrreducible), R("24/19"), "dp4(1, irreducible)");
  o.expect_eq(fc::flags::delta_dp4(0, Fiber::kReducible), R("48/61"), "dp4(0, reducible)");
  o.expect_eq(fc::flags::fibration_delta_bound(1), R("16/15"), "fibration(1)");
  o.expect_eq(fc::flags::fibration_delta_bound(10), R("16/11"), "fibration(10)");
  o.detail << "6/7, 24/19, 48/61, 16/15, 16/11";
}

void zariski_axioms(const cat::Catalog& c, Outcome& o) {
  std::mt19937 rng(590);
  int checked = 0;
  for (const char* id : {"lat-F2", "lat-P1xP1"}) {
    const auto& lat = c.payload<fc::surface::SurfaceLattice>(id);
    for (int trial = 0; trial < 200; ++trial) {
      // Nonnegative combinations of the basis curves are effective on both lattices.
      fc::surface::SurfClass cls = fc::surface::SurfClass::zero(lat.rank());
      for (fc::Rational& x : cls.coeffs) x = fc::oracle::random_rational(rng, 0, 20, 7);
      auto violation = fc::oracle::zariski_violation(lat, cls, fc::surface::zariski(lat, cls));
      if (violation) o.expect(false, std::string(id) + ": " + *violation);
      ++checked;
    }
  }
  o.expect_eq(fc::surface::beta_curve(c.payload<fc::surface::SurfaceLattice>("lat-P2"), fc::surface::SurfClass({1})),
              fc::Rational(0), "beta(P2, line)");
  o.detail << checked << " random classes, beta(P2, line) = 0";
}

const std::vector<std::string> kMachineCheckable = {
    "ex-0",   "ex-quadric-elliptic", "ex-quadric-cone", "ex-triple-P1", "ex-P3-lines", "ex-1.9", "ex-2.5",
    "ex-2.10", "ex-2.16",            "ex-2.24",         "ex-3.2",       "ex-3.5",      "ex-3.6", "ex-3.7",
    "ex-3.10", "ex-3.12",            "ex-3.13",         "ex-4.13"};

void condition_a(const cat::Catalog& c, Outcome& o) {
  using Kind = fc::groups::Verdict::Kind;
  for (const std::string& id : kMachineCheckable) {
    fc::groups::Certificate cert = fc::groups::condition_a_verdict(c.payload<cat::GroupPayload>(id).example);
    o.expect(cert.verdict.kind == Kind::kEmpty, id + " is " + fc::groups::kind_name(cert.verdict.kind));
    o.expect(!cert.verdict.witness.has_value(), id + " carries a witness");
  }
  for (const char* id : {"ex-2.12", "ex-2.21"}) {
    Kind k = fc::groups::condition_a_verdict(c.payload<cat::GroupPayload>(id).example).verdict.kind;
    o.expect(k == Kind::kUndecided, std::string(id) + " is " + fc::groups::kind_name(k));
  }
  o.detail << kMachineCheckable.size() << " entries empty, 2 undecided";
}

void lefschetz(const cat::Catalog& c, Outcome& o) {
  using Kind = fc::groups::Verdict::Kind;
  std::size_t entries = 0, rows = 0, compared = 0;
  for (const auto& [id, e] : c.entries()) {
    const auto* g = std::get_if<cat::GroupPayload>(&e.payload);
    if (!g) continue;
    const fc::groups::GroupExample& ex = g->example;
    if (ex.rationally_connected && ex.variety) {
      ++entries;
      for (const fc::groups::SanityRow& r : fc::groups::cyclic_sanity(ex.action, *ex.variety)) {
        ++rows;
        o.expect(r.verdict.kind == Kind::kNonempty, id + " element " + r.element);
      }
    }
    if (ex.action.generators.empty() || fc::oracle::point_count(ex.action.space) > 1'000'000) continue;
    bool degenerate = false;
    auto got = fc::oracle::reduce_locus(fc::groups::fixed_locus(ex.action), ex.action.space, &degenerate);
    o.expect(!degenerate, id + " locus degenerates mod 13");
    o.expect(got == fc::oracle::brute_force_fixed_points(ex.action), id + " differs from brute force");
    ++compared;
  }
  o.expect(compared >= 5, "fewer than 5 brute-force comparisons");
  o.detail << rows << " cyclic subgroups on " << entries << " entries nonempty, brute force agrees on " << compared
           << " entries";
}

void invariance(const cat::Catalog& c, Outcome& o) {
  std::size_t pairs = 0;
  for (const auto& [id, e] : c.entries()) {
    const auto* g = std::get_if<cat::GroupPayload>(&e.payload);
    if (!g) continue;
    int bound = std::lcm(2, g->conductor);
    auto check = [&](const fc::groups::FiniteAbelianAction& act, const fc::groups::VarietyModel& v) {
      ++pairs;
      try {
        for (const fc::Cyclotomic& chi : fc::groups::check_invariance(act, v).characters()) {
          int ord = chi.root_of_unity_order();
          o.expect(ord > 0 && bound % ord == 0, id + " character " + chi.str());
        }
      } catch (const fc::Error& err) {
        o.expect(false, id + ": " + err.what());
      }
    };
    if (g->example.variety) check(g->example.action, *g->example.variety);
    for (const auto& sys : g->example.invariant_systems) check(sys.action ? *sys.action : g->example.action, sys.model);
  }
  o.detail << pairs << " variety/action pairs invariant";
}

void determinism(const cat::Catalog& c, Outcome& o) {
  std::string first = cat::machine_report(cat::run_all(c, {"*", false, 1}));
  std::string second = cat::machine_report(cat::run_all(c, {"*", false, 0}));
  o.expect(first == second, "machine reports differ between runs");
  std::string text = cat::serialize_text(c);
  cat::Catalog again = cat::parse_catalog(text);
  o.expect(cat::serialize_text(again) == text, "serialization is not a fixed point");
  o.expect(again.entries().size() == c.entries().size() && again.scenarios().size() == c.scenarios().size(),
           "entry or scenario count changed");
  o.expect(cat::machine_report(cat::run_all(again)) == first, "reloaded catalog reports differently");
  o.detail << first.size() << " report bytes identical, round trip lossless";
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<void(const cat::Catalog&, Outcome&)> run;
  };
  const std::vector<Criterion> criteria = {
      {"S-invariant reproductions", s_invariants},
      {"cube polynomial", cube_polynomial},
      {"flag estimates", flag_estimates},
      {"delta chains", delta_chains},
      {"closed forms", closed_forms},
      {"Zariski axioms", zariski_axioms},
      {"Condition (A) verdicts", condition_a},
      {"Lefschetz consistency", lefschetz},
      {"invariance", invariance},
      {"determinism and round trip", determinism},
  };

  cat::Catalog catalog;
  try {
    catalog = cat::load_catalog(FANOCALC_TEST_CATALOG);
  } catch (const std::exception& e) {
    std::cout << "cannot load catalog: " << e.what() << "\n";
    return 1;
  }

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      criteria[i].run(catalog, o);
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail << "[exception: " << e.what() << "]";
    }
    if (!o.ok) ++failures;
    std::cout << (o.ok ? "PASS" : "FAIL") << "  criterion " << (i + 1) << ": " << criteria[i].name << "  ("
              << o.detail.str() << ")" << std::endl;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size()
            << " acceptance criteria passed" << std::endl;
  return failures == 0 ? 0 : 1;
}
