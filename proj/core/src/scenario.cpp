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

#include "fanocalc/scenario.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <thread>

#include "fanocalc/errors.hpp"
#include "fanocalc/piecewise.hpp"
#include "fanocalc/poly2.hpp"

namespace fanocalc::catalog {
namespace {

struct Context {
  std::vector<std::string> certificate;
  bool undecided = false;
};

using OpFn = std::function<Json(const Catalog&, const Json&, Context&)>;

const Json& arg(const Json& args, const char* key) {
  if (!args.contains(key)) throw ValidationError(std::string("missing argument '") + key + "'");
  return args.at(key);
}

Rational rat(const Json& args, const char* key) { return rational_from_json(arg(args, key)); }
Poly1 poly(const Json& args, const char* key) { return poly_from_json(arg(args, key)); }

std::string str_arg(const Json& args, const char* key) {
  const Json& v = arg(args, key);
  if (!v.is_string()) throw ValidationError(std::string("argument '") + key + "' must be a string");
  return v.get<std::string>();
}

const surface::SurfaceLattice& lattice(const Catalog& cat, const Json& args) {
  return cat.payload<surface::SurfaceLattice>(str_arg(args, "lattice"));
}

surface::SurfClass surf_class(const surface::SurfaceLattice& lat, const Json& j) {
  if (j.is_string()) return lat.class_of(j.get<std::string>());
  std::vector<Rational> c;
  for (const Json& x : j) c.push_back(rational_from_json(x));
  if (c.size() != lat.rank()) throw DimensionMismatch("class has the wrong length for lattice '" + lat.name() + "'");
  return surface::SurfClass(c);
}

surface::SurfFamily surf_family(const Json& j) {
  surface::SurfFamily fam;
  for (const Json& p : arg(j, "coeffs")) fam.coeffs.push_back(poly_from_json(p));
  const Json& d = arg(j, "domain");
  fam.a = rational_from_json(d.at(0));
  fam.b = rational_from_json(d.at(1));
  return fam;
}

Json class_json(const surface::SurfClass& c) {
  Json out = Json::array();
  for (const Rational& q : c.coeffs) out.push_back(to_json(q));
  return out;
}

flags::Fiber fiber(const Json& args) {
  std::string f = str_arg(args, "fiber");
  if (f == "irreducible") return flags::Fiber::kIrreducible;
  if (f == "reducible") return flags::Fiber::kReducible;
  throw ValidationError("fiber must be 'irreducible' or 'reducible'");
}

const GroupPayload& example(const Catalog& cat, const Json& args) {
  return cat.payload<GroupPayload>(str_arg(args, "example"));
}

std::string characters_json(const groups::InvarianceReport& rep, int conductor, Json& out) {
  const int bound = std::lcm(2, conductor);
  std::vector<std::string> names;
  for (const Cyclotomic& c : rep.characters()) {
    int order = c.root_of_unity_order();
    if (order == 0 || bound % order != 0) {
      return "character " + c.str() + " is not a root of unity in the field of conductor " + std::to_string(conductor);
    }
    names.push_back(c.str());
  }
  std::sort(names.begin(), names.end());
  for (const std::string& n : names) out.push_back(n);
  return {};
}

const std::map<std::string, OpFn>& registry() {
  static const std::map<std::string, OpFn> ops = {
      {"integrate_poly",
       [](const Catalog&, const Json& a, Context&) { return to_json(integrate_poly(poly(a, "p"), rat(a, "a"), rat(a, "b"))); }},
      {"integrate_piecewise",
       [](const Catalog&, const Json& a, Context&) {
         std::vector<Rational> b;
         for (const Json& x : arg(a, "breakpoints")) b.push_back(rational_from_json(x));
         std::vector<Poly1> p;
         for (const Json& x : arg(a, "pieces")) p.push_back(poly_from_json(x));
         return to_json(integrate_piecewise(PiecewisePoly(b, p)));
       }},
      {"integrate_inner",
       [](const Catalog&, const Json& a, Context&) {
         std::vector<std::vector<Rational>> rows;
         for (const Json& r : arg(a, "F")) {
           std::vector<Rational> row;
           for (const Json& x : r) row.push_back(rational_from_json(x));
           rows.push_back(row);
         }
         return to_json(integrate_inner(Poly2(rows), poly(a, "lower"), poly(a, "upper")));
       }},
      {"rational_roots",
       [](const Catalog&, const Json& a, Context&) {
         Json out = Json::array();
         for (const Rational& r : rational_roots(poly(a, "p"))) out.push_back(to_json(r));
         return out;
       }},
      {"intersect",
       [](const Catalog& c, const Json& a, Context&) {
         const auto& lat = lattice(c, a);
         return to_json(surface::intersect(lat, surf_class(lat, arg(a, "c1")), surf_class(lat, arg(a, "c2"))));
       }},
      {"zariski",
       [](const Catalog& c, const Json& a, Context&) {
         const auto& lat = lattice(c, a);
         surface::ZariskiResult z = surface::zariski(lat, surf_class(lat, arg(a, "class")));
         Json out;
         out["positive"] = class_json(z.positive);
         Json neg = Json::object();
         for (const auto& [label, q] : z.negative) neg[label] = to_json(q);
         out["negative"] = neg;
         return out;
       }},
      {"volume",
       [](const Catalog& c, const Json& a, Context&) {
         const auto& lat = lattice(c, a);
         return to_json(surface::volume(lat, surf_class(lat, arg(a, "class"))));
       }},
      {"zariski_profile",
       [](const Catalog& c, const Json& a, Context&) {
         surface::ZariskiProfile prof = surface::zariski_profile(lattice(c, a), surf_family(arg(a, "family")));
         Json out = Json::array();
         for (const surface::ZariskiChamber& ch : prof.chambers) {
           Json cj;
           cj["interval"] = {to_json(ch.lo), to_json(ch.hi)};
           Json neg = Json::object();
           for (const auto& [label, p] : ch.negative) neg[label] = to_json(p);
           cj["negative"] = neg;
           out.push_back(cj);
         }
         return out;
       }},
      {"pseff_threshold",
       [](const Catalog& c, const Json& a, Context&) {
         return to_json(surface::pseff_threshold(lattice(c, a), surf_family(arg(a, "family"))));
       }},
      {"beta_curve",
       [](const Catalog& c, const Json& a, Context&) {
         const auto& lat = lattice(c, a);
         return to_json(surface::beta_curve(lat, surf_class(lat, arg(a, "curve"))));
       }},
      {"double_integral_volume",
       [](const Catalog& c, const Json& a, Context&) {
         const auto& lat = lattice(c, a);
         surface::ZariskiProfile prof = surface::zariski_profile(lat, surf_family(arg(a, "family")));
         return to_json(surface::double_integral_volume(lat, prof, surf_class(lat, arg(a, "F"))));
       }},
      {"anticanonical_volume",
       [](const Catalog& c, const Json& a, Context&) {
         return to_json(threefold::anticanonical_volume(c.payload<ModelPayload>(str_arg(a, "model")).model));
       }},
      {"cube",
       [](const Catalog& c, const Json& a, Context&) {
         const threefold::ThreefoldModel& m = c.payload<ModelPayload>(str_arg(a, "model")).model;
         std::vector<Poly1> fam;
         if (a.contains("divisor")) {
           // -K - uY
           std::vector<Rational> y(m.rank(), Rational(0));
           const Json& d = a.at("divisor");
           if (d.is_string()) {
             y[m.index_of(d.get<std::string>())] = 1;
           } else {
             for (std::size_t i = 0; i < m.rank(); ++i) y[i] = rational_from_json(d.at(i));
           }
           for (std::size_t i = 0; i < m.rank(); ++i) fam.push_back(Poly1({m.anticanonical()[i], Rational(-y[i])}));
         } else {
           for (const Json& p : arg(a, "class")) fam.push_back(poly_from_json(p));
         }
         return to_json(threefold::cube(m, fam));
       }},
      {"s_invariant",
       [](const Catalog& c, const Json& a, Context&) {
         const FamilyPayload& f = c.payload<FamilyPayload>(str_arg(a, "family"));
         return to_json(threefold::s_invariant(c.payload<ModelPayload>(f.model).model, f.spec));
       }},
      {"validate_chambers",
       [](const Catalog& c, const Json& a, Context&) {
         const FamilyPayload& f = c.payload<FamilyPayload>(str_arg(a, "family"));
         Json out = Json::array();
         for (const auto& d : threefold::validate_chambers(c.payload<ModelPayload>(f.model).model, f.spec))
           out.push_back(threefold::kind_name(d.kind));
         return out;
       }},
      {"s_w_flag",
       [](const Catalog& c, const Json& a, Context&) {
         const FlagPayload& f = c.payload<FlagPayload>(str_arg(a, "flag"));
         return to_json(flags::s_w_flag(c.payload<ModelPayload>(f.model).model, restriction_data(c, f), f.flag));
       }},
      {"delta_point_bound",
       [](const Catalog&, const Json& a, Context& ctx) {
         std::vector<std::pair<Rational, Rational>> cands;
         for (const Json& p : arg(a, "candidates")) cands.emplace_back(rational_from_json(p.at(0)), rational_from_json(p.at(1)));
         flags::DeltaBound b = flags::delta_point_bound(rat(a, "s_of_s"), cands);
         if (b.warning) ctx.certificate.push_back("warning: " + *b.warning);
         return to_json(b.value);
       }},
      {"delta_dp4",
       [](const Catalog&, const Json& a, Context&) { return to_json(flags::delta_dp4(rat(a, "u"), fiber(a))); }},
      {"head_weight",
       [](const Catalog&, const Json& a, Context&) {
         const Json& iv = arg(a, "interval");
         return to_json(flags::head_weight(fiber(a), poly(a, "volume"), rat(a, "normalization"),
                                           rational_from_json(iv.at(0)), rational_from_json(iv.at(1))));
       }},
      {"tail_bound_weight",
       [](const Catalog&, const Json& a, Context&) { return to_json(flags::tail_bound_weight(rat(a, "delta_floor"))); }},
      {"fibration_delta_bound",
       [](const Catalog&, const Json& a, Context&) { return to_json(flags::fibration_delta_bound(rat(a, "delta_s"))); }},
      {"head_plus_tail",
       [](const Catalog&, const Json& a, Context&) { return to_json(flags::head_plus_tail(rat(a, "head"), rat(a, "tail"))); }},
      {"check_invariance",
       [](const Catalog& c, const Json& a, Context& ctx) {
         const GroupPayload& g = example(c, a);
         const groups::FiniteAbelianAction* act = &g.example.action;
         const groups::VarietyModel* model = nullptr;
         std::string label = "verification variety";
         if (a.contains("system")) {
           label = str_arg(a, "system");
           for (const groups::InvariantSystem& s : g.example.invariant_systems)
             if (s.label == label) {
               model = &s.model;
               if (s.action) act = &*s.action;
             }
           if (!model) throw ValidationError("no invariant system '" + label + "'");
         } else {
           if (!g.example.variety) throw ValidationError("entry has no verification space");
           model = &*g.example.variety;
         }
         groups::InvarianceReport rep = groups::check_invariance(*act, *model);
         for (const groups::InvarianceRow& r : rep.rows)
           ctx.certificate.push_back(label + ": generator " + std::to_string(r.generator + 1) + " sends equation " +
                                     std::to_string(r.equation + 1) + " to " + r.scalar.str() + " times equation " +
                                     std::to_string(r.image + 1));
         Json out = Json::array();
         std::string bad = characters_json(rep, g.conductor, out);
         if (!bad.empty()) throw NotInvariant(bad);
         return out;
       }},
      {"fixed_locus",
       [](const Catalog& c, const Json& a, Context& ctx) {
         const GroupPayload& g = example(c, a);
         groups::FixedLocus loc = groups::fixed_locus(g.example.action);
         for (const groups::LinearPiece& p : loc.pieces) ctx.certificate.push_back(p.str(g.example.action.space, g.variables));
         return Json(loc.summary());
       }},
      {"condition_a",
       [](const Catalog& c, const Json& a, Context& ctx) {
         groups::Certificate cert = groups::condition_a_verdict(example(c, a).example);
         ctx.certificate.insert(ctx.certificate.end(), cert.chain.begin(), cert.chain.end());
         if (cert.verdict.kind == groups::Verdict::Kind::kUndecided) ctx.undecided = true;
         return Json(groups::kind_name(cert.verdict.kind));
       }},
      {"cyclic_sanity",
       [](const Catalog& c, const Json& a, Context& ctx) {
         const GroupPayload& g = example(c, a);
         if (!g.example.variety) throw ValidationError("entry has no verification space");
         if (!g.example.rationally_connected) throw ValidationError("entry is not flagged rationally connected");
         std::vector<groups::SanityRow> rows = groups::cyclic_sanity(g.example.action, *g.example.variety);
         std::size_t undecided = 0;
         for (const groups::SanityRow& r : rows)
           if (r.verdict.kind == groups::Verdict::Kind::kUndecided) ++undecided;
         ctx.certificate.push_back("cyclic subgroups checked: " + std::to_string(rows.size()) + ", undecided: " +
                                   std::to_string(undecided));
         return Json("no element without fixed points");
       }},
      {"linearization_exists",
       [](const Catalog&, const Json& a, Context&) {
         return Json(groups::linearization_exists(arg(a, "n").get<int>(), arg(a, "d").get<int>()));
       }},
  };
  return ops;
}

Json resolve(const Json& j, const std::map<std::string, Json>& bindings) {
  if (j.is_string()) {
    const std::string& s = j.get_ref<const std::string&>();
    if (!s.empty() && s[0] == '$') {
      auto it = bindings.find(s.substr(1));
      if (it == bindings.end()) throw ValidationError("unbound reference " + s);
      return it->second;
    }
    return j;
  }
  if (j.is_array() || j.is_object()) {
    Json out = j;
    for (auto it = out.begin(); it != out.end(); ++it) *it = resolve(*it, bindings);
    return out;
  }
  return j;
}

bool fraction_in_text(const std::string& text, const Rational& q) {
  Rational a = q < 0 ? Rational(-q) : q;
  std::string num = a.get_num().get_str(), den = a.get_den().get_str();
  if (den == "1") return true;
  return text.find("\\frac{" + num + "}{" + den + "}") != std::string::npos ||
         text.find(num + "/" + den) != std::string::npos;
}

void collect_fractions(const Json& j, std::vector<Rational>& out) {
  if (j.is_string()) {
    try {
      out.push_back(parse_rational(j.get<std::string>()));
    } catch (const ParseError&) {
    }
  } else if (j.is_array() || j.is_object()) {
    for (const Json& x : j) collect_fractions(x, out);
  }
}

}  // namespace

std::string status_name(Status s) {
  switch (s) {
    case Status::kPass:
      return "pass";
    case Status::kFail:
      return "fail";
    case Status::kUndecided:
      return "undecided";
  }
  return "fail";
}

std::vector<std::string> known_ops() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : registry()) out.push_back(name);
  return out;
}

bool is_known_op(const std::string& op) { return registry().count(op) > 0; }

bool is_entry_argument(const std::string& key) {
  return key == "lattice" || key == "model" || key == "flag" || key == "example" ||
         key == "family";
}

bool is_partial(const Catalog& cat, const Scenario& s) {
  for (const Step& st : s.steps) {
    if (!st.args.contains("example")) continue;
    const GroupPayload& g = cat.payload<GroupPayload>(st.args.at("example").get<std::string>());
    if (g.example.partial || !g.example.variety) return true;
  }
  return false;
}

VerdictReport run_scenario(const Catalog& cat, const std::string& id) {
  const Scenario& s = cat.scenario(id);
  VerdictReport rep;
  rep.id = s.id;
  std::map<std::string, Json> bindings;
  for (const Step& st : s.steps) {
    StepOutcome out{st.op, Status::kPass, Json(), st.expected, st.provenance};
    Context ctx;
    bool errored = false;
    try {
      out.computed = registry().at(st.op)(cat, resolve(st.args, bindings), ctx);
    } catch (const std::exception& e) {
      out.computed = std::string("error: ") + e.what();
      errored = true;
    }
    rep.certificate.insert(rep.certificate.end(), ctx.certificate.begin(), ctx.certificate.end());
    if (errored || out.computed != st.expected) {
      out.status = Status::kFail;
    } else if (ctx.undecided) {
      out.status = Status::kUndecided;
    }
    if (!st.bind.empty()) bindings[st.bind] = out.computed;
    rep.steps.push_back(out);
    if (errored) break;
  }
  const StepOutcome* headline = &rep.steps.back();
  for (const StepOutcome& o : rep.steps)
    if (o.status == Status::kFail) {
      headline = &o;
      break;
    }
  if (headline->status != Status::kFail) {
    for (const StepOutcome& o : rep.steps)
      if (o.status == Status::kUndecided) {
        headline = &o;
        break;
      }
  }
  rep.status = headline->status;
  rep.computed = headline->computed;
  rep.expected = headline->expected;
  rep.provenance = headline->provenance;
  return rep;
}

RunResult run_all(const Catalog& cat, const RunOptions& opts) {
  std::vector<const Scenario*> todo;
  for (const Scenario& s : cat.scenarios()) {
    if (!glob_match(opts.filter, s.id)) continue;
    if (opts.exclude_partial && is_partial(cat, s)) continue;
    todo.push_back(&s);
  }
  RunResult res;
  res.reports.resize(todo.size());
  unsigned threads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, todo.size()));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < todo.size(); i = next++) res.reports[i] = run_scenario(cat, todo[i]->id);
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  for (const VerdictReport& r : res.reports) {
    if (r.status == Status::kPass) ++res.summary.pass;
    if (r.status == Status::kFail) ++res.summary.fail;
    if (r.status == Status::kUndecided) ++res.summary.undecided;
  }
  return res;
}

std::vector<std::string> lint(const Catalog& cat, const std::optional<std::string>& reference_text) {
  std::vector<std::string> issues;
  for (const auto& [id, e] : cat.entries())
    if (e.provenance.empty()) issues.push_back("entry '" + id + "': missing provenance");
  for (const Scenario& s : cat.scenarios()) {
    for (std::size_t k = 0; k < s.steps.size(); ++k) {
      const Step& st = s.steps[k];
      std::string where = "scenario '" + s.id + "' step " + std::to_string(k + 1);
      const std::string& tag = st.provenance.tag;
      if (tag == "paper" && st.provenance.anchor.empty()) issues.push_back(where + ": paper tag without anchor");
      if (tag.rfind("derived:", 0) == 0 && tag.size() <= 8) issues.push_back(where + ": derived tag without oracle");
      std::vector<Rational> fracs;
      collect_fractions(st.expected, fracs);
      std::vector<std::string> raw;
      std::function<void(const Json&)> strings = [&](const Json& j) {
        if (j.is_string()) raw.push_back(j.get<std::string>());
        if (j.is_array() || j.is_object())
          for (const Json& x : j) strings(x);
      };
      strings(st.expected);
      for (const std::string& r : raw) {
        try {
          if (to_string(parse_rational(r)) != r) issues.push_back(where + ": fraction '" + r + "' is not in lowest terms");
        } catch (const ParseError&) {
        }
      }
      if (!reference_text || tag != "paper") continue;
      if (reference_text->find(st.provenance.anchor) == std::string::npos) {
        issues.push_back(where + ": anchor not found verbatim: " + st.provenance.anchor);
      }
      if (st.expected.is_string())
        for (const Rational& q : fracs)
          if (!fraction_in_text(*reference_text, q)) issues.push_back(where + ": " + to_string(q) + " does not occur in the reference text");
    }
  }
  return issues;
}

}  // namespace fanocalc::catalog
