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

#include "fanocalc/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "fanocalc/errors.hpp"
#include "fanocalc/scenario.hpp"

namespace fanocalc::catalog {
namespace {

using catalog::to_json;

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ValidationError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string string_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) throw ValidationError(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

std::string optional_string(const Json& j, const char* key) {
  return j.contains(key) && j.at(key).is_string() ? j.at(key).get<std::string>() : std::string();
}

std::vector<Rational> rationals_from_json(const Json& j) {
  if (!j.is_array()) throw ValidationError("expected an array of fractions");
  std::vector<Rational> out;
  for (const Json& x : j) out.push_back(rational_from_json(x));
  return out;
}

Json to_json(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const Rational& q : v) out.push_back(to_json(q));
  return out;
}

std::vector<Poly1> polys_from_json(const Json& j) {
  if (!j.is_array()) throw ValidationError("expected an array of polynomials");
  std::vector<Poly1> out;
  for (const Json& x : j) out.push_back(poly_from_json(x));
  return out;
}

Json to_json(const std::vector<Poly1>& v) {
  Json out = Json::array();
  for (const Poly1& p : v) out.push_back(to_json(p));
  return out;
}

std::vector<int> ints_from_json(const Json& j) {
  if (!j.is_array()) throw ValidationError("expected an array of integers");
  std::vector<int> out;
  for (const Json& x : j) {
    if (!x.is_number_integer()) throw ValidationError("expected an integer");
    out.push_back(x.get<int>());
  }
  return out;
}

std::pair<Rational, Rational> interval_from_json(const Json& j) {
  std::vector<Rational> v = rationals_from_json(j);
  if (v.size() != 2) throw ValidationError("interval must have two endpoints");
  return {v[0], v[1]};
}

// Class given as coordinates or as a label known to the lattice.
surface::SurfClass class_from_json(const Json& j, const surface::SurfaceLattice* lat) {
  if (j.is_string()) {
    if (!lat) throw ValidationError("class label '" + j.get<std::string>() + "' needs a lattice");
    return lat->class_of(j.get<std::string>());
  }
  return surface::SurfClass(rationals_from_json(j));
}

// ---- surface lattices -------------------------------------------------------

surface::SurfaceLattice lattice_from_json(const std::string& id, const Json& j) {
  std::vector<std::string> basis = field(j, "basis").get<std::vector<std::string>>();
  std::vector<std::vector<Rational>> rows;
  for (const Json& r : field(j, "gram")) rows.push_back(rationals_from_json(r));
  std::vector<surface::NegCurve> curves;
  if (j.contains("negcurves")) {
    for (const Json& c : j.at("negcurves")) {
      std::optional<int> genus;
      if (c.contains("genus")) genus = c.at("genus").get<int>();
      curves.push_back({string_field(c, "label"), surface::SurfClass(rationals_from_json(field(c, "class"))), genus});
    }
  }
  return surface::SurfaceLattice(id, basis, Matrix<Rational>::from_rows(rows),
                                 surface::SurfClass(rationals_from_json(field(j, "canonical"))), curves,
                                 surface::SurfClass(rationals_from_json(field(j, "ample"))));
}

void lattice_to_json(const surface::SurfaceLattice& lat, Json& j) {
  j["basis"] = lat.basis();
  Json gram = Json::array();
  for (std::size_t r = 0; r < lat.rank(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < lat.rank(); ++c) row.push_back(to_json(lat.gram()(r, c)));
    gram.push_back(row);
  }
  j["gram"] = gram;
  j["canonical"] = to_json(lat.canonical().coeffs);
  j["ample"] = to_json(lat.ample().coeffs);
  Json curves = Json::array();
  for (const surface::NegCurve& c : lat.negcurves()) {
    Json cj;
    cj["label"] = c.label;
    cj["class"] = to_json(c.cls.coeffs);
    if (c.genus) cj["genus"] = *c.genus;
    curves.push_back(cj);
  }
  j["negcurves"] = curves;
}

// ---- threefold models -------------------------------------------------------

ModelPayload model_from_json(const std::string& id, const Json& j) {
  std::vector<std::string> basis = field(j, "basis").get<std::vector<std::string>>();
  auto index_of = [&](const std::string& label) {
    auto it = std::find(basis.begin(), basis.end(), label);
    if (it == basis.end()) throw ValidationError("unknown basis label '" + label + "'");
    return static_cast<std::size_t>(it - basis.begin());
  };
  std::vector<threefold::TripleEntry> entries;
  for (const Json& t : field(j, "triples")) {
    const Json& idx = field(t, "index");
    if (!idx.is_array() || idx.size() != 3) throw ValidationError("triple index must have three labels");
    std::array<std::size_t, 3> ix{};
    for (std::size_t k = 0; k < 3; ++k) ix[k] = idx[k].is_string() ? index_of(idx[k]) : idx[k].get<std::size_t>();
    entries.push_back({ix, rational_from_json(field(t, "value"))});
  }
  ModelPayload out{threefold::ThreefoldModel(id, basis, entries, rationals_from_json(field(j, "anticanonical"))),
                   std::nullopt};
  if (j.contains("blowup")) {
    const Json& b = j.at("blowup");
    BlowupParams p{rational_from_json(field(b, "degree")), rational_from_json(field(b, "index")),
                   rational_from_json(field(b, "curve_degree")), field(b, "curve_genus").get<int>()};
    threefold::ThreefoldModel ref =
        threefold::blowup_curve_model(id, p.degree, p.index, p.curve_degree, p.curve_genus);
    if (ref.basis() != basis) throw ValidationError("blowup cross-check needs basis (H, E)");
    for (std::size_t a = 0; a < 2; ++a)
      for (std::size_t b2 = a; b2 < 2; ++b2)
        for (std::size_t c = b2; c < 2; ++c)
          if (ref.tri(a, b2, c) != out.model.tri(a, b2, c)) {
            throw ValidationError("triple " + basis[a] + "." + basis[b2] + "." + basis[c] + " is " +
                                  to_string(out.model.tri(a, b2, c)) + " but the blowup rules give " +
                                  to_string(ref.tri(a, b2, c)));
          }
    if (ref.anticanonical() != out.model.anticanonical()) {
      throw ValidationError("anticanonical class disagrees with the blowup rules");
    }
    out.blowup = p;
  }
  return out;
}

void model_to_json(const ModelPayload& m, Json& j) {
  const std::vector<std::string>& basis = m.model.basis();
  j["basis"] = basis;
  Json triples = Json::array();
  for (const threefold::TripleEntry& t : m.model.entries()) {
    Json tj;
    tj["index"] = {basis[t.index[0]], basis[t.index[1]], basis[t.index[2]]};
    tj["value"] = to_json(t.value);
    triples.push_back(tj);
  }
  j["triples"] = triples;
  j["anticanonical"] = to_json(m.model.anticanonical());
  if (m.blowup) {
    Json b;
    b["degree"] = to_json(m.blowup->degree);
    b["index"] = to_json(m.blowup->index);
    b["curve_degree"] = to_json(m.blowup->curve_degree);
    b["curve_genus"] = m.blowup->curve_genus;
    j["blowup"] = b;
  }
}

// ---- divisor families -------------------------------------------------------

FamilyPayload family_from_json(const std::string& id, const Json& j, const Catalog& cat) {
  FamilyPayload f;
  f.model = string_field(j, "model");
  const ModelPayload& m = cat.payload<ModelPayload>(f.model);
  f.spec.name = id;
  const Json& div = field(j, "divisor");
  if (div.is_string()) {
    f.spec.divisor.assign(m.model.rank(), Rational(0));
    f.spec.divisor[m.model.index_of(div.get<std::string>())] = 1;
  } else {
    f.spec.divisor = rationals_from_json(div);
  }
  f.spec.tau = rational_from_json(field(j, "tau"));
  for (const Json& c : field(j, "chambers")) {
    threefold::ChamberSpec ch;
    std::tie(ch.lo, ch.hi) = interval_from_json(field(c, "interval"));
    ch.positive = polys_from_json(field(c, "positive"));
    if (c.contains("negative"))
      for (const Json& n : c.at("negative")) ch.negative.emplace_back(string_field(n, "label"), poly_from_json(field(n, "coeff")));
    f.spec.chambers.push_back(std::move(ch));
  }
  std::vector<threefold::Diagnostic> diags = threefold::validate_chambers(m.model, f.spec);
  if (!diags.empty()) {
    std::string msg = "chamber data invalid:";
    for (const threefold::Diagnostic& d : diags) msg += " [" + threefold::kind_name(d.kind) + " at " + to_string(d.at) + ": " + d.message + "]";
    throw ValidationError(msg);
  }
  return f;
}

void family_to_json(const FamilyPayload& f, Json& j) {
  j["model"] = f.model;
  j["divisor"] = to_json(f.spec.divisor);
  j["tau"] = to_json(f.spec.tau);
  Json chambers = Json::array();
  for (const threefold::ChamberSpec& c : f.spec.chambers) {
    Json cj;
    cj["interval"] = {to_json(c.lo), to_json(c.hi)};
    cj["positive"] = to_json(c.positive);
    Json neg = Json::array();
    for (const auto& [label, p] : c.negative) {
      Json nj;
      nj["label"] = label;
      nj["coeff"] = to_json(p);
      neg.push_back(nj);
    }
    cj["negative"] = neg;
    chambers.push_back(cj);
  }
  j["chambers"] = chambers;
}

// ---- flag scenarios ---------------------------------------------------------

surface::SurfFamily surf_family_from_json(const Json& j) {
  surface::SurfFamily fam;
  fam.coeffs = polys_from_json(field(j, "coeffs"));
  std::tie(fam.a, fam.b) = interval_from_json(field(j, "domain"));
  if (fam.b < fam.a) throw ValidationError("family domain is reversed");
  return fam;
}

Json surf_family_to_json(const surface::SurfFamily& fam) {
  Json j;
  j["coeffs"] = to_json(fam.coeffs);
  j["domain"] = {to_json(fam.a), to_json(fam.b)};
  return j;
}

FlagPayload flag_from_json(const Json& j, const Catalog& cat) {
  FlagPayload f;
  f.model = string_field(j, "model");
  f.lattice = string_field(j, "lattice");
  cat.payload<ModelPayload>(f.model);
  const surface::SurfaceLattice& lat = cat.payload<surface::SurfaceLattice>(f.lattice);
  f.restricted = surf_family_from_json(field(j, "restricted"));
  if (f.restricted.coeffs.size() != lat.rank()) throw ValidationError("restricted family has wrong length");
  f.s_invariant_of_s = rational_from_json(field(j, "s_invariant_of_s"));
  const Json& fl = field(j, "flag");
  f.flag.name = string_field(fl, "name");
  f.flag.log_discrepancy = rational_from_json(field(fl, "log_discrepancy"));
  f.flag.flag_class = class_from_json(field(fl, "class"), &lat);
  if (fl.contains("ord_profile"))
    for (const Json& p : fl.at("ord_profile")) {
      flags::OrdPiece piece;
      std::tie(piece.lo, piece.hi) = interval_from_json(field(p, "interval"));
      piece.ord = poly_from_json(field(p, "ord"));
      f.flag.ord_profile.push_back(piece);
    }
  flags::validate_flag(f.flag);
  return f;
}

void flag_to_json(const FlagPayload& f, Json& j) {
  j["model"] = f.model;
  j["lattice"] = f.lattice;
  j["restricted"] = surf_family_to_json(f.restricted);
  j["s_invariant_of_s"] = to_json(f.s_invariant_of_s);
  Json fl;
  fl["name"] = f.flag.name;
  fl["log_discrepancy"] = to_json(f.flag.log_discrepancy);
  fl["class"] = to_json(f.flag.flag_class.coeffs);
  Json ord = Json::array();
  for (const flags::OrdPiece& p : f.flag.ord_profile) {
    Json pj;
    pj["interval"] = {to_json(p.lo), to_json(p.hi)};
    pj["ord"] = to_json(p.ord);
    ord.push_back(pj);
  }
  fl["ord_profile"] = ord;
  j["flag"] = fl;
}

// ---- group examples ---------------------------------------------------------

groups::GroupElement generator_from_json(const Json& j, const groups::MultiProjectiveSpace& space,
                                         const std::vector<std::string>& names) {
  if (j.is_string()) return groups::parse_generator(j.get<std::string>(), space, names);
  groups::GroupElement g;
  g.source = ints_from_json(field(j, "source"));
  for (const Json& f : field(j, "factors")) {
    groups::MonomialMatrix m;
    m.perm = ints_from_json(field(f, "perm"));
    for (const Json& d : field(f, "diag")) m.diag.push_back(scalar_from_json(d));
    g.maps.push_back(std::move(m));
  }
  g.validate(space);
  return g;
}

Json generator_to_json(const groups::GroupElement& g) {
  Json j;
  j["source"] = g.source;
  Json factors = Json::array();
  for (const groups::MonomialMatrix& m : g.maps) {
    Json f;
    f["perm"] = m.perm;
    Json diag = Json::array();
    for (const Cyclotomic& c : m.diag) diag.push_back(to_json(c));
    f["diag"] = diag;
    factors.push_back(f);
  }
  j["factors"] = factors;
  return j;
}

void check_conductor(const Cyclotomic& c, int conductor, const std::string& where) {
  if (conductor % c.conductor() != 0) {
    throw ValidationError(where + " uses a scalar of conductor " + std::to_string(c.conductor()) +
                          " outside the declared conductor " + std::to_string(conductor));
  }
}

struct SpaceBlock {
  groups::MultiProjectiveSpace space;
  std::vector<std::string> names;
};

groups::VarietyModel variety_from_json(const Json& j, const SpaceBlock& sb, int conductor) {
  groups::VarietyModel v{sb.space, sb.names, {}, {}};
  for (const Json& e : field(j, "equations")) {
    if (!e.is_string()) throw ValidationError("equations must be strings");
    v.equations.push_back(groups::parse_mpoly(e.get<std::string>(), sb.names));
    for (const auto& [exp, c] : v.equations.back().terms()) check_conductor(c, conductor, "equation");
  }
  if (j.contains("weights"))
    for (const Json& w : j.at("weights")) v.weights.push_back(ints_from_json(w));
  v.validate();
  return v;
}

Json variety_to_json(const groups::VarietyModel& v) {
  Json j;
  Json eqs = Json::array();
  for (const groups::MPoly& f : v.equations) eqs.push_back(f.str(v.variables));
  j["equations"] = eqs;
  if (!v.weights.empty()) j["weights"] = v.weights;
  return j;
}

// Weighted systems live on a toric bundle where generators commute only modulo the torus, so the
// product-space group check is skipped for them.
groups::FiniteAbelianAction action_from_json(const Json& j, const SpaceBlock& sb, int conductor,
                                             bool check_group = true) {
  groups::FiniteAbelianAction act{sb.space, {}, ints_from_json(field(j, "structure"))};
  for (const Json& g : field(j, "generators")) {
    act.generators.push_back(generator_from_json(g, sb.space, sb.names));
    for (const groups::MonomialMatrix& m : act.generators.back().maps)
      for (const Cyclotomic& c : m.diag) check_conductor(c, conductor, "generator");
  }
  if (check_group) groups::validate_action(act);
  return act;
}

SpaceBlock space_from_json(const Json& j) {
  SpaceBlock sb;
  sb.space.dims = ints_from_json(field(j, "space"));
  sb.space.validate();
  if (j.contains("variables")) {
    sb.names = field(j, "variables").get<std::vector<std::string>>();
    if (sb.names.size() != sb.space.total_coords()) throw ValidationError("variable list does not match the space");
  } else {
    sb.names = groups::default_variable_names(sb.space);
  }
  return sb;
}

void action_to_json(const groups::FiniteAbelianAction& act, const std::vector<std::string>& names, Json& j) {
  j["space"] = act.space.dims;
  j["variables"] = names;
  Json gens = Json::array();
  for (const groups::GroupElement& g : act.generators) gens.push_back(generator_to_json(g));
  j["generators"] = gens;
  j["structure"] = act.claimed_structure;
}

GroupPayload group_from_json(const Json& j) {
  GroupPayload g;
  g.conductor = field(j, "conductor").get<int>();
  if (!Cyclotomic::supported_conductor(g.conductor)) {
    throw ValidationError("unsupported conductor " + std::to_string(g.conductor));
  }
  SpaceBlock sb = space_from_json(j);
  g.variables = sb.names;
  g.example.action = action_from_json(j, sb, g.conductor);
  if (j.contains("variety") && !j.at("variety").is_null()) g.example.variety = variety_from_json(j.at("variety"), sb, g.conductor);
  if (j.contains("invariant_systems")) {
    for (const Json& s : j.at("invariant_systems")) {
      groups::InvariantSystem sys;
      sys.label = string_field(s, "label");
      if (s.contains("space")) {
        SpaceBlock own = space_from_json(s);
        sys.action = action_from_json(s, own, g.conductor, !s.contains("weights"));
        sys.model = variety_from_json(s, own, g.conductor);
      } else {
        sys.model = variety_from_json(s, sb, g.conductor);
      }
      g.example.invariant_systems.push_back(std::move(sys));
    }
  }
  g.example.propagation = optional_string(j, "propagation");
  g.example.partial = j.value("partial", false);
  g.example.partial_note = optional_string(j, "partial_note");
  g.example.rationally_connected = j.value("rationally_connected", false);
  return g;
}

void group_to_json(const GroupPayload& g, Json& j) {
  j["conductor"] = g.conductor;
  action_to_json(g.example.action, g.variables, j);
  j["variety"] = g.example.variety ? variety_to_json(*g.example.variety) : Json(nullptr);
  Json systems = Json::array();
  for (const groups::InvariantSystem& s : g.example.invariant_systems) {
    Json sj;
    sj["label"] = s.label;
    if (s.action) action_to_json(*s.action, s.model.variables, sj);
    Json v = variety_to_json(s.model);
    for (auto& [k, val] : v.items()) sj[k] = val;
    systems.push_back(sj);
  }
  j["invariant_systems"] = systems;
  j["propagation"] = g.example.propagation;
  j["partial"] = g.example.partial;
  if (!g.example.partial_note.empty()) j["partial_note"] = g.example.partial_note;
  j["rationally_connected"] = g.example.rationally_connected;
}

// ---- scenarios --------------------------------------------------------------

Scenario scenario_from_json(const Json& j, const Catalog& cat) {
  Scenario s;
  s.id = string_field(j, "id");
  s.description = optional_string(j, "description");
  std::set<std::string> bound;
  for (const Json& sj : field(j, "steps")) {
    Step st;
    st.op = string_field(sj, "op");
    if (!is_known_op(st.op)) throw ValidationError("scenario '" + s.id + "': unknown operation '" + st.op + "'");
    st.args = sj.contains("args") ? sj.at("args") : Json::object();
    if (!st.args.is_object()) throw ValidationError("scenario '" + s.id + "': args must be an object");
    for (const auto& [key, val] : st.args.items()) {
      if (!val.is_string()) continue;
      std::string v = val.get<std::string>();
      if (!v.empty() && v[0] == '$') {
        if (!bound.count(v.substr(1))) throw ValidationError("scenario '" + s.id + "': unbound reference " + v);
      } else if (is_entry_argument(key) && !cat.has_entry(v)) {
        throw ValidationError("scenario '" + s.id + "': unknown entry '" + v + "'");
      }
    }
    if (!sj.contains("expected")) throw ValidationError("scenario '" + s.id + "': step without expected value");
    st.expected = sj.at("expected");
    const Json& prov = field(sj, "provenance");
    st.provenance = {string_field(prov, "tag"), optional_string(prov, "anchor")};
    const std::string& tag = st.provenance.tag;
    if (tag != "paper" && tag != "trivial" && !(tag.rfind("derived:", 0) == 0 && tag.size() > 8)) {
      throw ValidationError("scenario '" + s.id + "': provenance tag '" + tag + "' is not paper, trivial or derived:<oracle>");
    }
    st.bind = optional_string(sj, "bind");
    if (!st.bind.empty()) bound.insert(st.bind);
    s.steps.push_back(std::move(st));
  }
  if (s.steps.empty()) throw ValidationError("scenario '" + s.id + "' has no steps");
  return s;
}

Json scenario_to_json(const Scenario& s) {
  Json j;
  j["id"] = s.id;
  if (!s.description.empty()) j["description"] = s.description;
  Json steps = Json::array();
  for (const Step& st : s.steps) {
    Json sj;
    sj["op"] = st.op;
    sj["args"] = st.args;
    sj["expected"] = st.expected;
    Json prov;
    prov["tag"] = st.provenance.tag;
    if (!st.provenance.anchor.empty()) prov["anchor"] = st.provenance.anchor;
    sj["provenance"] = prov;
    if (!st.bind.empty()) sj["bind"] = st.bind;
    steps.push_back(sj);
  }
  j["steps"] = steps;
  return j;
}

int kind_order(Kind k) { return static_cast<int>(k); }

}  // namespace

std::string kind_name(Kind k) {
  switch (k) {
    case Kind::kSurfaceLattice:
      return "surface-lattice";
    case Kind::kThreefoldModel:
      return "threefold-model";
    case Kind::kDivisorFamily:
      return "divisor-family";
    case Kind::kFlagScenario:
      return "flag-scenario";
    case Kind::kGroupExample:
      return "group-example";
  }
  return "unknown";
}

Kind parse_kind(const std::string& s) {
  for (Kind k : {Kind::kSurfaceLattice, Kind::kThreefoldModel, Kind::kDivisorFamily, Kind::kFlagScenario,
                 Kind::kGroupExample})
    if (kind_name(k) == s) return k;
  throw ValidationError("unknown entry kind '" + s + "'");
}

const Entry& Catalog::entry(const std::string& id) const {
  auto it = entries_.find(id);
  if (it == entries_.end()) throw ValidationError("unknown entry '" + id + "'");
  return it->second;
}

const Scenario& Catalog::scenario(const std::string& id) const {
  auto it = std::lower_bound(scenarios_.begin(), scenarios_.end(), id,
                             [](const Scenario& s, const std::string& k) { return s.id < k; });
  if (it == scenarios_.end() || it->id != id) throw ValidationError("unknown scenario '" + id + "'");
  return *it;
}

void Catalog::add_entry(Entry e) {
  if (entries_.count(e.id)) throw ValidationError("duplicate entry id '" + e.id + "'");
  std::string id = e.id;
  entries_.emplace(id, std::move(e));
}

void Catalog::add_scenario(Scenario s) {
  auto it = std::lower_bound(scenarios_.begin(), scenarios_.end(), s.id,
                             [](const Scenario& a, const std::string& k) { return a.id < k; });
  if (it != scenarios_.end() && it->id == s.id) throw ValidationError("duplicate scenario id '" + s.id + "'");
  scenarios_.insert(it, std::move(s));
}

Catalog parse_catalog(const std::string& text) {
  Json root;
  try {
    root = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("catalog is not valid JSON: ") + e.what(), static_cast<long>(e.byte));
  }
  if (!root.is_object()) throw ParseError("catalog root must be an object", 0);
  if (!root.contains("schema_version") || root.at("schema_version") != kSchemaVersion) {
    throw ValidationError("unsupported catalog schema_version (expected " + std::to_string(kSchemaVersion) + ")");
  }
  Catalog cat;
  std::vector<const Json*> raw;
  const Json no_entries = Json::array();
  const Json& entry_list = root.contains("entries") ? root.at("entries") : no_entries;
  if (!entry_list.is_array()) throw ValidationError("catalog 'entries' must be an array");
  for (const Json& e : entry_list) raw.push_back(&e);
  // Entries may refer to entries of earlier kinds only.
  std::stable_sort(raw.begin(), raw.end(), [](const Json* a, const Json* b) {
    auto rank = [](const Json* j) {
      try {
        return kind_order(parse_kind(j->value("kind", "")));
      } catch (const Error&) {
        return -1;
      }
    };
    return rank(a) < rank(b);
  });
  for (const Json* ej : raw) {
    std::string id = ej->is_object() ? ej->value("id", "") : "";
    try {
      if (id.empty()) throw ValidationError("entry without id");
      Kind kind = parse_kind(string_field(*ej, "kind"));
      Entry e{id, kind, optional_string(*ej, "provenance"), optional_string(*ej, "note"), Payload{}};
      const Json& p = *ej;
      switch (kind) {
        case Kind::kSurfaceLattice:
          e.payload = lattice_from_json(id, p);
          break;
        case Kind::kThreefoldModel:
          e.payload = model_from_json(id, p);
          break;
        case Kind::kDivisorFamily:
          e.payload = family_from_json(id, p, cat);
          break;
        case Kind::kFlagScenario:
          e.payload = flag_from_json(p, cat);
          break;
        case Kind::kGroupExample:
          e.payload = group_from_json(p);
          break;
      }
      cat.add_entry(std::move(e));
    } catch (const nlohmann::json::exception& ex) {
      throw ValidationError("entry '" + id + "': " + ex.what());
    } catch (const Error& ex) {
      throw ValidationError("entry '" + id + "': " + ex.what());
    }
  }
  for (const Json& sj : root.value("scenarios", Json::array())) {
    try {
      cat.add_scenario(scenario_from_json(sj, cat));
    } catch (const nlohmann::json::exception& ex) {
      throw ValidationError("scenario '" + sj.value("id", std::string()) + "': " + ex.what());
    }
  }
  return cat;
}

Catalog load_catalog(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open catalog '" + path + "'", -1);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_catalog(ss.str());
}

Json serialize(const Catalog& cat) {
  Json root;
  root["schema_version"] = kSchemaVersion;
  Json entries = Json::array();
  for (const auto& [id, e] : cat.entries()) {
    Json j;
    j["id"] = id;
    j["kind"] = kind_name(e.kind);
    if (!e.provenance.empty()) j["provenance"] = e.provenance;
    if (!e.note.empty()) j["note"] = e.note;
    std::visit(
        [&](const auto& p) {
          using T = std::decay_t<decltype(p)>;
          if constexpr (std::is_same_v<T, surface::SurfaceLattice>) lattice_to_json(p, j);
          if constexpr (std::is_same_v<T, ModelPayload>) model_to_json(p, j);
          if constexpr (std::is_same_v<T, FamilyPayload>) family_to_json(p, j);
          if constexpr (std::is_same_v<T, FlagPayload>) flag_to_json(p, j);
          if constexpr (std::is_same_v<T, GroupPayload>) group_to_json(p, j);
        },
        e.payload);
    entries.push_back(j);
  }
  root["entries"] = entries;
  Json scenarios = Json::array();
  for (const Scenario& s : cat.scenarios()) scenarios.push_back(scenario_to_json(s));
  root["scenarios"] = scenarios;
  return root;
}

std::string serialize_text(const Catalog& cat) { return serialize(cat).dump(2) + "\n"; }

flags::SurfaceRestrictionData restriction_data(const Catalog& cat, const FlagPayload& f) {
  const surface::SurfaceLattice& lat = cat.payload<surface::SurfaceLattice>(f.lattice);
  return {lat, surface::zariski_profile(lat, f.restricted), f.s_invariant_of_s};
}

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const Poly1& p) {
  Json out = Json::array();
  for (int i = 0; i <= p.degree(); ++i) out.push_back(to_string(p.coeff(i)));
  return out;
}

Json to_json(const Cyclotomic& c) {
  if (c.is_rational()) return to_string(c.rational_value());
  Json j;
  j["conductor"] = c.conductor();
  Json coords = Json::array();
  for (const Rational& q : c.coords()) coords.push_back(to_string(q));
  j["coords"] = coords;
  return j;
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw ValidationError("expected a fraction string, got " + j.dump());
}

Poly1 poly_from_json(const Json& j) {
  if (!j.is_array()) return Poly1(rational_from_json(j));
  std::vector<Rational> c;
  for (const Json& x : j) c.push_back(rational_from_json(x));
  return Poly1(c);
}

Cyclotomic scalar_from_json(const Json& j) {
  if (j.is_number_integer()) return Cyclotomic(j.get<int>());
  if (j.is_string()) return groups::parse_scalar(j.get<std::string>());
  if (j.is_object()) {
    int n = field(j, "conductor").get<int>();
    return Cyclotomic(n, rationals_from_json(field(j, "coords")));
  }
  throw ValidationError("expected a scalar, got " + j.dump());
}

bool glob_match(const std::string& pattern, const std::string& text) {
  std::size_t p = 0, t = 0, star = std::string::npos, mark = 0;
  while (t < text.size()) {
    if (p < pattern.size() && (pattern[p] == '?' || pattern[p] == text[t])) {
      ++p;
      ++t;
    } else if (p < pattern.size() && pattern[p] == '*') {
      star = p++;
      mark = t;
    } else if (star != std::string::npos) {
      p = star + 1;
      t = ++mark;
    } else {
      return false;
    }
  }
  while (p < pattern.size() && pattern[p] == '*') ++p;
  return p == pattern.size();
}

}  // namespace fanocalc::catalog
