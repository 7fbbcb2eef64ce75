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

#ifndef FANOCALC_CATALOG_HPP_
#define FANOCALC_CATALOG_HPP_

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "fanocalc/flags.hpp"
#include "fanocalc/groups/verdict.hpp"
#include "fanocalc/surface.hpp"
#include "fanocalc/threefold.hpp"

namespace fanocalc::catalog {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

struct BlowupParams {
  Rational degree;
  Rational index;
  Rational curve_degree;
  int curve_genus = 0;
};

struct ModelPayload {
  threefold::ThreefoldModel model;
  std::optional<BlowupParams> blowup;
};

struct FamilyPayload {
  std::string model;
  threefold::DivisorFamilySpec spec;
};

struct FlagPayload {
  std::string model;
  std::string lattice;
  surface::SurfFamily restricted;
  Rational s_invariant_of_s;
  flags::FlagCandidate flag;
};

struct GroupPayload {
  int conductor = 1;
  std::vector<std::string> variables;
  groups::GroupExample example;
};

using Payload = std::variant<surface::SurfaceLattice, ModelPayload, FamilyPayload, FlagPayload, GroupPayload>;

enum class Kind { kSurfaceLattice, kThreefoldModel, kDivisorFamily, kFlagScenario, kGroupExample };

std::string kind_name(Kind k);
Kind parse_kind(const std::string& s);

struct Entry {
  std::string id;
  Kind kind;
  std::string provenance;
  std::string note;
  Payload payload;
};

struct Provenance {
  std::string tag;  // "paper", "trivial" or "derived:<oracle>"
  std::string anchor;
};

struct Step {
  std::string op;
  Json args;
  Json expected;
  Provenance provenance;
  std::string bind;  // name under which later steps may refer to the result as "$name"
};

struct Scenario {
  std::string id;
  std::string description;
  std::vector<Step> steps;
};

class Catalog {
 public:
  const std::map<std::string, Entry>& entries() const { return entries_; }
  const std::vector<Scenario>& scenarios() const { return scenarios_; }

  const Entry& entry(const std::string& id) const;
  const Scenario& scenario(const std::string& id) const;
  bool has_entry(const std::string& id) const { return entries_.count(id) > 0; }

  template <typename T>
  const T& payload(const std::string& id) const {
    const Entry& e = entry(id);
    if (const T* p = std::get_if<T>(&e.payload)) return *p;
    throw ValidationError("entry '" + id + "' has kind " + kind_name(e.kind));
  }

  void add_entry(Entry e);
  void add_scenario(Scenario s);

 private:
  std::map<std::string, Entry> entries_;
  std::vector<Scenario> scenarios_;  // sorted by id
};

// Throws ParseError for malformed text (with the byte offset when the JSON
// itself is broken) and ValidationError naming the entry otherwise.
Catalog parse_catalog(const std::string& text);
Catalog load_catalog(const std::string& path);

Json serialize(const Catalog& cat);
std::string serialize_text(const Catalog& cat);

// Rebuilds the restricted surface data of a flag entry.
flags::SurfaceRestrictionData restriction_data(const Catalog& cat, const FlagPayload& f);

// Value conversions shared by the scenario engine and the CLI.
Json to_json(const Rational& q);
Json to_json(const Poly1& p);
Json to_json(const Cyclotomic& c);
Rational rational_from_json(const Json& j);
Poly1 poly_from_json(const Json& j);
Cyclotomic scalar_from_json(const Json& j);

// Glob with '*' and '?'.
bool glob_match(const std::string& pattern, const std::string& text);

}  // namespace fanocalc::catalog

#endif  // FANOCALC_CATALOG_HPP_
