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

#include "fanocalc/groups/verdict.hpp"

#include <numeric>

#include "fanocalc/errors.hpp"

namespace fanocalc::groups {
namespace {

std::string characters_str(const InvarianceReport& rep) {
  std::string out;
  for (const Cyclotomic& c : rep.characters()) {
    if (!out.empty()) out += ", ";
    out += c.str();
  }
  return out;
}

}  // namespace

Certificate condition_a_verdict(const GroupExample& ex) {
  Certificate cert;
  if (!ex.variety) {
    cert.verdict = Verdict::undecided("no verification space" + (ex.partial_note.empty() ? "" : ": " + ex.partial_note));
    cert.chain.push_back(cert.verdict.reason);
    return cert;
  }
  const VarietyModel& v = *ex.variety;
  GroupSummary sum = validate_action(ex.action);
  cert.chain.push_back("group " + structure_str(ex.action.claimed_structure) + " of order " +
                       std::to_string(sum.order) + ", generators commute projectively");
  v.validate();
  InvarianceReport rep = check_invariance(ex.action, v);
  cert.chain.push_back("verification variety is invariant, characters {" + characters_str(rep) + "}");
  for (const InvariantSystem& sys : ex.invariant_systems) {
    const FiniteAbelianAction& act = sys.action ? *sys.action : ex.action;
    if (sys.action && sys.model.weights.empty()) validate_action(act);
    sys.model.validate();
    InvarianceReport r = check_invariance(act, sys.model);
    cert.chain.push_back(sys.label + " is invariant, characters {" + characters_str(r) + "}");
  }
  FixedLocus loc = fixed_locus(ex.action);
  cert.chain.push_back("fixed locus on the ambient space: " + loc.summary());
  Verdict ver = intersect_with_variety(loc, v);
  std::string line = "fixed points on the verification variety: " + kind_name(ver.kind);
  if (ver.witness) line += " " + point_str(*ver.witness);
  if (!ver.reason.empty()) line += " (" + ver.reason + ")";
  cert.chain.push_back(line);
  if (!ex.propagation.empty()) cert.chain.push_back(ex.propagation);
  if (ex.partial) {
    cert.verdict = Verdict::undecided(ex.partial_note.empty() ? "entry is only partially verifiable" : ex.partial_note);
    cert.chain.push_back("undecided: " + cert.verdict.reason);
    return cert;
  }
  cert.verdict = ver;
  return cert;
}

std::vector<SanityRow> cyclic_sanity(const FiniteAbelianAction& act, const VarietyModel& v) {
  GroupSummary sum = validate_action(act);
  std::vector<SanityRow> rows;
  for (const GroupElement& g : sum.elements) {
    FiniteAbelianAction cyc{act.space, {g}, {}};
    SanityRow row{g.str(v.space, v.variables), element_order(g), intersect_with_variety(fixed_locus(cyc), v)};
    if (row.verdict.kind == Verdict::Kind::kEmpty) {
      throw InconsistentWithLefschetz("element " + row.element + " of order " + std::to_string(row.order) +
                                      " has no fixed points on a rationally connected variety");
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

bool linearization_exists(int n, int d) {
  if (n < 1 || d < 1) throw DomainError("linearization_exists needs n >= 1 and d >= 1");
  return std::gcd(d, n + 1) == 1;
}

}  // namespace fanocalc::groups
