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

#ifndef FANOCALC_GROUPS_VERDICT_HPP_
#define FANOCALC_GROUPS_VERDICT_HPP_

#include <optional>
#include <string>
#include <vector>

#include "fanocalc/groups/action.hpp"
#include "fanocalc/groups/fixed_locus.hpp"

namespace fanocalc::groups {

// A subvariety (such as a blowup center) whose invariance supports the
// propagation step. It may live on its own space with its own lift of the
// group, e.g. a projective bundle over the verification space.
struct InvariantSystem {
  std::string label;
  std::optional<FiniteAbelianAction> action;  // defaults to the example's action
  VarietyModel model;
};

struct GroupExample {
  FiniteAbelianAction action;
  std::optional<VarietyModel> variety;  // the verification space, if any
  std::vector<InvariantSystem> invariant_systems;
  std::string propagation;
  bool partial = false;
  std::string partial_note;
  bool rationally_connected = false;
};

struct Certificate {
  Verdict verdict;
  std::vector<std::string> chain;
};

Certificate condition_a_verdict(const GroupExample& ex);

struct SanityRow {
  std::string element;
  unsigned order = 1;
  Verdict verdict;
};

// Fixed points of every cyclic subgroup on v. Throws
// InconsistentWithLefschetz when some element has none.
std::vector<SanityRow> cyclic_sanity(const FiniteAbelianAction& act, const VarietyModel& v);

bool linearization_exists(int n, int d);

}  // namespace fanocalc::groups

#endif  // FANOCALC_GROUPS_VERDICT_HPP_
