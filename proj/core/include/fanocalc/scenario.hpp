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

#ifndef FANOCALC_SCENARIO_HPP_
#define FANOCALC_SCENARIO_HPP_

#include <optional>
#include <string>
#include <vector>

#include "fanocalc/catalog.hpp"

namespace fanocalc::catalog {

enum class Status { kPass, kFail, kUndecided };

std::string status_name(Status s);

struct StepOutcome {
  std::string op;
  Status status = Status::kPass;
  Json computed;
  Json expected;
  Provenance provenance;
};

struct VerdictReport {
  std::string id;
  Status status = Status::kPass;
  Json computed;
  Json expected;
  Provenance provenance;
  std::vector<std::string> certificate;
  std::vector<StepOutcome> steps;
};

struct Summary {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t undecided = 0;
  std::size_t total() const { return pass + fail + undecided; }
};

struct RunResult {
  std::vector<VerdictReport> reports;  // ordered by scenario id
  Summary summary;
};

std::vector<std::string> known_ops();
bool is_known_op(const std::string& op);
// Argument names whose string values name catalog entries.
bool is_entry_argument(const std::string& key);

// Scenarios whose group example is flagged partial or has no
// verification space.
bool is_partial(const Catalog& cat, const Scenario& s);

// Module errors become a fail report carrying the error text.
VerdictReport run_scenario(const Catalog& cat, const std::string& id);

struct RunOptions {
  std::string filter = "*";
  bool exclude_partial = false;
  unsigned threads = 0;  // 0 picks the hardware concurrency
};

RunResult run_all(const Catalog& cat, const RunOptions& opts = {});

// Provenance and format problems; empty when the catalog is clean. With
// reference text, every expected fraction of a "paper" step must occur in
// it and every anchor must be a verbatim substring.
std::vector<std::string> lint(const Catalog& cat, const std::optional<std::string>& reference_text = std::nullopt);

}  // namespace fanocalc::catalog

#endif  // FANOCALC_SCENARIO_HPP_
