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

#ifndef FANOCALC_REPORT_HPP_
#define FANOCALC_REPORT_HPP_

#include <string>

#include "fanocalc/scenario.hpp"

namespace fanocalc::catalog {

// One JSON record with fields id, status, computed, expected, provenance
// and, for group scenarios, certificate.
Json report_record(const VerdictReport& r);

// Line-delimited records, byte-stable for a given catalog.
std::string machine_report(const RunResult& run);
std::string text_report(const RunResult& run, bool verbose = false);

// 0 all pass, 1 any fail, 2 any undecided and no fail.
int exit_code(const Summary& s);

}  // namespace fanocalc::catalog

#endif  // FANOCALC_REPORT_HPP_
