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

#include "fanocalc/report.hpp"

#include <sstream>

namespace fanocalc::catalog {

Json report_record(const VerdictReport& r) {
  Json j;
  j["id"] = r.id;
  j["status"] = status_name(r.status);
  j["computed"] = r.computed;
  j["expected"] = r.expected;
  Json prov;
  prov["tag"] = r.provenance.tag;
  prov["anchor"] = r.provenance.anchor;
  j["provenance"] = prov;
  if (!r.certificate.empty()) j["certificate"] = r.certificate;
  return j;
}

std::string machine_report(const RunResult& run) {
  std::string out;
  for (const VerdictReport& r : run.reports) out += report_record(r).dump() + "\n";
  return out;
}

std::string text_report(const RunResult& run, bool verbose) {
  std::ostringstream os;
  for (const VerdictReport& r : run.reports) {
    std::string tag = status_name(r.status);
    for (char& c : tag) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    os << tag << std::string(10 - tag.size(), ' ') << r.id << "  computed " << r.computed.dump();
    if (r.status != Status::kPass || verbose) os << "  expected " << r.expected.dump();
    os << "\n";
    if (verbose || r.status != Status::kPass) {
      for (const std::string& line : r.certificate) os << "          | " << line << "\n";
    }
  }
  os << run.summary.total() << " scenarios: " << run.summary.pass << " pass, " << run.summary.fail << " fail, "
     << run.summary.undecided << " undecided\n";
  return os.str();
}

int exit_code(const Summary& s) {
  if (s.fail > 0) return 1;
  if (s.undecided > 0) return 2;
  return 0;
}

}  // namespace fanocalc::catalog
