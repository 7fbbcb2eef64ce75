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

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "fanocalc/catalog.hpp"
#include "fanocalc/errors.hpp"
#include "fanocalc/groups/fixed_locus.hpp"
#include "fanocalc/groups/verdict.hpp"
#include "fanocalc/report.hpp"
#include "fanocalc/scenario.hpp"
#include "fanocalc/threefold.hpp"

namespace {

namespace fc = fanocalc::catalog;

constexpr int kInputError = 3;

std::string default_catalog() {
  if (std::filesystem::exists(FANOCALC_DEFAULT_CATALOG)) return FANOCALC_DEFAULT_CATALOG;
  return FANOCALC_INSTALLED_CATALOG;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw fanocalc::ParseError("cannot open '" + path + "'", -1);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int cmd_list(const fc::Catalog& cat, const std::string& kind) {
  for (const auto& [id, e] : cat.entries()) {
    if (!kind.empty() && fc::kind_name(e.kind) != kind) continue;
    std::cout << fc::kind_name(e.kind) << "\t" << id;
    if (!e.provenance.empty()) std::cout << "\t" << e.provenance;
    std::cout << "\n";
  }
  if (kind.empty() || kind == "scenario") {
    for (const fc::Scenario& s : cat.scenarios()) {
      std::cout << "scenario\t" << s.id << "\t" << s.steps.size() << " step" << (s.steps.size() == 1 ? "" : "s");
      if (!s.description.empty()) std::cout << "\t" << s.description;
      std::cout << "\n";
    }
  }
  return 0;
}

int cmd_run(const fc::Catalog& cat, const fc::RunOptions& opts, const std::string& format, bool verbose) {
  fc::RunResult run = fc::run_all(cat, opts);
  if (format == "machine") {
    std::cout << fc::machine_report(run);
  } else {
    std::cout << fc::text_report(run, verbose);
  }
  return fc::exit_code(run.summary);
}

int cmd_s_invariant(const fc::Catalog& cat, const std::string& family, const std::string& divisor) {
  const std::string id = family + "/" + divisor;
  const fc::FamilyPayload& f = cat.payload<fc::FamilyPayload>(id);
  const fc::ModelPayload& m = cat.payload<fc::ModelPayload>(f.model);
  std::cout << "S(" << divisor << ") on " << f.model << " = "
            << fanocalc::to_string(fanocalc::threefold::s_invariant(m.model, f.spec)) << "\n";
  return 0;
}

int cmd_fixed_points(const fc::Catalog& cat, const std::string& id) {
  const fc::GroupPayload& g = cat.payload<fc::GroupPayload>(id);
  namespace gr = fanocalc::groups;
  gr::FixedLocus loc = gr::fixed_locus(g.example.action);
  std::cout << "group " << gr::structure_str(g.example.action.claimed_structure) << " on the ambient space\n";
  std::cout << "fixed locus: " << loc.summary() << "\n";
  for (const gr::LinearPiece& p : loc.pieces) std::cout << "  " << p.str(g.example.action.space, g.variables) << "\n";
  gr::Certificate cert = gr::condition_a_verdict(g.example);
  std::cout << "verdict: " << gr::kind_name(cert.verdict.kind) << "\n";
  for (const std::string& line : cert.chain) std::cout << "  | " << line << "\n";
  return cert.verdict.kind == gr::Verdict::Kind::kUndecided ? 2 : 0;
}

int cmd_lint(const fc::Catalog& cat, const std::string& paper) {
  std::optional<std::string> text;
  if (!paper.empty()) text = read_file(paper);
  std::vector<std::string> issues = fc::lint(cat, text);
  for (const std::string& i : issues) std::cout << i << "\n";
  std::cout << issues.size() << " issue" << (issues.size() == 1 ? "" : "s") << "\n";
  return issues.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fanocalc: exact K-stability and fixed-point certificates for Fano threefolds"};
  app.require_subcommand(1);
  std::string catalog_path = default_catalog();
  app.add_option("--catalog", catalog_path, "Catalog file to load instead of the shipped one");

  std::string kind;
  auto* list = app.add_subcommand("list", "List catalog entries and scenarios");
  list->add_option("--kind", kind, "Only show one kind (an entry kind or 'scenario')");

  fc::RunOptions opts;
  bool verbose = false;
  auto* verify = app.add_subcommand("verify", "Run the scenarios whose id matches a glob");
  verify->add_option("pattern", opts.filter, "Scenario id or glob (* and ?)")->required();
  verify->add_flag("-v,--verbose", verbose, "Print certificates for passing scenarios too");

  auto* verify_all = app.add_subcommand("verify-all", "Run every scenario in the catalog");
  verify_all->add_flag("--exclude-partial", opts.exclude_partial, "Skip scenarios on partially verifiable entries");
  verify_all->add_flag("-v,--verbose", verbose, "Print certificates for passing scenarios too");
  for (CLI::App* sub : {verify, verify_all})
    sub->add_option("-j,--threads", opts.threads, "Worker threads (0 = hardware concurrency)");

  std::string family, divisor;
  auto* sinv = app.add_subcommand("s-invariant", "Compute S_X(Y) for a divisor family");
  sinv->add_option("family", family, "Threefold family id, e.g. fam-2.16")->required();
  sinv->add_option("divisor", divisor, "Divisor family label, e.g. E")->required();

  std::string example;
  auto* fixed = app.add_subcommand("fixed-points", "Show the fixed locus and verdict of a group example");
  fixed->add_option("example", example, "Group example id")->required();

  std::string format = "text";
  std::string out_path;
  auto* report = app.add_subcommand("report", "Write a report for all (or filtered) scenarios");
  report->add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "machine"}));
  report->add_option("--filter", opts.filter, "Scenario id glob");
  report->add_flag("--exclude-partial", opts.exclude_partial, "Skip scenarios on partially verifiable entries");
  report->add_option("-o,--output", out_path, "Write the report to a file instead of stdout");

  std::string paper;
  auto* lint = app.add_subcommand("lint", "Check provenance tags and anchors of the catalog");
  lint->add_option("--paper", paper, "Reference text in which paper anchors must occur verbatim");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kInputError;
  }

  try {
    fc::Catalog cat = fc::load_catalog(catalog_path);
    if (*list) return cmd_list(cat, kind);
    if (*verify) return cmd_run(cat, opts, "text", verbose);
    if (*verify_all) return cmd_run(cat, opts, "text", verbose);
    if (*sinv) return cmd_s_invariant(cat, family, divisor);
    if (*fixed) return cmd_fixed_points(cat, example);
    if (*lint) return cmd_lint(cat, paper);
    if (*report) {
      if (out_path.empty()) return cmd_run(cat, opts, format, false);
      std::ofstream out(out_path, std::ios::binary);
      if (!out) throw fanocalc::ParseError("cannot write '" + out_path + "'", -1);
      fc::RunResult run = fc::run_all(cat, opts);
      out << (format == "machine" ? fc::machine_report(run) : fc::text_report(run, false));
      return fc::exit_code(run.summary);
    }
  } catch (const fanocalc::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kInputError;
  } catch (const fanocalc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return 0;
}
