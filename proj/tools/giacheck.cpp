/*
 * Copyright (c) 2026, The giacheck Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Command-line front end: check, export and corpus.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "giacheck/analysis.hpp"
#include "giacheck/corpus.hpp"
#include "giacheck/gchor.hpp"
#include "giacheck/gia.hpp"
#include "giacheck/pomset.hpp"
#include "giacheck/projection.hpp"

namespace fs = std::filesystem;
using namespace giacheck;

namespace {

constexpr int kWellFormed = 0;
constexpr int kIllFormed = 1;
constexpr int kInputError = 2;

std::size_t default_state_cap() {
  if (const char* env = std::getenv("GIACHECK_STATE_CAP")) {
    try {
      return static_cast<std::size_t>(std::stoull(env));
    } catch (const std::exception&) {
      std::cerr << "warning: ignoring malformed GIACHECK_STATE_CAP\n";
    }
  }
  return CheckOptions{}.state_cap;
}

// Reads and parses a choreography; reports errors on stderr.
std::optional<GChor> load(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << path << ": error: cannot open file\n";
    return std::nullopt;
  }
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_gchor(ss.str());
  } catch (const ParseError& e) {
    std::cerr << path << ":" << e.line() << ":" << e.column() << ": error: " << e.detail() << "\n";
  } catch (const std::invalid_argument& e) {
    std::cerr << path << ": error: " << e.what() << "\n";
  }
  return std::nullopt;
}

bool write_file(const fs::path& p, const std::string& text) {
  std::ofstream out(p);
  out << text;
  if (!out) {
    std::cerr << p.string() << ": error: cannot write file\n";
    return false;
  }
  std::cout << p.string() << "\n";
  return true;
}

int run_export(const GChor& g, const std::string& stage, const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    std::cerr << dir.string() << ": error: " << ec.message() << "\n";
    return kInputError;
  }
  bool ok = true;
  if (stage == "gchor") {
    ok = write_file(dir / "gchor.dot", gchor_to_dot(g));
  } else if (stage == "pomsets") {
    Semantics sem = semantics(g);
    if (!is_defined(sem)) {
      const auto& u = std::get<Undefined>(sem);
      std::cerr << "error: pomset semantics undefined (" << to_string(u.reason) << " at "
                << render_gchor(u.subterm) << ")\n";
      return kIllFormed;
    }
    const auto& rs = std::get<PomsetSet>(sem);
    for (std::size_t i = 0; i < rs.size(); ++i) {
      const std::string name = "pomset_" + std::to_string(i);
      ok = write_file(dir / (name + ".dot"), pomset_to_dot(rs[i], name)) && ok;
    }
  } else if (stage == "projections" || stage == "stripped") {
    for (const auto& a : participants(g)) {
      Gia p = project(g, a).automaton;
      if (stage == "stripped") p = strip_tau(p);
      p = rename_states(p, a.name);
      const std::string name = (stage == "stripped" ? "stripped_" : "projection_") + a.name;
      ok = write_file(dir / (name + ".dot"), gia_to_dot(p, name)) && ok;
    }
  } else if (stage == "product") {
    ok = write_file(dir / "product.dot", gia_to_dot(stripped_product(g), "product"));
  }
  return ok ? kWellFormed : kInputError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Well-formedness checker for global choreographies"};
  app.require_subcommand(1);

  std::string file;
  bool text = false;
  std::size_t cap = default_state_cap();
  auto* check = app.add_subcommand("check", "Check a choreography file");
  check->add_option("file", file, "Choreography (.gc)")->required();
  check->add_flag("--text", text, "Human-readable output instead of JSON");
  check->add_option("--state-cap", cap, "State cap for the buffered exploration");

  std::string stage;
  std::string out_dir = ".";
  auto* exp = app.add_subcommand("export", "Write Graphviz files for one stage");
  exp->add_option("file", file, "Choreography (.gc)")->required();
  exp->add_option("--stage", stage, "gchor, pomsets, projections, stripped or product")
      ->required()
      ->check(CLI::IsMember({"gchor", "pomsets", "projections", "stripped", "product"}));
  exp->add_option("--out", out_dir, "Output directory");

  CorpusConfig cfg;
  cfg.state_cap = cap;
  auto* corpus = app.add_subcommand("corpus", "Run the randomised cross-checks");
  corpus->add_option("--seed", cfg.seed, "Random seed");
  corpus->add_option("--count", cfg.count, "Number of choreographies");
  corpus->add_option("--max-depth", cfg.max_depth, "Maximum term depth");
  corpus->add_option("--max-participants", cfg.max_participants, "Participant pool size");
  corpus->add_option("--max-messages", cfg.max_messages, "Message pool size");
  corpus->add_option("--state-cap", cfg.state_cap, "State cap for the buffered exploration");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kInputError;
  }

  if (check->parsed()) {
    auto g = load(file);
    if (!g) return kInputError;
    CheckOptions opts;
    opts.state_cap = cap;
    Verdict v = check_well_formed(*g, opts);
    std::cout << (text ? verdict_to_text(v) : verdict_to_json(v) + "\n");
    return v.well_formed ? kWellFormed : kIllFormed;
  }
  if (exp->parsed()) {
    auto g = load(file);
    if (!g) return kInputError;
    return run_export(*g, stage, out_dir);
  }
  CorpusReport rep = run_corpus(cfg);
  std::cout << format_report(rep, cfg);
  return rep.failures.empty() ? 0 : 1;
}
