// Copyright 2026 The wmreg Authors.
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

// Command-line front end: batch runs, model comparison, the interactive game,
// domain reconstruction and timing calibration.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wmreg/wmreg.hpp"

#ifndef WMREG_DATA_DIR
#define WMREG_DATA_DIR "data"
#endif

namespace {

using namespace wmreg;

constexpr int kOk = 0;
constexpr int kValidationError = 2;
constexpr int kScenarioError = 3;

// Errors raised while reading the domain or the flags exit with 2; errors
// from the scenario or the run itself exit with 3.
struct ScenarioFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string data_path(const std::string &name) {
  return std::string(WMREG_DATA_DIR) + "/" + name;
}

struct Common {
  std::string domain_path;
  std::string output;
  bool long_symbols = false;

  SymbolStyle style() const { return long_symbols ? SymbolStyle::kLong : SymbolStyle::kShort; }
};

void add_common(CLI::App *cmd, Common &c) {
  c.domain_path = data_path("faces16.json");
  cmd->add_option("--domain", c.domain_path, "Domain fixture (JSON)")->envname("WMREG_DOMAIN");
  cmd->add_option("-o,--output", c.output, "Write machine output here instead of stdout");
  cmd->add_flag("--long-symbols", c.long_symbols, "Print long property ids instead of H_L style");
}

struct PolicyFlags {
  std::string policy = "none";
  std::optional<double> delta;
  std::optional<std::size_t> alpha;
  std::string wm_order = "lru_first";
};

void add_policy(CLI::App *cmd, PolicyFlags &p) {
  cmd->add_option("--policy", p.policy, "none | decay | interference | both");
  cmd->add_option("--delta", p.delta, "Decay period in seconds");
  cmd->add_option("--alpha", p.alpha, "Per-entity WM capacity");
  cmd->add_option("--wm-order", p.wm_order, "lru_first | mru_first");
}

SessionConfig make_config(const PolicyFlags &p) {
  bool wants_delta = p.policy == "decay" || p.policy == "both";
  bool wants_alpha = p.policy == "interference" || p.policy == "both";
  if (p.policy != "none" && !wants_delta && !wants_alpha) {
    throw Error(ErrorCode::kInvalidArgument, "unknown policy '" + p.policy + "'");
  }
  if (wants_delta != p.delta.has_value()) {
    throw Error(ErrorCode::kInvalidArgument,
                wants_delta ? "--delta is required for " + p.policy
                            : "--delta only applies to decay and both");
  }
  if (wants_alpha != p.alpha.has_value()) {
    throw Error(ErrorCode::kInvalidArgument,
                wants_alpha ? "--alpha is required for " + p.policy
                            : "--alpha only applies to interference and both");
  }
  SessionConfig config;
  std::size_t alpha = p.alpha.value_or(0);
  if (p.policy == "decay") config.policy = ForgettingPolicy::Decay(seconds_to_millis(*p.delta));
  if (p.policy == "interference") config.policy = ForgettingPolicy::Interference(alpha);
  if (p.policy == "both") config.policy = ForgettingPolicy::Both(seconds_to_millis(*p.delta), alpha);
  config.wm_order = parse_wm_order(p.wm_order);
  return config;
}

Domain load_valid_domain(const std::string &path) {
  Domain domain(load_domain(path));
  auto problems = validate_domain(domain);
  if (!problems.empty()) {
    std::string msg = path + " is not a valid domain:";
    for (const auto &v : problems) msg += "\n  " + v.message;
    throw Error(ErrorCode::kInvalidArgument, msg);
  }
  return domain;
}

ScenarioScript load_script(const std::string &path, const Domain &domain) {
  try {
    return load_scenario(path, domain);
  } catch (const Error &e) {
    throw ScenarioFailure(e.what());
  }
}

void emit(const Common &c, const std::string &text) {
  if (c.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(c.output, std::ios::binary);
  if (!out) throw Error(ErrorCode::kInvalidArgument, "cannot write " + c.output);
  out << text;
}

std::vector<ForgettingPolicy> parse_policy_list(const std::vector<std::string> &items) {
  std::vector<ForgettingPolicy> out;
  for (const auto &item : items) out.push_back(parse_policy(item));
  return out;
}

// Face1's buffer just before the robot's last description.
WmTarget last_turn_target(const Domain &domain, const ScenarioScript &script) {
  return {static_cast<int>(script.turns.size()), Phase::kHuman, domain.resolve_entity("face1"),
          {domain.resolve_property("lab-coat"), domain.resolve_property("hair-short"),
           domain.resolve_property("glasses")}};
}

std::string seconds_list(const std::vector<Millis> &values) {
  std::string out;
  for (auto t : values) out += (out.empty() ? "" : ",") + format_seconds(t);
  return out;
}

// ---- report -----------------------------------------------------------------

std::string join(const std::vector<std::string> &cells, const char *sep) {
  std::string out;
  for (const auto &c : cells) {
    if (!out.empty()) out += sep;
    out += c;
  }
  return out;
}

std::string build_report(const Domain &domain, const ScenarioScript &script,
                         const std::string &reference_path,
                         const std::optional<ConstraintSet> &constraints) {
  ojson ref = detail::read_json_file(reference_path);
  std::vector<std::string> labels;
  for (const auto &[label, _] : ref.at("columns").items()) labels.push_back(label);
  auto policies = parse_policy_list(labels);
  ComparisonTable table = compare_models(script, policies, domain);

  std::ostringstream os;
  os << "# Table 1 calibration report\n\n";
  os << "Domain hash `" << domain_hash(domain) << "`, inter-turn time "
     << format_seconds(script.inter_turn) << " s, resolution `"
     << resolution_mode_name(script.resolution) << "`.\n\n";

  if (constraints) {
    auto r = reconstruct_domain(*constraints);
    auto violations = validate_fixture(domain, *constraints);
    os << "## Domain reconstruction\n\n";
    os << "- solutions found: " << r.solutions << (r.capped ? " (cap reached)" : "") << "\n";
    os << "- shipped fixture equals the lexicographically least solution: "
       << (Domain(r.domain).data().assignment == domain.data().assignment ? "yes" : "no") << "\n";
    os << "- constraint violations in the shipped fixture: " << violations.size() << "\n";
    for (const auto &v : violations) os << "  - " << v.message << "\n";
    os << "\n";
  }

  os << "## Decay timing\n\n";
  try {
    SessionConfig decay;
    decay.policy = ForgettingPolicy::Decay(Millis{10000});
    WmTarget target = last_turn_target(domain, script);
    Calibration c = calibrate_decay_timing(script, decay, domain, std::span(&target, 1));
    os << "- target: face1 buffer before the last robot turn = [C_L, H_S, G_Y]\n"
       << "- feasible inter-turn seconds (grid 1..60): " << seconds_list(c.feasible) << "\n"
       << "- chosen: " << format_seconds(c.chosen) << " (middle of " << format_seconds(c.run_first)
       << ".." << format_seconds(c.run_last) << ")\n\n";
  } catch (const Error &e) {
    os << "- no feasible timing: " << e.what() << "\n\n";
  }

  os << "## Robot descriptions, engine vs reference\n\n";
  std::size_t matched = 0, total = 0;
  for (std::size_t col = 0; col < labels.size(); ++col) {
    os << "### " << labels[col] << "\n\n| turn | face | engine | reference | match |\n"
       << "|---|---|---|---|---|\n";
    const ojson &expected = ref.at("columns").at(labels[col]);
    for (std::size_t row = 0; row < table.rows.size(); ++row) {
      const auto &r = table.rows[row];
      std::string engine = render_cell(r.cells[col], domain, SymbolStyle::kShort);
      std::vector<std::string> want;
      for (const auto &s : expected.at(row)) want.push_back(s.get<std::string>());
      std::string reference = join(want, ", ");
      bool ok = engine == reference;
      matched += ok ? 1 : 0;
      ++total;
      os << "| " << r.turn << " | " << r.robot_target << " | " << engine << " | "
         << reference << " | " << (ok ? "yes" : "**no**") << " |\n";
    }
    os << "\n";
  }
  os << "Cells matched: " << matched << " / " << total << ".\n\n";

  os << "## Alignment\n\n| policy | same-target reuse | cross-entity reuse |\n|---|---|---|\n";
  for (std::size_t col = 0; col < labels.size(); ++col) {
    auto a = alignment_score(table.transcripts[col]);
    char buf[96];
    std::snprintf(buf, sizeof buf, "| %s | %.3f | %.3f |\n", labels[col].c_str(),
                  a.same_target, a.cross_entity);
    os << buf;
  }
  return os.str();
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Working-memory-sensitive referring expression generation"};
  app.require_subcommand(1);

  Common common;
  PolicyFlags policy;
  std::string scenario_path = data_path("table1_scenario.json");
  std::optional<double> inter_turn;
  std::string format = "ldjson";
  std::string constraints_path = data_path("table1_constraints.json");
  std::string reference_path = data_path("table1_reference.json");
  std::vector<std::string> policy_list = {"none", "decay(10)", "interference(2)"};
  std::size_t cap = 1000;
  std::string transcript_path;

  auto *run = app.add_subcommand("run", "Play a scripted game and print the transcript");
  add_common(run, common);
  add_policy(run, policy);
  run->add_option("--scenario", scenario_path, "Scenario script (JSON)");
  run->add_option("--inter-turn", inter_turn, "Override the script's inter-turn seconds");
  run->add_option("--format", format, "ldjson | csv")->check(CLI::IsMember({"ldjson", "csv"}));

  auto *compare = app.add_subcommand("compare", "Compare robot descriptions across policies");
  add_common(compare, common);
  compare->add_option("--scenario", scenario_path, "Scenario script (JSON)");
  compare->add_option("--policies", policy_list, "Policy labels, e.g. none,decay(10)")
      ->delimiter(',');
  compare->add_option("--wm-order", policy.wm_order, "lru_first | mru_first");
  compare->add_option("--format", format, "csv | pretty")->check(CLI::IsMember({"csv", "pretty"}));

  auto *repl = app.add_subcommand("repl", "Play the game interactively");
  add_common(repl, common);
  add_policy(repl, policy);
  std::string resolution = "exhaustive";
  repl->add_option("--resolution", resolution, "exhaustive | short_circuit");
  bool quiet = false;
  repl->add_flag("--no-prompt", quiet, "Do not print a prompt");

  auto *reconstruct = app.add_subcommand("reconstruct", "Search for a domain meeting a constraint set");
  add_common(reconstruct, common);
  reconstruct->add_option("--constraints", constraints_path, "Constraint set (JSON)");
  reconstruct->add_option("--cap", cap, "Stop counting solutions here");

  auto *calibrate = app.add_subcommand("calibrate", "Search the inter-turn time for the decay run");
  add_common(calibrate, common);
  calibrate->add_option("--scenario", scenario_path, "Scenario script (JSON)");
  double delta = 10;
  calibrate->add_option("--delta", delta, "Decay period in seconds");

  auto *report = app.add_subcommand("report", "Engine vs reference table, as Markdown");
  add_common(report, common);
  report->add_option("--scenario", scenario_path, "Scenario script (JSON)");
  report->add_option("--reference", reference_path, "Reference table (JSON)");
  report->add_option("--constraints", constraints_path, "Constraint set (JSON), or empty");

  auto *validate = app.add_subcommand("validate", "Check a domain, optionally against constraints");
  add_common(validate, common);
  std::string validate_constraints;
  validate->add_option("--constraints", validate_constraints, "Constraint set (JSON)");

  auto *replay = app.add_subcommand("replay", "Re-run a transcript's header and compare");
  add_common(replay, common);
  replay->add_option("transcript", transcript_path, "LDJSON transcript")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kValidationError;
  }

  int stage = kValidationError;
  try {
    if (*reconstruct) {
      ConstraintSet c = load_constraints(constraints_path);
      stage = kScenarioError;
      auto r = reconstruct_domain(c, {cap, 0});
      std::cerr << "solutions: " << r.solutions << (r.capped ? " (cap reached)" : "") << "\n";
      emit(common, to_json(r.domain).dump(2) + "\n");
      return kOk;
    }

    Domain domain = load_valid_domain(common.domain_path);

    if (*validate) {
      std::vector<DomainViolation> problems;
      if (!validate_constraints.empty()) {
        problems = validate_fixture(domain, load_constraints(validate_constraints));
      }
      for (const auto &v : problems) std::cerr << v.message << "\n";
      if (!problems.empty()) return kValidationError;
      std::cout << "ok " << domain_hash(domain) << "\n";
      return kOk;
    }

    if (*repl) {
      SessionConfig config = make_config(policy);
      config.resolution = parse_resolution_mode(resolution);
      Session session(domain, domain.entities(), config);
      Repl r(session, std::cout, std::cerr, common.style());
      r.loop(std::cin, !quiet);
      return kOk;
    }

    if (*replay) {
      std::ifstream in(transcript_path, std::ios::binary);
      if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot open " + transcript_path);
      std::stringstream buf;
      buf << in.rdbuf();
      stage = kScenarioError;
      bool same = replay_matches(buf.str(), domain);
      std::cout << (same ? "match" : "mismatch") << "\n";
      return same ? kOk : kScenarioError;
    }

    if (*run) {
      SessionConfig config = make_config(policy);
      ScenarioScript script = load_script(scenario_path, domain);
      if (inter_turn) script.inter_turn = seconds_to_millis(*inter_turn);
      stage = kScenarioError;
      Transcript t = run_scenario(script, config, domain);
      emit(common, format == "csv" ? to_summary_csv(t, domain, common.style())
                                   : to_ldjson(t, domain, common.style()));
      return kOk;
    }

    if (*compare) {
      auto policies = parse_policy_list(policy_list);
      SessionConfig base;
      base.wm_order = parse_wm_order(policy.wm_order);
      ScenarioScript script = load_script(scenario_path, domain);
      stage = kScenarioError;
      ComparisonTable table = compare_models(script, policies, domain, base);
      emit(common, format == "pretty" ? to_pretty(table, domain, common.style())
                                      : to_csv(table, domain, common.style()));
      return kOk;
    }

    if (*calibrate) {
      SessionConfig config;
      config.policy = ForgettingPolicy::Decay(seconds_to_millis(delta));
      ScenarioScript script = load_script(scenario_path, domain);
      stage = kScenarioError;
      WmTarget target = last_turn_target(domain, script);
      Calibration c = calibrate_decay_timing(script, config, domain, std::span(&target, 1));
      emit(common, "feasible " + seconds_list(c.feasible) + "\nrun " + format_seconds(c.run_first) + ".." +
                       format_seconds(c.run_last) + "\nchosen " + format_seconds(c.chosen) + "\n");
      return kOk;
    }

    if (*report) {
      ScenarioScript script = load_script(scenario_path, domain);
      std::optional<ConstraintSet> c;
      if (!constraints_path.empty()) c = load_constraints(constraints_path);
      stage = kScenarioError;
      emit(common, build_report(domain, script, reference_path, c));
      return kOk;
    }
  } catch (const ScenarioFailure &e) {
    std::cerr << "scenario error: " << e.what() << "\n";
    return kScenarioError;
  } catch (const Error &e) {
    std::cerr << e.what() << "\n";
    return stage;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return stage;
  }
  return kOk;
}
