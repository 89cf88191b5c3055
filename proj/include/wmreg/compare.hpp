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

#pragma once

#include <algorithm>
#include <future>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "wmreg/session.hpp"

namespace wmreg {

// Robot descriptions per turn, one column per policy, each cell in the
// domain's canonical display order.
struct ComparisonTable {
  struct Row {
    int turn = 0;
    EntityId robot_target;
    std::vector<PropertyList> cells;
  };
  std::vector<std::string> labels;
  std::vector<Row> rows;
  std::vector<Transcript> transcripts;  // one per column
};

// Runs are independent and share only the immutable domain, so each column
// gets its own thread.
inline ComparisonTable compare_models(const ScenarioScript &script,
                                      std::span<const ForgettingPolicy> policies,
                                      const Domain &domain,
                                      const SessionConfig &base = {}) {
  if (policies.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "compare needs at least one policy");
  }
  validate_scenario(script, domain);
  std::vector<std::future<Transcript>> runs;
  for (const auto &policy : policies) {
    SessionConfig config = base;
    config.policy = policy;
    runs.push_back(std::async(std::launch::async, [&script, &domain, config] {
      return run_scenario(script, config, domain);
    }));
  }
  ComparisonTable table;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    table.labels.push_back(policies[i].label());
    table.transcripts.push_back(runs[i].get());
  }
  for (const auto &turn : script.turns) {
    ComparisonTable::Row row;
    row.turn = turn.index;
    row.robot_target = turn.robot_target;
    for (const auto &t : table.transcripts) {
      const PhaseRecord *r = t.find(turn.index, Phase::kRobot);
      row.cells.push_back(domain.canonical(r->description->properties()));
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

inline std::string render_cell(const PropertyList &props, const Domain &domain,
                               SymbolStyle style) {
  std::string out;
  for (const auto &p : props) {
    if (!out.empty()) out += ", ";
    out += domain.display(p, style);
  }
  return out;
}

inline std::string to_csv(const ComparisonTable &table, const Domain &domain,
                          SymbolStyle style = SymbolStyle::kShort) {
  std::ostringstream os;
  os << "turn,robot_target";
  for (const auto &l : table.labels) os << ",\"" << l << '"';
  os << "\n";
  for (const auto &row : table.rows) {
    os << row.turn << ',' << row.robot_target;
    for (const auto &cell : row.cells) {
      os << ",\"" << render_cell(cell, domain, style) << '"';
    }
    os << "\n";
  }
  return os.str();
}

inline std::string to_pretty(const ComparisonTable &table, const Domain &domain,
                             SymbolStyle style = SymbolStyle::kShort) {
  std::vector<std::vector<std::string>> grid;
  std::vector<std::string> head = {"turn", "face"};
  head.insert(head.end(), table.labels.begin(), table.labels.end());
  grid.push_back(head);
  for (const auto &row : table.rows) {
    std::vector<std::string> line = {std::to_string(row.turn), row.robot_target.str()};
    for (const auto &cell : row.cells) line.push_back(render_cell(cell, domain, style));
    grid.push_back(line);
  }
  std::vector<std::size_t> width(head.size(), 0);
  for (const auto &line : grid) {
    for (std::size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());
  }
  std::ostringstream os;
  for (const auto &line : grid) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      os << line[i];
      if (i + 1 < line.size()) os << std::string(width[i] - line[i].size() + 2, ' ');
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace wmreg
