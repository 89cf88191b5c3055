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

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "wmreg/session.hpp"

namespace wmreg {

struct TurnAlignment {
  int turn = 0;
  EntityId target;
  std::size_t selected = 0;
  // Share of the robot's properties the human had already used for the same
  // face. Unset when the human never described that face before.
  std::optional<double> same_target;
  // Share the human had already used for any face. Unset before the first
  // human phase.
  std::optional<double> cross_entity;
};

struct AlignmentReport {
  std::vector<TurnAlignment> turns;
  double same_target = 0;   // mean over turns with a same_target value
  double cross_entity = 0;  // mean over turns with a cross_entity value
};

// Human-to-robot property reuse measured on a transcript.
inline AlignmentReport alignment_score(const Transcript &transcript) {
  if (transcript.records.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "empty transcript");
  }
  AlignmentReport report;
  std::map<EntityId, std::set<PropertyId>> said_about;
  std::set<PropertyId> said_any;
  bool human_spoke = false;
  double same_sum = 0, cross_sum = 0;
  std::size_t same_n = 0, cross_n = 0;

  auto share = [](const PropertyList &chosen, const std::set<PropertyId> &pool) {
    if (chosen.empty()) return 0.0;
    std::size_t hit = 0;
    for (const auto &p : chosen) hit += pool.contains(p) ? 1 : 0;
    return static_cast<double>(hit) / static_cast<double>(chosen.size());
  };

  for (const auto &r : transcript.records) {
    if (r.phase == Phase::kHuman) {
      human_spoke = true;
      said_about[r.target].insert(r.uttered.begin(), r.uttered.end());
      said_any.insert(r.uttered.begin(), r.uttered.end());
      continue;
    }
    TurnAlignment ta;
    ta.turn = r.turn;
    ta.target = r.target;
    PropertyList chosen = r.description->properties();
    ta.selected = chosen.size();
    if (auto it = said_about.find(r.target); it != said_about.end()) {
      ta.same_target = share(chosen, it->second);
      same_sum += *ta.same_target;
      ++same_n;
    }
    if (human_spoke) {
      ta.cross_entity = share(chosen, said_any);
      cross_sum += *ta.cross_entity;
      ++cross_n;
    }
    report.turns.push_back(ta);
  }
  report.same_target = same_n ? same_sum / static_cast<double>(same_n) : 0.0;
  report.cross_entity = cross_n ? cross_sum / static_cast<double>(cross_n) : 0.0;
  return report;
}

}  // namespace wmreg
