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
#include <string>
#include <vector>

#include "wmreg/clock.hpp"
#include "wmreg/domain.hpp"
#include "wmreg/domain_io.hpp"
#include "wmreg/error.hpp"
#include "wmreg/resolve.hpp"

namespace wmreg {

// One round: the human describes a face, then the robot describes another.
struct Turn {
  int index = 0;  // 1-based
  EntityId human_target;
  PropertyList human_props;  // utterance order
  EntityId robot_target;

  friend bool operator==(const Turn &, const Turn &) = default;
};

struct ScenarioScript {
  EntityList candidates;
  Millis inter_turn{0};
  std::vector<Turn> turns;
  ResolutionMode resolution = ResolutionMode::kExhaustive;

  friend bool operator==(const ScenarioScript &, const ScenarioScript &) = default;
};

// Checks targets and properties against the domain; throws on the first
// problem found.
inline void validate_scenario(const ScenarioScript &s, const Domain &domain) {
  if (s.candidates.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "scenario has no candidates");
  }
  auto is_candidate = [&](const EntityId &e) {
    return std::find(s.candidates.begin(), s.candidates.end(), e) !=
           s.candidates.end();
  };
  for (const auto &c : s.candidates) {
    if (!domain.has_entity(c)) throw Error(ErrorCode::kUnknownEntity, c.str());
  }
  for (const auto &t : s.turns) {
    std::string where = "turn " + std::to_string(t.index) + ": ";
    if (t.human_props.empty()) {
      throw Error(ErrorCode::kInvalidArgument, where + "human description is empty");
    }
    for (const auto &e : {t.human_target, t.robot_target}) {
      if (!domain.has_entity(e)) throw Error(ErrorCode::kUnknownEntity, where + e.str());
      if (!is_candidate(e)) {
        throw Error(ErrorCode::kBadTarget, where + e.str() + " is not a candidate");
      }
    }
    for (const auto &p : t.human_props) {
      if (!domain.has_property(p)) throw Error(ErrorCode::kUnknownSymbol, where + p.str());
    }
  }
}

inline ojson seconds_json(Millis m) {
  if (m.count() % 1000 == 0) return ojson(m.count() / 1000);
  return ojson(millis_to_seconds(m));
}

inline ScenarioScript scenario_from_json(const ojson &j, const Domain &domain) {
  ScenarioScript s;
  for (const auto &c : detail::id_list<EntityId>(detail::require(j, "candidates"),
                                                 "candidates")) {
    s.candidates.push_back(c);
  }
  const ojson &gap = detail::require(j, "inter_turn_seconds");
  if (!gap.is_number()) throw Error(ErrorCode::kParse, "inter_turn_seconds must be a number");
  s.inter_turn = seconds_to_millis(gap.get<double>());
  if (j.contains("resolution")) {
    s.resolution = parse_resolution_mode(j.at("resolution").get<std::string>());
  }
  const ojson &turns = detail::require(j, "turns");
  if (!turns.is_array()) throw Error(ErrorCode::kParse, "turns must be an array");
  int index = 0;
  for (const auto &tj : turns) {
    Turn t;
    t.index = ++index;
    t.human_target = EntityId(detail::require(tj, "human_target").get<std::string>());
    for (const auto &p : detail::require(tj, "human_props")) {
      t.human_props.push_back(domain.resolve_property(p.get<std::string>()));
    }
    t.robot_target = EntityId(detail::require(tj, "robot_target").get<std::string>());
    s.turns.push_back(std::move(t));
  }
  validate_scenario(s, domain);
  return s;
}

inline ojson to_json(const ScenarioScript &s, const Domain &domain,
                     SymbolStyle style = SymbolStyle::kLong) {
  ojson j;
  j["candidates"] = ojson::array();
  for (const auto &c : s.candidates) j["candidates"].push_back(c.str());
  j["inter_turn_seconds"] = seconds_json(s.inter_turn);
  j["resolution"] = resolution_mode_name(s.resolution);
  j["turns"] = ojson::array();
  for (const auto &t : s.turns) {
    ojson tj;
    tj["human_target"] = t.human_target.str();
    tj["human_props"] = ojson::array();
    for (const auto &p : t.human_props) tj["human_props"].push_back(domain.display(p, style));
    tj["robot_target"] = t.robot_target.str();
    j["turns"].push_back(tj);
  }
  return j;
}

inline ScenarioScript load_scenario(const std::string &path, const Domain &domain) {
  try {
    return scenario_from_json(detail::read_json_file(path), domain);
  } catch (const nlohmann::json::exception &e) {
    throw Error(ErrorCode::kParse, path + ": " + e.what());
  }
}

}  // namespace wmreg
