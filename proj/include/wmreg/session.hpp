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

#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "wmreg/domain.hpp"
#include "wmreg/domain_io.hpp"
#include "wmreg/hash.hpp"
#include "wmreg/policy.hpp"
#include "wmreg/reg.hpp"
#include "wmreg/resolve.hpp"
#include "wmreg/scenario.hpp"
#include "wmreg/working_memory.hpp"

namespace wmreg {

struct SessionConfig {
  ForgettingPolicy policy;
  WmOrder wm_order = WmOrder::kLruFirst;
  ResolutionMode resolution = ResolutionMode::kExhaustive;
  WorkingMemoryOptions memory;
};

enum class Phase { kHuman, kRobot };

inline const char *phase_name(Phase p) {
  return p == Phase::kHuman ? "human" : "robot";
}

using MemorySnapshot = std::vector<std::pair<EntityId, PropertyList>>;

struct PhaseRecord {
  int turn = 0;
  Phase phase = Phase::kHuman;
  EntityId target;
  PropertyList uttered;                     // human phase
  std::optional<ResolutionResult> resolution;  // human phase
  std::optional<Description> description;      // robot phase
  MemorySnapshot wm;  // every domain entity, after the phase
  Millis t{0};

  const char *speaker() const { return phase_name(phase); }
};

struct TranscriptHeader {
  SessionConfig config;
  Millis inter_turn{0};
  std::string domain_hash;
  std::optional<ScenarioScript> scenario;
};

struct Transcript {
  TranscriptHeader header;
  std::vector<PhaseRecord> records;

  std::vector<const PhaseRecord *> robot_phases() const {
    std::vector<const PhaseRecord *> out;
    for (const auto &r : records) {
      if (r.phase == Phase::kRobot) out.push_back(&r);
    }
    return out;
  }

  const PhaseRecord *find(int turn, Phase phase) const {
    for (const auto &r : records) {
      if (r.turn == turn && r.phase == phase) return &r;
    }
    return nullptr;
  }
};

inline const PropertyList *snapshot_of(const PhaseRecord &r, const EntityId &e) {
  for (const auto &[entity, props] : r.wm) {
    if (entity == e) return &props;
  }
  return nullptr;
}

// The reference-game engine shared by scripted runs and the REPL. Each human
// phase opens a new turn.
class Session {
 public:
  Session(const Domain &domain, EntityList candidates, SessionConfig config)
      : domain_(domain),
        candidates_(std::move(candidates)),
        config_(config),
        wm_(config.policy, config.memory) {
    wm_.set_known_entities(domain_.entities());
    transcript_.header.config = config_;
    transcript_.header.domain_hash = domain_hash(domain_);
  }

  const Domain &domain() const noexcept { return domain_; }
  const EntityList &candidates() const noexcept { return candidates_; }
  const SessionConfig &config() const noexcept { return config_; }
  const WorkingMemory &memory() const noexcept { return wm_; }
  const Transcript &transcript() const noexcept { return transcript_; }
  Transcript &mutable_transcript() noexcept { return transcript_; }
  int turn() const noexcept { return turn_; }

  void tick(Millis elapsed) { wm_.advance_by(elapsed); }

  // Resolution with priming, then the full description is encoded for the
  // described face.
  const PhaseRecord &human_turn(const EntityId &target, const PropertyList &props) {
    if (!domain_.has_entity(target)) throw Error(ErrorCode::kUnknownEntity, target.str());
    ++turn_;
    PhaseRecord rec;
    rec.turn = turn_;
    rec.phase = Phase::kHuman;
    rec.target = target;
    rec.uttered = props;
    rec.resolution = resolve(domain_, props, candidates_, wm_, config_.resolution);
    wm_.encode(target, props);
    return finish(std::move(rec));
  }

  // The robot describes `target`: SD-PIA with priming, or plain PIA when the
  // policy keeps nothing in WM.
  const PhaseRecord &robot_turn(const EntityId &target) {
    if (turn_ == 0) turn_ = 1;
    PhaseRecord rec;
    rec.turn = turn_;
    rec.phase = Phase::kRobot;
    rec.target = target;
    if (config_.policy.kind() == ForgettingPolicy::Kind::kNone) {
      rec.description = pia(domain_, target, candidates_);
    } else {
      rec.description = sd_pia(domain_, target, candidates_, wm_,
                               {config_.wm_order, /*prime=*/true});
    }
    return finish(std::move(rec));
  }

 private:
  const PhaseRecord &finish(PhaseRecord rec) {
    for (const auto &e : domain_.entities()) rec.wm.emplace_back(e, wm_.snapshot(e));
    rec.t = wm_.now();
    transcript_.records.push_back(std::move(rec));
    return transcript_.records.back();
  }

  const Domain &domain_;
  EntityList candidates_;
  SessionConfig config_;
  WorkingMemory wm_;
  Transcript transcript_;
  int turn_ = 0;
};

// Replays `script`: every turn advances the clock, then runs the human and
// robot phases. A NoReferent resolution is recorded and play continues.
inline Transcript run_scenario(const ScenarioScript &script, SessionConfig config,
                               const Domain &domain) {
  validate_scenario(script, domain);
  config.resolution = script.resolution;
  Session session(domain, script.candidates, config);
  session.mutable_transcript().header.inter_turn = script.inter_turn;
  session.mutable_transcript().header.scenario = script;
  for (const auto &turn : script.turns) {
    session.tick(script.inter_turn);
    session.human_turn(turn.human_target, turn.human_props);
    session.robot_turn(turn.robot_target);
  }
  return session.transcript();
}

// ---- serialization ----------------------------------------------------------

inline const char *wm_order_name(WmOrder o) {
  return o == WmOrder::kLruFirst ? "lru_first" : "mru_first";
}

inline WmOrder parse_wm_order(const std::string &s) {
  if (s == "lru_first") return WmOrder::kLruFirst;
  if (s == "mru_first") return WmOrder::kMruFirst;
  throw Error(ErrorCode::kParse, "unknown wm order '" + s + "'");
}

inline const char *decay_origin_name(DecayOrigin o) {
  return o == DecayOrigin::kQueueCreation ? "queue_creation" : "last_encode";
}

inline DecayOrigin parse_decay_origin(const std::string &s) {
  if (s == "queue_creation") return DecayOrigin::kQueueCreation;
  if (s == "last_encode") return DecayOrigin::kLastEncode;
  throw Error(ErrorCode::kParse, "unknown decay origin '" + s + "'");
}

inline const char *verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kSelected: return "selected";
    case Verdict::kRejected: return "rejected";
    case Verdict::kInapplicable: return "inapplicable";
  }
  return "inapplicable";
}

inline ojson header_json(const TranscriptHeader &h, const Domain &domain,
                         SymbolStyle style) {
  const ForgettingPolicy &p = h.config.policy;
  ojson j;
  j["record"] = "header";
  j["policy"] = p.label();
  j["delta"] = p.has_decay() ? seconds_json(p.decay_period()) : ojson(nullptr);
  j["alpha"] = p.has_capacity() ? ojson(p.capacity()) : ojson(nullptr);
  j["inter_turn_seconds"] = seconds_json(h.inter_turn);
  j["wm_order"] = wm_order_name(h.config.wm_order);
  j["resolution"] = resolution_mode_name(h.config.resolution);
  j["decay_origin"] = decay_origin_name(h.config.memory.decay_origin);
  j["symbols"] = style == SymbolStyle::kShort ? "short" : "long";
  j["domain_hash"] = h.domain_hash;
  if (h.scenario) j["scenario"] = to_json(*h.scenario, domain, SymbolStyle::kLong);
  return j;
}

inline ojson record_json(const PhaseRecord &r, const Domain &domain,
                         SymbolStyle style) {
  ojson j;
  j["turn"] = r.turn;
  j["phase"] = phase_name(r.phase);
  j["speaker"] = r.speaker();
  j["target"] = r.target.str();
  j["props"] = ojson::array();
  if (r.phase == Phase::kHuman) {
    for (const auto &p : r.uttered) {
      j["props"].push_back({{"id", domain.display(p, style)}, {"provenance", "human"}});
    }
    const auto &res = *r.resolution;
    j["resolved"] = res.referent ? ojson(res.referent->str())
                                 : ojson(resolution_kind_name(res.kind));
  } else {
    const auto &d = *r.description;
    for (const auto &s : d.selected) {
      j["props"].push_back({{"id", domain.display(s.property, style)},
                            {"provenance", provenance_name(s.source)}});
    }
    j["fully_discriminating"] = d.fully_discriminating;
    j["considered"] = ojson::array();
    for (const auto &c : d.considered) {
      j["considered"].push_back({{"id", domain.display(c.property, style)},
                                 {"provenance", provenance_name(c.source)},
                                 {"verdict", verdict_name(c.verdict)}});
    }
  }
  j["wm"] = ojson::object();
  for (const auto &[entity, props] : r.wm) {
    ojson list = ojson::array();
    for (const auto &p : props) list.push_back(domain.display(p, style));
    j["wm"][entity.str()] = list;
  }
  j["t"] = seconds_json(r.t);
  return j;
}

// Line-delimited JSON: one header line, then one line per phase.
inline std::string to_ldjson(const Transcript &t, const Domain &domain,
                             SymbolStyle style = SymbolStyle::kShort) {
  std::string out = header_json(t.header, domain, style).dump() + "\n";
  for (const auto &r : t.records) out += record_json(r, domain, style).dump() + "\n";
  return out;
}

inline std::string transcript_hash(const Transcript &t, const Domain &domain) {
  return fingerprint(to_ldjson(t, domain, SymbolStyle::kLong));
}

// Flat per-phase summary.
inline std::string to_summary_csv(const Transcript &t, const Domain &domain,
                                  SymbolStyle style = SymbolStyle::kShort) {
  std::ostringstream os;
  os << "turn,phase,speaker,target,props,t\n";
  for (const auto &r : t.records) {
    PropertyList props = r.phase == Phase::kHuman ? r.uttered : r.description->properties();
    std::string cell;
    for (const auto &p : props) {
      if (!cell.empty()) cell += ", ";
      cell += domain.display(p, style);
    }
    os << r.turn << ',' << phase_name(r.phase) << ',' << r.speaker() << ','
       << r.target << ",\"" << cell << "\"," << format_seconds(r.t) << "\n";
  }
  return os.str();
}

struct ReplayInput {
  SessionConfig config;
  ScenarioScript scenario;
  SymbolStyle style = SymbolStyle::kShort;
  std::string domain_hash;
};

// Recovers the run configuration from a transcript's header line.
inline ReplayInput parse_transcript_header(const std::string &ldjson,
                                           const Domain &domain) {
  std::istringstream in(ldjson);
  std::string line;
  if (!std::getline(in, line)) throw Error(ErrorCode::kParse, "empty transcript");
  ojson h;
  try {
    h = ojson::parse(line);
  } catch (const nlohmann::json::exception &e) {
    throw Error(ErrorCode::kParse, std::string("transcript header: ") + e.what());
  }
  if (h.value("record", "") != "header" || !h.contains("scenario")) {
    throw Error(ErrorCode::kParse, "transcript has no replayable header");
  }
  ReplayInput r;
  r.config.policy = parse_policy(h.at("policy").get<std::string>());
  r.config.wm_order = parse_wm_order(h.at("wm_order").get<std::string>());
  r.config.resolution = parse_resolution_mode(h.at("resolution").get<std::string>());
  r.config.memory.decay_origin =
      parse_decay_origin(h.at("decay_origin").get<std::string>());
  r.style = h.at("symbols").get<std::string>() == "short" ? SymbolStyle::kShort
                                                          : SymbolStyle::kLong;
  r.domain_hash = h.at("domain_hash").get<std::string>();
  r.scenario = scenario_from_json(h.at("scenario"), domain);
  return r;
}

// Re-runs the configuration recorded in `ldjson`; true iff the regenerated
// transcript is byte-identical.
inline bool replay_matches(const std::string &ldjson, const Domain &domain) {
  ReplayInput in = parse_transcript_header(ldjson, domain);
  if (in.domain_hash != domain_hash(domain)) return false;
  Transcript again = run_scenario(in.scenario, in.config, domain);
  return fingerprint(to_ldjson(again, domain, in.style)) == fingerprint(ldjson);
}

}  // namespace wmreg
