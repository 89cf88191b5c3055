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
#include <span>
#include <string>
#include <vector>

#include "wmreg/domain.hpp"
#include "wmreg/error.hpp"
#include "wmreg/ids.hpp"
#include "wmreg/working_memory.hpp"

namespace wmreg {

enum class ResolutionMode {
  // Every candidate is tested against every property.
  kExhaustive,
  // A candidate stops being tested at its first failing property, so only
  // properties affirmed before it was ruled out are primed.
  kShortCircuit,
};

inline const char *resolution_mode_name(ResolutionMode m) {
  return m == ResolutionMode::kExhaustive ? "exhaustive" : "short_circuit";
}

inline ResolutionMode parse_resolution_mode(const std::string &s) {
  if (s == "exhaustive") return ResolutionMode::kExhaustive;
  if (s == "short_circuit") return ResolutionMode::kShortCircuit;
  throw Error(ErrorCode::kParse, "unknown resolution mode '" + s + "'");
}

struct Affirmation {
  EntityId entity;
  PropertyId property;

  friend bool operator==(const Affirmation &, const Affirmation &) = default;
};

struct ResolutionResult {
  enum class Kind { kUnique, kAmbiguous, kNoReferent };

  Kind kind = Kind::kNoReferent;
  std::optional<EntityId> referent;
  EntityList survivors;
  std::vector<Affirmation> affirmations;  // candidate order, then property order
};

inline const char *resolution_kind_name(ResolutionResult::Kind k) {
  switch (k) {
    case ResolutionResult::Kind::kUnique: return "unique";
    case ResolutionResult::Kind::kAmbiguous: return "ambiguous";
    case ResolutionResult::Kind::kNoReferent: return "no_referent";
  }
  return "no_referent";
}

// Distractor elimination over `candidates` with no memory side-effects.
inline ResolutionResult resolve(const Domain &domain,
                                std::span<const PropertyId> props,
                                std::span<const EntityId> candidates,
                                ResolutionMode mode = ResolutionMode::kExhaustive) {
  if (props.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "resolve needs at least one property");
  }
  ResolutionResult result;
  for (const auto &c : candidates) {
    bool survives = true;
    for (const auto &p : props) {
      if (domain.holds(c, p)) {
        result.affirmations.push_back({c, p});
      } else {
        survives = false;
        if (mode == ResolutionMode::kShortCircuit) break;
      }
    }
    if (survives) result.survivors.push_back(c);
  }
  if (result.survivors.size() == 1) {
    result.kind = ResolutionResult::Kind::kUnique;
    result.referent = result.survivors.front();
  } else if (result.survivors.empty()) {
    result.kind = ResolutionResult::Kind::kNoReferent;
  } else {
    result.kind = ResolutionResult::Kind::kAmbiguous;
  }
  return result;
}

// As above, then encodes every affirmed property into that candidate's buffer
// in property order.
inline ResolutionResult resolve(const Domain &domain,
                                std::span<const PropertyId> props,
                                std::span<const EntityId> candidates,
                                WorkingMemory &wm,
                                ResolutionMode mode = ResolutionMode::kExhaustive) {
  ResolutionResult result = resolve(domain, props, candidates, mode);
  std::size_t i = 0;
  const auto &aff = result.affirmations;
  while (i < aff.size()) {
    PropertyList batch;
    std::size_t j = i;
    for (; j < aff.size() && aff[j].entity == aff[i].entity; ++j) {
      batch.push_back(aff[j].property);
    }
    wm.encode(aff[i].entity, batch);
    i = j;
  }
  return result;
}

}  // namespace wmreg
