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

#include <functional>
#include <vector>

#include "wmreg/clock.hpp"
#include "wmreg/error.hpp"
#include "wmreg/session.hpp"

namespace wmreg {

// "After `phase` of `turn`, the buffer for `entity` holds `expected`, LRU
// first."
struct WmTarget {
  int turn = 0;
  Phase phase = Phase::kHuman;
  EntityId entity;
  PropertyList expected;
};

struct TimingGrid {
  Millis first{1000};
  Millis last{60000};
  Millis step{1000};
};

struct Calibration {
  std::vector<Millis> feasible;
  Millis chosen{0};
  Millis run_first{0}, run_last{0};  // longest contiguous feasible run
};

inline bool meets_targets(const Transcript &t, std::span<const WmTarget> targets) {
  for (const auto &w : targets) {
    const PhaseRecord *r = t.find(w.turn, w.phase);
    if (!r) return false;
    const PropertyList *snap = snapshot_of(*r, w.entity);
    if (!snap || *snap != w.expected) return false;
  }
  return true;
}

// Grid points for which `ok` holds, in grid order.
inline std::vector<Millis> feasible_timings(const TimingGrid &grid,
                                            const std::function<bool(Millis)> &ok) {
  if (grid.step <= Millis{0} || grid.first > grid.last || grid.first <= Millis{0}) {
    throw Error(ErrorCode::kInvalidArgument, "bad timing grid");
  }
  std::vector<Millis> out;
  for (Millis t = grid.first; t <= grid.last; t += grid.step) {
    if (ok(t)) out.push_back(t);
  }
  return out;
}

// Picks the middle point of the longest contiguous feasible run, the earliest
// run on ties. Lower middle for runs of even length.
inline Calibration choose_timing(std::vector<Millis> feasible, const TimingGrid &grid) {
  if (feasible.empty()) throw Error(ErrorCode::kNoFeasibleTiming, "no inter-turn time meets the targets");
  Calibration c;
  c.feasible = std::move(feasible);
  std::size_t best_begin = 0, best_len = 0;
  for (std::size_t i = 0; i < c.feasible.size();) {
    std::size_t j = i + 1;
    while (j < c.feasible.size() && c.feasible[j] - c.feasible[j - 1] == grid.step) ++j;
    if (j - i > best_len) {
      best_begin = i;
      best_len = j - i;
    }
    i = j;
  }
  c.run_first = c.feasible[best_begin];
  c.run_last = c.feasible[best_begin + best_len - 1];
  c.chosen = c.feasible[best_begin + (best_len - 1) / 2];
  return c;
}

// Searches the inter-turn time under which `script`, played with `config`,
// reaches every WM target.
inline Calibration calibrate_decay_timing(ScenarioScript script, const SessionConfig &config,
                                          const Domain &domain,
                                          std::span<const WmTarget> targets,
                                          const TimingGrid &grid = {}) {
  if (targets.empty()) throw Error(ErrorCode::kInvalidArgument, "no calibration targets");
  auto feasible = feasible_timings(grid, [&](Millis t) {
    script.inter_turn = t;
    return meets_targets(run_scenario(script, config, domain), targets);
  });
  return choose_timing(std::move(feasible), grid);
}

}  // namespace wmreg
