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

// Generated-case property checks shared by the unit suite and the acceptance
// binary. Each check runs `cases` seeded cases and returns an empty string on
// success, otherwise a description of the first failing case.

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "support/fixtures.hpp"
#include "support/oracle.hpp"

namespace wmreg::properties {

// Returns from the enclosing check with a message built from the stream args.
#define WMREG_CHECK(cond, ...)                              \
  do {                                                      \
    if (!(cond)) {                                          \
      std::ostringstream wmreg_msg_;                        \
      wmreg_msg_ << #cond << ": " << __VA_ARGS__;           \
      return wmreg_msg_.str();                              \
    }                                                       \
  } while (0)

using testing::faces16;
using testing::random_candidates;
using testing::random_domain;

inline ForgettingPolicy random_policy(std::mt19937 &rng) {
  std::uniform_int_distribution<int> kind(0, 3), period(1, 20), cap(0, 4);
  Millis delta{period(rng) * 500};
  switch (kind(rng)) {
    case 0: return ForgettingPolicy::None();
    case 1: return ForgettingPolicy::Decay(delta);
    case 2: return ForgettingPolicy::Interference(cap(rng));
    default: return ForgettingPolicy::Both(delta, cap(rng));
  }
}

inline oracle::SteppedMemory stepped_for(const ForgettingPolicy &p) {
  std::optional<std::int64_t> period;
  std::optional<std::size_t> cap;
  if (p.has_decay()) period = p.decay_period().count();
  if (p.has_capacity()) cap = p.capacity();
  return oracle::SteppedMemory(period, cap);
}

// One random operation against both the library and the stepped oracle.
struct MemoryDriver {
  explicit MemoryDriver(ForgettingPolicy p) : wm(p), ref(stepped_for(p)) {}

  void step(std::mt19937 &rng) {
    std::uniform_int_distribution<int> op(0, 2), ent(0, 3), prop(0, 5), len(0, 5), dt(0, 15000);
    EntityId e("e" + std::to_string(ent(rng)));
    if (op(rng) < 2) {
      PropertyList ps;
      for (int n = len(rng); n > 0; --n) ps.push_back(PropertyId("p" + std::to_string(prop(rng))));
      wm.encode(e, ps);
      ref.encode(e, dedupe_keep_last<PropertyId>(ps));
    } else {
      Millis to = wm.now() + Millis{dt(rng)};
      wm.decay_tick(to);
      ref.tick_to(to.count());
    }
  }

  WorkingMemory wm;
  oracle::SteppedMemory ref;
};

inline std::string queues_duplicate_free(int cases) {
  for (int seed = 0; seed < cases; ++seed) {
    std::mt19937 rng(seed);
    MemoryDriver d(random_policy(rng));
    for (int i = 0; i < 60; ++i) {
      d.step(rng);
      for (const auto &[e, q] : d.wm.buffers()) {
        std::set<PropertyId> seen(q.items().begin(), q.items().end());
        WMREG_CHECK(seen.size() == q.size(), "seed " << seed);
      }
    }
  }
  return "";
}

inline std::string capacity_never_exceeded(int cases) {
  for (int seed = 0; seed < cases; ++seed) {
    std::mt19937 rng(1000 + seed);
    std::uniform_int_distribution<int> cap(0, 4), pick(0, 1);
    std::size_t alpha = cap(rng);
    ForgettingPolicy p = pick(rng) ? ForgettingPolicy::Interference(alpha)
                                   : ForgettingPolicy::Both(Millis{3000}, alpha);
    MemoryDriver d(p);
    for (int i = 0; i < 60; ++i) {
      d.step(rng);
      for (const auto &[e, q] : d.wm.buffers()) WMREG_CHECK(q.size() <= alpha, "seed " << seed);
    }
  }
  return "";
}

inline std::string decay_empties_after_idle(int cases) {
  for (int seed = 0; seed < cases; ++seed) {
    std::mt19937 rng(2000 + seed);
    std::uniform_int_distribution<int> period(1, 20);
    Millis delta{period(rng) * 500};
    MemoryDriver d(ForgettingPolicy::Decay(delta));
    for (int i = 0; i < 40; ++i) d.step(rng);
    std::size_t n = 0;
    for (const auto &[e, q] : d.wm.buffers()) n = std::max(n, q.size());
    d.wm.decay_tick(d.wm.now() + delta * static_cast<int>(n));
    for (const auto &[e, q] : d.wm.buffers()) WMREG_CHECK(q.empty(), "seed " << seed);
  }
  return "";
}

inline std::string tick_idempotent_and_catch_up(int cases) {
  for (int seed = 0; seed < cases; ++seed) {
    std::mt19937 rng(3000 + seed);
    ForgettingPolicy p = random_policy(rng);
    MemoryDriver d(p);
    for (int i = 0; i < 30; ++i) d.step(rng);

    WorkingMemory once = d.wm, many = d.wm;
    std::uniform_int_distribution<int> span(0, 60000);
    Millis end = d.wm.now() + Millis{span(rng)};
    once.decay_tick(end);
    std::vector<Millis> stops;
    for (int k = 0; k < 5; ++k) stops.push_back(d.wm.now() + Millis{span(rng)});
    std::sort(stops.begin(), stops.end());
    for (Millis s : stops) {
      if (s <= end) many.decay_tick(s);
    }
    many.decay_tick(end);
    many.decay_tick(end);
    WMREG_CHECK(once.buffers().size() == many.buffers().size(), "");
    for (const auto &[e, q] : once.buffers()) {
      WMREG_CHECK(once.snapshot(e) == many.snapshot(e), "seed " << seed);
    }

    // The library and the boundary-by-boundary simulation agree throughout.
    for (int i = 0; i < 30; ++i) {
      d.step(rng);
      for (const auto &[e, q] : d.wm.buffers()) {
        WMREG_CHECK(d.wm.snapshot(e) == d.ref.snapshot(e), "seed " << seed << " " << p.label());
      }
    }
  }
  return "";
}

inline std::string sd_pia_empty_memory_is_pia(int cases) {
  for (int seed = 0; seed < cases; ++seed) {
    std::mt19937 rng(4000 + seed);
    Domain d = random_domain(rng, 3 + seed % 10, 2 + seed % 4);
    const EntityId &target = d.entities()[seed % d.entities().size()];
    EntityList cands = random_candidates(rng, d, target);
    WorkingMemory wm;
    Description a = sd_pia(d, target, cands, wm);
    Description b = pia(d, target, cands);
    WMREG_CHECK(a.selected.size() == b.selected.size(), "seed " << seed);
    for (std::size_t i = 0; i < a.selected.size(); ++i) {
      WMREG_CHECK(a.selected[i].property == b.selected[i].property, "seed " << seed);
      WMREG_CHECK(a.selected[i].source == Provenance::kLongTermMemory, "");
    }
    WMREG_CHECK(a.fully_discriminating == b.fully_discriminating, "");
  }
  return "";
}

inline std::string discriminating_outputs_verified(int cases) {
  for (int seed = 0; seed < cases; ++seed) {
    std::mt19937 rng(5000 + seed);
    Domain d = random_domain(rng, 3 + seed % 12, 2 + seed % 4);
    const EntityId &target = d.entities()[seed % d.entities().size()];
    EntityList cands = random_candidates(rng, d, target);
    WorkingMemory wm;
    std::uniform_int_distribution<std::size_t> any(0, d.preference().size() - 1);
    PropertyList cached;
    for (int k = 0; k < 3; ++k) cached.push_back(d.preference()[any(rng)]);
    wm.encode(target, cached);

    std::vector<Description> outs = {pia(d, target, cands), greedy(d, target, cands),
                                     sd_pia(d, target, cands, wm)};
    auto min = oracle::minimum_description_size(d, target, cands);
    if (min) outs.push_back(full_brevity(d, target, cands));
    for (const auto &desc : outs) {
      bool brute = oracle::discriminates(d, target, desc.properties(), cands);
      if (desc.fully_discriminating) WMREG_CHECK(brute, "seed " << seed);
      // Only an indistinguishable target may come back undiscriminated.
      if (!desc.fully_discriminating) WMREG_CHECK(!(min.has_value()), "seed " << seed);
    }
  }
  // Robot phases of generated transcripts.
  std::mt19937 rng(5999);
  const Domain &d = faces16();
  for (int run = 0; run < 20; ++run) {
    ScenarioScript s = testing::table1_script();
    for (auto &t : s.turns) {
      std::uniform_int_distribution<int> f(1, 16);
      t.robot_target = testing::face(f(rng));
    }
    SessionConfig c;
    c.policy = random_policy(rng);
    Transcript t = run_scenario(s, c, d);
    for (const auto *r : t.robot_phases()) {
      if (r->description->fully_discriminating) {
        WMREG_CHECK(oracle::discriminates(d, r->target, r->description->properties(), s.candidates), "");
      }
    }
  }
  return "";
}

inline EntityList random_fixture_candidates(std::mt19937 &rng, const EntityId &target) {
  return random_candidates(rng, faces16(), target);
}

inline std::string full_brevity_minimal(int cases) {
  std::mt19937 rng(6000);
  for (int i = 0; i < cases; ++i) {
    const EntityId target = testing::face(1 + i % 16);
    EntityList cands = random_fixture_candidates(rng, target);
    auto min = oracle::minimum_description_size(faces16(), target, cands);
    if (!min) continue;
    Description fb = full_brevity(faces16(), target, cands);
    WMREG_CHECK(fb.selected.size() == *min, "case " << i);
    WMREG_CHECK(oracle::discriminates(faces16(), target, fb.properties(), cands), "");
  }
  return "";
}

inline std::string brevity_greedy_incremental_order(int cases) {
  std::mt19937 rng(7000);
  int checked = 0;
  for (int i = 0; checked < cases; ++i) {
    const EntityId target = testing::face(1 + i % 16);
    EntityList cands = random_fixture_candidates(rng, target);
    if (!oracle::minimum_description_size(faces16(), target, cands)) continue;
    std::size_t fb = full_brevity(faces16(), target, cands).selected.size();
    std::size_t g = greedy(faces16(), target, cands).selected.size();
    std::size_t p = pia(faces16(), target, cands).selected.size();
    WMREG_CHECK(fb <= g, "case " << i);
    WMREG_CHECK(g <= p, "case " << i);
    ++checked;
  }
  return "";
}

inline std::string transcript_replay_hash_equality(int cases) {
  const Domain &d = faces16();
  for (int seed = 0; seed < cases; ++seed) {
    std::mt19937 rng(8000 + seed);
    std::uniform_int_distribution<int> f(1, 16), len(1, 4), gap(0, 20), turns(1, 8), coin(0, 1);
    ScenarioScript s;
    s.candidates = d.entities();
    s.inter_turn = Millis{gap(rng) * 1000};
    s.resolution = coin(rng) ? ResolutionMode::kExhaustive : ResolutionMode::kShortCircuit;
    for (int t = turns(rng); t > 0; --t) {
      Turn turn;
      turn.index = static_cast<int>(s.turns.size()) + 1;
      turn.human_target = testing::face(f(rng));
      PropertyList own = d.properties_of(turn.human_target);
      std::shuffle(own.begin(), own.end(), rng);
      own.resize(std::min<std::size_t>(own.size(), len(rng)));
      turn.human_props = own;
      turn.robot_target = testing::face(f(rng));
      s.turns.push_back(turn);
    }
    SessionConfig c;
    c.policy = random_policy(rng);
    c.wm_order = coin(rng) ? WmOrder::kLruFirst : WmOrder::kMruFirst;
    Transcript t = run_scenario(s, c, d);
    std::string text = to_ldjson(t, d);
    WMREG_CHECK(replay_matches(text, d), "seed " << seed);
    WMREG_CHECK(transcript_hash(run_scenario(s, c, d), d) == transcript_hash(t, d), "");
  }
  return "";
}

#undef WMREG_CHECK

}  // namespace wmreg::properties
