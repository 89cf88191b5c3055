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
#include <cstddef>
#include <set>
#include <span>
#include <vector>

#include "wmreg/domain.hpp"
#include "wmreg/error.hpp"
#include "wmreg/ids.hpp"
#include "wmreg/working_memory.hpp"

namespace wmreg {

enum class Provenance { kWorkingMemory, kLongTermMemory };

inline const char *provenance_name(Provenance p) {
  return p == Provenance::kWorkingMemory ? "WM" : "LTM";
}

enum class Verdict {
  kSelected,
  kRejected,      // holds for the target but rules out no remaining distractor
  kInapplicable,  // does not hold for the target
};

struct Consideration {
  PropertyId property;
  Provenance source;
  Verdict verdict;
  std::size_t ruled_out = 0;
};

struct SelectedProperty {
  PropertyId property;
  Provenance source;

  friend bool operator==(const SelectedProperty &,
                         const SelectedProperty &) = default;
};

// Content of a referring expression. `selected` is in selection order;
// `considered` logs every property the algorithm looked at.
struct Description {
  EntityId target;
  std::vector<SelectedProperty> selected;
  std::vector<Consideration> considered;
  bool fully_discriminating = false;

  PropertyList properties() const {
    PropertyList out;
    for (const auto &s : selected) out.push_back(s.property);
    return out;
  }

  const Consideration *find_consideration(const PropertyId &p) const {
    for (const auto &c : considered) {
      if (c.property == p) return &c;
    }
    return nullptr;
  }

  bool rejected(const PropertyId &p) const {
    const auto *c = find_consideration(p);
    return c && c->verdict == Verdict::kRejected;
  }
};

// Order in which SD-PIA walks the target's WM buffer.
enum class WmOrder { kLruFirst, kMruFirst };

struct SdPiaOptions {
  WmOrder order = WmOrder::kLruFirst;
  // Distractor priming and self-priming side-effects.
  bool prime = true;
};

namespace detail {

inline EntityList distractors_of(const Domain &domain, const EntityId &target,
                                 std::span<const EntityId> candidates) {
  if (!domain.has_entity(target)) throw Error(ErrorCode::kUnknownSymbol, target.str());
  bool found = false;
  EntityList out;
  std::set<EntityId> seen;
  for (const auto &c : candidates) {
    if (c == target) {
      found = true;
      continue;
    }
    if (!domain.has_entity(c)) throw Error(ErrorCode::kUnknownSymbol, c.str());
    if (seen.insert(c).second) out.push_back(c);
  }
  if (!found) {
    throw Error(ErrorCode::kBadTarget, target.str() + " is not a candidate");
  }
  return out;
}

// Shared state of the incremental strategies: a property is kept iff it holds
// for the target and removes at least one remaining distractor.
class IncrementalRun {
 public:
  IncrementalRun(const Domain &domain, EntityId target, EntityList distractors,
                 WorkingMemory *prime_into)
      : domain_(domain), wm_(prime_into) {
    desc_.target = std::move(target);
    remaining_ = std::move(distractors);
  }

  bool done() const { return remaining_.empty(); }
  bool seen(const PropertyId &p) const { return seen_.contains(p); }

  void consider(const PropertyId &p, Provenance source) {
    seen_.insert(p);
    if (!domain_.holds(desc_.target, p)) {
      desc_.considered.push_back({p, source, Verdict::kInapplicable, 0});
      return;
    }
    EntityList keep;
    for (const auto &d : remaining_) {
      if (domain_.holds(d, p)) keep.push_back(d);
    }
    // Affirmed to hold for these distractors, so p cannot rule them out.
    if (wm_) {
      const PropertyId one[] = {p};
      for (const auto &d : keep) wm_->encode(d, one);
    }
    std::size_t ruled_out = remaining_.size() - keep.size();
    if (ruled_out > 0) {
      desc_.selected.push_back({p, source});
      desc_.considered.push_back({p, source, Verdict::kSelected, ruled_out});
      remaining_ = std::move(keep);
    } else {
      desc_.considered.push_back({p, source, Verdict::kRejected, 0});
    }
  }

  Description finish() {
    desc_.fully_discriminating = remaining_.empty();
    if (wm_ && !desc_.selected.empty()) {
      wm_->encode(desc_.target, desc_.properties());
    }
    return std::move(desc_);
  }

 private:
  const Domain &domain_;
  WorkingMemory *wm_;
  Description desc_;
  EntityList remaining_;
  std::set<PropertyId> seen_;
};

}  // namespace detail

// Incremental Algorithm over the domain's preference ordering.
inline Description pia(const Domain &domain, const EntityId &target,
                       std::span<const EntityId> candidates) {
  detail::IncrementalRun run(domain, target,
                             detail::distractors_of(domain, target, candidates),
                             nullptr);
  for (const auto &p : domain.preference()) {
    if (run.done()) break;
    run.consider(p, Provenance::kLongTermMemory);
  }
  return run.finish();
}

// WM-first generation. Phase 1 walks the target's buffer; if distractors
// remain, phase 2 continues in preference order over properties phase 1 did
// not look at. With `options.prime`, every distractor a considered property is
// affirmed to hold for gets that property encoded, and the final selection is
// encoded for the target.
inline Description sd_pia(const Domain &domain, const EntityId &target,
                          std::span<const EntityId> candidates,
                          WorkingMemory &wm, const SdPiaOptions &options = {}) {
  EntityList distractors = detail::distractors_of(domain, target, candidates);
  PropertyList cached = wm.snapshot(target);
  if (options.order == WmOrder::kMruFirst) {
    std::reverse(cached.begin(), cached.end());
  }
  detail::IncrementalRun run(domain, target, std::move(distractors),
                             options.prime ? &wm : nullptr);
  for (const auto &p : cached) {
    if (run.done()) break;
    if (!domain.has_property(p)) continue;
    run.consider(p, Provenance::kWorkingMemory);
  }
  for (const auto &p : domain.preference()) {
    if (run.done()) break;
    if (run.seen(p)) continue;
    run.consider(p, Provenance::kLongTermMemory);
  }
  return run.finish();
}

// Distractors among `candidates` that every property in `props` holds for.
inline EntityList surviving_distractors(const Domain &domain,
                                        std::span<const PropertyId> props,
                                        const EntityId &target,
                                        std::span<const EntityId> candidates) {
  EntityList out;
  for (const auto &c : candidates) {
    if (c == target) continue;
    bool all = std::all_of(props.begin(), props.end(), [&](const PropertyId &p) {
      return domain.holds(c, p);
    });
    if (all) out.push_back(c);
  }
  return out;
}

// Minimum-cardinality discriminating description. Among equally short sets
// the one with the lexicographically least sorted rank vector wins.
inline Description full_brevity(const Domain &domain, const EntityId &target,
                                std::span<const EntityId> candidates) {
  EntityList distractors = detail::distractors_of(domain, target, candidates);
  Description desc;
  desc.target = target;
  if (distractors.empty()) {
    desc.fully_discriminating = true;
    return desc;
  }
  PropertyList own = domain.properties_of(target);  // preference order
  const std::size_t n = own.size();
  if (n > 24) {
    throw Error(ErrorCode::kInvalidArgument,
                "too many properties for exhaustive search");
  }
  std::vector<std::size_t> pick;
  for (std::size_t k = 1; k <= n; ++k) {
    // Combinations of k indices in lexicographic order.
    pick.resize(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = i;
    while (true) {
      PropertyList subset;
      for (auto i : pick) subset.push_back(own[i]);
      if (surviving_distractors(domain, subset, target, distractors).empty()) {
        for (const auto &p : subset) {
          desc.selected.push_back({p, Provenance::kLongTermMemory});
        }
        desc.fully_discriminating = true;
        return desc;
      }
      std::size_t i = k;
      while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  throw Error(ErrorCode::kIndistinguishable,
              target.str() + " cannot be told apart from its distractors");
}

// Repeatedly takes the target property that rules out the most remaining
// distractors; ties go to the more preferred property.
inline Description greedy(const Domain &domain, const EntityId &target,
                          std::span<const EntityId> candidates) {
  EntityList remaining = detail::distractors_of(domain, target, candidates);
  Description desc;
  desc.target = target;
  // Preference order, so a strict comparison settles ties.
  PropertyList own = domain.properties_of(target);
  std::set<PropertyId> used;
  while (!remaining.empty()) {
    const PropertyId *best = nullptr;
    std::size_t best_count = 0;
    for (const auto &p : own) {
      if (used.contains(p)) continue;
      std::size_t count = 0;
      for (const auto &d : remaining) {
        if (!domain.holds(d, p)) ++count;
      }
      if (count > best_count) {
        best = &p;
        best_count = count;
      }
    }
    if (!best) break;
    used.insert(*best);
    desc.selected.push_back({*best, Provenance::kLongTermMemory});
    desc.considered.push_back(
        {*best, Provenance::kLongTermMemory, Verdict::kSelected, best_count});
    EntityList keep;
    for (const auto &d : remaining) {
      if (domain.holds(d, *best)) keep.push_back(d);
    }
    remaining = std::move(keep);
  }
  desc.fully_discriminating = remaining.empty();
  return desc;
}

}  // namespace wmreg
