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

#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "wmreg/clock.hpp"
#include "wmreg/error.hpp"
#include "wmreg/ids.hpp"
#include "wmreg/policy.hpp"
#include "wmreg/property_queue.hpp"

namespace wmreg {

// Where the decay countdown of a buffer starts.
enum class DecayOrigin {
  kQueueCreation,  // first encode; later encodes do not reset it
  kLastEncode,
};

struct WorkingMemoryOptions {
  DecayOrigin decay_origin = DecayOrigin::kQueueCreation;
};

// Per-entity WM buffers driven by a virtual clock.
//
// Decay is pull-based: decay_tick(now) applies every pop that fell due since
// the last tick, so ticking at t1 then t2 equals ticking once at t2.
//
// Not thread-safe; one owner mutates it at a time.
class WorkingMemory {
 public:
  explicit WorkingMemory(ForgettingPolicy policy = {},
                         WorkingMemoryOptions options = {})
      : policy_(policy), options_(options) {}

  // Restricts encode() to a known entity set; unknown ids then throw.
  void set_known_entities(std::span<const EntityId> entities) {
    known_ = std::set<EntityId>(entities.begin(), entities.end());
  }

  const ForgettingPolicy &policy() const noexcept { return policy_; }
  const WorkingMemoryOptions &options() const noexcept { return options_; }
  const VirtualClock &clock() const noexcept { return clock_; }
  Millis now() const noexcept { return clock_.now(); }

  // Refreshes each property in order (remove, then push to the back), then
  // applies the capacity limit if the policy has one. Duplicates in `props`
  // collapse to their last occurrence first.
  const PropertyQueue &encode(const EntityId &entity,
                              std::span<const PropertyId> props) {
    if (known_ && !known_->contains(entity)) {
      throw Error(ErrorCode::kUnknownEntity, entity.str());
    }
    auto [it, inserted] = buffers_.try_emplace(entity, clock_.now());
    PropertyQueue &queue = it->second;
    if (!inserted && options_.decay_origin == DecayOrigin::kLastEncode &&
        !props.empty()) {
      queue.restart_decay(clock_.now());
    }
    for (const auto &p : dedupe_keep_last(props)) queue.refresh(p);
    if (policy_.has_capacity()) enforce_capacity(queue, policy_.capacity());
    return queue;
  }

  const PropertyQueue &encode(const EntityId &entity,
                              std::initializer_list<PropertyId> props) {
    return encode(entity, std::span<const PropertyId>(props.begin(), props.size()));
  }

  // Advances the clock to `now`, popping the front of every buffer once per
  // elapsed decay period (counted from the buffer's origin).
  void decay_tick(Millis now) {
    clock_.advance_to(now);
    if (!policy_.has_decay()) return;
    const std::int64_t period = policy_.decay_period().count();
    for (auto &[entity, queue] : buffers_) {
      std::int64_t elapsed = (now - queue.created_at()).count();
      std::int64_t due = elapsed / period - queue.pops_applied();
      for (std::int64_t i = 0; i < due; ++i) {
        if (!queue.pop_front()) break;
      }
      if (due > 0) queue.record_pops(due);
    }
    if (policy_.has_capacity()) {
      for (auto &[entity, queue] : buffers_) {
        enforce_capacity(queue, policy_.capacity());
      }
    }
  }

  void advance_by(Millis d) { decay_tick(clock_.now() + d); }

  // Front (least recently used) first. Unseen entities yield an empty list.
  PropertyList snapshot(const EntityId &entity) const {
    auto it = buffers_.find(entity);
    if (it == buffers_.end()) return {};
    auto items = it->second.items();
    return PropertyList(items.begin(), items.end());
  }

  const PropertyQueue *buffer(const EntityId &entity) const {
    auto it = buffers_.find(entity);
    return it == buffers_.end() ? nullptr : &it->second;
  }

  const std::map<EntityId, PropertyQueue> &buffers() const noexcept {
    return buffers_;
  }

 private:
  ForgettingPolicy policy_;
  WorkingMemoryOptions options_;
  VirtualClock clock_;
  std::map<EntityId, PropertyQueue> buffers_;
  std::optional<std::set<EntityId>> known_;
};

}  // namespace wmreg
