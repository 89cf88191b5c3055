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
#include <cstdint>
#include <span>
#include <vector>

#include "wmreg/clock.hpp"
#include "wmreg/ids.hpp"

namespace wmreg {

// Duplicate-free recency queue. Index 0 is the least recently used item; a
// refreshed item moves to the back.
//
// Buffers in this engine hold a handful of items, so a flat vector beats a
// list + hash index.
template <class Item>
class RecencyQueue {
 public:
  using value_type = Item;

  RecencyQueue() = default;
  explicit RecencyQueue(Millis created_at) : created_at_(created_at) {}

  // Moves `item` to the back, inserting it if absent.
  void refresh(const Item &item) {
    auto it = std::find(items_.begin(), items_.end(), item);
    if (it != items_.end()) items_.erase(it);
    items_.push_back(item);
  }

  bool pop_front() {
    if (items_.empty()) return false;
    items_.erase(items_.begin());
    return true;
  }

  bool contains(const Item &item) const {
    return std::find(items_.begin(), items_.end(), item) != items_.end();
  }

  std::span<const Item> items() const noexcept { return items_; }
  std::size_t size() const noexcept { return items_.size(); }
  bool empty() const noexcept { return items_.empty(); }

  Millis created_at() const noexcept { return created_at_; }
  std::int64_t pops_applied() const noexcept { return pops_applied_; }

  // Decay bookkeeping; see WorkingMemory::decay_tick.
  void restart_decay(Millis at) {
    created_at_ = at;
    pops_applied_ = 0;
  }
  void record_pops(std::int64_t n) { pops_applied_ += n; }

 private:
  std::vector<Item> items_;
  Millis created_at_{0};
  std::int64_t pops_applied_ = 0;
};

using PropertyQueue = RecencyQueue<PropertyId>;

// LRU displacement: drop from the front until the queue holds at most
// `capacity` items. Returns the number of items displaced.
template <class Item>
std::size_t enforce_capacity(RecencyQueue<Item> &queue, std::size_t capacity) {
  std::size_t dropped = 0;
  while (queue.size() > capacity) {
    queue.pop_front();
    ++dropped;
  }
  return dropped;
}

// Keeps the last occurrence of every item, preserving relative order.
template <class Item>
std::vector<Item> dedupe_keep_last(std::span<const Item> items) {
  std::vector<Item> out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    bool later = std::find(items.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                           items.end(), items[i]) != items.end();
    if (!later) out.push_back(items[i]);
  }
  return out;
}

}  // namespace wmreg
