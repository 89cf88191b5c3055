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

#include <compare>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace wmreg {

// Symbolic identifier with a phantom tag so entity and property ids cannot
// be mixed up.
template <class Tag>
class Symbol {
 public:
  Symbol() = default;
  explicit Symbol(std::string value) : value_(std::move(value)) {}
  explicit Symbol(const char *value) : value_(value) {}

  const std::string &str() const noexcept { return value_; }
  bool empty() const noexcept { return value_.empty(); }

  friend bool operator==(const Symbol &, const Symbol &) = default;
  friend std::strong_ordering operator<=>(const Symbol &a, const Symbol &b) {
    return a.value_.compare(b.value_) <=> 0;
  }
  friend std::ostream &operator<<(std::ostream &os, const Symbol &s) {
    return os << s.value_;
  }

 private:
  std::string value_;
};

struct EntityTag;
struct PropertyTag;

using EntityId = Symbol<EntityTag>;
using PropertyId = Symbol<PropertyTag>;

using PropertyList = std::vector<PropertyId>;
using EntityList = std::vector<EntityId>;

}  // namespace wmreg

template <class Tag>
struct std::hash<wmreg::Symbol<Tag>> {
  std::size_t operator()(const wmreg::Symbol<Tag> &s) const noexcept {
    return std::hash<std::string>{}(s.str());
  }
};
