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
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "wmreg/error.hpp"
#include "wmreg/ids.hpp"

namespace wmreg {

// A family of mutually exclusive properties (hair-color, clothing, ...). An
// entity carries at most one property per dimension; a missing value means the
// entity is unspecified on that dimension.
struct Dimension {
  std::string name;
  PropertyList properties;

  friend bool operator==(const Dimension &, const Dimension &) = default;
};

// Raw contents of a domain file. Kept separate from Domain so invalid input
// can still be loaded and reported on by validate_domain().
struct DomainData {
  EntityList entities;
  std::vector<Dimension> dimensions;
  std::map<EntityId, PropertyList> assignment;
  PropertyList preference;  // most preferred first
  std::map<PropertyId, std::string> symbols;  // optional short forms
  PropertyList canonical_order;  // display order; defaults to preference

  friend bool operator==(const DomainData &, const DomainData &) = default;
};

enum class SymbolStyle { kShort, kLong };

// Closed-world long-term memory: every holds() query is certain.
// Immutable after construction and safe to share across threads.
class Domain {
 public:
  Domain() = default;

  explicit Domain(DomainData data) : data_(std::move(data)) {
    for (std::size_t i = 0; i < data_.entities.size(); ++i) {
      entity_index_.emplace(data_.entities[i], i);
    }
    for (const auto &dim : data_.dimensions) {
      for (const auto &p : dim.properties) {
        if (property_index_.emplace(p, lexicon_.size()).second) {
          lexicon_.push_back(p);
          dimension_of_.emplace(p, dim.name);
        }
      }
    }
    for (std::size_t i = 0; i < data_.preference.size(); ++i) {
      rank_.emplace(data_.preference[i], i);
    }
    facts_.assign(data_.entities.size(),
                  std::vector<bool>(lexicon_.size(), false));
    for (const auto &[entity, props] : data_.assignment) {
      auto e = entity_index_.find(entity);
      if (e == entity_index_.end()) continue;
      for (const auto &p : props) {
        auto q = property_index_.find(p);
        if (q != property_index_.end()) facts_[e->second][q->second] = true;
      }
    }
    for (const auto &[prop, sym] : data_.symbols) short_to_long_.emplace(sym, prop);
    if (data_.canonical_order.empty()) data_.canonical_order = data_.preference;
  }

  const DomainData &data() const noexcept { return data_; }
  const EntityList &entities() const noexcept { return data_.entities; }
  const std::vector<Dimension> &dimensions() const noexcept {
    return data_.dimensions;
  }
  const PropertyList &preference() const noexcept { return data_.preference; }
  const PropertyList &lexicon() const noexcept { return lexicon_; }

  bool has_entity(const EntityId &e) const { return entity_index_.contains(e); }
  bool has_property(const PropertyId &p) const {
    return property_index_.contains(p);
  }

  bool holds(const EntityId &entity, const PropertyId &property) const {
    return facts_[entity_slot(entity)][property_slot(property)];
  }

  // Entities (in domain order) for which `property` holds.
  EntityList extension(const PropertyId &property) const {
    std::size_t q = property_slot(property);
    EntityList out;
    for (std::size_t i = 0; i < data_.entities.size(); ++i) {
      if (facts_[i][q]) out.push_back(data_.entities[i]);
    }
    return out;
  }

  // Properties holding for `entity`, in preference order.
  PropertyList properties_of(const EntityId &entity) const {
    const auto &row = facts_[entity_slot(entity)];
    PropertyList out;
    for (const auto &p : data_.preference) {
      auto q = property_index_.find(p);
      if (q != property_index_.end() && row[q->second]) out.push_back(p);
    }
    return out;
  }

  // Lower is more preferred.
  std::size_t preference_rank(const PropertyId &property) const {
    auto it = rank_.find(property);
    if (it == rank_.end() || !has_property(property)) {
      throw Error(ErrorCode::kUnknownSymbol, property.str());
    }
    return it->second;
  }

  const std::string &dimension_of(const PropertyId &property) const {
    auto it = dimension_of_.find(property);
    if (it == dimension_of_.end()) {
      throw Error(ErrorCode::kUnknownSymbol, property.str());
    }
    return it->second;
  }

  // Accepts a long id ("lab-coat") or a short symbol ("C_L").
  PropertyId resolve_property(std::string_view text) const {
    PropertyId as_long{std::string(text)};
    if (has_property(as_long)) return as_long;
    auto it = short_to_long_.find(std::string(text));
    if (it != short_to_long_.end()) return it->second;
    throw Error(ErrorCode::kUnknownSymbol, std::string(text));
  }

  EntityId resolve_entity(std::string_view text) const {
    EntityId e{std::string(text)};
    if (!has_entity(e)) throw Error(ErrorCode::kUnknownEntity, e.str());
    return e;
  }

  std::string display(const PropertyId &p, SymbolStyle style) const {
    if (style == SymbolStyle::kShort) {
      auto it = data_.symbols.find(p);
      if (it != data_.symbols.end()) return it->second;
    }
    return p.str();
  }

  // Sorts `props` into the domain's canonical display order.
  PropertyList canonical(PropertyList props) const {
    auto pos = [&](const PropertyId &p) {
      auto it = std::find(data_.canonical_order.begin(),
                          data_.canonical_order.end(), p);
      return static_cast<std::size_t>(it - data_.canonical_order.begin());
    };
    std::stable_sort(props.begin(), props.end(),
                     [&](const PropertyId &a, const PropertyId &b) {
                       return pos(a) < pos(b);
                     });
    return props;
  }

 private:
  std::size_t entity_slot(const EntityId &e) const {
    auto it = entity_index_.find(e);
    if (it == entity_index_.end()) throw Error(ErrorCode::kUnknownSymbol, e.str());
    return it->second;
  }
  std::size_t property_slot(const PropertyId &p) const {
    auto it = property_index_.find(p);
    if (it == property_index_.end()) throw Error(ErrorCode::kUnknownSymbol, p.str());
    return it->second;
  }

  DomainData data_;
  PropertyList lexicon_;
  std::unordered_map<EntityId, std::size_t> entity_index_;
  std::unordered_map<PropertyId, std::size_t> property_index_;
  std::unordered_map<PropertyId, std::size_t> rank_;
  std::unordered_map<PropertyId, std::string> dimension_of_;
  std::unordered_map<std::string, PropertyId> short_to_long_;
  std::vector<std::vector<bool>> facts_;
};

struct DomainViolation {
  enum class Kind {
    kDuplicateEntity,
    kDuplicateProperty,
    kUnknownAssignedEntity,
    kUnknownAssignedProperty,
    kDimensionConflict,
    kPreferenceMismatch,
    kSizeMismatch,
    kConstraint,
  };
  Kind kind;
  std::string message;
};

struct DomainValidationOptions {
  std::optional<std::size_t> expected_count;
};

// Structural checks; an empty result means the domain is well formed.
inline std::vector<DomainViolation> validate_domain(
    const Domain &domain, const DomainValidationOptions &options = {}) {
  using Kind = DomainViolation::Kind;
  std::vector<DomainViolation> out;
  const DomainData &d = domain.data();

  std::set<EntityId> seen_entities;
  for (const auto &e : d.entities) {
    if (!seen_entities.insert(e).second) {
      out.push_back({Kind::kDuplicateEntity, "entity listed twice: " + e.str()});
    }
  }
  std::set<PropertyId> lexicon;
  for (const auto &dim : d.dimensions) {
    for (const auto &p : dim.properties) {
      if (!lexicon.insert(p).second) {
        out.push_back({Kind::kDuplicateProperty,
                       "property in more than one place: " + p.str()});
      }
    }
  }
  for (const auto &[entity, props] : d.assignment) {
    if (!seen_entities.contains(entity)) {
      out.push_back({Kind::kUnknownAssignedEntity,
                     "assignment for unknown entity " + entity.str()});
    }
    std::map<std::string, PropertyList> by_dim;
    for (const auto &p : props) {
      if (!lexicon.contains(p)) {
        out.push_back({Kind::kUnknownAssignedProperty,
                       entity.str() + " assigned unknown property " + p.str()});
        continue;
      }
      by_dim[domain.dimension_of(p)].push_back(p);
    }
    for (const auto &[dim, ps] : by_dim) {
      std::set<PropertyId> distinct(ps.begin(), ps.end());
      if (distinct.size() > 1) {
        std::string msg = entity.str() + " has several values for " + dim + ":";
        for (const auto &p : distinct) msg += " " + p.str();
        out.push_back({Kind::kDimensionConflict, msg});
      }
    }
  }
  std::set<PropertyId> pref(d.preference.begin(), d.preference.end());
  if (pref.size() != d.preference.size() || pref != lexicon) {
    out.push_back({Kind::kPreferenceMismatch,
                   "preference must order every lexicon property exactly once"});
  }
  if (options.expected_count && d.entities.size() != *options.expected_count) {
    out.push_back({Kind::kSizeMismatch,
                   "expected " + std::to_string(*options.expected_count) +
                       " entities, found " + std::to_string(d.entities.size())});
  }
  return out;
}

}  // namespace wmreg
