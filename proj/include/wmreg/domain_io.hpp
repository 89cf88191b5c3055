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

#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "wmreg/domain.hpp"
#include "wmreg/error.hpp"
#include "wmreg/hash.hpp"

namespace wmreg {

using ojson = nlohmann::ordered_json;

namespace detail {

inline ojson read_json_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParse, "cannot open " + path);
  try {
    return ojson::parse(in);
  } catch (const nlohmann::json::exception &e) {
    throw Error(ErrorCode::kParse, path + ": " + e.what());
  }
}

template <class Id>
std::vector<Id> id_list(const ojson &j, const char *field) {
  if (!j.is_array()) {
    throw Error(ErrorCode::kParse, std::string(field) + " must be an array");
  }
  std::vector<Id> out;
  for (const auto &v : j) {
    if (!v.is_string()) {
      throw Error(ErrorCode::kParse,
                  std::string(field) + " entries must be strings");
    }
    out.emplace_back(v.get<std::string>());
  }
  return out;
}

inline const ojson &require(const ojson &j, const char *field) {
  if (!j.is_object() || !j.contains(field)) {
    throw Error(ErrorCode::kParse, std::string("missing field '") + field + "'");
  }
  return j.at(field);
}

}  // namespace detail

inline DomainData domain_data_from_json(const ojson &j) {
  DomainData d;
  d.entities = detail::id_list<EntityId>(detail::require(j, "entities"), "entities");
  const ojson &dims = detail::require(j, "dimensions");
  if (!dims.is_object()) throw Error(ErrorCode::kParse, "dimensions must be an object");
  for (const auto &[name, props] : dims.items()) {
    d.dimensions.push_back({name, detail::id_list<PropertyId>(props, "dimensions")});
  }
  const ojson &assignment = detail::require(j, "assignment");
  if (!assignment.is_object()) {
    throw Error(ErrorCode::kParse, "assignment must be an object");
  }
  for (const auto &[entity, props] : assignment.items()) {
    d.assignment[EntityId(entity)] = detail::id_list<PropertyId>(props, "assignment");
  }
  d.preference = detail::id_list<PropertyId>(detail::require(j, "preference"), "preference");
  if (j.contains("symbols")) {
    for (const auto &[prop, sym] : j.at("symbols").items()) {
      if (!sym.is_string()) throw Error(ErrorCode::kParse, "symbols must map to strings");
      d.symbols[PropertyId(prop)] = sym.get<std::string>();
    }
  }
  if (j.contains("canonical_order")) {
    d.canonical_order =
        detail::id_list<PropertyId>(j.at("canonical_order"), "canonical_order");
  }
  return d;
}

inline ojson to_json(const DomainData &d) {
  ojson j;
  j["entities"] = ojson::array();
  for (const auto &e : d.entities) j["entities"].push_back(e.str());
  j["dimensions"] = ojson::object();
  for (const auto &dim : d.dimensions) {
    ojson props = ojson::array();
    for (const auto &p : dim.properties) props.push_back(p.str());
    j["dimensions"][dim.name] = props;
  }
  j["assignment"] = ojson::object();
  // Entity order, not map order, so face10 does not sort before face2.
  for (const auto &e : d.entities) {
    auto it = d.assignment.find(e);
    if (it == d.assignment.end()) continue;
    ojson props = ojson::array();
    for (const auto &p : it->second) props.push_back(p.str());
    j["assignment"][e.str()] = props;
  }
  j["preference"] = ojson::array();
  for (const auto &p : d.preference) j["preference"].push_back(p.str());
  if (!d.symbols.empty()) {
    j["symbols"] = ojson::object();
    for (const auto &p : d.preference) {
      auto it = d.symbols.find(p);
      if (it != d.symbols.end()) j["symbols"][p.str()] = it->second;
    }
  }
  if (!d.canonical_order.empty() && d.canonical_order != d.preference) {
    j["canonical_order"] = ojson::array();
    for (const auto &p : d.canonical_order) j["canonical_order"].push_back(p.str());
  }
  return j;
}

inline Domain load_domain(const std::string &path) {
  try {
    return Domain(domain_data_from_json(detail::read_json_file(path)));
  } catch (const nlohmann::json::exception &e) {
    throw Error(ErrorCode::kParse, path + ": " + e.what());
  }
}

inline void save_domain(const DomainData &d, const std::string &path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kParse, "cannot write " + path);
  out << to_json(d).dump(2) << "\n";
}

// Fingerprint of the canonical JSON rendering; recorded in transcript headers.
inline std::string domain_hash(const Domain &domain) {
  return fingerprint(to_json(domain.data()).dump());
}

}  // namespace wmreg
