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

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "wmreg/domain.hpp"
#include "wmreg/domain_io.hpp"
#include "wmreg/reg.hpp"
#include "wmreg/resolve.hpp"
#include "wmreg/working_memory.hpp"

namespace wmreg {

// "Generating for `target` over all entities, with `wm` cached for it (empty:
// plain PIA), selects exactly `expected` in that order, and considers and
// rejects every property in `rejected`."
struct GenerationTrace {
  std::string label;
  EntityId target;
  PropertyList wm;
  PropertyList expected;
  PropertyList rejected;
};

// "`props` picks out `target` and nothing else."
struct UniqueDescription {
  std::string label;
  EntityId target;
  PropertyList props;
};

// Everything the reconstructed domain must satisfy, plus the lexicon it is
// built from.
struct ConstraintSet {
  EntityList entities;
  std::vector<Dimension> dimensions;
  PropertyList preference;
  std::map<PropertyId, std::string> symbols;
  std::set<std::string> required_dimensions;
  std::map<EntityId, PropertyList> facts;   // must hold
  std::map<EntityId, PropertyList> absent;  // must not hold
  std::vector<UniqueDescription> unique_descriptions;
  std::vector<GenerationTrace> traces;
  bool distinct_entities = true;
  std::optional<std::size_t> expected_count;
};

namespace detail {

inline std::map<EntityId, PropertyList> entity_props(const ojson &j, const char *field) {
  std::map<EntityId, PropertyList> out;
  if (!j.contains(field)) return out;
  for (const auto &[e, props] : j.at(field).items()) {
    out[EntityId(e)] = id_list<PropertyId>(props, field);
  }
  return out;
}

inline ojson entity_props_json(const std::map<EntityId, PropertyList> &m,
                               const EntityList &order) {
  ojson j = ojson::object();
  for (const auto &e : order) {
    auto it = m.find(e);
    if (it == m.end()) continue;
    ojson list = ojson::array();
    for (const auto &p : it->second) list.push_back(p.str());
    j[e.str()] = list;
  }
  return j;
}

inline ojson id_array(const PropertyList &props) {
  ojson list = ojson::array();
  for (const auto &p : props) list.push_back(p.str());
  return list;
}

}  // namespace detail

inline ConstraintSet constraints_from_json(const ojson &j) {
  ConstraintSet c;
  DomainData lex;
  ojson shell = j;
  shell["assignment"] = ojson::object();
  lex = domain_data_from_json(shell);
  c.entities = lex.entities;
  c.dimensions = lex.dimensions;
  c.preference = lex.preference;
  c.symbols = lex.symbols;
  if (j.contains("required_dimensions")) {
    for (const auto &d : j.at("required_dimensions")) c.required_dimensions.insert(d.get<std::string>());
  }
  c.facts = detail::entity_props(j, "facts");
  c.absent = detail::entity_props(j, "absent");
  if (j.contains("unique_descriptions")) {
    for (const auto &u : j.at("unique_descriptions")) {
      c.unique_descriptions.push_back(
          {u.value("label", ""), EntityId(u.at("target").get<std::string>()),
           detail::id_list<PropertyId>(u.at("props"), "props")});
    }
  }
  if (j.contains("traces")) {
    for (const auto &t : j.at("traces")) {
      GenerationTrace g;
      g.label = t.value("label", "");
      g.target = EntityId(t.at("target").get<std::string>());
      if (t.contains("wm")) g.wm = detail::id_list<PropertyId>(t.at("wm"), "wm");
      g.expected = detail::id_list<PropertyId>(t.at("expected"), "expected");
      if (t.contains("rejected")) g.rejected = detail::id_list<PropertyId>(t.at("rejected"), "rejected");
      c.traces.push_back(std::move(g));
    }
  }
  c.distinct_entities = j.value("distinct_entities", true);
  if (j.contains("expected_count")) c.expected_count = j.at("expected_count").get<std::size_t>();
  return c;
}

inline ojson to_json(const ConstraintSet &c) {
  DomainData lex;
  lex.entities = c.entities;
  lex.dimensions = c.dimensions;
  lex.preference = c.preference;
  lex.symbols = c.symbols;
  ojson j = to_json(lex);
  j.erase("assignment");
  j["required_dimensions"] = ojson::array();
  for (const auto &dim : c.dimensions) {
    if (c.required_dimensions.contains(dim.name)) j["required_dimensions"].push_back(dim.name);
  }
  j["facts"] = detail::entity_props_json(c.facts, c.entities);
  j["absent"] = detail::entity_props_json(c.absent, c.entities);
  j["unique_descriptions"] = ojson::array();
  for (const auto &u : c.unique_descriptions) {
    j["unique_descriptions"].push_back(
        {{"label", u.label}, {"target", u.target.str()}, {"props", detail::id_array(u.props)}});
  }
  j["traces"] = ojson::array();
  for (const auto &t : c.traces) {
    ojson tj = {{"label", t.label}, {"target", t.target.str()}};
    tj["wm"] = detail::id_array(t.wm);
    tj["expected"] = detail::id_array(t.expected);
    tj["rejected"] = detail::id_array(t.rejected);
    j["traces"].push_back(tj);
  }
  j["distinct_entities"] = c.distinct_entities;
  if (c.expected_count) j["expected_count"] = *c.expected_count;
  return j;
}

inline ConstraintSet load_constraints(const std::string &path) {
  try {
    return constraints_from_json(detail::read_json_file(path));
  } catch (const nlohmann::json::exception &e) {
    throw Error(ErrorCode::kParse, path + ": " + e.what());
  }
}

// Checks `domain` against `c` by running the real generation and resolution
// code (the reconstruction search uses its own compiled form).
inline std::vector<DomainViolation> check_constraints(const Domain &domain,
                                                      const ConstraintSet &c) {
  using Kind = DomainViolation::Kind;
  std::vector<DomainViolation> out;
  auto fail = [&](std::string msg) { out.push_back({Kind::kConstraint, std::move(msg)}); };
  const EntityList &all = domain.entities();

  for (const auto &[e, props] : c.facts) {
    for (const auto &p : props) {
      if (!domain.holds(e, p)) fail("fact: " + e.str() + " must have " + p.str());
    }
  }
  for (const auto &[e, props] : c.absent) {
    for (const auto &p : props) {
      if (domain.holds(e, p)) fail("absent: " + e.str() + " must not have " + p.str());
    }
  }
  for (const auto &e : all) {
    for (const auto &dim : domain.dimensions()) {
      if (!c.required_dimensions.contains(dim.name)) continue;
      bool any = false;
      for (const auto &p : dim.properties) any = any || domain.holds(e, p);
      if (!any) fail("required: " + e.str() + " has no " + dim.name);
    }
  }
  if (c.distinct_entities) {
    std::map<PropertyList, EntityId> seen;
    for (const auto &e : all) {
      auto [it, fresh] = seen.emplace(domain.properties_of(e), e);
      if (!fresh) fail("distinct: " + e.str() + " duplicates " + it->second.str());
    }
  }
  for (const auto &u : c.unique_descriptions) {
    auto r = resolve(domain, u.props, all);
    if (!(r.referent && *r.referent == u.target)) fail("unique: " + u.label);
  }
  for (const auto &t : c.traces) {
    Description d;
    if (t.wm.empty()) {
      d = pia(domain, t.target, all);
    } else {
      WorkingMemory scratch;
      scratch.encode(t.target, t.wm);
      d = sd_pia(domain, t.target, all, scratch, {WmOrder::kLruFirst, /*prime=*/false});
    }
    bool ok = d.properties() == t.expected && d.fully_discriminating;
    for (const auto &p : t.rejected) ok = ok && d.rejected(p);
    if (!ok) fail("trace: " + t.label);
  }
  return out;
}

// Structural validation plus the constraint set, as one violation list.
inline std::vector<DomainViolation> validate_fixture(const Domain &domain,
                                                     const ConstraintSet &c) {
  DomainValidationOptions opts;
  opts.expected_count = c.expected_count;
  auto out = validate_domain(domain, opts);
  if (!out.empty()) return out;
  auto more = check_constraints(domain, c);
  out.insert(out.end(), more.begin(), more.end());
  return out;
}

}  // namespace wmreg
