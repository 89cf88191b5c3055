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
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "wmreg/constraints.hpp"
#include "wmreg/domain.hpp"
#include "wmreg/error.hpp"

namespace wmreg {

struct ReconstructOptions {
  std::size_t solution_cap = 1000;  // stop counting here
  std::size_t node_limit = 0;       // 0: unlimited
};

struct Reconstruction {
  DomainData domain;          // lexicographically least solution
  std::size_t solutions = 0;  // counted up to the cap
  bool capped = false;
};

namespace detail {

using Mask = std::uint64_t;

inline Mask bit(std::size_t i) { return Mask{1} << i; }

// A generation trace reduced to bitmask arithmetic for one candidate target
// value: the properties the algorithm walks through before it stops.
struct CompiledTrace {
  std::vector<std::size_t> prefix;  // property slots, walk order
  std::vector<bool> expected_at;    // parallel to prefix
  std::size_t steps = 0;            // number of expected properties
};

// Walk order for a trace: WM contents first, then preference order skipping
// what WM already offered. Only properties the target holds matter.
inline std::optional<CompiledTrace> compile_trace(const std::vector<std::size_t> &order,
                                                  Mask target,
                                                  const std::vector<std::size_t> &expected,
                                                  const std::vector<std::size_t> &rejected) {
  for (auto p : expected) {
    if (!(target & bit(p))) return std::nullopt;
  }
  CompiledTrace ct;
  ct.steps = expected.size();
  if (expected.empty()) return ct;
  std::size_t next = 0;
  for (auto p : order) {
    if (!(target & bit(p))) continue;
    bool exp = next < expected.size() && expected[next] == p;
    if (!exp && std::find(expected.begin(), expected.end(), p) != expected.end()) {
      return std::nullopt;  // wrong order
    }
    ct.prefix.push_back(p);
    ct.expected_at.push_back(exp);
    if (exp && ++next == expected.size()) break;
  }
  if (next != expected.size()) return std::nullopt;
  for (auto p : rejected) {
    bool seen = false;
    for (std::size_t i = 0; i < ct.prefix.size(); ++i) {
      if (ct.prefix[i] == p && !ct.expected_at[i]) seen = true;
    }
    if (!seen) return std::nullopt;
  }
  return ct;
}

// Step at which `distractor` is ruled out, or -1 when it survives the trace or
// would be ruled out by a property the trace rejects.
inline int elimination_step(const CompiledTrace &ct, Mask distractor) {
  int step = 0;
  for (std::size_t i = 0; i < ct.prefix.size(); ++i) {
    bool has = distractor & bit(ct.prefix[i]);
    if (ct.expected_at[i]) {
      if (!has) return step;
      ++step;
    } else if (!has) {
      return -1;
    }
  }
  return -1;
}

class Search {
 public:
  Search(const ConstraintSet &c, ReconstructOptions opts) : c_(c), opts_(opts) {
    if (c.entities.empty()) throw Error(ErrorCode::kInvalidArgument, "no entities");
    for (const auto &dim : c.dimensions) {
      for (const auto &p : dim.properties) {
        slot_of_.emplace(p, props_.size());
        props_.push_back(p);
      }
    }
    if (props_.size() > 64) throw Error(ErrorCode::kInvalidArgument, "more than 64 properties");
    for (std::size_t i = 0; i < c.entities.size(); ++i) entity_slot_.emplace(c.entities[i], i);
    for (const auto &p : c.preference) pref_.push_back(slot(p));

    n_ = c.entities.size();
    std::vector<Mask> must(n_, 0), mustnt(n_, 0);
    for (const auto &[e, ps] : c.facts) {
      for (const auto &p : ps) must[entity(e)] |= bit(slot(p));
    }
    for (const auto &[e, ps] : c.absent) {
      for (const auto &p : ps) mustnt[entity(e)] |= bit(slot(p));
    }
    for (const auto &u : c.unique_descriptions) {
      Unique cu;
      cu.target = entity(u.target);
      for (const auto &p : u.props) cu.props |= bit(slot(p));
      must[cu.target] |= cu.props;
      uniques_.push_back(cu);
    }
    for (const auto &t : c.traces) {
      Trace ct;
      ct.target = entity(t.target);
      std::vector<bool> in_wm(props_.size(), false);
      for (const auto &p : t.wm) {
        auto s = slot(p);
        if (!in_wm[s]) ct.order.push_back(s);
        in_wm[s] = true;
      }
      for (auto s : pref_) {
        if (!in_wm[s]) ct.order.push_back(s);
      }
      for (const auto &p : t.expected) ct.expected.push_back(slot(p));
      for (const auto &p : t.rejected) ct.rejected.push_back(slot(p));
      traces_.push_back(std::move(ct));
    }

    // Value combinations in lexicographic order: dimensions in file order,
    // each listed value before "unspecified".
    std::vector<Mask> combos = {0};
    for (const auto &dim : c.dimensions) {
      std::vector<Mask> next;
      for (Mask base : combos) {
        for (const auto &p : dim.properties) next.push_back(base | bit(slot(p)));
        if (!c.required_dimensions.contains(dim.name)) next.push_back(base);
      }
      combos = std::move(next);
    }
    domain_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      for (Mask m : combos) {
        if ((m & must[i]) == must[i] && !(m & mustnt[i])) domain_[i].push_back(m);
      }
    }
    assigned_.assign(n_, 0);
    compiled_.resize(traces_.size());
  }

  Reconstruction run() {
    rec(0);
    if (budget_hit_ && solutions_ == 0) {
      throw Error(ErrorCode::kUnsatisfiable, "search budget exhausted without a solution");
    }
    if (solutions_ == 0) throw Error(ErrorCode::kUnsatisfiable, "no domain satisfies the constraints");
    Reconstruction r;
    r.solutions = solutions_;
    r.capped = solutions_ >= opts_.solution_cap;
    r.domain.entities = c_.entities;
    r.domain.dimensions = c_.dimensions;
    r.domain.preference = c_.preference;
    r.domain.symbols = c_.symbols;
    for (std::size_t i = 0; i < n_; ++i) {
      PropertyList props;
      for (auto s : pref_) {
        if (first_[i] & bit(s)) props.push_back(props_[s]);
      }
      r.domain.assignment[c_.entities[i]] = std::move(props);
    }
    return r;
  }

  bool budget_hit() const { return budget_hit_; }

 private:
  struct Unique {
    std::size_t target = 0;
    Mask props = 0;
  };
  struct Trace {
    std::size_t target = 0;
    std::vector<std::size_t> order, expected, rejected;
  };

  std::size_t slot(const PropertyId &p) const {
    auto it = slot_of_.find(p);
    if (it == slot_of_.end()) throw Error(ErrorCode::kUnknownSymbol, p.str());
    return it->second;
  }
  std::size_t entity(const EntityId &e) const {
    auto it = entity_slot_.find(e);
    if (it == entity_slot_.end()) throw Error(ErrorCode::kUnknownEntity, e.str());
    return it->second;
  }

  bool done() const {
    return solutions_ >= opts_.solution_cap || budget_hit_;
  }

  // Checks every constraint between entity i and entities 0..i.
  bool consistent(std::size_t i) {
    Mask m = assigned_[i];
    if (c_.distinct_entities && used_.contains(m)) return false;
    for (const auto &u : uniques_) {
      if (u.target == i) {
        for (std::size_t j = 0; j < i; ++j) {
          if ((assigned_[j] & u.props) == u.props) return false;
        }
      } else if (u.target < i && (m & u.props) == u.props) {
        return false;
      }
    }
    for (std::size_t t = 0; t < traces_.size(); ++t) {
      const Trace &tr = traces_[t];
      if (tr.target == i) {
        compiled_[t] = compile_trace(tr.order, m, tr.expected, tr.rejected);
        if (!compiled_[t]) return false;
        for (std::size_t j = 0; j < i; ++j) {
          if (elimination_step(*compiled_[t], assigned_[j]) < 0) return false;
        }
      } else if (tr.target < i) {
        if (elimination_step(*compiled_[t], m) < 0) return false;
      }
    }
    return true;
  }

  // Every expected property must rule out at least one distractor.
  bool every_step_used() const {
    for (std::size_t t = 0; t < traces_.size(); ++t) {
      const CompiledTrace &ct = *compiled_[t];
      std::vector<bool> hit(ct.steps, false);
      for (std::size_t j = 0; j < n_; ++j) {
        if (j == traces_[t].target) continue;
        int s = elimination_step(ct, assigned_[j]);
        if (s >= 0) hit[static_cast<std::size_t>(s)] = true;
      }
      for (bool h : hit) {
        if (!h) return false;
      }
    }
    return true;
  }

  void rec(std::size_t i) {
    if (done()) return;
    if (i == n_) {
      if (!every_step_used()) return;
      if (solutions_++ == 0) first_ = assigned_;
      return;
    }
    for (Mask m : domain_[i]) {
      if (opts_.node_limit && ++nodes_ > opts_.node_limit) {
        budget_hit_ = true;
        return;
      }
      assigned_[i] = m;
      if (consistent(i)) {
        used_.insert(m);
        rec(i + 1);
        used_.erase(m);
      }
      if (done()) return;
    }
  }

  const ConstraintSet &c_;
  ReconstructOptions opts_;
  PropertyList props_;
  std::map<PropertyId, std::size_t> slot_of_;
  std::map<EntityId, std::size_t> entity_slot_;
  std::vector<std::size_t> pref_;
  std::size_t n_ = 0;
  std::vector<Unique> uniques_;
  std::vector<Trace> traces_;
  std::vector<std::vector<Mask>> domain_;
  std::vector<Mask> assigned_, first_;
  std::vector<std::optional<CompiledTrace>> compiled_;
  std::unordered_set<Mask> used_;
  std::size_t solutions_ = 0, nodes_ = 0;
  bool budget_hit_ = false;
};

}  // namespace detail

// Finds the lexicographically least domain satisfying `c` and counts
// solutions up to the cap. Throws Unsatisfiable when none exists.
inline Reconstruction reconstruct_domain(const ConstraintSet &c,
                                         ReconstructOptions opts = {}) {
  if (opts.solution_cap == 0) throw Error(ErrorCode::kInvalidArgument, "solution_cap must be positive");
  return detail::Search(c, opts).run();
}

struct ConsistentSubset {
  ConstraintSet kept;
  std::vector<std::string> dropped;  // labels of traces and descriptions
};

// Greedy maximal satisfiable subset: traces and unique descriptions are added
// back one at a time, in file order, and kept when the set stays satisfiable.
// A constraint whose check runs out of budget counts as inconsistent.
inline ConsistentSubset maximal_consistent_subset(const ConstraintSet &c,
                                                  ReconstructOptions opts = {}) {
  opts.solution_cap = 1;
  auto satisfiable = [&](const ConstraintSet &s) {
    try {
      reconstruct_domain(s, opts);
      return true;
    } catch (const Error &e) {
      if (e.code() != ErrorCode::kUnsatisfiable) throw;
      return false;
    }
  };
  ConsistentSubset out;
  out.kept = c;
  if (satisfiable(c)) return out;
  out.kept.unique_descriptions.clear();
  out.kept.traces.clear();
  if (!satisfiable(out.kept)) {
    throw Error(ErrorCode::kUnsatisfiable, "facts alone are unsatisfiable");
  }
  for (const auto &u : c.unique_descriptions) {
    out.kept.unique_descriptions.push_back(u);
    if (!satisfiable(out.kept)) {
      out.kept.unique_descriptions.pop_back();
      out.dropped.push_back(u.label);
    }
  }
  for (const auto &t : c.traces) {
    out.kept.traces.push_back(t);
    if (!satisfiable(out.kept)) {
      out.kept.traces.pop_back();
      out.dropped.push_back(t.label);
    }
  }
  return out;
}

}  // namespace wmreg
