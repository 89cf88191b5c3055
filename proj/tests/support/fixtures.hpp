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
#include <random>
#include <string>
#include <vector>

#include "wmreg/wmreg.hpp"

#ifndef WMREG_DATA_DIR
#error "WMREG_DATA_DIR must point at the data directory"
#endif

namespace wmreg::testing {

inline std::string data_file(const std::string &name) {
  return std::string(WMREG_DATA_DIR) + "/" + name;
}

inline const Domain &faces16() {
  static const Domain d(load_domain(data_file("faces16.json")));
  return d;
}

inline const ScenarioScript &table1_script() {
  static const ScenarioScript s = load_scenario(data_file("table1_scenario.json"), faces16());
  return s;
}

inline PropertyList props(const Domain &d, std::initializer_list<const char *> names) {
  PropertyList out;
  for (const char *n : names) out.push_back(d.resolve_property(n));
  return out;
}

inline EntityId face(int i) { return EntityId("face" + std::to_string(i)); }

// Robot descriptions per turn, short symbols in display order, copied from the
// published case-study table.
inline const std::map<std::string, std::vector<std::string>> &table1_cells() {
  static const std::map<std::string, std::vector<std::string>> cells = {
      {"none", {"H_L, C_L, G_Y", "H_D, G_M", "G_F, G_Y", "H_L, C_L, G_Y", "G_F, C_H",
                "H_L, C_L, G_Y"}},
      {"decay(10)", {"H_L, C_L, G_Y", "H_D, G_M", "G_F, G_Y", "H_S, C_L, G_Y", "G_F, C_H",
                     "C_L, G_Y"}},
      {"interference(2)", {"H_L, C_L, G_Y", "H_D, G_M", "G_F, G_Y", "H_L, C_L, G_Y",
                           "G_F, C_H", "H_S, C_L, G_Y"}},
  };
  return cells;
}

// A random closed-world domain: `n` entities, dimensions of 1..3 values,
// each entity unspecified on a dimension with probability 1/4.
inline Domain random_domain(std::mt19937 &rng, std::size_t n, std::size_t dims) {
  DomainData d;
  for (std::size_t i = 0; i < n; ++i) d.entities.push_back(EntityId("e" + std::to_string(i)));
  std::uniform_int_distribution<int> width(1, 3), coin(0, 3);
  for (std::size_t k = 0; k < dims; ++k) {
    Dimension dim{"d" + std::to_string(k), {}};
    int w = width(rng);
    for (int v = 0; v < w; ++v) {
      dim.properties.push_back(PropertyId("p" + std::to_string(k) + "_" + std::to_string(v)));
    }
    d.preference.insert(d.preference.end(), dim.properties.begin(), dim.properties.end());
    d.dimensions.push_back(dim);
  }
  std::shuffle(d.preference.begin(), d.preference.end(), rng);
  for (const auto &e : d.entities) {
    PropertyList own;
    for (const auto &dim : d.dimensions) {
      if (coin(rng) == 0) continue;
      std::uniform_int_distribution<std::size_t> pick(0, dim.properties.size() - 1);
      own.push_back(dim.properties[pick(rng)]);
    }
    d.assignment[e] = own;
  }
  return Domain(std::move(d));
}

// Random non-empty subset of the domain's entities that contains `target`.
inline EntityList random_candidates(std::mt19937 &rng, const Domain &d, const EntityId &target) {
  EntityList out;
  std::bernoulli_distribution keep(0.7);
  for (const auto &e : d.entities()) {
    if (e == target || keep(rng)) out.push_back(e);
  }
  return out;
}

}  // namespace wmreg::testing
