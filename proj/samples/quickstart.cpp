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

// Builds a four-face domain in code, lets the human describe one face and
// shows how that description steers the robot's next description.

#include <iostream>

#include "wmreg/wmreg.hpp"

int main() {
  using namespace wmreg;
  DomainData d;
  d.entities = {EntityId("ann"), EntityId("bob"), EntityId("cy"), EntityId("dee")};
  d.dimensions = {{"hair", {PropertyId("blond"), PropertyId("dark")}},
                  {"eyewear", {PropertyId("glasses"), PropertyId("no-glasses")}},
                  {"top", {PropertyId("hat"), PropertyId("scarf")}}};
  d.preference = {PropertyId("blond"), PropertyId("dark"), PropertyId("glasses"),
                  PropertyId("no-glasses"), PropertyId("hat"), PropertyId("scarf")};
  d.assignment = {{EntityId("ann"), {PropertyId("blond"), PropertyId("glasses"), PropertyId("hat")}},
                  {EntityId("bob"), {PropertyId("blond"), PropertyId("no-glasses"), PropertyId("hat")}},
                  {EntityId("cy"), {PropertyId("dark"), PropertyId("glasses"), PropertyId("scarf")}},
                  {EntityId("dee"), {PropertyId("dark"), PropertyId("no-glasses"), PropertyId("hat")}}};
  Domain domain(d);

  auto print = [&](const char *who, const Description &desc) {
    std::cout << who << ":";
    for (const auto &s : desc.selected) {
      std::cout << " " << s.property << "(" << provenance_name(s.source) << ")";
    }
    std::cout << "\n";
  };

  print("no memory", pia(domain, EntityId("ann"), domain.entities()));

  SessionConfig config;
  config.policy = ForgettingPolicy::Interference(2);
  Session session(domain, domain.entities(), config);
  session.human_turn(EntityId("ann"), {PropertyId("hat"), PropertyId("glasses")});
  print("after the human said hat+glasses", *session.robot_turn(EntityId("ann")).description);
}
