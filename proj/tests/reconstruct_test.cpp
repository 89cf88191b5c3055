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

#include <gtest/gtest.h>

#include "support/fixtures.hpp"

namespace wmreg {
namespace {

using testing::face;
using testing::faces16;

ConstraintSet shipped() { return load_constraints(testing::data_file("table1_constraints.json")); }

// Three entities, two dimensions: small enough to count every solution.
ConstraintSet tiny() {
  ConstraintSet c;
  c.entities = {EntityId("x"), EntityId("y"), EntityId("z")};
  c.dimensions = {{"color", {PropertyId("red"), PropertyId("blue")}},
                  {"size", {PropertyId("big"), PropertyId("small")}}};
  c.preference = {PropertyId("red"), PropertyId("blue"), PropertyId("big"), PropertyId("small")};
  return c;
}

std::size_t count(const ConstraintSet &c) {
  return reconstruct_domain(c, {1000000, 0}).solutions;
}

TEST(Reconstruct, ShippedFixtureIsTheLeastSolution) {
  Reconstruction r = reconstruct_domain(shipped());
  EXPECT_GE(r.solutions, 1u);
  EXPECT_EQ(r.domain.assignment, faces16().data().assignment);
  EXPECT_TRUE(validate_fixture(Domain(r.domain), shipped()).empty());
}

TEST(Reconstruct, CountsUpToCap) {
  Reconstruction r = reconstruct_domain(shipped(), {5, 0});
  EXPECT_EQ(r.solutions, 5u);
  EXPECT_TRUE(r.capped);
  EXPECT_THROW(reconstruct_domain(shipped(), {0, 0}), Error);
}

TEST(Reconstruct, ContradictionIsUnsatisfiable) {
  ConstraintSet c = shipped();
  c.facts[face(1)].push_back(PropertyId("no-glasses"));
  try {
    reconstruct_domain(c);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnsatisfiable);
  }
}

TEST(Reconstruct, TinyCountsMatchEnumeration) {
  ConstraintSet c = tiny();
  // 3 values per dimension (two listed plus unspecified): 9 combos, all
  // entities distinct: 9 * 8 * 7.
  EXPECT_EQ(count(c), 504u);
  c.distinct_entities = false;
  EXPECT_EQ(count(c), 729u);
  c.required_dimensions = {"color", "size"};
  EXPECT_EQ(count(c), 64u);
}

TEST(Reconstruct, TinyLeastSolutionOrder) {
  ConstraintSet c = tiny();
  Reconstruction r = reconstruct_domain(c);
  using P = PropertyId;
  EXPECT_EQ(r.domain.assignment.at(EntityId("x")), (PropertyList{P("red"), P("big")}));
  EXPECT_EQ(r.domain.assignment.at(EntityId("y")), (PropertyList{P("red"), P("small")}));
  EXPECT_EQ(r.domain.assignment.at(EntityId("z")), (PropertyList{P("red")}));
}

TEST(Reconstruct, TinyTraceMatchesEngine) {
  ConstraintSet c = tiny();
  c.required_dimensions = {"color"};
  c.traces.push_back({"x by size", EntityId("x"), {}, {PropertyId("big")}, {PropertyId("red")}});
  Reconstruction r = reconstruct_domain(c, {1000000, 0});
  // x is red and big; y and z are red and not big.
  EXPECT_EQ(r.solutions, 2u);
  EXPECT_TRUE(check_constraints(Domain(r.domain), c).empty());
}

TEST(Reconstruct, RelaxationNeverLosesSolutions) {
  ConstraintSet c = tiny();
  c.unique_descriptions.push_back({"red picks x", EntityId("x"), {PropertyId("red")}});
  c.traces.push_back({"y by blue", EntityId("y"), {}, {PropertyId("blue")}, {}});
  std::size_t full = count(c);
  ConstraintSet fewer = c;
  fewer.unique_descriptions.clear();
  EXPECT_GT(count(fewer), full);
  fewer = c;
  fewer.traces.clear();
  EXPECT_GT(count(fewer), full);
}

TEST(Reconstruct, DroppingLabCoatGlassesUniquenessWidensSearch) {
  // The turn-6 decay trace implies the same uniqueness, so drop both. A
  // second lab-coat wearer with glasses then becomes possible.
  ConstraintSet c = shipped();
  std::erase_if(c.traces, [](const GenerationTrace &t) { return t.label == "decay turn 6 face1"; });
  ConstraintSet relaxed = c;
  std::erase_if(relaxed.unique_descriptions,
                [](const UniqueDescription &u) { return u.label == "lab-coat and glasses pick out face1"; });
  ASSERT_EQ(relaxed.unique_descriptions.size() + 1, c.unique_descriptions.size());
  for (ConstraintSet *s : {&c, &relaxed}) {
    s->facts[face(7)] = {PropertyId("lab-coat"), PropertyId("glasses")};
  }
  EXPECT_THROW(reconstruct_domain(c), Error);
  Reconstruction r = reconstruct_domain(relaxed, {1, 0});
  EXPECT_TRUE(Domain(r.domain).holds(face(7), PropertyId("lab-coat")));
}

TEST(Reconstruct, MaximalConsistentSubsetNamesTheCulprit) {
  ConstraintSet c = tiny();
  c.required_dimensions = {"color", "size"};
  c.unique_descriptions.push_back({"red picks x", EntityId("x"), {PropertyId("red")}});
  c.unique_descriptions.push_back({"red picks y", EntityId("y"), {PropertyId("red")}});
  ConsistentSubset s = maximal_consistent_subset(c);
  EXPECT_EQ(s.dropped, std::vector<std::string>{"red picks y"});
  EXPECT_EQ(s.kept.unique_descriptions.size(), 1u);
}

TEST(Reconstruct, ConsistentSetIsKeptWhole) {
  ConsistentSubset s = maximal_consistent_subset(shipped());
  EXPECT_TRUE(s.dropped.empty());
}

}  // namespace
}  // namespace wmreg
