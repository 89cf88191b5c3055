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
using testing::props;

TEST(Domain, ShippedFixtureIsWellFormed) {
  DomainValidationOptions opts;
  opts.expected_count = 16;
  auto problems = validate_domain(faces16(), opts);
  for (const auto &v : problems) ADD_FAILURE() << v.message;
}

TEST(Domain, HoldsIsClosedWorld) {
  const Domain &d = faces16();
  EXPECT_TRUE(d.holds(face(1), PropertyId("lab-coat")));
  EXPECT_FALSE(d.holds(face(2), PropertyId("lab-coat")));
  EXPECT_THROW(d.holds(face(1), PropertyId("beard")), Error);
  EXPECT_THROW(d.holds(EntityId("face99"), PropertyId("glasses")), Error);
}

TEST(Domain, ExtensionFollowsEntityOrder) {
  const Domain &d = faces16();
  EntityList want = {face(2), face(3), face(12), face(13)};
  EXPECT_EQ(d.extension(PropertyId("female")), want);
}

TEST(Domain, PropertiesOfUsesPreferenceOrder) {
  EXPECT_EQ(faces16().properties_of(face(1)),
            props(faces16(), {"hair-light", "hair-short", "male", "lab-coat", "glasses"}));
}

TEST(Domain, ShortAndLongSymbols) {
  const Domain &d = faces16();
  EXPECT_EQ(d.resolve_property("C_L"), PropertyId("lab-coat"));
  EXPECT_EQ(d.resolve_property("lab-coat"), PropertyId("lab-coat"));
  EXPECT_EQ(d.display(PropertyId("hair-short"), SymbolStyle::kShort), "H_S");
  EXPECT_EQ(d.display(PropertyId("hair-short"), SymbolStyle::kLong), "hair-short");
  EXPECT_THROW(d.resolve_property("X_Y"), Error);
}

TEST(Domain, CanonicalOrderSortsForDisplay) {
  const Domain &d = faces16();
  EXPECT_EQ(d.canonical(props(d, {"G_Y", "C_L", "H_S"})), props(d, {"H_S", "C_L", "G_Y"}));
}

TEST(Domain, DimensionConflictReported) {
  DomainData data = faces16().data();
  data.assignment[face(1)].push_back(PropertyId("no-glasses"));
  auto problems = validate_domain(Domain(data));
  ASSERT_EQ(problems.size(), 1u);
  EXPECT_EQ(problems[0].kind, DomainViolation::Kind::kDimensionConflict);
}

TEST(Domain, StructuralProblemsReported) {
  DomainData data = faces16().data();
  data.entities.push_back(face(1));
  data.assignment[EntityId("ghost")] = {PropertyId("glasses")};
  data.assignment[face(2)].push_back(PropertyId("beard"));
  data.preference.pop_back();
  DomainValidationOptions opts;
  opts.expected_count = 16;
  std::set<DomainViolation::Kind> kinds;
  for (const auto &v : validate_domain(Domain(data), opts)) kinds.insert(v.kind);
  using K = DomainViolation::Kind;
  EXPECT_EQ(kinds, (std::set<K>{K::kDuplicateEntity, K::kUnknownAssignedEntity,
                                K::kUnknownAssignedProperty, K::kPreferenceMismatch,
                                K::kSizeMismatch}));
}

TEST(DomainIo, JsonRoundTripIsExact) {
  const DomainData &data = faces16().data();
  DomainData again = domain_data_from_json(to_json(data));
  EXPECT_EQ(Domain(again).data(), faces16().data());
  EXPECT_EQ(domain_hash(Domain(again)), domain_hash(faces16()));
}

TEST(DomainIo, HashSeesEveryFact) {
  DomainData data = faces16().data();
  data.assignment[face(16)].pop_back();
  EXPECT_NE(domain_hash(Domain(data)), domain_hash(faces16()));
}

TEST(DomainIo, MissingFieldIsParseError) {
  ojson j = to_json(faces16().data());
  j.erase("preference");
  try {
    domain_data_from_json(j);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::kParse);
  }
}

TEST(Constraints, ShippedFixtureSatisfiesShippedConstraints) {
  auto c = load_constraints(testing::data_file("table1_constraints.json"));
  auto problems = validate_fixture(faces16(), c);
  for (const auto &v : problems) ADD_FAILURE() << v.message;
}

TEST(Constraints, CheckerFlagsBrokenTrace) {
  auto c = load_constraints(testing::data_file("table1_constraints.json"));
  DomainData data = faces16().data();
  // Give face4 glasses: lab-coat plus glasses no longer singles out face1.
  auto &f4 = data.assignment[face(4)];
  std::replace(f4.begin(), f4.end(), PropertyId("no-glasses"), PropertyId("glasses"));
  auto problems = check_constraints(Domain(data), c);
  ASSERT_FALSE(problems.empty());
  bool saw_trace = false;
  for (const auto &v : problems) saw_trace = saw_trace || v.message.starts_with("trace:");
  EXPECT_TRUE(saw_trace);
}

TEST(Constraints, JsonRoundTrip) {
  auto c = load_constraints(testing::data_file("table1_constraints.json"));
  auto again = constraints_from_json(to_json(c));
  EXPECT_EQ(to_json(again).dump(), to_json(c).dump());
  EXPECT_EQ(again.traces.size(), c.traces.size());
}

}  // namespace
}  // namespace wmreg
