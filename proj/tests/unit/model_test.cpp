// Copyright 2026 The PAG Survival Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include "support/oracles.hpp"

namespace pag {
namespace {

using testing::env1;
using testing::env2;
using testing::env4;

constexpr auto kS = SurvivalState::kSafe;
constexpr auto kP = SurvivalState::kPrecarious;
constexpr auto kU = SurvivalState::kUnsafe;

bool has_issue(const std::vector<Issue>& issues, IssueKind kind) {
  for (const auto& i : issues)
    if (i.kind == kind) return true;
  return false;
}

TEST(Rational, ParsesExactForms) {
  EXPECT_EQ(*parse_rational("7"), Rational(7));
  EXPECT_EQ(*parse_rational("-3"), Rational(-3));
  EXPECT_EQ(*parse_rational("13/2"), Rational(13, 2));
  EXPECT_EQ(*parse_rational("2.75"), Rational(11, 4));
  EXPECT_EQ(*parse_rational("0.1"), Rational(1, 10));
  EXPECT_FALSE(parse_rational("1/0"));
  EXPECT_FALSE(parse_rational("abc"));
  EXPECT_FALSE(parse_rational(""));
  EXPECT_EQ(to_string(Rational(26, 4)), "13/2");
  EXPECT_EQ(to_string(Rational(-4)), "-4");
}

TEST(Environment, Env1RelationsFromDescription) {
  EnvironmentDescription d;
  for (int k = 0; k < 6; ++k)
    d.countries.push_back({"v" + std::to_string(k + 1), Rational(std::vector<int>{19, 3, 6, 15, 3, 9}[k])});
  d.friends = {{"v2", "v3"}, {"v4", "v5"}};
  d.adversaries = {{"v1", "v4"}, {"v2", "v5"}, {"v3", "v6"}};
  auto v = validate_environment(d);
  ASSERT_TRUE(v.ok());
  const auto& env = v.value();
  EXPECT_EQ(env.size(), 6u);
  EXPECT_EQ(std::vector<CountryIndex>(env.adversaries(0).begin(), env.adversaries(0).end()),
            std::vector<CountryIndex>{3});
  EXPECT_EQ(std::vector<CountryIndex>(env.friends(1).begin(), env.friends(1).end()),
            std::vector<CountryIndex>{2});
  EXPECT_TRUE(env.are_friends(3, 4));
  EXPECT_TRUE(env.are_adversaries(5, 2));
  EXPECT_EQ(env.relation(0, 1), Relation::kNull);
}

TEST(Environment, RejectsNegativePower) {
  EnvironmentDescription d{{{"v1", 8}, {"v2", -1}, {"v3", 4}}, {}, {{"v1", "v2"}}};
  auto v = validate_environment(d);
  ASSERT_FALSE(v.ok());
  EXPECT_TRUE(has_issue(v.issues(), IssueKind::kNegativePower));
  EXPECT_NE(v.issues().front().message.find("negative power for country v2"), std::string::npos);
  EXPECT_THROW((void)v.value(), InputError);
}

TEST(Environment, RejectsConflictingRelation) {
  EnvironmentDescription d{{{"v1", 8}, {"v2", 6}}, {{"v1", "v2"}}, {{"v2", "v1"}}};
  auto v = validate_environment(d);
  ASSERT_FALSE(v.ok());
  ASSERT_TRUE(has_issue(v.issues(), IssueKind::kConflictingRelation));
  EXPECT_NE(v.issues().front().message.find("conflicting relation: {v1,v2}"), std::string::npos);
}

TEST(Environment, ReportsAllIssues) {
  EnvironmentDescription d{{{"a", 1}, {"a", -2}},
                           {{"a", "zz"}},
                           {{"a", "a"}}};
  auto v = validate_environment(d);
  ASSERT_FALSE(v.ok());
  EXPECT_TRUE(has_issue(v.issues(), IssueKind::kDuplicateName));
  EXPECT_TRUE(has_issue(v.issues(), IssueKind::kNegativePower));
  EXPECT_TRUE(has_issue(v.issues(), IssueKind::kUnknownName));
  EXPECT_TRUE(has_issue(v.issues(), IssueKind::kSelfPair));
}

TEST(Environment, ReversedPairsNormalize) {
  Environment env(std::vector<Rational>{1, 2, 3, 4}, {{3, 1}}, {{2, 0}, {3, 2}});
  EXPECT_EQ(env.friend_pairs(), (std::vector<CountryPair>{{1, 3}}));
  EXPECT_EQ(env.adversary_pairs(), (std::vector<CountryPair>{{0, 2}, {2, 3}}));
  EXPECT_TRUE(env.are_friends(1, 3));
  EXPECT_TRUE(env.are_adversaries(0, 2));
  EXPECT_EQ(env.relation(1, 1), Relation::kSelf);
}

TEST(Environment, ZeroPowerIsAllowed) {
  Environment env(std::vector<Rational>{0, 3}, {}, {{0, 1}});
  EXPECT_EQ(env.power(0), 0);
}

TEST(Allocation, Env1AllocIsValid) {
  EXPECT_TRUE(validate_allocation(env1(), testing::env1_alloc()).empty());
}

TEST(Allocation, RowSumDeficit) {
  auto u = testing::env2_alloc1();
  u(0, 0) = 1;  // row 1 now sums to 7
  auto issues = validate_allocation(env2(), u);
  ASSERT_EQ(issues.size(), 1u);
  EXPECT_EQ(issues[0].kind, IssueKind::kRowSumMismatch);
  EXPECT_NE(issues[0].message.find("deficit 1"), std::string::npos);
}

TEST(Allocation, NullRelationEntry) {
  auto env = env1();
  auto u = testing::env1_alloc();
  u(0, 0) = 1;
  u(0, 3) = 17;
  u(0, 1) = 1;  // v1 and v2 have no relation
  auto issues = validate_allocation(env, u);
  EXPECT_TRUE(has_issue(issues, IssueKind::kNullRelationEntry));
  EXPECT_THROW(require_valid_allocation(env, u), InputError);
}

TEST(Allocation, NegativeEntryAndDimension) {
  auto u = testing::env2_alloc1();
  u(0, 0) = -2;
  u(0, 1) = 8;
  EXPECT_TRUE(has_issue(validate_allocation(env2(), u), IssueKind::kNegativeEntry));
  EXPECT_TRUE(has_issue(validate_allocation(env2(), AllocationMatrix(2)),
                        IssueKind::kDimensionMismatch));
}

TEST(Evaluation, Env1AllocStates) {
  EXPECT_EQ(state_vector(env1(), testing::env1_alloc()), (StateVector{kS, kP, kU, kU, kP, kS}));
}

TEST(Evaluation, Env2AllocationStates) {
  EXPECT_EQ(state_vector(env2(), testing::env2_alloc1()), (StateVector{kS, kU, kU}));
  EXPECT_EQ(state_vector(env2(), testing::env2_alloc2()), (StateVector{kU, kS, kU}));
  EXPECT_EQ(state_vector(env2(), testing::env2_alloc3()), (StateVector{kU, kU, kS}));
}

TEST(Evaluation, Env4AllocStates) {
  EXPECT_EQ(state_vector(env4(), testing::env4_alloc()), (StateVector{kU, kS, kU, kS}));
}

TEST(Evaluation, SupportAndThreatValues) {
  auto env = env1();
  auto u = testing::env1_alloc();
  EXPECT_EQ(support(env, u, 0), 19);
  EXPECT_EQ(threat(env, u, 0), 15);
  EXPECT_EQ(support(env, u, 3), 15);
  EXPECT_EQ(threat(env, u, 3), 19);
}

TEST(Evaluation, FormatStates) {
  EXPECT_EQ(format_states({kS, kU, kU}), "[Safe,Unsafe,Unsafe]");
  EXPECT_EQ(format_states({kP}, false), "[precarious]");
}

TEST(Evaluation, AgreesWithDefinition) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 300; ++t) {
    auto env = testing::random_env(rng);
    auto u = testing::random_allocation(rng, env);
    ASSERT_TRUE(validate_allocation(env, u).empty());
    EXPECT_EQ(state_vector(env, u), testing::to_library(testing::naive_states(env, u)));
  }
}

TEST(Scenario, RoundTripFractions) {
  Environment env({"a", "b", "c"}, {Rational(13, 2), 3, 0}, {{1, 2}}, {{0, 1}});
  AllocationMatrix u(3);
  u(0, 0) = Rational(1, 3);
  u(0, 1) = Rational(37, 6);
  u(1, 2) = 3;
  auto text = scenario_to_json(env, u).dump();
  auto back = parse_scenario_text(text);
  EXPECT_EQ(back.environment.names(), env.names());
  EXPECT_EQ(std::vector<Rational>(back.environment.powers().begin(), back.environment.powers().end()),
            std::vector<Rational>(env.powers().begin(), env.powers().end()));
  EXPECT_EQ(back.environment.friend_pairs(), env.friend_pairs());
  EXPECT_EQ(back.environment.adversary_pairs(), env.adversary_pairs());
  ASSERT_TRUE(back.allocation);
  EXPECT_EQ(*back.allocation, u);
}

TEST(Scenario, RejectsFloatingPoint) {
  EXPECT_THROW(parse_scenario_text(R"({"countries":[{"name":"a","power":1.5}]})"), InputError);
  auto ok = parse_scenario_text(R"({"countries":[{"name":"a","power":"1.5"}]})");
  EXPECT_EQ(ok.environment.power(0), Rational(3, 2));
}

TEST(Scenario, FixtureFilesMatchReferenceMatrices) {
  auto s = load_scenario(testing::scenario_path("env1_alloc.json"));
  ASSERT_TRUE(s.allocation);
  EXPECT_EQ(*s.allocation, testing::env1_alloc());
  EXPECT_EQ(load_scenario(testing::scenario_path("env4_alloc.json")).allocation, testing::env4_alloc());
  EXPECT_EQ(load_scenario(testing::scenario_path("env2_alloc3.json")).allocation,
            testing::env2_alloc3());
}

}  // namespace
}  // namespace pag
