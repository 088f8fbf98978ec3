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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <chrono>
#include <iostream>
#include <sstream>

#include "cli.hpp"
#include "support/oracles.hpp"

namespace {

using namespace pag;
using Clock = std::chrono::steady_clock;

constexpr auto kS = SurvivalState::kSafe;
constexpr auto kP = SurvivalState::kPrecarious;
constexpr auto kU = SurvivalState::kUnsafe;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Result {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [" << what << "]";
    }
  }
};

int cli_code(std::vector<std::string> args, std::string* out_text = nullptr) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  if (out_text) *out_text = out.str();
  return code;
}

bool has_class(const EquilibriumAtlas& atlas, const StateVector& x) {
  for (const auto& c : atlas.classes)
    if (c.states == x) return true;
  return false;
}

Result criterion1() {
  Result r;
  auto start = Clock::now();
  std::string text;
  const auto file = testing::scenario_path("env1_alloc.json");
  r.require(cli_code({"evaluate", file}, &text) == 0, "evaluate exit code");
  r.require(text.find("states [Safe,Precarious,Unsafe,Unsafe,Precarious,Safe]") != std::string::npos,
            "state vector");
  r.require(cli_code({"verify", file}) == 0, "verify exit code");
  double t = seconds_since(start);
  r.require(t < 1.0, "runtime");
  r.detail << " runtime " << t << " s";
  return r;
}

Result criterion2() {
  Result r;
  auto start = Clock::now();
  const StateVector expected[] = {{kS, kU, kU}, {kU, kS, kU}, {kU, kU, kS}};
  const char* files[] = {"env2_alloc1.json", "env2_alloc2.json", "env2_alloc3.json"};
  for (int k = 0; k < 3; ++k) {
    auto s = load_scenario(testing::scenario_path(files[k]));
    auto report = is_nash(s.environment, *s.allocation);
    r.require(report.equilibrium, std::string(files[k]) + " not an equilibrium");
    r.require(report.states == expected[k], std::string(files[k]) + " states");
  }
  auto atlas = find_equilibria(testing::env2());
  for (const auto& x : expected) r.require(has_class(atlas, x), "class " + format_states(x));
  double t = seconds_since(start);
  r.require(t < 60.0, "runtime");
  r.detail << " atlas " << atlas.classes.size() << " classes, " << atlas.equilibrium_count()
           << " equilibria; runtime " << t << " s";
  return r;
}

Result criterion3() {
  Result r;
  std::mt19937_64 rng(3003);
  std::uniform_int_distribution<int> size(2, 5), power(0, 12);
  int successes = 0, refusals = 0;
  for (int t = 0; t < 200; ++t) {
    std::vector<Rational> p(size(rng));
    for (auto& v : p) v = power(rng);
    Environment env(p, {}, testing::all_pairs(p.size()));
    bool condition = true;
    Rational total = 0;
    for (const auto& v : p) total += v;
    for (const auto& v : p) condition = condition && v <= total - v;
    try {
      auto u = balancing_equilibrium(env);
      ++successes;
      r.require(condition, "succeeded without the condition");
      r.require(is_equilibrium(env, u), "output not Nash");
      for (auto s : state_vector(env, u)) r.require(s == kP, "state not Precarious");
    } catch (const InfeasiblePower&) {
      ++refusals;
      r.require(!condition, "refused despite the condition");
    }
  }
  r.detail << " " << successes << " constructed, " << refusals << " refused";
  return r;
}

Result criterion4() {
  Result r;
  auto env = testing::env2();
  for (CountryIndex i = 0; i < 3; ++i) {
    auto u = sole_survivor_equilibrium(env, i);
    r.require(validate_allocation(env, u).empty(), "invalid output");
    auto report = is_nash(env, u);
    r.require(report.equilibrium, "not Nash for target " + env.name(i));
    StateVector expected(3, kU);
    expected[i] = kS;
    r.require(report.states == expected, "states for target " + env.name(i));
  }
  return r;
}

Result criterion5() {
  Result r;
  auto start = Clock::now();
  auto env = testing::env3();
  r.require(!bipartite_safe_sufficient(env, 0), "sufficient(v1) holds");
  r.require(!bipartite_safe_sufficient(env, 1), "sufficient(v2) holds");
  auto atlas = find_equilibria(env);
  std::size_t offending_classes = 0, offending_matrices = 0;
  std::string example;
  for (const auto& c : atlas.classes) {
    if (c.states[0] != kS && c.states[1] != kS) continue;
    ++offending_classes;
    offending_matrices += c.members.size();
    if (example.empty())
      example = format_states(c.states) + " e.g. " + allocation_to_json(env, c.members.front()).dump();
  }
  r.require(offending_classes == 0, "grid equilibria with v1 or v2 Safe");
  double t = seconds_since(start);
  r.require(t < 300.0, "runtime");
  r.detail << " atlas " << atlas.classes.size() << " classes, " << atlas.equilibrium_count()
           << " equilibria; " << offending_classes << " classes (" << offending_matrices
           << " matrices) have v1 or v2 Safe";
  if (!example.empty()) r.detail << "; first " << example;
  r.detail << "; runtime " << t << " s";
  return r;
}

Result criterion6() {
  Result r;
  std::mt19937_64 rng(6006);
  std::uniform_int_distribution<std::size_t> size(2, 5);
  int instances = 0, failures = 0, draws = 0;
  std::string example;
  while (instances < 50) {
    ++draws;
    auto env = testing::random_bipartite(rng, size(rng), 8);
    std::vector<CountryIndex> eligible;
    for (CountryIndex i = 0; i < env.size(); ++i)
      if (!env.adversaries(i).empty() && bipartite_safe_sufficient(env, i)) eligible.push_back(i);
    if (eligible.empty()) continue;
    std::uniform_int_distribution<std::size_t> pick(0, eligible.size() - 1);
    CountryIndex i = eligible[pick(rng)];
    ++instances;
    try {
      auto u = bipartite_safe_equilibrium(env, i);
      r.require(is_equilibrium(env, u), "returned matrix not Nash");
      r.require(support(env, u, i) > threat(env, u, i), "target not strictly safe");
    } catch (const ConstructionFailed&) {
      ++failures;
      if (example.empty()) {
        std::ostringstream e;
        e << "target " << env.name(i) << " in " << scenario_to_json(env, std::nullopt).dump();
        example = e.str();
      }
    }
  }
  r.require(failures == 0, "ConstructionFailed observed");
  r.detail << " " << instances << " instances (" << draws << " draws), " << failures
           << " ConstructionFailed";
  if (!example.empty()) r.detail << "; first " << example;
  return r;
}

Result criterion7() {
  Result r;
  std::mt19937_64 rng(7007);
  testing::RandomEnvOptions opts;
  opts.min_n = 1;
  opts.max_n = 4;
  opts.max_power = 6;
  int instances = 0, redrawn = 0, balance_groups = 0, clique_groups = 0;
  int balance_violations = 0, clique_violations = 0;
  std::string example;
  while (instances < 50) {
    auto env = testing::random_env(rng, opts);
    const std::size_t n = env.size();
    std::vector<std::tuple<std::vector<CountryIndex>, bool, bool>> groups;
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
      std::vector<CountryIndex> g;
      for (std::size_t k = 0; k < n; ++k)
        if ((mask >> k) & 1) g.push_back(k);
      bool balance = check_group_balance(env, std::span<const CountryIndex>(g));
      bool clique = check_clique_defense(env, std::span<const CountryIndex>(g));
      if (balance || clique) groups.emplace_back(g, balance, clique);
    }
    if (groups.empty()) continue;
    EquilibriumAtlas atlas;
    try {
      atlas = find_equilibria(env);
    } catch (const EnumerationTooLarge&) {
      ++redrawn;
      continue;
    }
    ++instances;
    for (const auto& [g, balance, clique] : groups) {
      bool violated = false;
      const AllocationMatrix* witness = nullptr;
      for (const auto& c : atlas.classes)
        for (auto k : g)
          if (!survives(c.states[k]) && !violated) {
            violated = true;
            witness = &c.members.front();
          }
      balance_groups += balance;
      clique_groups += clique;
      if (violated && balance) ++balance_violations;
      if (violated && clique) ++clique_violations;
      if (violated && example.empty())
        example = "group " + cli::detail::join_names(env, g) + " in " + scenario_to_json(env, *witness).dump();
    }
  }
  r.require(balance_violations == 0, "group balance violated");
  r.require(clique_violations == 0, "clique defense violated");
  r.detail << " " << instances << " instances (" << redrawn << " redrawn over the bound); "
           << "group balance " << balance_violations << "/" << balance_groups
           << " groups violated, clique defense " << clique_violations << "/" << clique_groups;
  if (!example.empty()) r.detail << "; first " << example;
  return r;
}

Result criterion8() {
  Result r;
  auto env = testing::env4();
  auto report = dp_cover(env);
  r.require(report.spans, "cover does not span");
  r.require(report.verdicts == std::vector<Verdict>{Verdict::kNotSurvives, Verdict::kSurvives,
                                                    Verdict::kNotSurvives, Verdict::kSurvives},
            "verdicts");
  auto atlas = find_equilibria(env);
  r.require(atlas.classes.size() == 1, "class count");
  r.require(has_class(atlas, {kU, kS, kU, kS}), "class [Unsafe,Safe,Unsafe,Safe] missing");
  r.detail << " atlas " << atlas.classes.size() << " classes:";
  for (const auto& c : atlas.classes)
    r.detail << " " << format_states(c.states) << "x" << c.members.size();
  return r;
}

Result criterion9() {
  Result r;
  std::mt19937_64 rng(9009);
  testing::RandomEnvOptions opts;
  opts.min_n = 1;
  opts.max_n = 3;
  opts.max_power = 6;
  int grid_hits = 0, misses = 0;
  for (int t = 0; t < 500; ++t) {
    auto env = testing::random_env(rng, opts);
    auto u = t % 2 ? testing::random_allocation(rng, env, Rational(1, 2))
                   : testing::random_allocation(rng, env);
    std::uniform_int_distribution<CountryIndex> pick(0, env.size() - 1);
    CountryIndex i = pick(rng);
    if (!testing::grid_profitable_row(env, u, i, Rational(1, 4))) continue;
    ++grid_hits;
    if (!best_deviation(env, u, i)) ++misses;
  }
  r.require(misses == 0, "missed deviations");
  r.detail << " grid found " << grid_hits << " profitable deviations, " << misses << " missed";
  return r;
}

Result criterion10() {
  Result r;
  std::mt19937_64 rng(10010);
  testing::RandomEnvOptions opts;
  opts.min_n = 1;
  opts.max_n = 8;
  opts.max_power = 20;
  int mismatches = 0;
  for (int t = 0; t < 1000; ++t) {
    auto env = testing::random_env(rng, opts);
    auto u = testing::random_allocation(rng, env);
    if (!validate_allocation(env, u).empty()) {
      r.require(false, "generator produced an invalid allocation");
      continue;
    }
    Rational lhs = 0, rhs = 0;
    for (const auto& s : balances(env, u).support) lhs += s;
    for (const auto& p : env.powers()) rhs += p;
    mismatches += lhs != rhs;
  }
  r.require(mismatches == 0, "sum mismatch");
  r.detail << " " << mismatches << " mismatches in 1000 allocations";
  return r;
}

}  // namespace

int main() {
  struct Entry {
    int number;
    const char* title;
    Result (*run)();
  };
  const Entry entries[] = {
      {1, "ENV1 reference allocation states and verification", criterion1},
      {2, "ENV2 three sole-survivor equilibria and search", criterion2},
      {3, "balancing existence iff on complete graphs", criterion3},
      {4, "sole-survivor construction on ENV2", criterion4},
      {5, "ENV3 sufficient condition and search", criterion5},
      {6, "bipartite safe construction never fails", criterion6},
      {7, "group conditions against the oracle", criterion7},
      {8, "ENV4 cover verdicts and single class", criterion8},
      {9, "best-response soundness against the 1/4 grid", criterion9},
      {10, "support conservation", criterion10},
  };
  int failed = 0;
  for (const auto& e : entries) {
    Result r;
    try {
      r = e.run();
    } catch (const std::exception& ex) {
      r.pass = false;
      r.detail << " [exception: " << ex.what() << "]";
    }
    failed += !r.pass;
    std::cout << (r.pass ? "PASS" : "FAIL") << " criterion " << e.number << ": " << e.title << ";"
              << r.detail.str() << std::endl;
  }
  std::cout << (10 - failed) << "/10 criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
