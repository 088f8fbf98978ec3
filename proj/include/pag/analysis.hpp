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

#ifndef PAG_ANALYSIS_HPP
#define PAG_ANALYSIS_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string_view>
#include <vector>

#include "pag/environment.hpp"
#include "pag/errors.hpp"
#include "pag/topology.hpp"

namespace pag {

namespace detail {

template <class T>
T sum_powers(const BasicEnvironment<T>& env, const std::set<CountryIndex>& members) {
  T total(0);
  for (CountryIndex k : members) total += env.power(k);
  return total;
}

template <class T>
T sum_powers(const BasicEnvironment<T>& env, std::span<const CountryIndex> members) {
  T total(0);
  for (CountryIndex k : members) total += env.power(k);
  return total;
}

inline void require_nonempty_group(std::span<const CountryIndex> group, std::size_t n) {
  if (group.empty()) throw PreconditionViolated("country group must be nonempty");
  for (CountryIndex i : group)
    if (i >= n) throw PreconditionViolated("country group refers to an unknown country");
}

}  // namespace detail

// Sufficient condition for a group with no internal antagonism: every member
// whose power covers all of its adversaries combined survives in every
// equilibrium.
template <class T>
bool check_group_balance(const BasicEnvironment<T>& env, std::span<const CountryIndex> group) {
  detail::require_nonempty_group(group, env.size());
  std::set<CountryIndex> members(group.begin(), group.end());
  for (CountryIndex i : members) {
    for (CountryIndex j : env.adversaries(i))
      if (members.count(j)) return false;
    if (env.power(i) < detail::sum_powers(env, env.adversaries(i))) return false;
  }
  return true;
}

// Sufficient condition for a clique of mutual friends: joint power covers the
// union of the members' adversaries.
template <class T>
bool check_clique_defense(const BasicEnvironment<T>& env, std::span<const CountryIndex> group) {
  detail::require_nonempty_group(group, env.size());
  std::set<CountryIndex> members(group.begin(), group.end());
  for (CountryIndex i : members)
    for (CountryIndex j : members)
      if (i != j && !env.are_friends(i, j)) return false;
  std::set<CountryIndex> hostile;
  for (CountryIndex i : members)
    hostile.insert(env.adversaries(i).begin(), env.adversaries(i).end());
  return detail::sum_powers(env, members) >= detail::sum_powers(env, hostile);
}

// Existence of a balancing equilibrium on a complete adversary graph: no
// country outweighs all the others together.
template <class T>
bool balancing_exists(const BasicEnvironment<T>& env) {
  require_complete_adversary_graph(env, "balancing_exists");
  for (CountryIndex i = 0; i < env.size(); ++i)
    if (env.power(i) > detail::sum_powers(env, env.adversaries(i))) return false;
  return true;
}

// Necessary condition for i to be safe in some equilibrium of a friendless
// bipartite environment: no adversary of i outweighs its own adversaries.
template <class T>
bool bipartite_safe_necessary(const BasicEnvironment<T>& env, CountryIndex i) {
  require_friendless_bipartite(env, "bipartite_safe_necessary");
  for (CountryIndex j : env.adversaries(i))
    if (env.power(j) > detail::sum_powers(env, env.adversaries(j))) return false;
  return true;
}

// The necessary condition plus: i's adversaries are jointly weaker than the
// adversaries of i's adversaries (a set that contains i). Vacuously true when
// i has no adversaries.
template <class T>
bool bipartite_safe_sufficient(const BasicEnvironment<T>& env, CountryIndex i) {
  if (!bipartite_safe_necessary(env, i)) return false;
  if (env.adversaries(i).empty()) return true;
  std::set<CountryIndex> second_ring;
  for (CountryIndex j : env.adversaries(i))
    second_ring.insert(env.adversaries(j).begin(), env.adversaries(j).end());
  return detail::sum_powers(env, env.adversaries(i)) < detail::sum_powers(env, second_ring);
}

struct Domination {
  CountryIndex owner;
  std::vector<CountryIndex> members;  // owner, its adversaries, their friends
};

// i dominates when its power covers its adversaries plus every friend of
// those adversaries.
template <class T>
std::optional<Domination> domination(const BasicEnvironment<T>& env, CountryIndex i) {
  std::set<CountryIndex> allied_with_foes;
  for (CountryIndex j : env.adversaries(i))
    allied_with_foes.insert(env.friends(j).begin(), env.friends(j).end());
  T required = detail::sum_powers(env, env.adversaries(i)) +
               detail::sum_powers(env, allied_with_foes);
  if (env.power(i) < required) return std::nullopt;
  std::set<CountryIndex> members{i};
  members.insert(env.adversaries(i).begin(), env.adversaries(i).end());
  members.insert(allied_with_foes.begin(), allied_with_foes.end());
  return Domination{i, {members.begin(), members.end()}};
}

// The protectorate inequality sums the power of i's weak friends.
// kOwnPowerRepeated counts p_i once per weak friend instead.
enum class ProtectorateReading : std::uint8_t { kFriendPower, kOwnPowerRepeated };

struct Protectorate {
  CountryIndex owner;
  std::vector<CountryIndex> weak_friends;        // friends outweighed by their adversaries
  std::vector<CountryIndex> weak_friends_foes;   // adversaries of those friends
  std::vector<CountryIndex> members;             // owner and all its friends
};

template <class T>
std::optional<Protectorate> protectorate(
    const BasicEnvironment<T>& env, CountryIndex i,
    ProtectorateReading reading = ProtectorateReading::kFriendPower) {
  std::vector<CountryIndex> weak;
  std::set<CountryIndex> weak_foes;
  for (CountryIndex j : env.friends(i)) {
    if (env.power(j) < detail::sum_powers(env, env.adversaries(j))) {
      weak.push_back(j);
      weak_foes.insert(env.adversaries(j).begin(), env.adversaries(j).end());
    }
  }
  T defense = env.power(i);
  for (CountryIndex j : weak)
    defense += reading == ProtectorateReading::kFriendPower ? env.power(j) : env.power(i);
  std::set<CountryIndex> opposed(weak_foes);
  opposed.insert(env.adversaries(i).begin(), env.adversaries(i).end());
  if (defense < detail::sum_powers(env, opposed)) return std::nullopt;
  std::set<CountryIndex> members{i};
  members.insert(env.friends(i).begin(), env.friends(i).end());
  return Protectorate{i, std::move(weak), {weak_foes.begin(), weak_foes.end()},
                      {members.begin(), members.end()}};
}

enum class Verdict : std::uint8_t { kSurvives, kNotSurvives, kConflict, kUndetermined };

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kSurvives:
      return "Survives";
    case Verdict::kNotSurvives:
      return "NotSurvives";
    case Verdict::kConflict:
      return "Conflict";
    case Verdict::kUndetermined:
      return "Undetermined";
  }
  return "?";
}

struct CoverReport {
  std::vector<Domination> dominations;
  std::vector<Protectorate> protectorates;
  std::vector<CountryIndex> cover;  // union of all dominations and protectorates
  bool spans = false;
  std::vector<Verdict> verdicts;
};

// Dominations, protectorates and their union. When the union is every
// country, each one gets a survival verdict:
//   survives       owns a domination, or belongs to a protectorate
//   not survives   is an adversary of a dominating country, or (with no
//                  evidence for survival) a friend of such an adversary
//   conflict       evidence both ways; reported, never resolved
// Without a spanning cover every verdict is undetermined.
template <class T>
CoverReport dp_cover(const BasicEnvironment<T>& env,
                     ProtectorateReading reading = ProtectorateReading::kFriendPower) {
  const std::size_t n = env.size();
  CoverReport report;
  std::set<CountryIndex> cover;
  for (CountryIndex i = 0; i < n; ++i) {
    if (auto d = domination(env, i)) {
      cover.insert(d->members.begin(), d->members.end());
      report.dominations.push_back(std::move(*d));
    }
    if (auto p = protectorate(env, i, reading)) {
      cover.insert(p->members.begin(), p->members.end());
      report.protectorates.push_back(std::move(*p));
    }
  }
  report.cover.assign(cover.begin(), cover.end());
  report.spans = cover.size() == n;
  report.verdicts.assign(n, Verdict::kUndetermined);
  if (!report.spans) return report;

  std::vector<bool> survival(n, false), dominated(n, false), shadowed(n, false);
  for (const auto& d : report.dominations) {
    survival[d.owner] = true;
    for (CountryIndex m : d.members) {
      if (m == d.owner) continue;
      if (env.are_adversaries(d.owner, m)) {
        dominated[m] = true;
      } else {
        shadowed[m] = true;
      }
    }
  }
  for (const auto& p : report.protectorates)
    for (CountryIndex m : p.members) survival[m] = true;

  for (CountryIndex i = 0; i < n; ++i) {
    if (survival[i] && dominated[i]) {
      report.verdicts[i] = Verdict::kConflict;
    } else if (survival[i]) {
      report.verdicts[i] = Verdict::kSurvives;
    } else if (dominated[i] || shadowed[i]) {
      report.verdicts[i] = Verdict::kNotSurvives;
    }
  }
  return report;
}

}  // namespace pag

#endif  // PAG_ANALYSIS_HPP
