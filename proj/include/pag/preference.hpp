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

#ifndef PAG_PREFERENCE_HPP
#define PAG_PREFERENCE_HPP

#include <cstdint>
#include <vector>

#include "pag/evaluation.hpp"

namespace pag {

// Country i's preferences only look at itself, its friends and its
// adversaries, and only at a two-way grouping of their states:
//   self and friends:  survives (safe or precarious)  vs  unsafe
//   adversaries:       not safe (unsafe or precarious) vs  safe
// The first group of each pair is the favorable one.

enum class Role : std::uint8_t { kSelf, kFriend, kAdversary };

struct RelevantMember {
  CountryIndex country;
  Role role;
};

// Self first, then friends ascending, then adversaries ascending. Every
// category profile uses this order.
template <class Env>
std::vector<RelevantMember> relevant_members(const Env& env, CountryIndex i) {
  std::vector<RelevantMember> members{{i, Role::kSelf}};
  for (CountryIndex j : env.friends(i)) members.push_back({j, Role::kFriend});
  for (CountryIndex j : env.adversaries(i)) members.push_back({j, Role::kAdversary});
  return members;
}

inline bool favorable(Role role, SurvivalState s) {
  return role == Role::kAdversary ? s != SurvivalState::kSafe : survives(s);
}

// One flag per relevant member: is its state in the favorable group?
struct CategoryProfile {
  std::vector<bool> favorable;

  // Every category at least as good as in `other`.
  bool covers(const CategoryProfile& other) const {
    for (std::size_t k = 0; k < favorable.size(); ++k)
      if (other.favorable[k] && !favorable[k]) return false;
    return true;
  }
  friend bool operator==(const CategoryProfile&, const CategoryProfile&) = default;
};

template <class Env>
CategoryProfile category_profile(const Env& env, CountryIndex i, const StateVector& x) {
  CategoryProfile profile;
  for (const auto& m : relevant_members(env, i))
    profile.favorable.push_back(favorable(m.role, x[m.country]));
  return profile;
}

// Weak preference for the outcome x_v over x_u: no relevant member
// leaves its favorable group.
template <class Env>
bool weakly_prefers(const Env& env, CountryIndex i, const StateVector& x_u,
                    const StateVector& x_v) {
  for (const auto& m : relevant_members(env, i)) {
    if (!favorable(m.role, x_v[m.country]) && favorable(m.role, x_u[m.country])) return false;
  }
  return true;
}

// Indifference: identical three-valued states on the relevant set.
template <class Env>
bool indifferent(const Env& env, CountryIndex i, const StateVector& x_u,
                 const StateVector& x_v) {
  for (const auto& m : relevant_members(env, i))
    if (x_u[m.country] != x_v[m.country]) return false;
  return true;
}

// Moving from unsafe to surviving beats everything else.
inline bool strongly_prefers(CountryIndex i, const StateVector& x_u, const StateVector& x_v) {
  return x_u[i] == SurvivalState::kUnsafe && survives(x_v[i]);
}

enum class Improvement : std::uint8_t { kStrict, kNone };

// The rule deciding whether moving from U to V is a profitable deviation for
// i: its own survival jump, or a Pareto improvement over i's category profile.
// Changes inside one group (say an adversary going from precarious to
// unsafe) are not improvements.
template <class Env>
Improvement improvement_verdict(const Env& env, CountryIndex i, const StateVector& x_u,
                                const StateVector& x_v) {
  if (strongly_prefers(i, x_u, x_v)) return Improvement::kStrict;
  auto before = category_profile(env, i, x_u);
  auto after = category_profile(env, i, x_v);
  if (!after.covers(before)) return Improvement::kNone;
  return after == before ? Improvement::kNone : Improvement::kStrict;
}

// Matrix-level forms.

template <class T>
bool weakly_prefers(const BasicEnvironment<T>& env, CountryIndex i, const BasicAllocation<T>& u,
                    const BasicAllocation<T>& v) {
  return weakly_prefers(env, i, state_vector(env, u), state_vector(env, v));
}

template <class T>
bool indifferent(const BasicEnvironment<T>& env, CountryIndex i, const BasicAllocation<T>& u,
                 const BasicAllocation<T>& v) {
  return indifferent(env, i, state_vector(env, u), state_vector(env, v));
}

template <class T>
bool strongly_prefers(const BasicEnvironment<T>& env, CountryIndex i,
                      const BasicAllocation<T>& u, const BasicAllocation<T>& v) {
  return strongly_prefers(i, state_vector(env, u), state_vector(env, v));
}

template <class T>
Improvement improvement_verdict(const BasicEnvironment<T>& env, CountryIndex i,
                                const BasicAllocation<T>& u, const BasicAllocation<T>& v) {
  return improvement_verdict(env, i, state_vector(env, u), state_vector(env, v));
}

}  // namespace pag

#endif  // PAG_PREFERENCE_HPP
