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

#ifndef PAG_EVALUATION_HPP
#define PAG_EVALUATION_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pag/allocation.hpp"
#include "pag/environment.hpp"

namespace pag {

enum class SurvivalState : std::uint8_t { kSafe, kPrecarious, kUnsafe };

using StateVector = std::vector<SurvivalState>;

inline bool survives(SurvivalState s) { return s != SurvivalState::kUnsafe; }

// Lower-case names used in machine-readable output.
inline std::string_view to_string(SurvivalState s) {
  switch (s) {
    case SurvivalState::kSafe:
      return "safe";
    case SurvivalState::kPrecarious:
      return "precarious";
    case SurvivalState::kUnsafe:
      return "unsafe";
  }
  return "?";
}

inline std::string_view display_name(SurvivalState s) {
  switch (s) {
    case SurvivalState::kSafe:
      return "Safe";
    case SurvivalState::kPrecarious:
      return "Precarious";
    case SurvivalState::kUnsafe:
      return "Unsafe";
  }
  return "?";
}

template <class T>
SurvivalState compare_state(const T& support, const T& threat) {
  if (support > threat) return SurvivalState::kSafe;
  if (support == threat) return SurvivalState::kPrecarious;
  return SurvivalState::kUnsafe;
}

// Reserve, plus what friends send to i, plus i's own offense.
template <class T>
T support(const BasicEnvironment<T>& env, const BasicAllocation<T>& u, CountryIndex i) {
  T total = u(i, i);
  for (CountryIndex j : env.friends(i)) total += u(j, i);
  for (CountryIndex j : env.adversaries(i)) total += u(i, j);
  return total;
}

template <class T>
T threat(const BasicEnvironment<T>& env, const BasicAllocation<T>& u, CountryIndex i) {
  T total(0);
  for (CountryIndex j : env.adversaries(i)) total += u(j, i);
  return total;
}

template <class T>
SurvivalState state(const BasicEnvironment<T>& env, const BasicAllocation<T>& u,
                    CountryIndex i) {
  return compare_state(support(env, u, i), threat(env, u, i));
}

template <class T>
struct Balance {
  std::vector<T> support;
  std::vector<T> threat;
};

template <class T>
Balance<T> balances(const BasicEnvironment<T>& env, const BasicAllocation<T>& u) {
  Balance<T> b;
  b.support.reserve(env.size());
  b.threat.reserve(env.size());
  for (CountryIndex i = 0; i < env.size(); ++i) {
    b.support.push_back(support(env, u, i));
    b.threat.push_back(threat(env, u, i));
  }
  return b;
}

template <class T>
StateVector state_vector(const BasicEnvironment<T>& env, const BasicAllocation<T>& u) {
  StateVector x;
  x.reserve(env.size());
  for (CountryIndex i = 0; i < env.size(); ++i) x.push_back(state(env, u, i));
  return x;
}

inline std::string format_states(const StateVector& x, bool display = true) {
  std::string out = "[";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) out += ",";
    out += display ? display_name(x[i]) : to_string(x[i]);
  }
  return out + "]";
}

}  // namespace pag

#endif  // PAG_EVALUATION_HPP
