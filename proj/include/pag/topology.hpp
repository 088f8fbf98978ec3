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

#ifndef PAG_TOPOLOGY_HPP
#define PAG_TOPOLOGY_HPP

#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "pag/environment.hpp"
#include "pag/errors.hpp"

namespace pag {

// No friends and every pair of distinct countries adversarial.
template <class Env>
bool is_complete_adversary_graph(const Env& env) {
  if (env.has_friends()) return false;
  const std::size_t n = env.size();
  return env.adversary_pairs().size() == n * (n - 1) / 2;
}

// Side (0 or 1) of every country in a two-colouring of the adversary graph,
// or nullopt if it has an odd cycle. Components are coloured independently,
// each starting from its lowest index on side 0.
template <class Env>
std::optional<std::vector<int>> two_coloring(const Env& env) {
  std::vector<int> side(env.size(), -1);
  for (CountryIndex start = 0; start < env.size(); ++start) {
    if (side[start] != -1) continue;
    side[start] = 0;
    std::deque<CountryIndex> queue{start};
    while (!queue.empty()) {
      CountryIndex i = queue.front();
      queue.pop_front();
      for (CountryIndex j : env.adversaries(i)) {
        if (side[j] == -1) {
          side[j] = 1 - side[i];
          queue.push_back(j);
        } else if (side[j] == side[i]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

template <class Env>
void require_complete_adversary_graph(const Env& env, const char* operation) {
  if (env.size() < 2)
    throw TopologyError(std::string(operation) + " needs at least two countries");
  if (!is_complete_adversary_graph(env))
    throw TopologyError(std::string(operation) +
                        " needs every pair of countries to be adversaries and no friends");
}

template <class Env>
void require_friendless_bipartite(const Env& env, const char* operation) {
  if (env.has_friends())
    throw TopologyError(std::string(operation) + " needs an environment without friends");
  if (!two_coloring(env))
    throw TopologyError(std::string(operation) + " needs a bipartite adversary graph");
}

}  // namespace pag

#endif  // PAG_TOPOLOGY_HPP
