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

#ifndef PAG_EQUILIBRIUM_HPP
#define PAG_EQUILIBRIUM_HPP

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "pag/evaluation.hpp"
#include "pag/preference.hpp"

namespace pag {

// Everything country i needs to know to re-allocate its own row while every
// other row stays fixed.
//
// Row i touches exactly three kinds of quantity: its own support (reserve
// and offense count, friend-directed spending does not), the support of each
// friend, and the threat on each adversary. Each favorable category is
// therefore a bound on the row:
//   friend j survives       <=>  u_ij >= gap_j = tau_j - (sigma_j - u_ij)
//   adversary j not safe    <=>  u_ij >= gap_j = sigma_j - (tau_j - u_ij)
//   i itself survives       <=>  sum of u_ij over friends <= self_headroom()
// with sigma, tau and u evaluated at the current matrix. All bounds are
// non-strict because precarious sits in the favorable group on both fronts.
template <class T>
struct DeviationProblem {
  struct Front {
    CountryIndex country;
    Role role;
    T gap;           // unused for the self front
    bool favorable;  // category at the current matrix
  };

  CountryIndex country = 0;
  T budget{0};
  T external_support{0};  // friends' commitments to i
  T external_threat{0};   // adversaries' commitments against i
  std::vector<Front> fronts;  // relevant-member order: self, friends, adversaries

  T self_headroom() const { return budget + external_support - external_threat; }

  CategoryProfile current_profile() const {
    CategoryProfile p;
    for (const auto& f : fronts) p.favorable.push_back(f.favorable);
    return p;
  }

  // Minimal spending on the fronts targeted by `target`, or nullopt when no
  // row reaches every targeted category at once.
  std::optional<T> cost(const std::vector<bool>& target) const {
    T friend_spend(0);
    T total(0);
    for (std::size_t k = 1; k < fronts.size(); ++k) {
      if (!target[k]) continue;
      T need = std::max(fronts[k].gap, T(0));
      total += need;
      if (fronts[k].role == Role::kFriend) friend_spend += need;
    }
    if (total > budget) return std::nullopt;
    if (target[0] && friend_spend > self_headroom()) return std::nullopt;
    return total;
  }

  // Cheapest row meeting `target`: each targeted front gets exactly its
  // bound, everything left goes to reserve.
  std::optional<std::vector<T>> realize(const std::vector<bool>& target, std::size_t n) const {
    auto spent = cost(target);
    if (!spent) return std::nullopt;
    std::vector<T> row(n, T(0));
    row[country] = budget - *spent;
    for (std::size_t k = 1; k < fronts.size(); ++k)
      if (target[k]) row[fronts[k].country] = std::max(fronts[k].gap, T(0));
    return row;
  }
};

template <class T>
DeviationProblem<T> make_deviation_problem(const BasicEnvironment<T>& env,
                                           const BasicAllocation<T>& u, const Balance<T>& b,
                                           const StateVector& x, CountryIndex i) {
  DeviationProblem<T> problem;
  problem.country = i;
  problem.budget = env.power(i);
  problem.external_threat = b.threat[i];
  problem.fronts.push_back({i, Role::kSelf, T(0), survives(x[i])});
  for (CountryIndex j : env.friends(i)) {
    problem.external_support += u(j, i);
    problem.fronts.push_back(
        {j, Role::kFriend, b.threat[j] - (b.support[j] - u(i, j)), survives(x[j])});
  }
  for (CountryIndex j : env.adversaries(i)) {
    problem.fronts.push_back({j, Role::kAdversary, b.support[j] - (b.threat[j] - u(i, j)),
                              x[j] != SurvivalState::kSafe});
  }
  return problem;
}

template <class T>
DeviationProblem<T> make_deviation_problem(const BasicEnvironment<T>& env,
                                           const BasicAllocation<T>& u, CountryIndex i) {
  return make_deviation_problem(env, u, balances(env, u), state_vector(env, u), i);
}

// The targets worth testing, in the order they are tried. Feasibility is
// monotone (dropping a target only relaxes bounds) and so is the improvement
// rule, so the minimal improving profiles are enough:
//   {self}               when i is unsafe (own survival)
//   current + {k}        for every unfavorable front k
template <class T>
std::vector<std::vector<bool>> improving_targets(const DeviationProblem<T>& problem) {
  std::vector<std::vector<bool>> targets;
  const auto current = problem.current_profile().favorable;
  if (!current[0]) {
    std::vector<bool> self_only(current.size(), false);
    self_only[0] = true;
    targets.push_back(std::move(self_only));
  }
  for (std::size_t k = 1; k < current.size(); ++k) {
    if (current[k]) continue;
    auto t = current;
    t[k] = true;
    targets.push_back(std::move(t));
  }
  return targets;
}

template <class T>
struct Deviation {
  CountryIndex country;
  std::vector<T> row;            // replacement row for `country`
  CategoryProfile target;        // profile the row was built to reach
  StateVector states_after;      // full state vector after the deviation
  bool self_survival_jump;       // improvement is i's own survival
};

template <class T>
bool has_profitable_deviation(const DeviationProblem<T>& problem) {
  for (const auto& target : improving_targets(problem))
    if (problem.cost(target)) return true;
  return false;
}

// Nullopt when no deviation of country i is profitable; otherwise a
// witness row and the outcome it produces.
template <class T>
std::optional<Deviation<T>> best_deviation(const BasicEnvironment<T>& env,
                                           const BasicAllocation<T>& u, CountryIndex i) {
  const auto b = balances(env, u);
  const auto x = state_vector(env, u);
  const auto problem = make_deviation_problem(env, u, b, x, i);
  for (const auto& target : improving_targets(problem)) {
    auto row = problem.realize(target, env.size());
    if (!row) continue;
    auto deviated = u;
    std::copy(row->begin(), row->end(), deviated.row(i).begin());
    auto after = state_vector(env, deviated);
    if (improvement_verdict(env, i, x, after) != Improvement::kStrict)
      throw std::logic_error("deviation witness does not improve on the current outcome");
    const bool jump = !survives(x[i]) && survives(after[i]);
    return Deviation<T>{i, std::move(*row), CategoryProfile{target}, std::move(after), jump};
  }
  return std::nullopt;
}

template <class T>
struct NashReport {
  bool equilibrium = true;
  StateVector states;
  // One entry per country in index order; set when that country has a
  // profitable deviation.
  std::vector<std::optional<Deviation<T>>> deviations;
};

template <class T>
NashReport<T> is_nash(const BasicEnvironment<T>& env, const BasicAllocation<T>& u) {
  NashReport<T> report;
  report.states = state_vector(env, u);
  for (CountryIndex i = 0; i < env.size(); ++i) {
    report.deviations.push_back(best_deviation(env, u, i));
    if (report.deviations.back()) report.equilibrium = false;
  }
  return report;
}

// Boolean check with early exit; what the grid search calls per candidate.
template <class T>
bool is_equilibrium(const BasicEnvironment<T>& env, const BasicAllocation<T>& u,
                    const Balance<T>& b, const StateVector& x) {
  for (CountryIndex i = 0; i < env.size(); ++i)
    if (has_profitable_deviation(make_deviation_problem(env, u, b, x, i))) return false;
  return true;
}

template <class T>
bool is_equilibrium(const BasicEnvironment<T>& env, const BasicAllocation<T>& u) {
  return is_equilibrium(env, u, balances(env, u), state_vector(env, u));
}

// Equilibria are equivalent when they induce the same state vector.
template <class T>
bool same_equilibrium_class(const BasicEnvironment<T>& env, const BasicAllocation<T>& u,
                            const BasicAllocation<T>& v) {
  return state_vector(env, u) == state_vector(env, v);
}

}  // namespace pag

#endif  // PAG_EQUILIBRIUM_HPP
