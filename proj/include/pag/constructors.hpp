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

#ifndef PAG_CONSTRUCTORS_HPP
#define PAG_CONSTRUCTORS_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "pag/allocation.hpp"
#include "pag/analysis.hpp"
#include "pag/equilibrium.hpp"
#include "pag/evaluation.hpp"
#include "pag/topology.hpp"

namespace pag {

// Symmetric nonnegative matrix with zero diagonal whose row sums are
// `powers`. Exists iff no entry exceeds the sum of the others.
//
// Construction: lay the powers end to end on a circle of circumference P,
// country i owning an arc of length p_i, and pair every point with its
// antipode. W[i][j] is the length of i's arc whose antipodes land in j's arc.
// The half-turn is measure preserving (row and column sums are p) and an
// involution (W is symmetric); an arc no longer than P/2 never meets its own
// antipodal image, so the diagonal is zero exactly under the existence
// condition.
inline AllocationMatrix symmetric_row_sum_matrix(const std::vector<Rational>& powers) {
  const std::size_t n = powers.size();
  if (n < 2) throw PreconditionViolated("symmetric_row_sum_matrix needs at least two powers");
  Rational total(0);
  for (const auto& p : powers) {
    if (p < 0) throw PreconditionViolated("powers must be nonnegative");
    total += p;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (2 * powers[i] > total) {
      throw InfeasiblePower("power " + to_string(powers[i]) + " of entry " +
                            std::to_string(i + 1) + " exceeds the sum of the others (" +
                            to_string(total - powers[i]) + ")");
    }
  }
  AllocationMatrix w(n);
  if (total == 0) return w;

  std::vector<Rational> start(n + 1, Rational(0));
  for (std::size_t i = 0; i < n; ++i) start[i + 1] = start[i] + powers[i];
  const Rational half = total / 2;

  auto overlap = [](const Rational& a0, const Rational& a1, const Rational& b0,
                    const Rational& b1) {
    Rational lo = std::max(a0, b0);
    Rational hi = std::min(a1, b1);
    return hi > lo ? Rational(hi - lo) : Rational(0);
  };
  for (std::size_t i = 0; i < n; ++i) {
    // Image of [start_i, start_i + p_i) shifted by P/2, split at the wrap.
    Rational lo = start[i] + half;
    Rational hi = start[i + 1] + half;
    std::vector<std::pair<Rational, Rational>> pieces;
    if (lo >= total) {
      pieces.emplace_back(lo - total, hi - total);
    } else if (hi <= total) {
      pieces.emplace_back(lo, hi);
    } else {
      pieces.emplace_back(lo, total);
      pieces.emplace_back(Rational(0), hi - total);
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      for (const auto& [a, b] : pieces) w(i, j) += overlap(a, b, start[j], start[j + 1]);
    }
  }
  return w;
}

namespace detail {

inline void require_verified(const Environment& env, const AllocationMatrix& u,
                             const std::string& what) {
  auto issues = validate_allocation(env, u);
  if (!issues.empty())
    throw ConstructionFailed(what + " produced an inadmissible matrix: " + join_messages(issues));
  if (!is_equilibrium(env, u))
    throw ConstructionFailed(what + " produced a matrix that is not a Nash equilibrium");
}

}  // namespace detail

// Every country spends all of its power on its adversaries, symmetrically
// per pair, so every country is precarious.
inline AllocationMatrix balancing_equilibrium(const Environment& env) {
  require_complete_adversary_graph(env, "balancing_equilibrium");
  std::vector<Rational> powers(env.powers().begin(), env.powers().end());
  auto u = symmetric_row_sum_matrix(powers);
  detail::require_verified(env, u, "balancing_equilibrium");
  return u;
}

// Equilibrium on a complete adversary graph in which `survivor` is safe and
// every other country is unsafe. Needs every country strictly weaker than
// all the others combined.
//
// Among the remaining countries G':
//  - if one of them, j, outweighs the rest of G' (p_j > sum of G' \ {j}), j
//    overpowers each other member k with u_jk = p_k + surplus / |G' \ {j}|,
//    those members put everything on j, and the survivor puts enough on j to
//    make it unsafe (halfway between the minimum and its whole power),
//    keeping the rest in reserve;
//  - otherwise G' plays a balancing equilibrium among itself and the
//    survivor spreads its power evenly over G'.
inline AllocationMatrix sole_survivor_equilibrium(const Environment& env, CountryIndex survivor) {
  require_complete_adversary_graph(env, "sole_survivor_equilibrium");
  const std::size_t n = env.size();
  if (survivor >= n) throw PreconditionViolated("unknown survivor country");
  const Rational total = env.total_power();
  for (CountryIndex i = 0; i < n; ++i) {
    if (2 * env.power(i) >= total) {
      throw PreconditionViolated("country " + env.name(i) + " has power " +
                                 to_string(env.power(i)) +
                                 ", not strictly less than the others combined (" +
                                 to_string(total - env.power(i)) + ")");
    }
  }

  std::vector<CountryIndex> rest;
  for (CountryIndex k = 0; k < n; ++k)
    if (k != survivor) rest.push_back(k);
  const Rational rest_total = total - env.power(survivor);

  std::optional<CountryIndex> dominant;
  for (CountryIndex j : rest)
    if (env.power(j) > rest_total - env.power(j)) dominant = j;

  AllocationMatrix u(n);
  const Rational& own = env.power(survivor);
  if (dominant) {
    const CountryIndex j = *dominant;
    const Rational others = rest_total - env.power(j);
    const Rational surplus = env.power(j) - others;
    const Rational share = surplus / static_cast<int>(rest.size() - 1);
    for (CountryIndex k : rest) {
      if (k == j) continue;
      u(j, k) = env.power(k) + share;
      u(k, j) = env.power(k);
    }
    // Any amount above `surplus` makes j unsafe; surplus < own by the
    // precondition.
    const Rational strike = (surplus + own) / 2;
    u(survivor, j) = strike;
    u(survivor, survivor) = own - strike;
  } else {
    std::vector<Rational> rest_powers;
    for (CountryIndex k : rest) rest_powers.push_back(env.power(k));
    auto w = symmetric_row_sum_matrix(rest_powers);
    for (std::size_t a = 0; a < rest.size(); ++a)
      for (std::size_t b = 0; b < rest.size(); ++b) u(rest[a], rest[b]) = w(a, b);
    const Rational share = own / static_cast<int>(rest.size());
    for (CountryIndex k : rest) u(survivor, k) = share;
  }

  detail::require_verified(env, u, "sole_survivor_equilibrium");
  auto x = state_vector(env, u);
  for (CountryIndex k = 0; k < n; ++k) {
    auto expected = k == survivor ? SurvivalState::kSafe : SurvivalState::kUnsafe;
    if (x[k] != expected) {
      throw ConstructionFailed("sole_survivor_equilibrium: country " + env.name(k) + " is " +
                               std::string(to_string(x[k])) + " instead of " +
                               std::string(to_string(expected)));
    }
  }
  return u;
}

// Ordered adversarial pairs processed by pairwise annihilation, with the
// residual power vector after each step (trace[0] is the initial power
// vector, trace[k] the residuals after the k-th pair).
struct PairOrdering {
  std::vector<CountryPair> pairs;
  std::vector<std::vector<Rational>> trace;
};

struct AnnihilationResult {
  PairOrdering ordering;
  AllocationMatrix matrix;  // pair allocations off the diagonal, residuals on it
  std::vector<Rational> residuals;
};

// Adversarial pairs that do not involve `excluded`, in canonical order.
inline std::vector<CountryPair> annihilation_pairs(const Environment& env, CountryIndex excluded) {
  std::vector<CountryPair> pairs;
  for (const auto& p : env.adversary_pairs())
    if (p.first != excluded && p.second != excluded) pairs.push_back(p);
  return pairs;
}

// Walks the pairs in order; each pair commits the smaller of the two
// remaining powers against each other, symmetrically. Leftover power stays
// in reserve. `order` defaults to the canonical pair order and must otherwise
// be a permutation of it.
inline AnnihilationResult pairwise_annihilation(const Environment& env, CountryIndex excluded,
                                                std::optional<std::vector<CountryPair>> order = {}) {
  if (env.has_friends())
    throw TopologyError("pairwise_annihilation needs an environment without friends");
  if (excluded >= env.size()) throw PreconditionViolated("unknown excluded country");
  auto canonical = annihilation_pairs(env, excluded);
  std::vector<CountryPair> pairs;
  if (order) {
    for (auto p : *order) pairs.push_back(std::minmax(p.first, p.second));
    auto sorted = pairs;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != canonical)
      throw PreconditionViolated("pair order is not a permutation of the annihilation pairs");
  } else {
    pairs = canonical;
  }

  AnnihilationResult result;
  std::vector<Rational> z(env.powers().begin(), env.powers().end());
  AllocationMatrix u(env.size());
  result.ordering.trace.push_back(z);
  for (auto [j, h] : pairs) {
    Rational m = std::min(z[j], z[h]);
    z[j] -= m;
    z[h] -= m;
    u(j, h) += m;
    u(h, j) += m;
    result.ordering.trace.push_back(z);
  }
  for (CountryIndex k = 0; k < env.size(); ++k) u(k, k) = z[k];
  result.ordering.pairs = std::move(pairs);
  result.matrix = std::move(u);
  result.residuals = std::move(z);
  return result;
}

struct BipartiteSafeOptions {
  std::uint64_t seed = 0;
  // Pair orderings tried before giving up. When the number of pairs is small
  // enough every permutation is tried instead.
  std::size_t max_orderings = 64;
};

namespace detail {

// Completes an annihilation with the distinguished country's allocation:
// u_ij = z_j + eps_j over its adversaries, with the surplus p_i - sum z_j
// split in proportion to the residuals (evenly when they are all zero).
// Nullopt when the residuals already use up i's power.
inline std::optional<AllocationMatrix> finish_safe_allocation(const Environment& env,
                                                              CountryIndex i,
                                                              const AnnihilationResult& run) {
  AllocationMatrix u = run.matrix;
  const auto foes = env.adversaries(i);
  if (foes.empty()) return u;  // all of i's power is already in reserve
  Rational residual_sum(0);
  for (CountryIndex j : foes) residual_sum += run.residuals[j];
  const Rational surplus = env.power(i) - residual_sum;
  if (surplus <= 0) return std::nullopt;
  u(i, i) = 0;
  for (CountryIndex j : foes) {
    Rational eps = residual_sum > 0 ? Rational(surplus * run.residuals[j] / residual_sum)
                                    : Rational(surplus / static_cast<int>(foes.size()));
    u(i, j) = run.residuals[j] + eps;
  }
  return u;
}

inline bool verifies_safe(const Environment& env, CountryIndex i, const AllocationMatrix& u) {
  if (!validate_allocation(env, u).empty()) return false;
  if (support(env, u, i) <= threat(env, u, i)) return false;
  return is_equilibrium(env, u);
}

}  // namespace detail

// Equilibrium of a friendless bipartite environment in which `target` is
// safe: annihilate the adversarial pairs not involving the target, then have
// the target strike each adversary with slightly more than its residual.
// Orderings are retried (lexicographic first, then every permutation or a
// seeded sample of them) until one verifies.
inline AllocationMatrix bipartite_safe_equilibrium(const Environment& env, CountryIndex target,
                                                   const BipartiteSafeOptions& options = {}) {
  if (target >= env.size()) throw PreconditionViolated("unknown target country");
  require_friendless_bipartite(env, "bipartite_safe_equilibrium");
  if (!bipartite_safe_sufficient(env, target)) {
    throw ConditionNotMet("the sufficient condition for a safe equilibrium fails for " +
                          env.name(target));
  }

  auto order = annihilation_pairs(env, target);
  std::size_t tried = 0;
  auto attempt = [&](const std::vector<CountryPair>& pairs) -> std::optional<AllocationMatrix> {
    ++tried;
    auto run = pairwise_annihilation(env, target, pairs);
    auto u = detail::finish_safe_allocation(env, target, run);
    if (u && detail::verifies_safe(env, target, *u)) return u;
    return std::nullopt;
  };

  // q! <= max_orderings: exhaust the permutations in lexicographic order.
  std::size_t permutations = 1;
  bool exhaustive = true;
  for (std::size_t k = 2; k <= order.size(); ++k) {
    permutations *= k;
    if (permutations > options.max_orderings) {
      exhaustive = false;
      break;
    }
  }
  if (exhaustive) {
    do {
      if (auto u = attempt(order)) return *u;
    } while (std::next_permutation(order.begin(), order.end()));
  } else {
    if (auto u = attempt(order)) return *u;
    std::mt19937_64 rng(options.seed);
    while (tried < options.max_orderings) {
      std::shuffle(order.begin(), order.end(), rng);
      if (auto u = attempt(order)) return *u;
    }
  }
  throw ConstructionFailed("no pair ordering produced a verified equilibrium with " +
                           env.name(target) + " safe (" + std::to_string(tried) +
                           " orderings tried)");
}

}  // namespace pag

#endif  // PAG_CONSTRUCTORS_HPP
