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

#ifndef PAG_ORACLE_HPP
#define PAG_ORACLE_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <string_view>
#include <thread>
#include <vector>

#include "pag/allocation.hpp"
#include "pag/equilibrium.hpp"
#include "pag/evaluation.hpp"

namespace pag {

struct GridSpec {
  Rational step{1};
  // Refuse enumerations whose candidate count (product over rows of the
  // number of compositions) exceeds this.
  std::uint64_t bound = 10'000'000;
  unsigned threads = 1;
};

struct EquilibriumClass {
  StateVector states;
  std::vector<AllocationMatrix> members;  // sorted lexicographically
};

// Grid-found equilibria grouped by state vector. Every stored matrix passed
// the exact (grid-independent) equilibrium check, so membership is sound;
// only coverage is limited by the grid.
struct EquilibriumAtlas {
  Rational step;
  std::uint64_t candidates = 0;
  std::vector<EquilibriumClass> classes;  // ordered by state vector

  std::size_t equilibrium_count() const {
    std::size_t total = 0;
    for (const auto& c : classes) total += c.members.size();
    return total;
  }
};

enum class SurvivalPossibility : std::uint8_t { kAlwaysOnGrid, kSometimesOnGrid, kNeverOnGrid };

inline std::string_view to_string(SurvivalPossibility s) {
  switch (s) {
    case SurvivalPossibility::kAlwaysOnGrid:
      return "AlwaysOnGrid";
    case SurvivalPossibility::kSometimesOnGrid:
      return "SometimesOnGrid";
    case SurvivalPossibility::kNeverOnGrid:
      return "NeverOnGrid";
  }
  return "?";
}

namespace detail {

inline std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b, bool* saturated) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    *saturated = true;
    return std::numeric_limits<std::uint64_t>::max();
  }
  return a * b;
}

// C(units + cells - 1, cells - 1), saturating.
inline std::uint64_t composition_count(std::uint64_t units, std::uint64_t cells,
                                       bool* saturated) {
  if (cells <= 1) return 1;
  std::uint64_t k = cells - 1;
  std::uint64_t result = 1;
  for (std::uint64_t r = 1; r <= k; ++r) {
    // result * (units + r) / r stays integral at every step.
    std::uint64_t next = saturating_mul(result, units + r, saturated);
    if (*saturated) return next;
    result = next / r;
  }
  return result;
}

// Every way to write `units` as an ordered sum over `cells`, emitted as full
// rows of length n in lexicographic order of the cell sequence.
inline void compositions(std::int64_t units, const std::vector<CountryIndex>& cells,
                         std::size_t n, std::vector<std::vector<std::int64_t>>* out) {
  std::vector<std::int64_t> row(n, 0);
  auto recurse = [&](auto& self, std::size_t k, std::int64_t left) -> void {
    if (k + 1 == cells.size()) {
      row[cells[k]] = left;
      out->push_back(row);
      row[cells[k]] = 0;
      return;
    }
    for (std::int64_t v = 0; v <= left; ++v) {
      row[cells[k]] = v;
      self(self, k + 1, left - v);
    }
    row[cells[k]] = 0;
  };
  recurse(recurse, 0, units);
}

}  // namespace detail

// Candidate count for `env` at grid step `step`, and whether it saturated.
inline std::pair<std::uint64_t, bool> grid_size(const Environment& env, const Rational& step) {
  bool saturated = false;
  std::uint64_t count = 1;
  for (CountryIndex i = 0; i < env.size(); ++i) {
    Rational units = env.power(i) / step;
    std::uint64_t u = static_cast<std::uint64_t>(boost::multiprecision::numerator(units));
    auto c = detail::composition_count(u, env.active_cells(i).size(), &saturated);
    count = detail::saturating_mul(count, c, &saturated);
    if (saturated) break;
  }
  return {count, saturated};
}

// Enumerates every admissible matrix whose entries are multiples of the step
// and keeps those that are Nash equilibria.
inline EquilibriumAtlas find_equilibria(const Environment& env, const GridSpec& grid = {}) {
  if (grid.step <= 0) throw InputError("grid step must be positive");
  const std::size_t n = env.size();
  for (CountryIndex i = 0; i < n; ++i) {
    if (!is_integer(env.power(i) / grid.step))
      throw InputError("grid step " + to_string(grid.step) + " does not divide the power of " +
                       env.name(i));
  }
  auto [count, saturated] = grid_size(env, grid.step);
  if (saturated || count > grid.bound) throw EnumerationTooLarge(count, saturated);

  // Positive rescaling preserves every state and every deviation verdict, so
  // the search runs on integer units.
  const auto scaled = env.map_powers([&](const Rational& p) {
    Rational units = p / grid.step;
    if (units > std::numeric_limits<std::int32_t>::max())
      throw EnumerationTooLarge(std::numeric_limits<std::uint64_t>::max(), true);
    return static_cast<std::int64_t>(boost::multiprecision::numerator(units));
  });

  std::vector<std::vector<std::vector<std::int64_t>>> rows(n);
  for (CountryIndex i = 0; i < n; ++i)
    detail::compositions(scaled.power(i), scaled.active_cells(i), n, &rows[i]);

  using Found = std::pair<BasicAllocation<std::int64_t>, StateVector>;
  auto search = [&](std::size_t worker, std::size_t workers, std::vector<Found>* found) {
    if (n == 0) return;
    BasicAllocation<std::int64_t> u(n);
    std::vector<std::size_t> pick(n, 0);
    for (std::size_t first = worker; first < rows[0].size(); first += workers) {
      std::fill(pick.begin(), pick.end(), 0);
      pick[0] = first;
      for (CountryIndex i = 0; i < n; ++i)
        std::copy(rows[i][pick[i]].begin(), rows[i][pick[i]].end(), u.row(i).begin());
      while (true) {
        auto b = balances(scaled, u);
        StateVector x;
        x.reserve(n);
        for (CountryIndex i = 0; i < n; ++i) x.push_back(compare_state(b.support[i], b.threat[i]));
        if (is_equilibrium(scaled, u, b, x)) found->emplace_back(u, std::move(x));
        // Odometer over rows 1..n-1; the last row turns fastest.
        bool exhausted = true;
        for (std::size_t r = n - 1; r >= 1; --r) {
          if (++pick[r] == rows[r].size()) pick[r] = 0;
          std::copy(rows[r][pick[r]].begin(), rows[r][pick[r]].end(), u.row(r).begin());
          if (pick[r] != 0) {
            exhausted = false;
            break;
          }
        }
        if (exhausted) break;
      }
    }
  };

  const unsigned workers = std::max(1u, grid.threads);
  std::vector<std::vector<Found>> partial(workers);
  if (workers == 1) {
    search(0, 1, &partial[0]);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(search, w, workers, &partial[w]);
    for (auto& t : pool) t.join();
  }

  std::vector<Found> all;
  for (auto& part : partial)
    for (auto& f : part) all.push_back(std::move(f));
  std::sort(all.begin(), all.end(),
            [](const Found& a, const Found& b) { return a.first.cells() < b.first.cells(); });

  std::map<StateVector, std::vector<AllocationMatrix>> by_class;
  for (const auto& [u, x] : all) {
    by_class[x].push_back(u.map([&](std::int64_t v) { return Rational(v) * grid.step; }));
  }
  EquilibriumAtlas atlas;
  atlas.step = grid.step;
  atlas.candidates = count;
  for (auto& [x, members] : by_class) atlas.classes.push_back({x, std::move(members)});
  return atlas;
}

// Whether country i survives in every, some, or none of the classes found.
inline SurvivalPossibility survival_possibility(const EquilibriumAtlas& atlas, CountryIndex i) {
  if (atlas.classes.empty()) throw EmptyAtlas();
  bool some = false;
  bool all = true;
  for (const auto& c : atlas.classes) {
    if (survives(c.states.at(i))) {
      some = true;
    } else {
      all = false;
    }
  }
  if (all) return SurvivalPossibility::kAlwaysOnGrid;
  return some ? SurvivalPossibility::kSometimesOnGrid : SurvivalPossibility::kNeverOnGrid;
}

}  // namespace pag

#endif  // PAG_ORACLE_HPP
