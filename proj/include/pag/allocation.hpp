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

#ifndef PAG_ALLOCATION_HPP
#define PAG_ALLOCATION_HPP

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include "pag/environment.hpp"
#include "pag/errors.hpp"

namespace pag {

// Square power allocation matrix: entry (i, j) is what country i commits to
// country j; the diagonal is reserve. Storage is dense and row-major; cells on
// null relations exist but must stay zero.
template <class T>
class BasicAllocation {
 public:
  using Scalar = T;

  BasicAllocation() = default;
  explicit BasicAllocation(std::size_t n) : n_(n), cells_(n * n, T(0)) {}

  // All power held in reserve.
  template <class Env>
  static BasicAllocation reserve_only(const Env& env) {
    BasicAllocation u(env.size());
    for (std::size_t i = 0; i < env.size(); ++i) u(i, i) = env.power(i);
    return u;
  }

  std::size_t size() const { return n_; }
  T& operator()(CountryIndex i, CountryIndex j) { return cells_[i * n_ + j]; }
  const T& operator()(CountryIndex i, CountryIndex j) const { return cells_[i * n_ + j]; }

  std::span<T> row(CountryIndex i) { return {cells_.data() + i * n_, n_}; }
  std::span<const T> row(CountryIndex i) const { return {cells_.data() + i * n_, n_}; }

  T row_sum(CountryIndex i) const {
    T total(0);
    for (const auto& v : row(i)) total += v;
    return total;
  }

  const std::vector<T>& cells() const { return cells_; }

  template <class F>
  auto map(F&& f) const {
    using U = std::decay_t<decltype(f(cells_.front()))>;
    BasicAllocation<U> out(n_);
    for (std::size_t k = 0; k < cells_.size(); ++k) out(k / n_, k % n_) = f(cells_[k]);
    return out;
  }

  friend bool operator==(const BasicAllocation&, const BasicAllocation&) = default;
  friend auto operator<=>(const BasicAllocation& a, const BasicAllocation& b) {
    return a.cells_ <=> b.cells_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<T> cells_;
};

using AllocationMatrix = BasicAllocation<Rational>;

// Every violated allocation invariant; empty means the matrix is admissible
// for `env`.
template <class T>
std::vector<Issue> validate_allocation(const BasicEnvironment<T>& env,
                                       const BasicAllocation<T>& u) {
  std::vector<Issue> issues;
  const std::size_t n = env.size();
  if (u.size() != n) {
    issues.push_back({IssueKind::kDimensionMismatch,
                      "matrix is " + std::to_string(u.size()) + "x" + std::to_string(u.size()) +
                          " but the environment has " + std::to_string(n) + " countries"});
    return issues;
  }
  for (CountryIndex i = 0; i < n; ++i) {
    for (CountryIndex j = 0; j < n; ++j) {
      if (u(i, j) < T(0)) {
        issues.push_back({IssueKind::kNegativeEntry,
                          "negative entry u[" + env.name(i) + "][" + env.name(j) + "]"});
      } else if (env.relation(i, j) == Relation::kNull && u(i, j) != T(0)) {
        issues.push_back({IssueKind::kNullRelationEntry,
                          "nonzero entry u[" + env.name(i) + "][" + env.name(j) +
                              "] on a null relation"});
      }
    }
    T deficit = env.power(i) - u.row_sum(i);
    if (deficit != T(0)) {
      std::string amount;
      if constexpr (std::is_same_v<T, Rational>) {
        amount = to_string(deficit);
      } else {
        amount = std::to_string(deficit);
      }
      issues.push_back({IssueKind::kRowSumMismatch,
                        "row " + env.name(i) + " sums to " +
                            (deficit > T(0) ? "less" : "more") +
                            " than its power (deficit " + amount + ")"});
    }
  }
  return issues;
}

template <class T>
void require_valid_allocation(const BasicEnvironment<T>& env, const BasicAllocation<T>& u) {
  auto issues = validate_allocation(env, u);
  if (!issues.empty()) throw InputError(std::move(issues));
}

}  // namespace pag

#endif  // PAG_ALLOCATION_HPP
