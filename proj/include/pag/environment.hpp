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

#ifndef PAG_ENVIRONMENT_HPP
#define PAG_ENVIRONMENT_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pag/errors.hpp"
#include "pag/rational.hpp"

namespace pag {

using CountryIndex = std::size_t;
using CountryPair = std::pair<CountryIndex, CountryIndex>;

enum class Relation : std::uint8_t { kSelf, kFriend, kAdversary, kNull };

// Result of a checking operation: either a value or the full list of
// problems found.
template <class T>
class Validated {
 public:
  Validated(T value) : value_(std::move(value)) {}  // NOLINT(runtime/explicit)
  Validated(std::vector<Issue> issues) : issues_(std::move(issues)) {}  // NOLINT

  bool ok() const { return value_.has_value(); }
  const T& value() const& {
    if (!value_) throw InputError(issues_);
    return *value_;
  }
  T&& value() && {
    if (!value_) throw InputError(issues_);
    return std::move(*value_);
  }
  const std::vector<Issue>& issues() const { return issues_; }

 private:
  std::optional<T> value_;
  std::vector<Issue> issues_;
};

// A set of countries with total powers and a symmetric, irreflexive
// friend/adversary relation. Everything not listed is a null relation.
//
// Relation pairs are kept normalized (first < second) and sorted; that order
// is the canonical labelling of the pairs used everywhere else.
template <class T>
class BasicEnvironment {
 public:
  using Scalar = T;

  BasicEnvironment(std::vector<std::string> names, std::vector<T> powers,
                   std::vector<CountryPair> friends,
                   std::vector<CountryPair> adversaries) {
    auto issues = check(names, powers, friends, adversaries);
    if (!issues.empty()) throw InputError(std::move(issues));
    names_ = std::move(names);
    powers_ = std::move(powers);
    build_relations(std::move(friends), std::move(adversaries));
  }

  // Countries are named v1..vn.
  BasicEnvironment(std::vector<T> powers, std::vector<CountryPair> friends,
                   std::vector<CountryPair> adversaries)
      : BasicEnvironment(default_names(powers.size()), powers,
                         std::move(friends), std::move(adversaries)) {}

  static std::vector<std::string> default_names(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i + 1));
    return names;
  }

  // All structural problems of a would-be environment; empty when valid.
  static std::vector<Issue> check(const std::vector<std::string>& names,
                                  const std::vector<T>& powers,
                                  const std::vector<CountryPair>& friends,
                                  const std::vector<CountryPair>& adversaries) {
    std::vector<Issue> issues;
    const std::size_t n = powers.size();
    if (names.size() != n) {
      issues.push_back({IssueKind::kDimensionMismatch,
                        "got " + std::to_string(names.size()) + " names for " +
                            std::to_string(n) + " powers"});
    }
    std::set<std::string> seen;
    for (const auto& name : names) {
      if (!seen.insert(name).second)
        issues.push_back({IssueKind::kDuplicateName, "duplicate name '" + name + "'"});
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (powers[i] < T(0)) {
        issues.push_back({IssueKind::kNegativePower,
                          "negative power for country " + label(names, i)});
      }
    }
    std::set<CountryPair> friend_set;
    auto check_pairs = [&](const std::vector<CountryPair>& pairs, const char* what,
                           std::set<CountryPair>* out) {
      for (auto [a, b] : pairs) {
        if (a >= n || b >= n) {
          issues.push_back({IssueKind::kUnknownName,
                            std::string(what) + " pair refers to a country index out of range"});
          continue;
        }
        if (a == b) {
          issues.push_back({IssueKind::kSelfPair, std::string(what) + " pair {" +
                                                      label(names, a) + "," + label(names, b) +
                                                      "} is a self-pair"});
          continue;
        }
        if (out) out->insert(std::minmax(a, b));
      }
    };
    check_pairs(friends, "friend", &friend_set);
    std::set<CountryPair> adversary_set;
    check_pairs(adversaries, "adversary", &adversary_set);
    for (const auto& p : adversary_set) {
      if (friend_set.count(p)) {
        issues.push_back({IssueKind::kConflictingRelation,
                          "conflicting relation: {" + label(names, p.first) + "," +
                              label(names, p.second) + "} is both friend and adversary"});
      }
    }
    return issues;
  }

  std::size_t size() const { return powers_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(CountryIndex i) const { return names_.at(i); }
  const T& power(CountryIndex i) const { return powers_.at(i); }
  std::span<const T> powers() const { return powers_; }

  std::span<const CountryIndex> friends(CountryIndex i) const { return friends_.at(i); }
  std::span<const CountryIndex> adversaries(CountryIndex i) const { return adversaries_.at(i); }
  const std::vector<CountryPair>& friend_pairs() const { return friend_pairs_; }
  const std::vector<CountryPair>& adversary_pairs() const { return adversary_pairs_; }

  Relation relation(CountryIndex i, CountryIndex j) const { return relation_[i * size() + j]; }
  bool are_friends(CountryIndex i, CountryIndex j) const {
    return relation(i, j) == Relation::kFriend;
  }
  bool are_adversaries(CountryIndex i, CountryIndex j) const {
    return relation(i, j) == Relation::kAdversary;
  }
  // Cells of row i that may carry power: i itself, then friends, then
  // adversaries, each ascending.
  const std::vector<CountryIndex>& active_cells(CountryIndex i) const { return cells_.at(i); }

  std::optional<CountryIndex> index_of(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) return std::nullopt;
    return static_cast<CountryIndex>(it - names_.begin());
  }

  bool has_friends() const { return !friend_pairs_.empty(); }

  T total_power() const {
    T total(0);
    for (const auto& p : powers_) total += p;
    return total;
  }

  // Same topology and names, powers mapped through `f`.
  template <class F>
  auto map_powers(F&& f) const {
    using U = std::decay_t<decltype(f(powers_.front()))>;
    std::vector<U> mapped;
    mapped.reserve(size());
    for (const auto& p : powers_) mapped.push_back(f(p));
    return BasicEnvironment<U>(names_, std::move(mapped), friend_pairs_, adversary_pairs_);
  }

 private:
  static std::string label(const std::vector<std::string>& names, std::size_t i) {
    return i < names.size() ? names[i] : "#" + std::to_string(i + 1);
  }

  void build_relations(std::vector<CountryPair> friends, std::vector<CountryPair> adversaries) {
    const std::size_t n = size();
    auto normalize = [](std::vector<CountryPair>& pairs) {
      for (auto& p : pairs)
        if (p.first > p.second) std::swap(p.first, p.second);
      std::sort(pairs.begin(), pairs.end());
      pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    };
    normalize(friends);
    normalize(adversaries);
    friend_pairs_ = std::move(friends);
    adversary_pairs_ = std::move(adversaries);

    relation_.assign(n * n, Relation::kNull);
    friends_.assign(n, {});
    adversaries_.assign(n, {});
    for (std::size_t i = 0; i < n; ++i) relation_[i * n + i] = Relation::kSelf;
    for (auto [a, b] : friend_pairs_) {
      relation_[a * n + b] = relation_[b * n + a] = Relation::kFriend;
      friends_[a].push_back(b);
      friends_[b].push_back(a);
    }
    for (auto [a, b] : adversary_pairs_) {
      relation_[a * n + b] = relation_[b * n + a] = Relation::kAdversary;
      adversaries_[a].push_back(b);
      adversaries_[b].push_back(a);
    }
    cells_.assign(n, {});
    for (std::size_t i = 0; i < n; ++i) {
      std::sort(friends_[i].begin(), friends_[i].end());
      std::sort(adversaries_[i].begin(), adversaries_[i].end());
      cells_[i].push_back(i);
      cells_[i].insert(cells_[i].end(), friends_[i].begin(), friends_[i].end());
      cells_[i].insert(cells_[i].end(), adversaries_[i].begin(), adversaries_[i].end());
    }
  }

  std::vector<std::string> names_;
  std::vector<T> powers_;
  std::vector<CountryPair> friend_pairs_;
  std::vector<CountryPair> adversary_pairs_;
  std::vector<Relation> relation_;
  std::vector<std::vector<CountryIndex>> friends_;
  std::vector<std::vector<CountryIndex>> adversaries_;
  std::vector<std::vector<CountryIndex>> cells_;
};

using Environment = BasicEnvironment<Rational>;

// An environment as written in a scenario: countries and relations by name.
struct EnvironmentDescription {
  struct Country {
    std::string name;
    Rational power;
  };
  std::vector<Country> countries;
  std::vector<std::pair<std::string, std::string>> friends;
  std::vector<std::pair<std::string, std::string>> adversaries;
};

inline Validated<Environment> validate_environment(const EnvironmentDescription& desc) {
  std::vector<std::string> names;
  std::vector<Rational> powers;
  std::map<std::string, CountryIndex> index;
  for (const auto& c : desc.countries) {
    index.emplace(c.name, names.size());
    names.push_back(c.name);
    powers.push_back(c.power);
  }
  std::vector<Issue> issues;
  auto resolve = [&](const std::vector<std::pair<std::string, std::string>>& by_name,
                     const char* what) {
    std::vector<CountryPair> pairs;
    for (const auto& [a, b] : by_name) {
      auto ia = index.find(a);
      auto ib = index.find(b);
      if (ia == index.end() || ib == index.end()) {
        issues.push_back({IssueKind::kUnknownName, std::string(what) + " pair {" + a + "," + b +
                                                       "} names an unknown country"});
        continue;
      }
      pairs.emplace_back(ia->second, ib->second);
    }
    return pairs;
  };
  auto friends = resolve(desc.friends, "friend");
  auto adversaries = resolve(desc.adversaries, "adversary");
  auto structural = Environment::check(names, powers, friends, adversaries);
  issues.insert(issues.end(), structural.begin(), structural.end());
  if (!issues.empty()) return issues;
  return Environment(std::move(names), std::move(powers), std::move(friends),
                     std::move(adversaries));
}

}  // namespace pag

#endif  // PAG_ENVIRONMENT_HPP
