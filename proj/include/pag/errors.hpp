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

#ifndef PAG_ERRORS_HPP
#define PAG_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pag {

enum class IssueKind {
  kDuplicateName,
  kUnknownName,
  kNegativePower,
  kSelfPair,
  kConflictingRelation,
  kDimensionMismatch,
  kNegativeEntry,
  kRowSumMismatch,
  kNullRelationEntry,
};

struct Issue {
  IssueKind kind;
  std::string message;
};

inline std::string join_messages(const std::vector<Issue>& issues) {
  std::string out;
  for (const auto& issue : issues) {
    if (!out.empty()) out += "; ";
    out += issue.message;
  }
  return out;
}

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed environment, allocation, or scenario file.
class InputError : public Error {
 public:
  explicit InputError(std::vector<Issue> issues)
      : Error(join_messages(issues)), issues_(std::move(issues)) {}
  explicit InputError(const std::string& message) : Error(message) {}
  const std::vector<Issue>& issues() const { return issues_; }

 private:
  std::vector<Issue> issues_;
};

// The environment's relation graph does not have the shape an operation
// requires (complete adversary graph, bipartite, friendless, ...).
class TopologyError : public Error {
 public:
  using Error::Error;
};

// Some country's power exceeds the total power of the others.
class InfeasiblePower : public Error {
 public:
  using Error::Error;
};

class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

class ConditionNotMet : public Error {
 public:
  using Error::Error;
};

// A constructor produced no matrix that passes the equilibrium check.
class ConstructionFailed : public Error {
 public:
  using Error::Error;
};

class EnumerationTooLarge : public Error {
 public:
  explicit EnumerationTooLarge(std::uint64_t count, bool saturated)
      : Error("grid enumeration too large: " +
              (saturated ? std::string("more than 1.8e19") : std::to_string(count)) +
              " candidate matrices"),
        count_(count) {}
  std::uint64_t count() const { return count_; }

 private:
  std::uint64_t count_;
};

class EmptyAtlas : public Error {
 public:
  EmptyAtlas() : Error("equilibrium atlas is empty") {}
};

}  // namespace pag

#endif  // PAG_ERRORS_HPP
