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

#ifndef PAG_SCENARIO_HPP
#define PAG_SCENARIO_HPP

#include <cstdint>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "pag/allocation.hpp"
#include "pag/environment.hpp"

namespace pag {

// Scenario file layout:
//
//   {
//     "countries":   [{"name": "v1", "power": 8}, {"name": "v2", "power": "13/2"}],
//     "friends":     [["v2", "v3"]],
//     "adversaries": [["v1", "v2"]],
//     "allocation":  {"v1": {"v1": 2, "v2": "13/2"}, ...}      (optional)
//   }
//
// Quantities are JSON integers or decimal/fraction strings. JSON floating
// point numbers are rejected so nothing passes through binary floating point.
struct Scenario {
  Environment environment;
  std::optional<AllocationMatrix> allocation;
};

namespace detail {

inline Rational quantity_from_json(const nlohmann::json& v, const std::string& where) {
  if (v.is_number_integer()) {
    if (v.is_number_unsigned()) return Rational(BigInt(v.get<std::uint64_t>()));
    return Rational(BigInt(v.get<std::int64_t>()));
  }
  if (v.is_string()) {
    if (auto q = parse_rational(v.get<std::string>())) return *q;
    throw InputError(where + ": cannot parse '" + v.get<std::string>() + "' as an exact number");
  }
  if (v.is_number_float())
    throw InputError(where + ": floating point literal; write it as a string such as \"13/2\"");
  throw InputError(where + ": expected an integer or a fraction string");
}

inline nlohmann::json quantity_to_json(const Rational& q) {
  if (is_integer(q)) {
    const BigInt& num = boost::multiprecision::numerator(q);
    if (num >= std::numeric_limits<std::int64_t>::min() &&
        num <= std::numeric_limits<std::int64_t>::max())
      return num.convert_to<std::int64_t>();
  }
  return to_string(q);
}

inline std::vector<std::pair<std::string, std::string>> pairs_from_json(const nlohmann::json& doc,
                                                                        const char* key) {
  std::vector<std::pair<std::string, std::string>> pairs;
  if (!doc.contains(key)) return pairs;
  const auto& list = doc.at(key);
  if (!list.is_array()) throw InputError(std::string("'") + key + "' must be an array of pairs");
  for (const auto& p : list) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string())
      throw InputError(std::string("'") + key + "' entries must be [name, name]");
    pairs.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
  }
  return pairs;
}

}  // namespace detail

inline Scenario parse_scenario(const nlohmann::json& doc) {
  if (!doc.is_object()) throw InputError("scenario must be a JSON object");
  if (!doc.contains("countries") || !doc.at("countries").is_array())
    throw InputError("scenario needs a 'countries' array");

  EnvironmentDescription desc;
  for (const auto& c : doc.at("countries")) {
    if (!c.is_object() || !c.contains("name") || !c.at("name").is_string() || !c.contains("power"))
      throw InputError("each country needs a string 'name' and a 'power'");
    auto name = c.at("name").get<std::string>();
    desc.countries.push_back({name, detail::quantity_from_json(c.at("power"), "power of " + name)});
  }
  desc.friends = detail::pairs_from_json(doc, "friends");
  desc.adversaries = detail::pairs_from_json(doc, "adversaries");
  Environment env = validate_environment(desc).value();

  std::optional<AllocationMatrix> allocation;
  if (doc.contains("allocation") && !doc.at("allocation").is_null()) {
    const auto& rows = doc.at("allocation");
    if (!rows.is_object()) throw InputError("'allocation' must map country names to rows");
    AllocationMatrix u(env.size());
    std::vector<Issue> issues;
    for (const auto& [from, row] : rows.items()) {
      auto i = env.index_of(from);
      if (!i) {
        issues.push_back({IssueKind::kUnknownName, "allocation row '" + from + "' is not a country"});
        continue;
      }
      if (!row.is_object()) throw InputError("allocation row '" + from + "' must be an object");
      for (const auto& [to, value] : row.items()) {
        auto j = env.index_of(to);
        if (!j) {
          issues.push_back({IssueKind::kUnknownName,
                            "allocation entry '" + from + "' -> '" + to + "' is not a country"});
          continue;
        }
        u(*i, *j) = detail::quantity_from_json(value, "allocation " + from + " -> " + to);
      }
    }
    if (!issues.empty()) throw InputError(std::move(issues));
    allocation = std::move(u);
  }
  return Scenario{std::move(env), std::move(allocation)};
}

inline Scenario parse_scenario_text(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  return parse_scenario(doc);
}

inline Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_scenario_text(buffer.str());
}

// Rows list only nonzero entries; zero rows are kept so every country
// appears.
inline nlohmann::json allocation_to_json(const Environment& env, const AllocationMatrix& u) {
  nlohmann::json rows = nlohmann::json::object();
  for (CountryIndex i = 0; i < env.size(); ++i) {
    nlohmann::json row = nlohmann::json::object();
    for (CountryIndex j = 0; j < env.size(); ++j)
      if (u(i, j) != 0) row[env.name(j)] = detail::quantity_to_json(u(i, j));
    rows[env.name(i)] = std::move(row);
  }
  return rows;
}

inline nlohmann::json scenario_to_json(const Environment& env,
                                       const std::optional<AllocationMatrix>& u = std::nullopt) {
  nlohmann::json doc;
  doc["countries"] = nlohmann::json::array();
  for (CountryIndex i = 0; i < env.size(); ++i)
    doc["countries"].push_back(
        {{"name", env.name(i)}, {"power", detail::quantity_to_json(env.power(i))}});
  auto pairs = [&](const std::vector<CountryPair>& list) {
    nlohmann::json out = nlohmann::json::array();
    for (auto [a, b] : list) out.push_back({env.name(a), env.name(b)});
    return out;
  };
  doc["friends"] = pairs(env.friend_pairs());
  doc["adversaries"] = pairs(env.adversary_pairs());
  if (u) doc["allocation"] = allocation_to_json(env, *u);
  return doc;
}

}  // namespace pag

#endif  // PAG_SCENARIO_HPP
