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

#ifndef PAG_TOOLS_CLI_HPP
#define PAG_TOOLS_CLI_HPP

#include <algorithm>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pag/pag.hpp"
#include "pag/scenario.hpp"

namespace pag::cli {

enum ExitCode : int { kOk = 0, kNegative = 1, kInputError = 2 };

namespace detail {

using nlohmann::json;

inline std::string who(const Environment& env, CountryIndex i) {
  return env.name(i) + " (#" + std::to_string(i + 1) + ")";
}

inline void machine_section(std::ostream& out, const json& doc) {
  out << "--- machine-readable ---\n" << doc.dump(2) << "\n";
}

inline json states_json(const StateVector& x) {
  json out = json::array();
  for (auto s : x) out.push_back(std::string(to_string(s)));
  return out;
}

inline json names_json(const Environment& env, const std::vector<CountryIndex>& members) {
  json out = json::array();
  for (auto k : members) out.push_back(env.name(k));
  return out;
}

inline std::string join_names(const Environment& env, const std::vector<CountryIndex>& members) {
  std::string s;
  for (auto k : members) s += (s.empty() ? "" : ", ") + env.name(k);
  return "{" + s + "}";
}

inline CountryIndex resolve(const Environment& env, const std::string& name) {
  auto i = env.index_of(name);
  if (!i) throw InputError("unknown country '" + name + "'");
  return *i;
}

inline const AllocationMatrix& need_allocation(const Scenario& s, const char* command) {
  if (!s.allocation) throw InputError(std::string(command) + " needs an 'allocation' in the file");
  require_valid_allocation(s.environment, *s.allocation);
  return *s.allocation;
}

inline int cmd_validate(const Scenario& s, std::ostream& out) {
  const auto& env = s.environment;
  out << "environment: valid, " << env.size() << " countries, " << env.friend_pairs().size()
      << " friend pairs, " << env.adversary_pairs().size() << " adversary pairs\n";
  json doc{{"environment", "valid"}};
  int code = kOk;
  if (s.allocation) {
    auto issues = validate_allocation(env, *s.allocation);
    if (issues.empty()) {
      out << "allocation: valid\n";
      doc["allocation"] = "valid";
    } else {
      out << "allocation: invalid\n";
      json list = json::array();
      for (const auto& issue : issues) {
        out << "  " << issue.message << "\n";
        list.push_back(issue.message);
      }
      doc["allocation"] = "invalid";
      doc["issues"] = list;
      code = kNegative;
    }
  }
  machine_section(out, doc);
  return code;
}

inline int cmd_evaluate(const Scenario& s, std::ostream& out) {
  const auto& env = s.environment;
  const auto& u = need_allocation(s, "evaluate");
  auto b = balances(env, u);
  json rows = json::array();
  for (CountryIndex i = 0; i < env.size(); ++i) {
    auto x = compare_state(b.support[i], b.threat[i]);
    out << who(env, i) << ": support " << to_string(b.support[i]) << ", threat "
        << to_string(b.threat[i]) << ", " << display_name(x) << "\n";
    rows.push_back({{"country", env.name(i)},
                    {"index", i + 1},
                    {"support", to_string(b.support[i])},
                    {"threat", to_string(b.threat[i])},
                    {"state", std::string(to_string(x))}});
  }
  out << "states " << format_states(state_vector(env, u)) << "\n";
  machine_section(out, {{"countries", rows}, {"states", states_json(state_vector(env, u))}});
  return kOk;
}

inline int cmd_verify(const Scenario& s, std::ostream& out) {
  const auto& env = s.environment;
  const auto& u = need_allocation(s, "verify");
  auto report = is_nash(env, u);
  out << "Nash equilibrium: " << (report.equilibrium ? "yes" : "no") << "; states "
      << format_states(report.states) << "\n";
  json certs = json::array();
  for (CountryIndex i = 0; i < env.size(); ++i) {
    const auto& d = report.deviations[i];
    json cert{{"country", env.name(i)}, {"index", i + 1}};
    if (!d) {
      out << "  " << who(env, i) << ": no profitable deviation\n";
      cert["profitable_deviation"] = false;
    } else {
      json row = json::object();
      std::string text;
      for (CountryIndex j = 0; j < env.size(); ++j) {
        if (d->row[j] == 0) continue;
        row[env.name(j)] = to_string(d->row[j]);
        text += (text.empty() ? "" : ", ") + env.name(j) + "=" + to_string(d->row[j]);
      }
      out << "  " << who(env, i) << ": profitable deviation {" << text << "} -> states "
          << format_states(d->states_after)
          << (d->self_survival_jump ? " (own survival)" : " (better on some front)") << "\n";
      cert["profitable_deviation"] = true;
      cert["row"] = row;
      cert["states_after"] = states_json(d->states_after);
    }
    certs.push_back(cert);
  }
  machine_section(out, {{"equilibrium", report.equilibrium},
                        {"states", states_json(report.states)},
                        {"certificates", certs}});
  return report.equilibrium ? kOk : kNegative;
}

inline int cmd_construct(const Scenario& s, const std::string& kind,
                         const std::string& target, std::uint64_t seed, std::ostream& out) {
  const auto& env = s.environment;
  AllocationMatrix u(env.size());
  if (kind == "balancing") {
    u = balancing_equilibrium(env);
  } else if (kind == "sole-survivor" || kind == "bipartite-safe") {
    if (target.empty()) throw InputError("--kind " + kind + " needs --target NAME");
    CountryIndex i = resolve(env, target);
    if (kind == "sole-survivor") {
      u = sole_survivor_equilibrium(env, i);
    } else {
      BipartiteSafeOptions options;
      options.seed = seed;
      u = bipartite_safe_equilibrium(env, i, options);
    }
  } else {
    throw InputError("unknown construction kind '" + kind + "'");
  }
  out << scenario_to_json(env, u).dump(2) << "\n";
  return kOk;
}

inline int cmd_analyze(const Scenario& s, const std::string& group_text, std::ostream& out) {
  const auto& env = s.environment;
  json doc = json::object();
  int code = kOk;

  if (!group_text.empty()) {
    std::vector<CountryIndex> group;
    std::stringstream in(group_text);
    for (std::string name; std::getline(in, name, ',');) {
      name.erase(0, name.find_first_not_of(' '));
      name.erase(name.find_last_not_of(' ') + 1);
      if (!name.empty()) group.push_back(resolve(env, name));
    }
    std::sort(group.begin(), group.end());
    group.erase(std::unique(group.begin(), group.end()), group.end());
    bool balance = check_group_balance(env, std::span<const CountryIndex>(group));
    bool clique = check_clique_defense(env, std::span<const CountryIndex>(group));
    out << "group " << join_names(env, group) << ": group balance "
        << (balance ? "holds" : "fails") << ", clique defense " << (clique ? "holds" : "fails")
        << (balance ? "; every member survives in every equilibrium\n"
            : clique ? "; members can hold together, but unilateral play may strand one\n"
                     : "\n");
    doc["group"] = {{"members", names_json(env, group)},
                    {"group_balance", balance},
                    {"clique_defense", clique}};
    if (!balance && !clique) code = kNegative;
  }

  if (is_complete_adversary_graph(env) && env.size() >= 2) {
    bool exists = balancing_exists(env);
    out << "complete adversary graph: balancing equilibrium "
        << (exists ? "exists" : "does not exist (some power exceeds the others combined)") << "\n";
    doc["balancing_equilibrium"] = exists;
  }

  if (!env.has_friends() && two_coloring(env)) {
    json safe = json::array();
    out << "friendless bipartite graph: conditions for a safe equilibrium\n";
    for (CountryIndex i = 0; i < env.size(); ++i) {
      bool nec = bipartite_safe_necessary(env, i);
      bool suf = bipartite_safe_sufficient(env, i);
      out << "  " << who(env, i) << ": necessary " << (nec ? "holds" : "fails") << ", sufficient "
          << (suf ? "holds" : "fails") << "\n";
      safe.push_back({{"country", env.name(i)}, {"necessary", nec}, {"sufficient", suf}});
    }
    doc["bipartite_safe"] = safe;
  }

  auto cover = dp_cover(env);
  json doms = json::array();
  for (const auto& d : cover.dominations) {
    out << "domination of " << env.name(d.owner) << ": " << join_names(env, d.members) << "\n";
    doms.push_back({{"owner", env.name(d.owner)}, {"members", names_json(env, d.members)}});
  }
  json prots = json::array();
  for (const auto& p : cover.protectorates) {
    out << "protectorate of " << env.name(p.owner) << ": " << join_names(env, p.members) << "\n";
    prots.push_back({{"owner", env.name(p.owner)}, {"members", names_json(env, p.members)}});
  }
  json verdicts = json::object();
  std::string verdict_text;
  for (CountryIndex i = 0; i < env.size(); ++i) {
    verdicts[env.name(i)] = std::string(to_string(cover.verdicts[i]));
    verdict_text += (i ? ", " : "") + env.name(i) + " " + std::string(to_string(cover.verdicts[i]));
  }
  if (cover.spans) {
    out << "cover spans; verdicts: " << verdict_text << "\n";
  } else {
    std::vector<CountryIndex> missing;
    for (CountryIndex i = 0; i < env.size(); ++i)
      if (!std::binary_search(cover.cover.begin(), cover.cover.end(), i)) missing.push_back(i);
    out << "cover does not span (missing " << join_names(env, missing) << "); no prediction\n";
  }
  doc["cover"] = {{"dominations", doms},
                  {"protectorates", prots},
                  {"spans", cover.spans},
                  {"verdicts", verdicts}};
  machine_section(out, doc);
  return code;
}

inline int cmd_search(const Scenario& s, const std::string& step_text, std::uint64_t bound,
                      unsigned threads, std::ostream& out) {
  const auto& env = s.environment;
  auto step = parse_rational(step_text);
  if (!step) throw InputError("cannot parse step '" + step_text + "'");
  GridSpec grid;
  grid.step = *step;
  grid.bound = bound;
  grid.threads = threads;
  auto atlas = find_equilibria(env, grid);

  out << "grid step " << to_string(atlas.step) << ": " << atlas.candidates << " candidates, "
      << atlas.equilibrium_count() << " equilibria in " << atlas.classes.size() << " classes\n";
  json classes = json::array();
  for (const auto& c : atlas.classes) {
    out << "  " << format_states(c.states) << " x" << c.members.size() << "\n";
    classes.push_back({{"states", states_json(c.states)},
                       {"count", c.members.size()},
                       {"example", allocation_to_json(env, c.members.front())}});
  }
  json survival = json::object();
  if (!atlas.classes.empty()) {
    for (CountryIndex i = 0; i < env.size(); ++i) {
      auto p = survival_possibility(atlas, i);
      out << "  " << who(env, i) << ": " << to_string(p) << "\n";
      survival[env.name(i)] = std::string(to_string(p));
    }
  }
  out << "note: the grid limits coverage only; a class missing here may still occur off the "
         "grid\n";
  machine_section(out, {{"step", to_string(atlas.step)},
                        {"candidates", atlas.candidates},
                        {"classes", classes},
                        {"survival", survival}});
  return atlas.classes.empty() ? kNegative : kOk;
}

}  // namespace detail

// Runs one command line (without the program name). Reports go to `out`,
// diagnostics to `err`.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Power allocation game analysis", "pag"};
  app.require_subcommand(1);

  std::string file;
  std::string kind;
  std::string target;
  std::string group;
  std::string step;
  std::uint64_t seed = 0;
  std::uint64_t bound = 10'000'000;
  unsigned threads = 1;

  auto* validate = app.add_subcommand("validate", "check environment and allocation invariants");
  auto* evaluate = app.add_subcommand("evaluate", "support, threat and state of every country");
  auto* verify = app.add_subcommand("verify", "Nash equilibrium check with certificates");
  auto* construct = app.add_subcommand("construct", "build an equilibrium allocation");
  auto* analyze = app.add_subcommand("analyze", "survival conditions and cover verdicts");
  auto* search = app.add_subcommand("search", "grid enumeration of equilibria");
  for (auto* sub : {validate, evaluate, verify, construct, analyze, search})
    sub->add_option("file", file, "scenario file")->required();
  construct->add_option("--kind", kind, "balancing | sole-survivor | bipartite-safe")
      ->required()
      ->check(CLI::IsMember({"balancing", "sole-survivor", "bipartite-safe"}));
  construct->add_option("--target", target, "country to keep alive");
  construct->add_option("--seed", seed, "seed for sampled pair orderings");
  analyze->add_option("--group", group, "comma-separated country names");
  search->add_option("--step", step, "grid step, e.g. 1 or 1/2")->required();
  search->add_option("--bound", bound, "refuse grids with more candidates than this");
  search->add_option("--threads", threads, "worker threads");

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    Scenario scenario = load_scenario(file);
    if (*validate) return detail::cmd_validate(scenario, out);
    if (*evaluate) return detail::cmd_evaluate(scenario, out);
    if (*verify) return detail::cmd_verify(scenario, out);
    if (*construct) return detail::cmd_construct(scenario, kind, target, seed, out);
    if (*analyze) return detail::cmd_analyze(scenario, group, out);
    if (*search) return detail::cmd_search(scenario, step, bound, threads, out);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const TopologyError& e) {
    err << "topology error: " << e.what() << "\n";
    return kInputError;
  } catch (const EnumerationTooLarge& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    // Well-formed input whose answer is negative: infeasible power, unmet
    // condition, failed construction.
    err << e.what() << "\n";
    return kNegative;
  }
  return kInputError;
}

}  // namespace pag::cli

#endif  // PAG_TOOLS_CLI_HPP
