/*
 * Copyright 2026 The fdes authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fdes/automaton.hpp"
#include "fdes/errors.hpp"
#include "fdes/io.hpp"
#include "fdes/simulation.hpp"
#include "fdes/synthesis.hpp"

namespace fdes {

// Exit codes: 0 = success / property holds, 1 = property fails,
// 2 = usage or input error (diagnostics on stderr).

namespace detail {

struct LoadedModel {
  ParsedModel model;
  ReportInput input;
};

inline LoadedModel load_input(const std::string& path) {
  const std::string bytes = read_file(path);
  ParsedModel parsed = [&] {
    try {
      return parse_model(bytes);
    } catch (const ParseError& e) {
      throw ParseError(std::string(e.what()), path);
    }
  }();
  ReportInput input{parsed.automaton.name(), path, sha256_hex(bytes)};
  return LoadedModel{std::move(parsed), std::move(input)};
}

/// The event degree map used by a check comes from whichever input models
/// carry one; when several do they must agree.
inline UncontrollabilityMap resolve_uncontrollability(
    std::initializer_list<const ParsedModel*> models) {
  std::optional<UncontrollabilityMap> found;
  for (const ParsedModel* m : models) {
    if (!m->uncontrollability) continue;
    if (!found) {
      found = *m->uncontrollability;
    } else if (*found != *m->uncontrollability) {
      throw ParseError("input models carry disagreeing uncontrollability maps");
    }
  }
  if (!found) {
    throw ParseError("no input model carries an uncontrollability map");
  }
  return *found;
}

inline EventString split_event_string(const std::string& text) {
  EventString out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    std::string label = text.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    if (label.empty()) throw ParseError("empty event label in --string");
    out.push_back(std::move(label));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

inline void print_matrix(std::ostream& os, const FuzzyMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << "  [";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ' ';
      os << format_grade(m(i, j));
    }
    os << "]\n";
  }
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw Error("failed writing '" + path + "'");
}

inline std::uint64_t exhaustive_budget_from_env() {
  const char* raw = std::getenv("FDES_BUDGET");
  if (raw == nullptr || *raw == '\0') return default_exhaustive_budget;
  std::uint64_t value = 0;
  for (const char* c = raw; *c; ++c) {
    if (*c < '0' || *c > '9' || value > default_exhaustive_budget * 1000) {
      throw ParseError("FDES_BUDGET must be a positive integer, got '" +
                       std::string(raw) + "'");
    }
    value = value * 10 + static_cast<std::uint64_t>(*c - '0');
  }
  if (value == 0) throw ParseError("FDES_BUDGET must be positive");
  return value;
}

inline void append_condition(ReportDocument& report, const ConditionResult& c) {
  ReportCondition out;
  out.name = c.name;
  out.holds = c.holds;
  if (c.witness) out.witness = c.witness->phi;
  report.conditions.push_back(std::move(out));
}

}  // namespace detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err) {
  CLI::App app{"max-min fuzzy automata: language evaluation, simulation "
               "checking, and supervisor synthesis"};
  app.require_subcommand(1);
  bool json_mode = false;
  app.add_flag("--json", json_mode, "emit a JSON report on stdout");

  std::string path_a, path_b, path_c, out_path;
  std::string event_text, method = "fixpoint";
  bool marked_language = false, show_witness = false;

  CLI::App* validate = app.add_subcommand("validate", "parse a model file");
  validate->add_option("model", path_a, "model file")->required();

  CLI::App* compose =
      app.add_subcommand("compose", "parallel-compose two models");
  compose->add_option("left", path_a)->required();
  compose->add_option("right", path_b)->required();
  compose->add_option("-o,--output", out_path, "output model file")->required();

  CLI::App* lang =
      app.add_subcommand("lang", "evaluate the generated or marked language");
  lang->add_option("model", path_a)->required();
  lang->add_option("--string", event_text,
                   "comma-separated event labels (empty for the empty string)");
  lang->add_flag("--marked", marked_language, "evaluate the marked language");

  CLI::App* sim = app.add_subcommand("sim", "decide simulation of the first "
                                            "model by the second");
  sim->add_option("left", path_a)->required();
  sim->add_option("right", path_b)->required();
  sim->add_option("--method", method, "decision method")
      ->check(CLI::IsMember({"fixpoint", "exhaustive"}));
  sim->add_flag("--witness", show_witness, "print the witness relation");

  CLI::App* simeq =
      app.add_subcommand("simeq", "decide simulation equivalence");
  simeq->add_option("left", path_a)->required();
  simeq->add_option("right", path_b)->required();

  CLI::App* plus = app.add_subcommand(
      "plus", "extend a specification with the uncontrollable-slack state");
  plus->add_option("spec", path_a)->required();
  plus->add_option("-o,--output", out_path, "output model file")->required();

  CLI::App* target = app.add_subcommand(
      "check-target", "check supervisor existence for a target specification");
  target->add_option("plant", path_a)->required();
  target->add_option("spec", path_b)->required();

  CLI::App* range = app.add_subcommand(
      "check-range", "check supervisor existence for a specification range");
  range->add_option("plant", path_a)->required();
  range->add_option("lower", path_b)->required();
  range->add_option("upper", path_c)->required();

  CLI::App* langctl = app.add_subcommand(
      "lang-controllable", "check the language-level controllability condition");
  langctl->add_option("plant", path_a)->required();
  langctl->add_option("spec", path_b)->required();

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  ReportDocument report;
  std::ostringstream human;
  const auto start = std::chrono::steady_clock::now();

  try {
    if (validate->parsed()) {
      report.command = "validate";
      auto m = detail::load_input(path_a);
      report.inputs.push_back(m.input);
      report.verdict = "valid";
      human << "model '" << m.model.automaton.name() << "': "
            << m.model.automaton.state_count() << " states, "
            << m.model.automaton.alphabet().size() << " events"
            << (m.model.uncontrollability ? ", uncontrollability map" : "")
            << "\n";
    } else if (compose->parsed()) {
      report.command = "compose";
      auto a = detail::load_input(path_a);
      auto b = detail::load_input(path_b);
      report.inputs = {a.input, b.input};
      const FuzzyAutomaton composed =
          parallel_compose(a.model.automaton, b.model.automaton);
      detail::write_text_file(out_path, serialize_model(composed));
      report.verdict = "ok";
      report.output = out_path;
      human << "wrote '" << out_path << "': " << composed.state_count()
            << " states, " << composed.alphabet().size() << " events\n";
    } else if (lang->parsed()) {
      report.command = "lang";
      auto m = detail::load_input(path_a);
      report.inputs.push_back(m.input);
      const EventString s = detail::split_event_string(event_text);
      const Grade value = marked_language ? eval_marked(m.model.automaton, s)
                                          : eval_generated(m.model.automaton, s);
      report.verdict = "computed";
      report.value = format_grade(value);
      human << format_grade(value) << "\n";
    } else if (sim->parsed()) {
      report.command = "sim";
      auto a = detail::load_input(path_a);
      auto b = detail::load_input(path_b);
      report.inputs = {a.input, b.input};
      const auto witness =
          method == "exhaustive"
              ? find_simulation_exhaustive(a.model.automaton, b.model.automaton,
                                           detail::exhaustive_budget_from_env())
              : greatest_simulation(a.model.automaton, b.model.automaton);
      report.verdict = witness ? "simulated" : "not_simulated";
      report.exit_code = witness ? 0 : 1;
      ReportCondition condition;
      condition.name = "simulated_by";
      condition.holds = witness.has_value();
      if (witness) condition.witness = witness->phi;
      report.conditions.push_back(condition);
      human << "'" << a.model.automaton.name() << "' simulated by '"
            << b.model.automaton.name() << "': " << (witness ? "yes" : "no")
            << " (method: " << method << ")\n";
      if (witness && show_witness) detail::print_matrix(human, witness->phi);
    } else if (simeq->parsed()) {
      report.command = "simeq";
      auto a = detail::load_input(path_a);
      auto b = detail::load_input(path_b);
      report.inputs = {a.input, b.input};
      const auto forward =
          greatest_simulation(a.model.automaton, b.model.automaton);
      const auto backward =
          greatest_simulation(b.model.automaton, a.model.automaton);
      const bool equivalent = forward.has_value() && backward.has_value();
      report.verdict = equivalent ? "equivalent" : "not_equivalent";
      report.exit_code = equivalent ? 0 : 1;
      ReportCondition fwd{"forward", forward.has_value(), std::nullopt};
      if (forward) fwd.witness = forward->phi;
      ReportCondition bwd{"backward", backward.has_value(), std::nullopt};
      if (backward) bwd.witness = backward->phi;
      report.conditions = {std::move(fwd), std::move(bwd)};
      human << "simulation equivalent: " << (equivalent ? "yes" : "no") << "\n";
    } else if (plus->parsed()) {
      report.command = "plus";
      auto r = detail::load_input(path_a);
      report.inputs.push_back(r.input);
      if (!r.model.uncontrollability) {
        throw ParseError("model '" + r.model.automaton.name() +
                         "' carries no uncontrollability map");
      }
      const FuzzyAutomaton extended =
          build_plus(r.model.automaton, *r.model.uncontrollability);
      detail::write_text_file(
          out_path, serialize_model(extended, r.model.uncontrollability));
      report.verdict = "ok";
      report.output = out_path;
      human << "wrote '" << out_path << "': " << extended.state_count()
            << " states\n";
    } else if (target->parsed() || range->parsed()) {
      const bool is_range = range->parsed();
      report.command = is_range ? "check-range" : "check-target";
      auto g = detail::load_input(path_a);
      auto r1 = detail::load_input(path_b);
      std::optional<detail::LoadedModel> r2;
      report.inputs = {g.input, r1.input};
      UncontrollabilityMap uc;
      SynthesisReport result;
      if (is_range) {
        r2 = detail::load_input(path_c);
        report.inputs.push_back(r2->input);
        uc = detail::resolve_uncontrollability(
            {&g.model, &r1.model, &r2->model});
        result = check_range(g.model.automaton, r1.model.automaton,
                             r2->model.automaton, uc);
      } else {
        uc = detail::resolve_uncontrollability({&g.model, &r1.model});
        result = check_target(g.model.automaton, r1.model.automaton, uc);
      }
      report.verdict = result.controllable() ? "controllable" : "not_controllable";
      report.exit_code = result.controllable() ? 0 : 1;
      detail::append_condition(report, result.condition1);
      detail::append_condition(report, result.condition2);
      for (const ConditionResult* c : {&result.condition1, &result.condition2}) {
        human << "condition " << c->name << ": "
              << (c->holds ? "holds" : "fails") << "\n";
      }
      human << "verdict: "
            << (result.controllable() ? "controllable" : "not controllable");
      if (!result.controllable()) human << " (failing: " << result.failing() << ")";
      human << "\n";
    } else if (langctl->parsed()) {
      report.command = "lang-controllable";
      auto g = detail::load_input(path_a);
      auto r = detail::load_input(path_b);
      report.inputs = {g.input, r.input};
      const UncontrollabilityMap uc =
          detail::resolve_uncontrollability({&g.model, &r.model});
      const bool controllable =
          language_controllable(g.model.automaton, r.model.automaton, uc);
      report.verdict = controllable ? "controllable" : "not_controllable";
      report.exit_code = controllable ? 0 : 1;
      human << "language controllable: " << (controllable ? "yes" : "no") << "\n";
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  report.timing_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
  if (json_mode) {
    out << report_to_json(report).dump(2) << "\n";
  } else {
    out << human.str();
  }
  return report.exit_code;
}

}  // namespace fdes
