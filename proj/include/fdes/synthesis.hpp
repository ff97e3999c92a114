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

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fdes/automaton.hpp"
#include "fdes/errors.hpp"
#include "fdes/grade.hpp"
#include "fdes/matrix.hpp"
#include "fdes/simulation.hpp"

namespace fdes {

/// Per-event degree of uncontrollability. The controllability degree is the
/// exact complement, so the two always sum to 1.
class UncontrollabilityMap {
 public:
  UncontrollabilityMap() = default;

  void set(std::string label, Grade degree) {
    degrees_.insert_or_assign(std::move(label), degree);
  }

  bool contains(std::string_view label) const {
    return degrees_.find(label) != degrees_.end();
  }

  Grade uncontrollability(std::string_view label) const {
    const auto it = degrees_.find(label);
    if (it == degrees_.end()) {
      throw AlphabetError("no uncontrollability degree for event '" +
                          std::string(label) + "'");
    }
    return it->second;
  }

  Grade controllability(std::string_view label) const {
    return uncontrollability(label).complement();
  }

  bool covers(const FuzzyAutomaton& g) const {
    for (const std::string& label : g.alphabet()) {
      if (!contains(label)) return false;
    }
    return true;
  }

  static UncontrollabilityMap uniform(const std::vector<std::string>& alphabet,
                                      Grade degree) {
    UncontrollabilityMap out;
    for (const std::string& label : alphabet) out.set(label, degree);
    return out;
  }

  const std::map<std::string, Grade, std::less<>>& degrees() const {
    return degrees_;
  }

  friend bool operator==(const UncontrollabilityMap&,
                         const UncontrollabilityMap&) = default;

 private:
  std::map<std::string, Grade, std::less<>> degrees_;
};

inline void require_covers(const UncontrollabilityMap& uc,
                           const FuzzyAutomaton& g) {
  for (const std::string& label : g.alphabet()) {
    (void)uc.uncontrollability(label);  // throws with the label on a miss
  }
}

/// A supervisor candidate is admissible when no row of any event matrix
/// falls entirely below that event's uncontrollability degree; such an
/// automaton can never fully disable an uncontrollable event.
inline bool is_uc_compatible(const FuzzyAutomaton& s,
                             const UncontrollabilityMap& uc) {
  require_covers(uc, s);
  for (const std::string& label : s.alphabet()) {
    const Grade degree = uc.uncontrollability(label);
    const FuzzyMatrix& m = s.event_matrix(label);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      Grade row_max = Grade::zero();
      for (std::size_t j = 0; j < m.cols(); ++j) row_max = max(row_max, m(i, j));
      if (row_max < degree) return false;
    }
  }
  return true;
}

/// Extends the specification with one crisp sink state that absorbs
/// uncontrollable slack. For each event with degree u: the old block is kept;
/// the new state self-loops with grade u; a row whose old maximum already
/// reaches u gets 0 in the new column, any other row gets u there. The result
/// is always uncontrollability-compatible.
inline FuzzyAutomaton build_plus(const FuzzyAutomaton& r,
                                 const UncontrollabilityMap& uc) {
  require_covers(uc, r);
  const std::size_t n = r.state_count();

  std::vector<FuzzyMatrix> matrices;
  matrices.reserve(r.alphabet().size());
  for (const std::string& label : r.alphabet()) {
    const Grade degree = uc.uncontrollability(label);
    const FuzzyMatrix& old = r.event_matrix(label);
    FuzzyMatrix out(n + 1, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
      Grade row_max = Grade::zero();
      for (std::size_t j = 0; j < n; ++j) {
        out(i, j) = old(i, j);
        row_max = max(row_max, old(i, j));
      }
      out(i, n) = row_max >= degree ? Grade::zero() : degree;
    }
    out(n, n) = degree;
    matrices.push_back(std::move(out));
  }

  const auto extend = [n](const FuzzyVector& v) {
    FuzzyVector out(1, n + 1);
    for (std::size_t j = 0; j < n; ++j) out(0, j) = v(0, j);
    return out;
  };
  return FuzzyAutomaton(r.name() + "+", n + 1, r.alphabet(),
                        std::move(matrices), extend(r.initial()),
                        extend(r.marked()));
}

struct ConditionResult {
  std::string name;
  bool holds = false;
  std::optional<SimulationWitness> witness;
};

/// Outcome of a supervisor-existence check. The supervisor is present exactly
/// when both conditions hold, and it is then the extended specification, so
/// every verdict can be re-audited from the carried witnesses.
struct SynthesisReport {
  ConditionResult condition1;
  ConditionResult condition2;
  std::optional<FuzzyAutomaton> supervisor;

  bool controllable() const { return condition1.holds && condition2.holds; }

  std::string failing() const {
    std::string out;
    for (const ConditionResult* c : {&condition1, &condition2}) {
      if (c->holds) continue;
      if (!out.empty()) out += ", ";
      out += c->name;
    }
    return out;
  }
};

/// A supervisor S with G || S simulation-equivalent to R exists iff R is
/// simulated by G and G || R+ is simulated by R; R+ itself then serves as the
/// supervisor.
inline SynthesisReport check_target(const FuzzyAutomaton& g,
                                    const FuzzyAutomaton& r,
                                    const UncontrollabilityMap& uc) {
  require_same_alphabet(g, r);
  require_covers(uc, g);

  SynthesisReport report;
  report.condition1.name = "spec_simulated_by_plant";
  auto w1 = greatest_simulation(r, g);
  report.condition1.holds = w1.has_value();
  report.condition1.witness = std::move(w1);

  FuzzyAutomaton r_plus = build_plus(r, uc);
  report.condition2.name = "closed_loop_simulated_by_spec";
  auto w2 = greatest_simulation(parallel_compose(g, r_plus), r);
  report.condition2.holds = w2.has_value();
  report.condition2.witness = std::move(w2);

  if (report.controllable()) report.supervisor = std::move(r_plus);
  return report;
}

/// Range control between a lower specification r1 and an upper one r2
/// (r1 simulated by r2 is a stated hypothesis, enforced here): a supervisor
/// with r1 <= G || S <= r2 exists iff r1 is simulated by G and G || r1+ is
/// simulated by r2.
inline SynthesisReport check_range(const FuzzyAutomaton& g,
                                   const FuzzyAutomaton& r1,
                                   const FuzzyAutomaton& r2,
                                   const UncontrollabilityMap& uc) {
  require_same_alphabet(g, r1);
  require_same_alphabet(g, r2);
  require_covers(uc, g);
  if (!is_simulated(r1, r2)) {
    throw HypothesisError("range check requires the lower specification '" +
                          r1.name() + "' to be simulated by the upper one '" +
                          r2.name() + "'");
  }

  SynthesisReport report;
  report.condition1.name = "lower_spec_simulated_by_plant";
  auto w1 = greatest_simulation(r1, g);
  report.condition1.holds = w1.has_value();
  report.condition1.witness = std::move(w1);

  FuzzyAutomaton r1_plus = build_plus(r1, uc);
  report.condition2.name = "closed_loop_simulated_by_upper_spec";
  auto w2 = greatest_simulation(parallel_compose(g, r1_plus), r2);
  report.condition2.holds = w2.has_value();
  report.condition2.witness = std::move(w2);

  if (report.controllable()) report.supervisor = std::move(r1_plus);
  return report;
}

/// The language-level controllability condition, decided exactly over the
/// joint configuration closure of plant and specification: for every event
/// string s and event e,
///
///   min(L(r)(s), uc(e), L(g)(s e)) <= L(r)(s e).
///
/// Language values here are the max entries of the reached state vectors,
/// for the empty string included (the level of the initial vector): that is
/// the reading under which a compatible supervisor can never drop the level
/// below the event's uncontrollability degree. The closure is finite, so the
/// quantification over all strings terminates.
inline bool language_controllable(const FuzzyAutomaton& g,
                                  const FuzzyAutomaton& r,
                                  const UncontrollabilityMap& uc,
                                  std::size_t max_pairs = default_closure_cap) {
  require_same_alphabet(g, r);
  require_covers(uc, g);
  const detail::PairClosure pc = detail::pair_closure(g, r, max_pairs);
  for (std::size_t p = 0; p < pc.pairs.size(); ++p) {
    const Grade spec_prefix = pc.pairs[p].second.max_entry();
    for (std::size_t e = 0; e < g.alphabet().size(); ++e) {
      const auto& next = pc.pairs[pc.successor[p][e]];
      const Grade lhs = min(spec_prefix,
                            min(uc.uncontrollability(g.alphabet()[e]),
                                next.first.max_entry()));
      if (lhs > next.second.max_entry()) return false;
    }
  }
  return true;
}

}  // namespace fdes
