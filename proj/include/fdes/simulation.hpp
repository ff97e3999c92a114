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
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fdes/automaton.hpp"
#include "fdes/errors.hpp"
#include "fdes/grade.hpp"
#include "fdes/matrix.hpp"

namespace fdes {

// A simulation of g1 by g2 is an n1 x n2 grade matrix phi, phi(i, j) being
// the degree to which state i of g1 is simulated by state j of g2, such that
//
//   initial:  x01 <= x02 (.) phi^T
//   marked:   xm1 (.) phi <= xm2
//   step:     phi^T (.) s1 <= s2 (.) phi^T   for every event s
//
// where (.) is the max-min product and s1, s2 are the event's matrices in g1
// and g2. Both deciders below require identical alphabets.

enum class SimulationMethod { exhaustive, fixpoint, supplied };

inline const char* to_string(SimulationMethod m) {
  switch (m) {
    case SimulationMethod::exhaustive: return "exhaustive";
    case SimulationMethod::fixpoint: return "fixpoint";
    case SimulationMethod::supplied: return "supplied";
  }
  return "?";
}

struct SimulationWitness {
  FuzzyMatrix phi;
  SimulationMethod method = SimulationMethod::supplied;
  std::string left;   // name of the simulated automaton (g1)
  std::string right;  // name of the simulating automaton (g2)
};

/// Outcome of checking one candidate relation against the three conditions.
struct SimulationCheck {
  bool initial = false;
  bool marked = false;
  std::vector<std::pair<std::string, bool>> step;  // one entry per event

  bool ok() const {
    return initial && marked &&
           std::all_of(step.begin(), step.end(),
                       [](const auto& e) { return e.second; });
  }
};

inline SimulationCheck check_simulation(const FuzzyAutomaton& g1,
                                        const FuzzyAutomaton& g2,
                                        const FuzzyMatrix& phi) {
  require_same_alphabet(g1, g2);
  if (phi.rows() != g1.state_count() || phi.cols() != g2.state_count()) {
    throw ShapeError("relation matrix has shape " + shape_of(phi) +
                     ", expected " + std::to_string(g1.state_count()) + "x" +
                     std::to_string(g2.state_count()));
  }
  const FuzzyMatrix phi_t = transpose(phi);
  SimulationCheck out;
  out.initial = matrix_leq(g1.initial(), maxmin_product(g2.initial(), phi_t));
  out.marked = matrix_leq(maxmin_product(g1.marked(), phi), g2.marked());
  for (const std::string& label : g1.alphabet()) {
    const bool holds =
        matrix_leq(maxmin_product(phi_t, g1.event_matrix(label)),
                   maxmin_product(g2.event_matrix(label), phi_t));
    out.step.emplace_back(label, holds);
  }
  return out;
}

/// The finite grade set a simulation search can be restricted to: every grade
/// appearing in either automaton, always augmented with 0 and 1 so that
/// rounding up into the grid is total.
struct CandidateGrid {
  std::vector<Grade> grades;  // ascending, first is 0, last is 1

  std::size_t size() const { return grades.size(); }

  /// Least grid grade >= g.
  Grade round_up(Grade g) const {
    return *std::lower_bound(grades.begin(), grades.end(), g);
  }
};

inline CandidateGrid candidate_grid(const FuzzyAutomaton& g1,
                                    const FuzzyAutomaton& g2) {
  require_same_alphabet(g1, g2);
  std::set<Grade> grades = grades_of(g1);
  const std::set<Grade> extra = grades_of(g2);
  grades.insert(extra.begin(), extra.end());
  grades.insert(Grade::zero());
  grades.insert(Grade::one());
  return CandidateGrid{{grades.begin(), grades.end()}};
}

inline constexpr std::uint64_t default_exhaustive_budget = 10'000'000;

/// Scans every grid-valued relation matrix and returns the join of all
/// matrices satisfying the three conditions; the join is itself a simulation,
/// which makes the result canonical and independent of scan order. Absent if
/// no candidate passes. Intended as the small-instance oracle.
inline std::optional<SimulationWitness> find_simulation_exhaustive(
    const FuzzyAutomaton& g1, const FuzzyAutomaton& g2,
    std::uint64_t budget = default_exhaustive_budget) {
  const CandidateGrid grid = candidate_grid(g1, g2);
  const std::size_t cells = g1.state_count() * g2.state_count();

  std::uint64_t candidates = 1;
  for (std::size_t c = 0; c < cells; ++c) {
    if (candidates > budget / grid.size()) {
      throw ResourceError(
          "exhaustive search needs " + std::to_string(grid.size()) + "^" +
          std::to_string(cells) + " candidate relations, over the budget of " +
          std::to_string(budget) + "; use the fixpoint method instead");
    }
    candidates *= grid.size();
  }

  FuzzyMatrix phi(g1.state_count(), g2.state_count());
  std::vector<std::size_t> digits(cells, 0);
  std::optional<FuzzyMatrix> joined;
  for (std::uint64_t c = 0; c < candidates; ++c) {
    for (std::size_t k = 0; k < cells; ++k) {
      phi(k / g2.state_count(), k % g2.state_count()) = grid.grades[digits[k]];
    }
    if (check_simulation(g1, g2, phi).ok()) {
      joined = joined ? join(*joined, phi) : phi;
    }
    for (std::size_t k = 0; k < cells; ++k) {
      if (++digits[k] < grid.size()) break;
      digits[k] = 0;
    }
  }
  if (!joined) return std::nullopt;
  return SimulationWitness{std::move(*joined), SimulationMethod::exhaustive,
                           g1.name(), g2.name()};
}

/// Computes the greatest matrix satisfying the marked and step conditions by
/// descending iteration, starting from the residuum bound the marked
/// condition imposes:
///
///   phi0(i, j)   = residuum(xm1(i), xm2(j))
///   phi'(i, j)   = min(phi(i, j),
///                      min over events s and states i' of
///                        residuum(s1(i, i'), (s2 (.) phi^T)(j, i')))
///
/// Entries only ever decrease within the finite grade set generated by the
/// inputs, so the iteration reaches a fixpoint; the witness is returned iff
/// that fixpoint also satisfies the initial condition. Every simulation lies
/// below the result, so absence here means absence outright.
inline std::optional<SimulationWitness> greatest_simulation(
    const FuzzyAutomaton& g1, const FuzzyAutomaton& g2) {
  require_same_alphabet(g1, g2);
  const std::size_t n1 = g1.state_count();
  const std::size_t n2 = g2.state_count();

  FuzzyMatrix phi(n1, n2);
  for (std::size_t i = 0; i < n1; ++i) {
    for (std::size_t j = 0; j < n2; ++j) {
      phi(i, j) = godel_residuum(g1.marked()(0, i), g2.marked()(0, j));
    }
  }

  // Termination certificate: each sweep lowers at least one entry and every
  // entry stays inside the candidate grid.
  const std::size_t max_sweeps = n1 * n2 * candidate_grid(g1, g2).size() + 1;
  std::size_t sweeps = 0;
  bool changed = true;
  while (changed) {
    if (++sweeps > max_sweeps) {
      throw std::logic_error("greatest_simulation failed to converge");
    }
    changed = false;
    const FuzzyMatrix phi_t = transpose(phi);
    std::vector<FuzzyMatrix> bounds;  // (s2 (.) phi^T) per event, n2 x n1
    bounds.reserve(g1.alphabet().size());
    for (const std::string& label : g1.alphabet()) {
      bounds.push_back(maxmin_product(g2.event_matrix(label), phi_t));
    }
    FuzzyMatrix next = phi;
    for (std::size_t i = 0; i < n1; ++i) {
      for (std::size_t j = 0; j < n2; ++j) {
        Grade bound = phi(i, j);
        for (std::size_t e = 0; e < g1.alphabet().size(); ++e) {
          const FuzzyMatrix& s1 = g1.event_matrix(g1.alphabet()[e]);
          for (std::size_t k = 0; k < n1; ++k) {
            bound = min(bound, godel_residuum(s1(i, k), bounds[e](j, k)));
          }
        }
        if (bound != phi(i, j)) {
          next(i, j) = bound;
          changed = true;
        }
      }
    }
    phi = std::move(next);
  }

  if (!matrix_leq(g1.initial(), maxmin_product(g2.initial(), transpose(phi)))) {
    return std::nullopt;
  }
  return SimulationWitness{std::move(phi), SimulationMethod::fixpoint,
                           g1.name(), g2.name()};
}

inline bool is_simulated(const FuzzyAutomaton& g1, const FuzzyAutomaton& g2) {
  return greatest_simulation(g1, g2).has_value();
}

/// True iff simulations exist in both directions.
inline bool simulation_equivalent(const FuzzyAutomaton& g1,
                                  const FuzzyAutomaton& g2) {
  return is_simulated(g1, g2) && is_simulated(g2, g1);
}

}  // namespace fdes
