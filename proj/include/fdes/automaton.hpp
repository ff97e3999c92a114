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
#include <cstddef>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fdes/errors.hpp"
#include "fdes/grade.hpp"
#include "fdes/matrix.hpp"

namespace fdes {

/// A sequence of event labels; the empty sequence is the empty string.
using EventString = std::vector<std::string>;

/// A max-min automaton: one n x n grade matrix per event label plus initial
/// and marked state vectors of length n. Immutable after construction.
class FuzzyAutomaton {
 public:
  FuzzyAutomaton(std::string name, std::size_t state_count,
                 std::vector<std::string> alphabet,
                 std::vector<FuzzyMatrix> event_matrices, FuzzyVector initial,
                 FuzzyVector marked)
      : name_(std::move(name)),
        state_count_(state_count),
        alphabet_(std::move(alphabet)),
        event_matrices_(std::move(event_matrices)),
        initial_(std::move(initial)),
        marked_(std::move(marked)) {
    if (state_count_ == 0) {
      throw ShapeError("automaton '" + name_ + "' must have at least one state");
    }
    if (alphabet_.size() != event_matrices_.size()) {
      throw AlphabetError("automaton '" + name_ + "' has " +
                          std::to_string(alphabet_.size()) + " labels but " +
                          std::to_string(event_matrices_.size()) +
                          " event matrices");
    }
    for (std::size_t e = 0; e < alphabet_.size(); ++e) {
      if (alphabet_[e].empty()) {
        throw AlphabetError("automaton '" + name_ + "' has an empty event label");
      }
      if (!index_.emplace(alphabet_[e], e).second) {
        throw AlphabetError("automaton '" + name_ + "' repeats event label '" +
                            alphabet_[e] + "'");
      }
      const FuzzyMatrix& m = event_matrices_[e];
      if (m.rows() != state_count_ || m.cols() != state_count_) {
        throw ShapeError("event '" + alphabet_[e] + "' of automaton '" + name_ +
                         "' has shape " + shape_of(m) + ", expected " +
                         std::to_string(state_count_) + "x" +
                         std::to_string(state_count_));
      }
    }
    for (const auto* v : {&initial_, &marked_}) {
      if (v->rows() != 1 || v->cols() != state_count_) {
        throw ShapeError("state vector of automaton '" + name_ + "' has shape " +
                         shape_of(*v) + ", expected 1x" +
                         std::to_string(state_count_));
      }
    }
  }

  const std::string& name() const { return name_; }
  std::size_t state_count() const { return state_count_; }
  const std::vector<std::string>& alphabet() const { return alphabet_; }
  const FuzzyVector& initial() const { return initial_; }
  const FuzzyVector& marked() const { return marked_; }

  std::optional<std::size_t> event_index(std::string_view label) const {
    const auto it = index_.find(label);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  const FuzzyMatrix& event_matrix(std::size_t index) const {
    return event_matrices_[index];
  }

  const FuzzyMatrix& event_matrix(std::string_view label) const {
    const auto idx = event_index(label);
    if (!idx) {
      throw AlphabetError("event '" + std::string(label) +
                          "' is not in the alphabet of automaton '" + name_ +
                          "'");
    }
    return event_matrices_[*idx];
  }

  /// True iff every grade in the automaton is 0 or 1.
  bool is_crisp() const {
    const auto crisp = [](const FuzzyMatrix& m) {
      return std::all_of(m.entries().begin(), m.entries().end(), [](Grade g) {
        return g.is_zero() || g.is_one();
      });
    };
    return crisp(initial_) && crisp(marked_) &&
           std::all_of(event_matrices_.begin(), event_matrices_.end(), crisp);
  }

  /// Same label set, in any order.
  bool same_alphabet(const FuzzyAutomaton& other) const {
    if (alphabet_.size() != other.alphabet_.size()) return false;
    return std::all_of(alphabet_.begin(), alphabet_.end(),
                       [&](const std::string& label) {
                         return other.event_index(label).has_value();
                       });
  }

  friend bool operator==(const FuzzyAutomaton&, const FuzzyAutomaton&) = default;

 private:
  std::string name_;
  std::size_t state_count_;
  std::vector<std::string> alphabet_;
  std::vector<FuzzyMatrix> event_matrices_;
  FuzzyVector initial_;
  FuzzyVector marked_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

inline void require_same_alphabet(const FuzzyAutomaton& a,
                                  const FuzzyAutomaton& b) {
  if (!a.same_alphabet(b)) {
    throw AlphabetError("automata '" + a.name() + "' and '" + b.name() +
                        "' have different alphabets");
  }
}

/// The set of grades appearing in the state vectors and event matrices.
inline std::set<Grade> grades_of(const FuzzyAutomaton& g) {
  std::set<Grade> out;
  const auto add = [&](const FuzzyMatrix& m) {
    out.insert(m.entries().begin(), m.entries().end());
  };
  add(g.initial());
  add(g.marked());
  for (std::size_t e = 0; e < g.alphabet().size(); ++e) add(g.event_matrix(e));
  return out;
}

inline FuzzyVector reached_vector(const FuzzyAutomaton& g,
                                  const EventString& s) {
  FuzzyVector v = g.initial();
  for (const std::string& label : s) {
    v = maxmin_product(v, g.event_matrix(label));
  }
  return v;
}

/// Degree to which the automaton generates `s`: the max entry of the state
/// vector reached from the initial vector. The empty string evaluates to 1.
inline Grade eval_generated(const FuzzyAutomaton& g, const EventString& s) {
  if (s.empty()) return Grade::one();
  return reached_vector(g, s).max_entry();
}

/// Degree to which the automaton marks `s`: the reached vector composed with
/// the transposed marked vector. The empty string evaluates to 1.
inline Grade eval_marked(const FuzzyAutomaton& g, const EventString& s) {
  if (s.empty()) return Grade::one();
  return maxmin_product(reached_vector(g, s), transpose(g.marked()))(0, 0);
}

/// Synchronous composition. Shared events tensor their matrices; an event
/// private to one side tensors with the identity of the other. The alphabet
/// keeps g1's order first, then the labels only g2 has. Composed state
/// (i, j) lives at flat index i * n2 + j.
inline FuzzyAutomaton parallel_compose(const FuzzyAutomaton& g1,
                                       const FuzzyAutomaton& g2) {
  std::vector<std::string> alphabet = g1.alphabet();
  for (const std::string& label : g2.alphabet()) {
    if (!g1.event_index(label)) alphabet.push_back(label);
  }

  const FuzzyMatrix id1 = FuzzyMatrix::identity(g1.state_count());
  const FuzzyMatrix id2 = FuzzyMatrix::identity(g2.state_count());
  std::vector<FuzzyMatrix> matrices;
  matrices.reserve(alphabet.size());
  for (const std::string& label : alphabet) {
    const auto e1 = g1.event_index(label);
    const auto e2 = g2.event_index(label);
    if (e1 && e2) {
      matrices.push_back(fuzzy_tensor(g1.event_matrix(*e1), g2.event_matrix(*e2)));
    } else if (e1) {
      matrices.push_back(fuzzy_tensor(g1.event_matrix(*e1), id2));
    } else {
      matrices.push_back(fuzzy_tensor(id1, g2.event_matrix(*e2)));
    }
  }

  return FuzzyAutomaton(g1.name() + "||" + g2.name(),
                        g1.state_count() * g2.state_count(), std::move(alphabet),
                        std::move(matrices),
                        fuzzy_tensor(g1.initial(), g2.initial()),
                        fuzzy_tensor(g1.marked(), g2.marked()));
}

/// Rounds every grade at or above `threshold` to 1 and the rest to 0.
inline FuzzyAutomaton crisp_approximation(const FuzzyAutomaton& g,
                                          Grade threshold) {
  if (threshold.is_zero()) {
    throw std::invalid_argument("crisp approximation threshold must be positive");
  }
  const auto round = [&](const FuzzyMatrix& m) {
    FuzzyMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        out(i, j) = m(i, j) >= threshold ? Grade::one() : Grade::zero();
      }
    }
    return out;
  };
  std::vector<FuzzyMatrix> matrices;
  matrices.reserve(g.alphabet().size());
  for (std::size_t e = 0; e < g.alphabet().size(); ++e) {
    matrices.push_back(round(g.event_matrix(e)));
  }
  return FuzzyAutomaton(g.name(), g.state_count(), g.alphabet(),
                        std::move(matrices), round(g.initial()),
                        round(g.marked()));
}

inline constexpr std::size_t default_closure_cap = 1'000'000;

/// The finite set of state vectors reachable from the initial vector, with
/// the successor map. Finiteness holds because a max-min step only combines
/// grades already present in its inputs. Index 0 is the initial vector.
struct ConfigurationClosure {
  std::vector<FuzzyVector> vectors;
  std::vector<std::vector<std::size_t>> successor;  // successor[v][event]
};

inline ConfigurationClosure configuration_closure(
    const FuzzyAutomaton& g, std::size_t max_vectors = default_closure_cap) {
  ConfigurationClosure out;
  std::map<std::vector<std::uint32_t>, std::size_t> seen;
  const auto key_of = [](const FuzzyVector& v) {
    std::vector<std::uint32_t> key;
    key.reserve(v.cols());
    for (const Grade g : v.entries()) key.push_back(g.numerator());
    return key;
  };
  const auto intern = [&](FuzzyVector v) {
    const auto [it, inserted] = seen.emplace(key_of(v), out.vectors.size());
    if (inserted) {
      if (out.vectors.size() >= max_vectors) {
        throw ResourceError("configuration closure of automaton '" + g.name() +
                            "' exceeds the cap of " +
                            std::to_string(max_vectors) + " vectors");
      }
      out.vectors.push_back(std::move(v));
      out.successor.emplace_back(g.alphabet().size(), 0);
    }
    return it->second;
  };

  intern(g.initial());
  for (std::size_t v = 0; v < out.vectors.size(); ++v) {
    for (std::size_t e = 0; e < g.alphabet().size(); ++e) {
      const FuzzyVector next = maxmin_product(out.vectors[v], g.event_matrix(e));
      out.successor[v][e] = intern(next);
    }
  }
  return out;
}

namespace detail {

/// Joint reachability of two automata over a common alphabet: every pair of
/// state vectors reached by one shared event string. Index 0 pairs the two
/// initial vectors; events follow left.alphabet() order.
struct PairClosure {
  std::vector<std::pair<FuzzyVector, FuzzyVector>> pairs;
  std::vector<std::vector<std::size_t>> successor;  // successor[pair][event]
};

inline PairClosure pair_closure(const FuzzyAutomaton& left,
                                const FuzzyAutomaton& right,
                                std::size_t max_pairs = default_closure_cap) {
  require_same_alphabet(left, right);
  PairClosure out;
  std::map<std::vector<std::uint32_t>, std::size_t> seen;
  const auto key_of = [](const FuzzyVector& a, const FuzzyVector& b) {
    std::vector<std::uint32_t> key;
    key.reserve(a.cols() + b.cols());
    for (const Grade g : a.entries()) key.push_back(g.numerator());
    for (const Grade g : b.entries()) key.push_back(g.numerator());
    return key;
  };
  const auto intern = [&](FuzzyVector a, FuzzyVector b) {
    const auto [it, inserted] = seen.emplace(key_of(a, b), out.pairs.size());
    if (inserted) {
      if (out.pairs.size() >= max_pairs) {
        throw ResourceError("joint configuration closure of '" + left.name() +
                            "' and '" + right.name() + "' exceeds the cap of " +
                            std::to_string(max_pairs) + " pairs");
      }
      out.pairs.emplace_back(std::move(a), std::move(b));
      out.successor.emplace_back(left.alphabet().size(), 0);
    }
    return it->second;
  };

  intern(left.initial(), right.initial());
  for (std::size_t p = 0; p < out.pairs.size(); ++p) {
    for (std::size_t e = 0; e < left.alphabet().size(); ++e) {
      const std::string& label = left.alphabet()[e];
      FuzzyVector a = maxmin_product(out.pairs[p].first, left.event_matrix(e));
      FuzzyVector b = maxmin_product(out.pairs[p].second,
                                     right.event_matrix(label));
      out.successor[p][e] = intern(std::move(a), std::move(b));
    }
  }
  return out;
}

}  // namespace detail

/// Exact equality of the generated languages, decided over the joint
/// configuration closure. Both languages assign 1 to the empty string, so
/// only pairs reached by nonempty strings (closure successors) are compared.
inline bool languages_equal(const FuzzyAutomaton& g1, const FuzzyAutomaton& g2,
                            std::size_t max_pairs = default_closure_cap) {
  const detail::PairClosure pc = detail::pair_closure(g1, g2, max_pairs);
  for (std::size_t p = 0; p < pc.pairs.size(); ++p) {
    for (const std::size_t q : pc.successor[p]) {
      if (pc.pairs[q].first.max_entry() != pc.pairs[q].second.max_entry()) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace fdes
