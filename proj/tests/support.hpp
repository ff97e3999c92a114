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

#include <cstdint>
#include <initializer_list>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "fdes/automaton.hpp"
#include "fdes/grade.hpp"
#include "fdes/matrix.hpp"
#include "fdes/simulation.hpp"
#include "fdes/synthesis.hpp"

namespace support {

inline fdes::Grade g(const char* text) { return fdes::parse_grade(text); }

inline fdes::FuzzyMatrix mat(
    std::initializer_list<std::initializer_list<const char*>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = rows.begin()->size();
  fdes::FuzzyMatrix out(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (const char* cell : row) out(i, j++) = g(cell);
    ++i;
  }
  return out;
}

inline fdes::FuzzyVector vec(std::initializer_list<const char*> entries) {
  std::vector<fdes::Grade> out;
  for (const char* cell : entries) out.push_back(g(cell));
  return fdes::FuzzyMatrix::row(std::move(out));
}

inline fdes::FuzzyAutomaton automaton(
    std::string name, fdes::FuzzyVector initial, fdes::FuzzyVector marked,
    std::vector<std::pair<std::string, fdes::FuzzyMatrix>> events) {
  std::vector<std::string> alphabet;
  std::vector<fdes::FuzzyMatrix> matrices;
  for (auto& [label, matrix] : events) {
    alphabet.push_back(label);
    matrices.push_back(std::move(matrix));
  }
  const std::size_t n = initial.cols();
  return fdes::FuzzyAutomaton(std::move(name), n, std::move(alphabet),
                              std::move(matrices), std::move(initial),
                              std::move(marked));
}

inline fdes::EventString str(std::initializer_list<const char*> labels) {
  fdes::EventString out;
  for (const char* label : labels) out.emplace_back(label);
  return out;
}

/// Every event string over `alphabet` of length <= max_len, empty string
/// first.
inline std::vector<fdes::EventString> all_strings(
    const std::vector<std::string>& alphabet, std::size_t max_len) {
  std::vector<fdes::EventString> out{{}};
  std::size_t level_begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (const std::string& label : alphabet) {
        fdes::EventString next = out[i];
        next.push_back(label);
        out.push_back(std::move(next));
      }
    }
    level_begin = level_end;
  }
  return out;
}

// Randomized model generation. Grades are drawn from {0, 0.1, ..., 1} unless
// a custom pool is given.

inline fdes::Grade random_grade(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> dist(0, 10);
  return fdes::Grade::from_numerator(dist(rng) * 1000);
}

inline fdes::Grade random_grade_from(std::mt19937_64& rng,
                                     const std::vector<fdes::Grade>& pool) {
  std::uniform_int_distribution<std::size_t> dist(0, pool.size() - 1);
  return pool[dist(rng)];
}

inline fdes::FuzzyMatrix random_matrix(std::mt19937_64& rng, std::size_t rows,
                                       std::size_t cols) {
  fdes::FuzzyMatrix out(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = random_grade(rng);
  }
  return out;
}

inline fdes::FuzzyAutomaton random_automaton(
    std::mt19937_64& rng, const std::string& name,
    const std::vector<std::string>& alphabet, std::size_t max_states = 3,
    const std::vector<fdes::Grade>* pool = nullptr) {
  std::uniform_int_distribution<std::size_t> states_dist(1, max_states);
  const std::size_t n = states_dist(rng);
  const auto draw = [&] {
    return pool ? random_grade_from(rng, *pool) : random_grade(rng);
  };
  const auto draw_matrix = [&](std::size_t rows, std::size_t cols) {
    fdes::FuzzyMatrix out(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) out(i, j) = draw();
    }
    return out;
  };
  std::vector<fdes::FuzzyMatrix> matrices;
  for (std::size_t e = 0; e < alphabet.size(); ++e) {
    matrices.push_back(draw_matrix(n, n));
  }
  return fdes::FuzzyAutomaton(name, n, alphabet, std::move(matrices),
                              draw_matrix(1, n), draw_matrix(1, n));
}

/// Entrywise join of `base` with fresh random material: the result simulates
/// `base` through the identity relation.
inline fdes::FuzzyAutomaton random_bump(std::mt19937_64& rng,
                                        const fdes::FuzzyAutomaton& base,
                                        const std::string& name) {
  const std::size_t n = base.state_count();
  std::vector<fdes::FuzzyMatrix> matrices;
  for (const std::string& label : base.alphabet()) {
    matrices.push_back(
        fdes::join(base.event_matrix(label), random_matrix(rng, n, n)));
  }
  return fdes::FuzzyAutomaton(name, n, base.alphabet(), std::move(matrices),
                              fdes::join(base.initial(), random_matrix(rng, 1, n)),
                              fdes::join(base.marked(), random_matrix(rng, 1, n)));
}

/// Entrywise meet of `base` with fresh random material: the result is
/// simulated by `base` through the identity relation.
inline fdes::FuzzyAutomaton random_shrink(std::mt19937_64& rng,
                                          const fdes::FuzzyAutomaton& base,
                                          const std::string& name) {
  const std::size_t n = base.state_count();
  const auto meet = [&](const fdes::FuzzyMatrix& m) {
    fdes::FuzzyMatrix out = m;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        out(i, j) = fdes::min(m(i, j), random_grade(rng));
      }
    }
    return out;
  };
  std::vector<fdes::FuzzyMatrix> matrices;
  for (const std::string& label : base.alphabet()) {
    matrices.push_back(meet(base.event_matrix(label)));
  }
  return fdes::FuzzyAutomaton(name, n, base.alphabet(), std::move(matrices),
                              meet(base.initial()), meet(base.marked()));
}

inline fdes::UncontrollabilityMap random_uncontrollability(
    std::mt19937_64& rng, const std::vector<std::string>& alphabet) {
  fdes::UncontrollabilityMap out;
  for (const std::string& label : alphabet) out.set(label, random_grade(rng));
  return out;
}

/// Raises one random entry per deficient row so every row max reaches the
/// event's degree.
inline fdes::FuzzyAutomaton make_uc_compatible(
    std::mt19937_64& rng, const fdes::FuzzyAutomaton& base,
    const fdes::UncontrollabilityMap& uc) {
  const std::size_t n = base.state_count();
  std::vector<fdes::FuzzyMatrix> matrices;
  for (const std::string& label : base.alphabet()) {
    fdes::FuzzyMatrix m = base.event_matrix(label);
    const fdes::Grade degree = uc.uncontrollability(label);
    for (std::size_t i = 0; i < n; ++i) {
      fdes::Grade row_max = fdes::Grade::zero();
      for (std::size_t j = 0; j < n; ++j) row_max = fdes::max(row_max, m(i, j));
      if (row_max < degree) {
        std::uniform_int_distribution<std::size_t> pick(0, n - 1);
        m(i, pick(rng)) = degree;
      }
    }
    matrices.push_back(std::move(m));
  }
  return fdes::FuzzyAutomaton(base.name(), n, base.alphabet(),
                              std::move(matrices), base.initial(),
                              base.marked());
}

// Witness constructions used by the composition properties.

/// For g3 simulated by both g1 and g2: phi(p, q * n2 + r) =
/// min(phi1(p, q), phi2(p, r)) is a simulation of g3 by g1 || g2.
inline fdes::FuzzyMatrix pairwise_min_witness(const fdes::FuzzyMatrix& phi1,
                                              const fdes::FuzzyMatrix& phi2) {
  const std::size_t k = phi1.rows();
  const std::size_t m = phi1.cols();
  const std::size_t n = phi2.cols();
  fdes::FuzzyMatrix out(k, m * n);
  for (std::size_t p = 0; p < k; ++p) {
    for (std::size_t q = 0; q < m; ++q) {
      for (std::size_t r = 0; r < n; ++r) {
        out(p, q * n + r) = fdes::min(phi1(p, q), phi2(p, r));
      }
    }
  }
  return out;
}

/// For g3 simulated by g1 || g2: the row-max projections are simulations of
/// g3 by the components.
inline fdes::FuzzyMatrix project_witness_left(const fdes::FuzzyMatrix& phi,
                                              std::size_t m, std::size_t n) {
  fdes::FuzzyMatrix out(phi.rows(), m);
  for (std::size_t p = 0; p < phi.rows(); ++p) {
    for (std::size_t q = 0; q < m; ++q) {
      fdes::Grade acc = fdes::Grade::zero();
      for (std::size_t r = 0; r < n; ++r) {
        acc = fdes::max(acc, phi(p, q * n + r));
      }
      out(p, q) = acc;
    }
  }
  return out;
}

inline fdes::FuzzyMatrix project_witness_right(const fdes::FuzzyMatrix& phi,
                                               std::size_t m, std::size_t n) {
  fdes::FuzzyMatrix out(phi.rows(), n);
  for (std::size_t p = 0; p < phi.rows(); ++p) {
    for (std::size_t r = 0; r < n; ++r) {
      fdes::Grade acc = fdes::Grade::zero();
      for (std::size_t q = 0; q < m; ++q) {
        acc = fdes::max(acc, phi(p, q * n + r));
      }
      out(p, r) = acc;
    }
  }
  return out;
}

/// Identity block extended with a zero column: the canonical simulation of a
/// specification by its slack-extended version.
inline fdes::FuzzyMatrix identity_with_zero_column(std::size_t n) {
  fdes::FuzzyMatrix out(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = fdes::Grade::one();
  return out;
}

}  // namespace support
