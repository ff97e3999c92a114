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

#include "fdes/automaton.hpp"
#include "fdes/matrix.hpp"
#include "fdes/synthesis.hpp"
#include "support.hpp"

// Shared reference models used across the suites, together with their
// expected construction results.

namespace fixtures {

using support::automaton;
using support::mat;
using support::vec;

// Two states; one plain and one primed event.
inline fdes::FuzzyAutomaton example1() {
  return automaton("example1_G", vec({"0.9", "0.1"}), vec({"0.1", "0.8"}),
                   {{"sigma", mat({{"0.9", "0.8"}, {"0", "0.1"}})},
                    {"sigmap", mat({{"0", "0.3"}, {"0", "0.9"}})}});
}

inline fdes::FuzzyAutomaton example1_crisp() {
  return automaton("example1_G", vec({"1", "0"}), vec({"0", "1"}),
                   {{"sigma", mat({{"1", "1"}, {"0", "0"}})},
                    {"sigmap", mat({{"0", "0"}, {"0", "1"}})}});
}

// A simulation-equivalent pair with the printed two-sided relation.
inline fdes::FuzzyAutomaton example2_g1() {
  return automaton("example2_G1", vec({"0", "1"}), vec({"1", "1"}),
                   {{"sigma", mat({{"1", "0.4"}, {"0.3", "0.5"}})},
                    {"sigmap", mat({{"0.4", "0.7"}, {"0.7", "1"}})}});
}

inline fdes::FuzzyAutomaton example2_g2() {
  return automaton("example2_G2", vec({"1", "0"}), vec({"1", "1"}),
                   {{"sigma", mat({{"0.5", "0.3"}, {"0.3", "1"}})},
                    {"sigmap", mat({{"1", "0.7"}, {"0.7", "0.4"}})}});
}

inline fdes::FuzzyMatrix example2_phi() {
  return mat({{"0.5", "1"}, {"1", "0.5"}});
}

// A 2-state / 3-state pair found equivalent by exhaustive search.
inline fdes::FuzzyAutomaton example3_g1() {
  return automaton("example3_G1", vec({"0.9", "1"}), vec({"1", "1"}),
                   {{"sigma", mat({{"1", "0.7"}, {"0.7", "0.9"}})},
                    {"sigmap", mat({{"0.7", "0.7"}, {"0.9", "1"}})}});
}

inline fdes::FuzzyAutomaton example3_g2() {
  return automaton(
      "example3_G2", vec({"0", "0", "1"}), vec({"1", "1", "1"}),
      {{"sigma",
        mat({{"1", "0.2", "0.4"}, {"0.6", "1", "0.2"}, {"0.4", "0.7", "0.9"}})},
       {"sigmap",
        mat({{"0.6", "0.7", "0.1"}, {"0.7", "0.2", "0.4"}, {"0.9", "0.9", "1"}})}});
}

inline fdes::FuzzyMatrix example3_phi() {
  return mat({{"1", "1", "0.9"}, {"0.7", "0.7", "1"}});
}

inline fdes::FuzzyMatrix example3_psi() {
  return mat({{"1", "0.9"}, {"1", "0.9"}, {"0.7", "1"}});
}

// Specification whose slack extension is printed entry by entry.
inline fdes::FuzzyAutomaton example4_r() {
  return automaton("example4_R", vec({"1", "0"}), vec({"0", "1"}),
                   {{"sigma", mat({{"0.8", "0.4"}, {"0.3", "0"}})},
                    {"sigmap", mat({{"0", "0.5"}, {"0.3", "0.7"}})}});
}

inline fdes::UncontrollabilityMap example4_uc() {
  fdes::UncontrollabilityMap uc;
  uc.set("sigma", support::g("0.7"));
  uc.set("sigmap", support::g("0.6"));
  return uc;
}

inline fdes::FuzzyMatrix example4_plus_sigma() {
  return mat({{"0.8", "0.4", "0"}, {"0.3", "0", "0.7"}, {"0", "0", "0.7"}});
}

inline fdes::FuzzyMatrix example4_plus_sigmap() {
  return mat({{"0", "0.5", "0.6"}, {"0.3", "0.7", "0"}, {"0", "0", "0.6"}});
}

// Plant/specification pair that is simulation-based controllable.
inline fdes::FuzzyAutomaton example5_g() {
  return automaton("example5_G", vec({"1", "0"}), vec({"1", "1"}),
                   {{"sigma", mat({{"0.4", "0.8"}, {"0", "0.4"}})},
                    {"sigmap", mat({{"0.4", "0.9"}, {"0.4", "0.4"}})}});
}

inline fdes::FuzzyAutomaton example5_r() {
  return automaton("example5_R", vec({"1", "0"}), vec({"1", "1"}),
                   {{"sigma", mat({{"0.4", "0.8"}, {"0", "0.4"}})},
                    {"sigmap", mat({{"0.4", "0.9"}, {"0.2", "0.4"}})}});
}

inline fdes::UncontrollabilityMap example5_uc() {
  fdes::UncontrollabilityMap uc;
  uc.set("sigma", support::g("0.8"));
  uc.set("sigmap", support::g("0.1"));
  return uc;
}

inline fdes::FuzzyMatrix example5_plus_sigma() {
  return mat({{"0.4", "0.8", "0"}, {"0", "0.4", "0.8"}, {"0", "0", "0.8"}});
}

inline fdes::FuzzyMatrix example5_plus_sigmap() {
  return mat({{"0.4", "0.9", "0"}, {"0.2", "0.4", "0"}, {"0", "0", "0.1"}});
}

inline fdes::FuzzyVector example5_loop_initial() {
  return vec({"1", "0", "0", "0", "0", "0"});
}

inline fdes::FuzzyVector example5_loop_marked() {
  return vec({"1", "1", "0", "1", "1", "0"});
}

inline fdes::FuzzyMatrix example5_loop_sigma() {
  return mat({{"0.4", "0.4", "0", "0.4", "0.8", "0"},
              {"0", "0.4", "0.4", "0", "0.4", "0.8"},
              {"0", "0", "0.4", "0", "0", "0.8"},
              {"0", "0", "0", "0.4", "0.4", "0"},
              {"0", "0", "0", "0", "0.4", "0.4"},
              {"0", "0", "0", "0", "0", "0.4"}});
}

inline fdes::FuzzyMatrix example5_loop_sigmap() {
  return mat({{"0.4", "0.4", "0", "0.4", "0.9", "0"},
              {"0.2", "0.4", "0", "0.2", "0.4", "0"},
              {"0", "0", "0.1", "0", "0", "0.1"},
              {"0.4", "0.4", "0", "0.4", "0.4", "0"},
              {"0.2", "0.4", "0", "0.2", "0.4", "0"},
              {"0", "0", "0.1", "0", "0", "0.1"}});
}

// The 6x2 relation showing the closed loop simulated by the specification.
inline fdes::FuzzyMatrix example5_loop_phi() {
  return mat({{"1", "0.4"},
              {"0.4", "0.4"},
              {"0.4", "0.4"},
              {"0.4", "0.4"},
              {"0.4", "0.9"},
              {"0.4", "0.4"}});
}

// Language-controllable but not simulation-based controllable pair.
inline fdes::FuzzyAutomaton example6_g() {
  return automaton(
      "example6_G", vec({"0.4", "0.7", "0"}), vec({"1", "1", "1"}),
      {{"sigma", mat({{"0", "0", "1"}, {"0", "0", "1"}, {"0", "0", "0"}})},
       {"sigmap", mat({{"0", "0", "0"}, {"0", "0", "1"}, {"0", "0", "0"}})}});
}

inline fdes::FuzzyAutomaton example6_r() {
  return automaton(
      "example6_R", vec({"0.7", "0.7", "0"}), vec({"1", "1", "1"}),
      {{"sigma", mat({{"0", "0", "1"}, {"0", "0", "0"}, {"0", "0", "0"}})},
       {"sigmap", mat({{"0", "0", "0"}, {"0", "0", "1"}, {"0", "0", "0"}})}});
}

inline fdes::UncontrollabilityMap example6_uc() {
  fdes::UncontrollabilityMap uc;
  uc.set("sigma", support::g("0.8"));
  uc.set("sigmap", support::g("0.2"));
  return uc;
}

inline fdes::FuzzyMatrix example6_plus_sigma() {
  return mat({{"0", "0", "1", "0"},
              {"0", "0", "0", "0.8"},
              {"0", "0", "0", "0.8"},
              {"0", "0", "0", "0.8"}});
}

inline fdes::FuzzyMatrix example6_plus_sigmap() {
  return mat({{"0", "0", "0", "0.2"},
              {"0", "0", "1", "0"},
              {"0", "0", "0", "0.2"},
              {"0", "0", "0", "0.2"}});
}

}  // namespace fixtures
