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

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "fdes/errors.hpp"

namespace fdes {

/// A membership degree in [0, 1], stored exactly as numerator/denominator
/// with a fixed global denominator of 10^4.
///
/// Comparisons, min and max are plain integer operations, so no rounding can
/// occur once a value has been parsed. Values needing more than four decimal
/// digits are not representable and are rejected at parse time.
class Grade {
 public:
  static constexpr std::uint32_t denominator = 10'000;

  constexpr Grade() = default;

  static constexpr Grade from_numerator(std::uint32_t numerator) {
    if (numerator > denominator) {
      throw std::invalid_argument("grade numerator exceeds the denominator");
    }
    return Grade(numerator);
  }

  static constexpr Grade zero() { return Grade(); }
  static constexpr Grade one() { return Grade(denominator); }

  constexpr std::uint32_t numerator() const { return numerator_; }
  constexpr bool is_zero() const { return numerator_ == 0; }
  constexpr bool is_one() const { return numerator_ == denominator; }

  /// 1 - g, exact.
  constexpr Grade complement() const {
    return Grade(denominator - numerator_);
  }

  friend constexpr auto operator<=>(const Grade&, const Grade&) = default;

 private:
  explicit constexpr Grade(std::uint32_t numerator) : numerator_(numerator) {}

  std::uint32_t numerator_ = 0;
};

constexpr Grade min(Grade a, Grade b) { return a <= b ? a : b; }
constexpr Grade max(Grade a, Grade b) { return a >= b ? a : b; }

/// The residuum adjoint to min: the greatest x such that min(a, x) <= b.
/// Equals 1 when a <= b and b otherwise.
constexpr Grade godel_residuum(Grade a, Grade b) {
  return a <= b ? Grade::one() : b;
}

/// Parses a plain decimal in [0, 1] with at most four fractional digits.
/// Rejects anything else: signs, exponents, out-of-range values, and values
/// that would need rounding.
inline Grade parse_grade(std::string_view text) {
  const auto fail = [&](const char* why) {
    return ParseError("invalid grade '" + std::string(text) + "': " + why);
  };
  if (text.empty()) throw fail("empty");

  const auto dot = text.find('.');
  const std::string_view whole =
      dot == std::string_view::npos ? text : text.substr(0, dot);
  const std::string_view frac =
      dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
  if (dot != std::string_view::npos && frac.empty()) {
    throw fail("missing fractional digits after '.'");
  }
  if (whole.empty() && frac.empty()) throw fail("no digits");
  for (const std::string_view part : {whole, frac}) {
    for (const char c : part) {
      if (c < '0' || c > '9') throw fail("not a plain decimal number");
    }
  }
  if (frac.size() > 4) throw fail("more than four fractional digits");

  std::uint64_t whole_value = 0;
  for (const char c : whole) {
    whole_value = whole_value * 10 + static_cast<std::uint64_t>(c - '0');
    if (whole_value > 1) throw fail("outside [0, 1]");
  }
  std::uint64_t frac_value = 0;
  for (const char c : frac) {
    frac_value = frac_value * 10 + static_cast<std::uint64_t>(c - '0');
  }
  for (std::size_t i = frac.size(); i < 4; ++i) frac_value *= 10;

  const std::uint64_t numerator = whole_value * Grade::denominator + frac_value;
  if (numerator > Grade::denominator) throw fail("outside [0, 1]");
  return Grade::from_numerator(static_cast<std::uint32_t>(numerator));
}

/// Canonical decimal rendering: shortest form, no trailing zeros
/// ("0", "1", "0.25", "0.3333").
inline std::string format_grade(Grade g) {
  std::string out = std::to_string(g.numerator() / Grade::denominator);
  std::uint32_t frac = g.numerator() % Grade::denominator;
  if (frac != 0) {
    char digits[5] = {};
    for (int i = 3; i >= 0; --i) {
      digits[i] = static_cast<char>('0' + frac % 10);
      frac /= 10;
    }
    std::string_view view(digits, 4);
    while (view.ends_with('0')) view.remove_suffix(1);
    out += '.';
    out += view;
  }
  return out;
}

}  // namespace fdes
