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

#include <stdexcept>
#include <string>
#include <utility>

namespace fdes {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands have incompatible dimensions.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// An event label is missing from an alphabet or degree map, or two
/// automata that must share an alphabet do not.
class AlphabetError : public Error {
 public:
  using Error::Error;
};

/// A configured search or exploration limit would be exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// A stated hypothesis of the requested check does not hold for the inputs.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

/// Malformed input text. `field()` names the offending document field when
/// one is known.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what, std::string field = {})
      : Error(field.empty() ? what : field + ": " + what),
        field_(std::move(field)) {}

  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

}  // namespace fdes
