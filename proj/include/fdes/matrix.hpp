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

#include <cassert>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "fdes/errors.hpp"
#include "fdes/grade.hpp"

namespace fdes {

/// A dense grade matrix under max-min algebra. Row and column vectors are
/// ordinary 1xN / Nx1 matrices so a single product kernel serves everything.
class FuzzyMatrix {
 public:
  FuzzyMatrix() = default;

  FuzzyMatrix(std::size_t rows, std::size_t cols, Grade fill = Grade::zero())
      : rows_(rows), cols_(cols), entries_(rows * cols, fill) {}

  FuzzyMatrix(std::size_t rows, std::size_t cols, std::vector<Grade> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
      throw ShapeError("matrix entry count " + std::to_string(entries_.size()) +
                       " does not match shape " + std::to_string(rows_) + "x" +
                       std::to_string(cols_));
    }
  }

  static FuzzyMatrix row(std::vector<Grade> entries) {
    const std::size_t n = entries.size();
    return FuzzyMatrix(1, n, std::move(entries));
  }

  static FuzzyMatrix identity(std::size_t n) {
    FuzzyMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) out(i, i) = Grade::one();
    return out;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_row() const { return rows_ == 1; }

  Grade operator()(std::size_t i, std::size_t j) const {
    assert(i < rows_ && j < cols_);
    return entries_[i * cols_ + j];
  }
  Grade& operator()(std::size_t i, std::size_t j) {
    assert(i < rows_ && j < cols_);
    return entries_[i * cols_ + j];
  }

  const std::vector<Grade>& entries() const { return entries_; }

  Grade max_entry() const {
    Grade out = Grade::zero();
    for (const Grade g : entries_) out = max(out, g);
    return out;
  }

  friend bool operator==(const FuzzyMatrix&, const FuzzyMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Grade> entries_;
};

using FuzzyVector = FuzzyMatrix;

inline std::string shape_of(const FuzzyMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

/// Max-min product: out(i, j) = max over l of min(a(i, l), b(l, j)).
inline FuzzyMatrix maxmin_product(const FuzzyMatrix& a, const FuzzyMatrix& b) {
  if (a.cols() != b.rows()) {
    throw ShapeError("max-min product needs inner dimensions to agree: " +
                     shape_of(a) + " by " + shape_of(b));
  }
  FuzzyMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Grade acc = Grade::zero();
      for (std::size_t l = 0; l < a.cols(); ++l) {
        acc = max(acc, min(a(i, l), b(l, j)));
      }
      out(i, j) = acc;
    }
  }
  return out;
}

/// Blockwise tensor: block (i, j) of the result is min(a(i, j), b).
inline FuzzyMatrix fuzzy_tensor(const FuzzyMatrix& a, const FuzzyMatrix& b) {
  FuzzyMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Grade aij = a(i, j);
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          out(i * b.rows() + k, j * b.cols() + l) = min(aij, b(k, l));
        }
      }
    }
  }
  return out;
}

inline FuzzyMatrix transpose(const FuzzyMatrix& m) {
  FuzzyMatrix out(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(j, i) = m(i, j);
  }
  return out;
}

/// Entrywise order: true iff a(i, j) <= b(i, j) everywhere.
inline bool matrix_leq(const FuzzyMatrix& a, const FuzzyMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeError("entrywise comparison of " + shape_of(a) + " against " +
                     shape_of(b));
  }
  for (std::size_t k = 0; k < a.entries().size(); ++k) {
    if (a.entries()[k] > b.entries()[k]) return false;
  }
  return true;
}

/// Entrywise max.
inline FuzzyMatrix join(const FuzzyMatrix& a, const FuzzyMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeError("join of " + shape_of(a) + " against " + shape_of(b));
  }
  FuzzyMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = max(a(i, j), b(i, j));
  }
  return out;
}

}  // namespace fdes
