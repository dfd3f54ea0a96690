// Copyright 2026 The stqf Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Matrices over R and the monomial (generalized permutation) matrices, which
// are exactly the invertible ones.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "stqf/semiring.hpp"

namespace stqf {

class GeneralMatrix {
 public:
  GeneralMatrix() = default;
  GeneralMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  explicit GeneralMatrix(std::vector<std::vector<Element>> rows);

  static GeneralMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  const Element& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }
  Element& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  friend bool operator==(const GeneralMatrix&, const GeneralMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Element> data_;
};

GeneralMatrix mat_mul(const GeneralMatrix& a, const GeneralMatrix& b);

// Row i has its single nonzero entry scales[i] in column permutation[i].
class MonomialMatrix {
 public:
  MonomialMatrix() = default;
  // Throws ShapeError unless `permutation` is a bijection of {0..n-1}, and
  // PreconditionError unless every scale is tangible.
  MonomialMatrix(std::vector<std::size_t> permutation,
                 std::vector<Element> scales);

  static MonomialMatrix identity(std::size_t n);
  static MonomialMatrix diagonal(std::vector<Element> scales);

  std::size_t size() const { return permutation_.size(); }
  const std::vector<std::size_t>& permutation() const { return permutation_; }
  const std::vector<Element>& scales() const { return scales_; }

  GeneralMatrix to_general() const;

  friend bool operator==(const MonomialMatrix&, const MonomialMatrix&) = default;

 private:
  std::vector<std::size_t> permutation_;
  std::vector<Element> scales_;
};

// Outcome of the structural invertibility test. On failure `row`/`column`
// locate the first violation of the monomial-with-tangible-entries pattern.
struct InvertibilityReport {
  std::optional<MonomialMatrix> monomial;
  std::string reason;
  std::optional<std::size_t> row;
  std::optional<std::size_t> column;

  bool invertible() const { return monomial.has_value(); }
};

InvertibilityReport analyze_invertibility(const GeneralMatrix& m);
// Throws ShapeError for non-square input.
bool is_invertible(const GeneralMatrix& m);

MonomialMatrix invert(const MonomialMatrix& m);
// A·B, so that (A·B)x = A(Bx).
MonomialMatrix compose(const MonomialMatrix& a, const MonomialMatrix& b);

}  // namespace stqf
