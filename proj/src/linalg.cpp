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

#include "stqf/linalg.hpp"

#include "stqf/errors.hpp"

namespace stqf {

GeneralMatrix::GeneralMatrix(std::vector<std::vector<Element>> rows) {
  rows_ = rows.size();
  cols_ = rows.empty() ? 0 : rows.front().size();
  data_.reserve(rows_ * cols_);
  for (auto& row : rows) {
    if (row.size() != cols_) throw ShapeError("ragged matrix rows");
    for (auto& x : row) data_.push_back(std::move(x));
  }
}

GeneralMatrix GeneralMatrix::identity(std::size_t n) {
  GeneralMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Element::one();
  return m;
}

GeneralMatrix mat_mul(const GeneralMatrix& a, const GeneralMatrix& b) {
  if (a.cols() != b.rows()) {
    throw ShapeError("mat_mul: " + std::to_string(a.rows()) + "x" +
                     std::to_string(a.cols()) + " times " +
                     std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  GeneralMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Element sum;
      for (std::size_t k = 0; k < a.cols(); ++k) sum += a(i, k) * b(k, j);
      c(i, j) = std::move(sum);
    }
  }
  return c;
}

MonomialMatrix::MonomialMatrix(std::vector<std::size_t> permutation,
                               std::vector<Element> scales)
    : permutation_(std::move(permutation)), scales_(std::move(scales)) {
  const std::size_t n = permutation_.size();
  if (scales_.size() != n) throw ShapeError("monomial matrix: size mismatch");
  std::vector<bool> seen(n, false);
  for (std::size_t c : permutation_) {
    if (c >= n || seen[c]) throw ShapeError("monomial matrix: not a permutation");
    seen[c] = true;
  }
  for (const auto& s : scales_) {
    if (!s.is_tangible()) {
      throw PreconditionError("unique-base theorem",
                              "monomial scales must be tangible units");
    }
  }
}

MonomialMatrix MonomialMatrix::identity(std::size_t n) {
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  return MonomialMatrix(std::move(p), std::vector<Element>(n, Element::one()));
}

MonomialMatrix MonomialMatrix::diagonal(std::vector<Element> scales) {
  std::vector<std::size_t> p(scales.size());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = i;
  return MonomialMatrix(std::move(p), std::move(scales));
}

GeneralMatrix MonomialMatrix::to_general() const {
  GeneralMatrix m(size(), size());
  for (std::size_t i = 0; i < size(); ++i) m(i, permutation_[i]) = scales_[i];
  return m;
}

InvertibilityReport analyze_invertibility(const GeneralMatrix& m) {
  if (!m.is_square()) throw ShapeError("invertibility needs a square matrix");
  const std::size_t n = m.rows();
  InvertibilityReport report;
  std::vector<std::size_t> perm(n);
  std::vector<Element> scales(n);
  std::vector<std::optional<std::size_t>> column_owner(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::optional<std::size_t> found;
    for (std::size_t j = 0; j < n; ++j) {
      const Element& x = m(i, j);
      if (x.is_zero()) continue;
      if (x.is_ghost()) {
        report.reason = "entry is a ghost, and ghosts are not units";
        report.row = i;
        report.column = j;
        return report;
      }
      if (found) {
        report.reason = "row has more than one nonzero entry";
        report.row = i;
        report.column = j;
        return report;
      }
      if (column_owner[j]) {
        report.reason = "column has more than one nonzero entry";
        report.row = i;
        report.column = j;
        return report;
      }
      found = j;
      column_owner[j] = i;
    }
    if (!found) {
      report.reason = "row has no nonzero entry";
      report.row = i;
      return report;
    }
    perm[i] = *found;
    scales[i] = m(i, *found);
  }
  report.monomial = MonomialMatrix(std::move(perm), std::move(scales));
  return report;
}

bool is_invertible(const GeneralMatrix& m) {
  return analyze_invertibility(m).invertible();
}

MonomialMatrix invert(const MonomialMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::vector<Element> scales(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = m.permutation()[i];
    perm[j] = i;
    scales[j] = m.scales()[i].inverse();
  }
  return MonomialMatrix(std::move(perm), std::move(scales));
}

MonomialMatrix compose(const MonomialMatrix& a, const MonomialMatrix& b) {
  if (a.size() != b.size()) throw ShapeError("compose: size mismatch");
  const std::size_t n = a.size();
  std::vector<std::size_t> perm(n);
  std::vector<Element> scales(n);
  // (AB)_{i, ·} = a_i · B_{p(i), ·}: nonzero at column b.p(a.p(i)).
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t k = a.permutation()[i];
    perm[i] = b.permutation()[k];
    scales[i] = a.scales()[i] * b.scales()[k];
  }
  return MonomialMatrix(std::move(perm), std::move(scales));
}

}  // namespace stqf
