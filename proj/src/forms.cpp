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

#include "stqf/forms.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "stqf/companions.hpp"
#include "stqf/errors.hpp"

namespace stqf {

namespace {

void check_dimension(std::size_t n) {
  if (n == 0 || n > kMaxDimension) {
    throw ShapeError("dimension " + std::to_string(n) + " outside 1.." +
                     std::to_string(kMaxDimension));
  }
}

void check_same(const Semifield& a, const Semifield& b) {
  if (!(a == b)) throw ShapeError("operands belong to different semifields");
}

void check_vector(std::size_t n, const Vector& x) {
  if (x.size() != n) {
    throw ShapeError("vector of length " + std::to_string(x.size()) +
                     " for a form of dimension " + std::to_string(n));
  }
}

}  // namespace

Vector Vector::unit(std::size_t n, std::size_t i) {
  Vector v = zeros(n);
  v[i] = Element::one();
  return v;
}

Vector operator+(const Vector& x, const Vector& y) {
  if (x.size() != y.size()) throw ShapeError("vector sum: length mismatch");
  Vector z = x;
  for (std::size_t i = 0; i < z.size(); ++i) z[i] += y[i];
  return z;
}

Vector operator*(const Element& a, const Vector& x) {
  Vector z = x;
  for (std::size_t i = 0; i < z.size(); ++i) z[i] = a * z[i];
  return z;
}

Vector apply(const MonomialMatrix& p, const Vector& x) {
  if (p.size() != x.size()) throw ShapeError("P·x: size mismatch");
  Vector y = Vector::zeros(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    y[i] = p.scales()[i] * x[p.permutation()[i]];
  }
  return y;
}

// ---------------------------------------------------------------------------
// QuadraticForm

QuadraticForm::QuadraticForm(Semifield semifield, std::size_t n)
    : semifield_(semifield), n_(n) {
  check_dimension(n);
  scheme_ = GeneralMatrix(n, n);
}

QuadraticForm QuadraticForm::diagonal(Semifield semifield,
                                      std::vector<Element> diag) {
  QuadraticForm q(semifield, diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) q.set_diag(i, std::move(diag[i]));
  return q;
}

void QuadraticForm::check_index(std::size_t i, std::size_t j) const {
  if (i >= n_ || j >= n_ || i > j) {
    throw ShapeError("scheme index (" + std::to_string(i + 1) + "," +
                     std::to_string(j + 1) + ") invalid for dimension " +
                     std::to_string(n_));
  }
}

const Element& QuadraticForm::diag(std::size_t i) const {
  check_index(i, i);
  return scheme_(i, i);
}

const Element& QuadraticForm::upper(std::size_t i, std::size_t j) const {
  if (i == j) throw ShapeError("upper() needs i < j");
  check_index(i, j);
  return scheme_(i, j);
}

const Element& QuadraticForm::coefficient(std::size_t i, std::size_t j) const {
  check_index(i, j);
  return scheme_(i, j);
}

void QuadraticForm::set_diag(std::size_t i, Element value) {
  check_index(i, i);
  semifield_.validate(value);
  scheme_(i, i) = std::move(value);
}

void QuadraticForm::set_upper(std::size_t i, std::size_t j, Element value) {
  if (i == j) throw ShapeError("set_upper() needs i < j");
  check_index(i, j);
  semifield_.validate(value);
  scheme_(i, j) = std::move(value);
}

GeneralMatrix QuadraticForm::nabla() const { return scheme_; }

bool QuadraticForm::is_diagonal() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if (!scheme_(i, j).is_zero()) return false;
  return true;
}

bool QuadraticForm::has_zero_diagonal() const {
  for (std::size_t i = 0; i < n_; ++i)
    if (!scheme_(i, i).is_zero()) return false;
  return true;
}

// ---------------------------------------------------------------------------
// SymmetricBilinearForm

SymmetricBilinearForm::SymmetricBilinearForm(Semifield semifield, std::size_t n)
    : semifield_(semifield), gram_(n, n) {
  check_dimension(n);
}

SymmetricBilinearForm::SymmetricBilinearForm(Semifield semifield,
                                             GeneralMatrix gram)
    : semifield_(semifield), gram_(std::move(gram)) {
  if (!gram_.is_square()) throw ShapeError("Gram matrix must be square");
  check_dimension(gram_.rows());
  for (std::size_t i = 0; i < gram_.rows(); ++i) {
    for (std::size_t j = 0; j < gram_.cols(); ++j) {
      semifield_.validate(gram_(i, j));
      if (!(gram_(i, j) == gram_(j, i))) {
        throw ShapeError("Gram matrix is not symmetric at (" +
                         std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
      }
    }
  }
}

void SymmetricBilinearForm::set(std::size_t i, std::size_t j, Element value) {
  if (i >= dimension() || j >= dimension()) throw ShapeError("Gram index out of range");
  semifield_.validate(value);
  gram_(i, j) = value;
  gram_(j, i) = std::move(value);
}

bool SymmetricBilinearForm::has_zero_diagonal() const {
  for (std::size_t i = 0; i < dimension(); ++i)
    if (!gram_(i, i).is_zero()) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Operations

Element eval_quadratic(const QuadraticForm& q, const Vector& x) {
  const std::size_t n = q.dimension();
  check_vector(n, x);
  Element sum;
  for (std::size_t i = 0; i < n; ++i) {
    sum += q.diag(i) * x[i].square();
    for (std::size_t j = i + 1; j < n; ++j) sum += q.upper(i, j) * x[i] * x[j];
  }
  return sum;
}

Element eval_bilinear(const SymmetricBilinearForm& b, const Vector& x,
                      const Vector& y) {
  const std::size_t n = b.dimension();
  check_vector(n, x);
  check_vector(n, y);
  Element sum;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) sum += b(i, j) * x[i] * y[j];
  return sum;
}

SymmetricBilinearForm balanced_companion(const QuadraticForm& q) {
  const std::size_t n = q.dimension();
  SymmetricBilinearForm b(q.semifield(), n);
  for (std::size_t i = 0; i < n; ++i) {
    b.set(i, i, q.diag(i).nu());
    for (std::size_t j = i + 1; j < n; ++j) b.set(i, j, q.upper(i, j));
  }
  return b;
}

bool is_balanced_pair(const QuadraticForm& q, const SymmetricBilinearForm& b) {
  if (!is_companion(q, b)) {
    throw PreconditionError("companion condition",
                            "bilinear form is not a companion of the quadratic form");
  }
  for (std::size_t i = 0; i < q.dimension(); ++i)
    if (!(b(i, i) == q.diag(i).nu())) return false;
  return true;
}

QuadraticForm add_forms(const QuadraticForm& q1, const QuadraticForm& q2) {
  check_same(q1.semifield(), q2.semifield());
  if (q1.dimension() != q2.dimension()) throw ShapeError("add_forms: dimension mismatch");
  QuadraticForm r(q1.semifield(), q1.dimension());
  for (std::size_t i = 0; i < r.dimension(); ++i) {
    r.set_diag(i, q1.diag(i) + q2.diag(i));
    for (std::size_t j = i + 1; j < r.dimension(); ++j)
      r.set_upper(i, j, q1.upper(i, j) + q2.upper(i, j));
  }
  return r;
}

QuadraticForm scale_form(const Element& lambda, const QuadraticForm& q) {
  q.semifield().validate(lambda);
  QuadraticForm r(q.semifield(), q.dimension());
  for (std::size_t i = 0; i < r.dimension(); ++i) {
    r.set_diag(i, lambda * q.diag(i));
    for (std::size_t j = i + 1; j < r.dimension(); ++j)
      r.set_upper(i, j, lambda * q.upper(i, j));
  }
  return r;
}

bool pointwise_leq_rigid(const QuadraticForm& rho1, const QuadraticForm& rho2) {
  check_same(rho1.semifield(), rho2.semifield());
  if (rho1.dimension() != rho2.dimension()) {
    throw ShapeError("pointwise_leq_rigid: dimension mismatch");
  }
  if (!rho1.has_zero_diagonal() || !rho2.has_zero_diagonal()) {
    throw PreconditionError(
        "rigidity criterion",
        "the coefficientwise order test is only valid for rigid forms");
  }
  for (std::size_t i = 0; i < rho1.dimension(); ++i)
    for (std::size_t j = i + 1; j < rho1.dimension(); ++j)
      if (!leq_minimal(rho1.upper(i, j), rho2.upper(i, j))) return false;
  return true;
}

QuadraticForm change_base(const QuadraticForm& q, const MonomialMatrix& p) {
  const std::size_t n = q.dimension();
  if (p.size() != n) throw ShapeError("change_base: size mismatch");
  for (const auto& s : p.scales()) q.semifield().validate(s);
  // (Px)_i = s_i x_{π(i)}, so α_i x_i² lands on coordinate π(i) and
  // β_{i,j} x_i x_j on the pair {π(i), π(j)}.
  QuadraticForm r(q.semifield(), n);
  const auto& perm = p.permutation();
  const auto& s = p.scales();
  for (std::size_t i = 0; i < n; ++i) {
    r.set_diag(perm[i], q.diag(i) * s[i].square());
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::size_t a = std::min(perm[i], perm[j]);
      const std::size_t b = std::max(perm[i], perm[j]);
      r.set_upper(a, b, q.upper(i, j) * s[i] * s[j]);
    }
  }
  return r;
}

}  // namespace stqf
