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

// Quadratic forms on the standard free module R^(n), stored as triangular
// schemes, and symmetric bilinear forms stored as Gram matrices.
//
// A scheme denotes the function q(x) = Σ α_i x_i² + Σ_{i<j} β_{i,j} x_i x_j.
// Distinct schemes can denote the same function; that question is answered
// by functionally_equal() in companions.hpp, never by comparing coefficients.

#include <cstddef>
#include <vector>

#include "stqf/linalg.hpp"
#include "stqf/semiring.hpp"

namespace stqf {

inline constexpr std::size_t kMaxDimension = 64;

class Vector {
 public:
  Vector() = default;
  explicit Vector(std::vector<Element> coords) : coords_(std::move(coords)) {}
  static Vector zeros(std::size_t n) { return Vector(std::vector<Element>(n)); }
  // The i-th standard base vector ε_i.
  static Vector unit(std::size_t n, std::size_t i);

  std::size_t size() const { return coords_.size(); }
  const Element& operator[](std::size_t i) const { return coords_[i]; }
  Element& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Element>& coords() const { return coords_; }

  friend bool operator==(const Vector&, const Vector&) = default;

 private:
  std::vector<Element> coords_;
};

Vector operator+(const Vector& x, const Vector& y);
Vector operator*(const Element& a, const Vector& x);
// P·x for a monomial matrix P.
Vector apply(const MonomialMatrix& p, const Vector& x);

class QuadraticForm {
 public:
  QuadraticForm() = default;
  // The zero form of dimension n.
  QuadraticForm(Semifield semifield, std::size_t n);
  static QuadraticForm diagonal(Semifield semifield, std::vector<Element> diag);

  const Semifield& semifield() const { return semifield_; }
  std::size_t dimension() const { return n_; }

  // α_i = q(ε_i).
  const Element& diag(std::size_t i) const;
  // β_{i,j} for i < j.
  const Element& upper(std::size_t i, std::size_t j) const;
  // α_i if i == j, β_{i,j} if i < j.
  const Element& coefficient(std::size_t i, std::size_t j) const;

  void set_diag(std::size_t i, Element value);
  void set_upper(std::size_t i, std::size_t j, Element value);

  // ∇q: the upper-triangular matrix expanding q.
  GeneralMatrix nabla() const;
  bool is_diagonal() const;
  bool has_zero_diagonal() const;

  friend bool operator==(const QuadraticForm&, const QuadraticForm&) = default;

 private:
  void check_index(std::size_t i, std::size_t j) const;

  Semifield semifield_;
  std::size_t n_ = 0;
  GeneralMatrix scheme_;  // upper triangle incl. diagonal; lower part zero
};

class SymmetricBilinearForm {
 public:
  SymmetricBilinearForm() = default;
  // The zero form of dimension n.
  SymmetricBilinearForm(Semifield semifield, std::size_t n);
  // Throws ShapeError unless `gram` is square and symmetric.
  SymmetricBilinearForm(Semifield semifield, GeneralMatrix gram);

  const Semifield& semifield() const { return semifield_; }
  std::size_t dimension() const { return gram_.rows(); }
  const Element& operator()(std::size_t i, std::size_t j) const { return gram_(i, j); }
  // Sets both (i, j) and (j, i).
  void set(std::size_t i, std::size_t j, Element value);
  const GeneralMatrix& gram() const { return gram_; }
  bool has_zero_diagonal() const;

  friend bool operator==(const SymmetricBilinearForm&,
                         const SymmetricBilinearForm&) = default;

 private:
  Semifield semifield_;
  GeneralMatrix gram_;
};

Element eval_quadratic(const QuadraticForm& q, const Vector& x);
Element eval_bilinear(const SymmetricBilinearForm& b, const Vector& x,
                      const Vector& y);

// The companion with diagonal e·α_i and off-diagonal β_{i,j}.
SymmetricBilinearForm balanced_companion(const QuadraticForm& q);

// b(ε_i, ε_i) = e·α_i for all i. Throws PreconditionError if b is not a
// companion of q.
bool is_balanced_pair(const QuadraticForm& q, const SymmetricBilinearForm& b);

QuadraticForm add_forms(const QuadraticForm& q1, const QuadraticForm& q2);
QuadraticForm scale_form(const Element& lambda, const QuadraticForm& q);

// Functional order ρ1 ≤ ρ2 for rigid (zero-diagonal) forms, decided
// coefficientwise in the minimal order. Rejects forms with a nonzero diagonal.
bool pointwise_leq_rigid(const QuadraticForm& rho1, const QuadraticForm& rho2);

// q∘P, i.e. the form x ↦ q(Px).
QuadraticForm change_base(const QuadraticForm& q, const MonomialMatrix& p);

}  // namespace stqf
