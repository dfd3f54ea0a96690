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

// Companion tables. For a form q on R^(n) the cell C_{i,j}(q) is the set of
// values b(ε_i, ε_j) over all companions b of q; companions are exactly the
// symmetric choices of one element per cell. Over a tangible supersemifield
// every cell has one of four shapes, represented by CompanionSet.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "stqf/forms.hpp"
#include "stqf/semiring.hpp"

namespace stqf {

class CompanionSet {
 public:
  enum class Kind {
    Singleton,     // {value}
    NuLeqDoubled,  // {0} ∪ {β : 2·ν-exp(β) ≤ bound2}
    NuLtDoubled,   // {0} ∪ {β : 2·ν-exp(β) < bound2}
    NuClass,       // {β : β ≅_ν Ghost(exponent)}
  };

  static CompanionSet singleton(Element value);
  static CompanionSet nu_leq(Rational bound2);
  static CompanionSet nu_lt(Rational bound2);
  static CompanionSet nu_class(Rational exponent);

  Kind kind() const { return kind_; }
  bool is_singleton() const { return kind_ == Kind::Singleton; }
  // Singleton only.
  const Element& value() const { return value_; }
  // NuLeqDoubled / NuLtDoubled only.
  const Rational& bound2() const { return param_; }
  // NuClass only.
  const Rational& class_exponent() const { return param_; }

  friend bool operator==(const CompanionSet&, const CompanionSet&) = default;

 private:
  Kind kind_ = Kind::Singleton;
  Element value_;
  Rational param_{0};
};

bool contains(const CompanionSet& set, const Element& beta);
// Minimal element. For NuClass every tangible member is minimal; the
// identity-fiber tangible is returned.
Element set_min(const CompanionSet& set);
// Maximal element, or nullopt when the supremum is not attained.
std::optional<Element> set_max(const CompanionSet& set, const ExponentGroup& group);
// Human-readable interval notation, e.g. "[0, g:3]".
std::string describe(const CompanionSet& set, const Semifield& semifield);

// Which closed-form branch governs the cell of the rank-2 form [α1 α; α2].
enum class PairCase {
  OneSideZero,          // α1 = 0 or α2 = 0: {α}
  Dominant,             // α² >_ν α1α2, generic: {α}
  ExceptionalGhost,     // discrete, α² ≅_ν π⁻¹α1α2, α1, α2 ghost: [0, eα]
  ExceptionalTangible,  // discrete, α² ≅_ν π⁻¹α1α2, a tangible α_i: ν-class of α
  BoundedSquare,        // α² ≤_ν α1α2, α1α2 a ν-square: [0, eξα1]
  BoundedDense,         // α² ≤_ν α1α2, dense, not a ν-square: [0, eξα1[
  BoundedDiscreteTangible,  // discrete, not a ν-square, a tangible α_i: [0, eτα1]
  BoundedDiscreteGhost,     // discrete, not a ν-square, both ghost: [0, eσα1]
};

std::string_view to_string(PairCase c);

// The tangible geometric mean data for nonzero α1, α2: ξ with α1ξ² ≅_ν α2
// (in R^{1/2} when α1α2 is not a ν-square), and in the discrete non-square
// case the neighbours σ, τ ∈ T with e·τ < e·ξ < e·σ and στ = ξ².
struct MeanContext {
  enum class Case { Square, DenseNonSquare, DiscreteNonSquare };

  Case which = Case::Square;
  HalfElement xi;
  // ν-exponent of ξα1, i.e. (exp α1 + exp α2)/2.
  Rational mean_exponent;
  std::optional<Element> sigma;
  std::optional<Element> tau;
};

MeanContext mean_context(const Semifield& semifield, const Element& alpha1,
                         const Element& alpha2);

PairCase classify_pair(const Semifield& semifield, const Element& alpha1,
                       const Element& alpha2, const Element& alpha);

// C_{1,2} of [α1 α; α2], computed from the branch and the mean data.
CompanionSet companion_set_pair(const Semifield& semifield, const Element& alpha1,
                                const Element& alpha2, const Element& alpha);

// The same cell described through the bounds β² ≤_ν α1α2 (resp. π⁻¹α1α2)
// without the mean data. Bounds may differ in representation from
// companion_set_pair() but denote the same subset of R.
CompanionSet companion_set_pair_by_square_bound(const Semifield& semifield,
                                                const Element& alpha1,
                                                const Element& alpha2,
                                                const Element& alpha);

// Decides β ∈ C_{1,2}([α1 α; α2]) straight from the defining condition
//   λα1 + λ⁻¹α2 + α = λα1 + λ⁻¹α2 + β   for every tangible λ,
// by probing a finite set of λ-exponents; see companions.cpp.
bool companion_membership_oracle(const Semifield& semifield, const Element& alpha1,
                                 const Element& alpha2, const Element& alpha,
                                 const Element& beta);

// Elements near the boundary of `set`: for r the doubled bound (2·exponent
// for Singleton and NuClass), the exponents r/2 + {−1, −1/2, −1/3, 0, 1/3,
// 1/2, 1} that lie in Γ, each as a ghost and as tangibles with identity and
// all-minus fibers; then 0 and `extra`.
std::vector<Element> membership_probes(const Semifield& semifield, const CompanionSet& set,
                                       const std::vector<Element>& extra = {});

class CompanionTable {
 public:
  CompanionTable() = default;
  CompanionTable(Semifield semifield, std::size_t n);

  const Semifield& semifield() const { return semifield_; }
  std::size_t dimension() const { return n_; }
  const CompanionSet& at(std::size_t i, std::size_t j) const;
  // Sets both (i, j) and (j, i).
  void set(std::size_t i, std::size_t j, CompanionSet cell);
  bool all_singletons() const;

  friend bool operator==(const CompanionTable&, const CompanionTable&) = default;

 private:
  Semifield semifield_;
  std::size_t n_ = 0;
  std::vector<CompanionSet> cells_;
};

CompanionTable companion_table(const QuadraticForm& q);

// The companion with b(ε_i, ε_j) = choice(i, j). Throws PreconditionError if
// a choice lies outside its cell and ShapeError if it is not symmetric.
SymmetricBilinearForm build_companion(const CompanionTable& table,
                                      const GeneralMatrix& choice);

bool is_companion(const QuadraticForm& q, const SymmetricBilinearForm& b);

// q has exactly one companion, i.e. q(ε_i) = 0 for every i.
bool is_rigid(const QuadraticForm& q);
// The cell of [α1 α; α2] is {α}; decided by the exponent inequality
// α1α2 <_ν α² (dense) or α1α2 <_ν πα² (discrete).
bool is_rigid_at_pair(const Semifield& semifield, const Element& alpha1,
                      const Element& alpha2, const Element& alpha);

// The zero form is a companion: 0 lies in every off-diagonal cell.
bool is_quasilinear(const QuadraticForm& q);
// Closed-form test for [α1 α; α2]: α² ≤_ν α1α2, or discrete with
// α² ≅_ν π⁻¹α1α2 and α1, α2 both ghost.
bool is_quasilinear_pair(const Semifield& semifield, const Element& alpha1,
                         const Element& alpha2, const Element& alpha);

// q1 and q2 denote the same function.
bool functionally_equal(const QuadraticForm& q1, const QuadraticForm& q2);

}  // namespace stqf
