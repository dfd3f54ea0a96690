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

// Arithmetic of a standard tangible supersemifield R = T ⊔ G ⊔ {0} with
// T = Γ × K, G = Γ and ν the projection onto Γ. Γ is an ordered group of
// exact rational exponents (written additively); K is an elementary abelian
// 2-group of sign vectors ("fibers").

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

#include "stqf/rational.hpp"

namespace stqf {

enum class GroupKind {
  Discrete,          // Γ = Z
  DenseDivisible,    // Γ = Q
  DenseNonHalvable,  // Γ = Z[1/3]: dense, but 1/2 ∉ Γ
};

class ExponentGroup {
 public:
  constexpr ExponentGroup() = default;
  constexpr explicit ExponentGroup(GroupKind kind) : kind_(kind) {}

  constexpr GroupKind kind() const { return kind_; }
  constexpr bool is_dense() const { return kind_ != GroupKind::Discrete; }
  constexpr bool is_discrete() const { return kind_ == GroupKind::Discrete; }

  bool contains(const Rational& x) const;
  // x/2 ∈ Γ.
  bool is_halvable(const Rational& x) const { return contains(x / 2); }

  // Largest element of Γ strictly below x. Discrete groups only.
  Rational predecessor(const Rational& x) const;
  // Some element of Γ with lo < y < hi. Dense groups only.
  Rational between(const Rational& lo, const Rational& hi) const;

  // Configuration names "int", "rat", "rat3".
  std::string_view name() const;
  static ExponentGroup from_name(std::string_view name);

  friend constexpr bool operator==(ExponentGroup, ExponentGroup) = default;

 private:
  GroupKind kind_ = GroupKind::Discrete;
};

// Bit i set means the i-th sign of the fiber vector is −.
using Fiber = std::uint64_t;
inline constexpr unsigned kMaxFiberRank = 64;

enum class Tag : std::uint8_t { Zero, Tangible, Ghost };

class Element {
 public:
  // The zero element.
  Element() = default;

  static Element zero() { return {}; }
  static Element tangible(Rational exponent, Fiber fiber = 0);
  static Element ghost(Rational exponent);
  static Element one() { return tangible(Rational(0)); }
  // e = 1 + 1.
  static Element e() { return ghost(Rational(0)); }

  Tag tag() const { return tag_; }
  bool is_zero() const { return tag_ == Tag::Zero; }
  bool is_tangible() const { return tag_ == Tag::Tangible; }
  bool is_ghost() const { return tag_ == Tag::Ghost; }

  // ν-exponent; zero for the zero element (callers must test is_zero()).
  const Rational& exponent() const { return exponent_; }
  Fiber fiber() const { return fiber_; }

  // The ghost map ν(a) = e·a.
  Element nu() const;
  Element square() const { return *this * *this; }
  // Multiplicative inverse of a tangible element; throws otherwise.
  Element inverse() const;

  friend Element operator+(const Element& a, const Element& b);
  friend Element operator*(const Element& a, const Element& b);
  Element& operator+=(const Element& b) { return *this = *this + b; }
  Element& operator*=(const Element& b) { return *this = *this * b; }

  friend bool operator==(const Element& a, const Element& b);

 private:
  Element(Tag tag, Rational exponent, Fiber fiber)
      : tag_(tag), exponent_(std::move(exponent)), fiber_(fiber) {}

  Tag tag_ = Tag::Zero;
  Rational exponent_{0};
  Fiber fiber_ = 0;
};

// Total preorder by ν-value with 0 below everything, plus the tags of both
// operands so callers can tell ghost/tangible apart on ties.
struct NuComparison {
  std::strong_ordering order = std::strong_ordering::equal;
  Tag lhs = Tag::Zero;
  Tag rhs = Tag::Zero;

  bool less() const { return order == std::strong_ordering::less; }
  bool equal() const { return order == std::strong_ordering::equal; }
  bool greater() const { return order == std::strong_ordering::greater; }
};

NuComparison nu_compare(const Element& a, const Element& b);

// Minimal ordering x ≤ y ⟺ ∃z: x + z = y, decided in closed form:
// x = y, or ν(x) < ν(y), or ν(x) = ν(y) with y ghost.
bool leq_minimal(const Element& x, const Element& y);

// Element of the half-exponent extension R^{1/2}: same shape as Element but
// the exponent may lie in ½Γ.
class HalfElement {
 public:
  HalfElement() = default;
  static HalfElement from(const Element& a);
  static HalfElement tangible(Rational exponent, Fiber fiber = 0);
  static HalfElement ghost(Rational exponent);

  Tag tag() const { return tag_; }
  bool is_zero() const { return tag_ == Tag::Zero; }
  bool is_ghost() const { return tag_ == Tag::Ghost; }
  const Rational& exponent() const { return exponent_; }
  Fiber fiber() const { return fiber_; }

  HalfElement nu() const;
  // Squares land in R.
  Element square() const;
  // Embedding back into R when the exponent already lies in Γ.
  bool in_base(const ExponentGroup& group) const;
  Element to_base(const ExponentGroup& group) const;

  friend HalfElement operator*(const HalfElement& a, const HalfElement& b);
  friend HalfElement operator*(const HalfElement& a, const Element& b);
  friend bool operator==(const HalfElement& a, const HalfElement& b);

 private:
  Tag tag_ = Tag::Zero;
  Rational exponent_{0};
  Fiber fiber_ = 0;
};

// Unique square root of a ghost (or zero) in R^{1/2}. Throws on tangibles,
// whose square roots are not unique.
HalfElement sqrt_ghost(const Element& a);

// Square class of a nonzero element modulo unit squares T². Since
// T² = 2Γ × {1}, the class is (tag, exponent mod 2Γ, fiber). Γ/2Γ has at most
// two elements in every supported group, so `residue` is 0 or 1. Ghost
// classes carry no fiber. The Zero tag denotes the class {0}.
struct SquareClassTag {
  Tag tag = Tag::Zero;
  int residue = 0;
  Fiber fiber = 0;

  friend auto operator<=>(const SquareClassTag&, const SquareClassTag&) = default;
};

// A concrete supersemifield configuration: exponent group plus fiber rank.
class Semifield {
 public:
  Semifield() = default;
  explicit Semifield(ExponentGroup group, unsigned fiber_rank = 0);
  explicit Semifield(GroupKind kind, unsigned fiber_rank = 0)
      : Semifield(ExponentGroup(kind), fiber_rank) {}

  const ExponentGroup& group() const { return group_; }
  unsigned fiber_rank() const { return fiber_rank_; }
  Fiber fiber_mask() const;
  bool is_discrete() const { return group_.is_discrete(); }
  bool is_dense() const { return group_.is_dense(); }

  bool contains(const Element& a) const;
  // Throws ShapeError if `a` is not an element of this semifield.
  void validate(const Element& a) const;

  // The prime element π = Tangible(−1). Discrete groups only.
  Element prime() const;

  // a ≅_ν b² for some b, i.e. exponent(a)/2 ∈ Γ. Rejects zero.
  bool is_nu_square(const Element& a) const;
  // Rejects zero.
  SquareClassTag square_class(const Element& a) const;

  // Text encoding: "0", "t:<rat>", "t:<rat>:<signs>", "g:<rat>".
  Element parse(std::string_view text) const;
  std::string format(const Element& a) const;
  std::string format(const HalfElement& a) const;
  std::string format(const SquareClassTag& c) const;

  friend bool operator==(const Semifield&, const Semifield&) = default;

 private:
  ExponentGroup group_;
  unsigned fiber_rank_ = 0;
};

}  // namespace stqf
