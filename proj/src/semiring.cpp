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

#include "stqf/semiring.hpp"

#include "stqf/errors.hpp"

namespace stqf {

// ---------------------------------------------------------------------------
// ExponentGroup

bool ExponentGroup::contains(const Rational& x) const {
  switch (kind_) {
    case GroupKind::Discrete:
      return is_integer(x);
    case GroupKind::DenseDivisible:
      return true;
    case GroupKind::DenseNonHalvable:
      return denominator_is_power_of(x, 3);
  }
  return false;
}

Rational ExponentGroup::predecessor(const Rational& x) const {
  if (!is_discrete()) {
    throw PreconditionError("discreteness",
                            "a dense exponent group has no predecessors");
  }
  return Rational(ceil(x) - 1);
}

Rational ExponentGroup::between(const Rational& lo, const Rational& hi) const {
  if (is_discrete()) {
    throw PreconditionError("density",
                            "a discrete exponent group is not densely ordered");
  }
  if (!(lo < hi)) throw ShapeError("between() needs lo < hi");
  if (kind_ == GroupKind::DenseDivisible) return Rational((lo + hi) / 2);
  Integer scale = 3;
  while (Rational(scale) * (hi - lo) <= 1) scale *= 3;
  Rational scaled = lo * Rational(scale);
  Rational y(floor(scaled) + 1, scale);
  y.canonicalize();
  return y;
}

std::string_view ExponentGroup::name() const {
  switch (kind_) {
    case GroupKind::Discrete:
      return "int";
    case GroupKind::DenseDivisible:
      return "rat";
    case GroupKind::DenseNonHalvable:
      return "rat3";
  }
  return "?";
}

ExponentGroup ExponentGroup::from_name(std::string_view name) {
  if (name == "int") return ExponentGroup(GroupKind::Discrete);
  if (name == "rat") return ExponentGroup(GroupKind::DenseDivisible);
  if (name == "rat3") return ExponentGroup(GroupKind::DenseNonHalvable);
  if (name == "trivial") {
    throw PreconditionError(
        "nontriviality",
        "the trivial ghost group {e} is not supported: companion tables "
        "require a nontrivial supersemifield");
  }
  throw ParseError("group", "unknown exponent group '" + std::string(name) +
                                "' (expected int, rat or rat3)");
}

// ---------------------------------------------------------------------------
// Element

Element Element::tangible(Rational exponent, Fiber fiber) {
  exponent.canonicalize();
  return Element(Tag::Tangible, std::move(exponent), fiber);
}

Element Element::ghost(Rational exponent) {
  exponent.canonicalize();
  return Element(Tag::Ghost, std::move(exponent), 0);
}

Element Element::nu() const {
  if (is_zero()) return {};
  return ghost(exponent_);
}

Element Element::inverse() const {
  if (!is_tangible()) {
    throw PreconditionError("units are tangible",
                            "only tangible elements are invertible");
  }
  return tangible(-exponent_, fiber_);
}

Element operator+(const Element& a, const Element& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const int c = cmp(a.exponent_, b.exponent_);
  if (c > 0) return a;
  if (c < 0) return b;
  return Element::ghost(a.exponent_);
}

Element operator*(const Element& a, const Element& b) {
  if (a.is_zero() || b.is_zero()) return {};
  Rational exp = a.exponent_ + b.exponent_;
  if (a.is_tangible() && b.is_tangible()) {
    return Element::tangible(std::move(exp), a.fiber_ ^ b.fiber_);
  }
  return Element::ghost(std::move(exp));
}

bool operator==(const Element& a, const Element& b) {
  if (a.tag_ != b.tag_) return false;
  if (a.is_zero()) return true;
  return a.exponent_ == b.exponent_ && a.fiber_ == b.fiber_;
}

NuComparison nu_compare(const Element& a, const Element& b) {
  NuComparison r;
  r.lhs = a.tag();
  r.rhs = b.tag();
  if (a.is_zero() || b.is_zero()) {
    r.order = (a.is_zero() && b.is_zero()) ? std::strong_ordering::equal
              : a.is_zero()                ? std::strong_ordering::less
                                           : std::strong_ordering::greater;
    return r;
  }
  const int c = cmp(a.exponent(), b.exponent());
  r.order = c < 0 ? std::strong_ordering::less
            : c > 0 ? std::strong_ordering::greater
                    : std::strong_ordering::equal;
  return r;
}

bool leq_minimal(const Element& x, const Element& y) {
  if (x == y) return true;
  const NuComparison c = nu_compare(x, y);
  return c.less() || (c.equal() && y.is_ghost());
}

// ---------------------------------------------------------------------------
// HalfElement

HalfElement HalfElement::from(const Element& a) {
  switch (a.tag()) {
    case Tag::Zero:
      return {};
    case Tag::Tangible:
      return tangible(a.exponent(), a.fiber());
    case Tag::Ghost:
      return ghost(a.exponent());
  }
  return {};
}

HalfElement HalfElement::tangible(Rational exponent, Fiber fiber) {
  HalfElement h;
  exponent.canonicalize();
  h.tag_ = Tag::Tangible;
  h.exponent_ = std::move(exponent);
  h.fiber_ = fiber;
  return h;
}

HalfElement HalfElement::ghost(Rational exponent) {
  HalfElement h;
  exponent.canonicalize();
  h.tag_ = Tag::Ghost;
  h.exponent_ = std::move(exponent);
  return h;
}

HalfElement HalfElement::nu() const {
  if (is_zero()) return {};
  return ghost(exponent_);
}

Element HalfElement::square() const {
  switch (tag_) {
    case Tag::Zero:
      return {};
    case Tag::Tangible:
      return Element::tangible(exponent_ * 2, 0);
    case Tag::Ghost:
      return Element::ghost(exponent_ * 2);
  }
  return {};
}

bool HalfElement::in_base(const ExponentGroup& group) const {
  return is_zero() || group.contains(exponent_);
}

Element HalfElement::to_base(const ExponentGroup& group) const {
  if (!in_base(group)) {
    throw PreconditionError("half-exponent extension",
                            "element does not lie in the base semifield");
  }
  switch (tag_) {
    case Tag::Zero:
      return {};
    case Tag::Tangible:
      return Element::tangible(exponent_, fiber_);
    case Tag::Ghost:
      return Element::ghost(exponent_);
  }
  return {};
}

HalfElement operator*(const HalfElement& a, const HalfElement& b) {
  if (a.is_zero() || b.is_zero()) return {};
  Rational exp = a.exponent_ + b.exponent_;
  if (a.tag_ == Tag::Tangible && b.tag_ == Tag::Tangible) {
    return HalfElement::tangible(std::move(exp), a.fiber_ ^ b.fiber_);
  }
  return HalfElement::ghost(std::move(exp));
}

HalfElement operator*(const HalfElement& a, const Element& b) {
  return a * HalfElement::from(b);
}

bool operator==(const HalfElement& a, const HalfElement& b) {
  if (a.tag_ != b.tag_) return false;
  if (a.is_zero()) return true;
  return a.exponent_ == b.exponent_ && a.fiber_ == b.fiber_;
}

HalfElement sqrt_ghost(const Element& a) {
  if (a.is_tangible()) {
    throw PreconditionError(
        "unique square roots of ghosts",
        "tangible elements have no unique square root in R^{1/2}");
  }
  if (a.is_zero()) return {};
  return HalfElement::ghost(a.exponent() / 2);
}

// ---------------------------------------------------------------------------
// Semifield

Semifield::Semifield(ExponentGroup group, unsigned fiber_rank)
    : group_(group), fiber_rank_(fiber_rank) {
  if (fiber_rank > kMaxFiberRank) {
    throw ShapeError("fiber rank exceeds " + std::to_string(kMaxFiberRank));
  }
}

Fiber Semifield::fiber_mask() const {
  if (fiber_rank_ == 0) return 0;
  if (fiber_rank_ == 64) return ~Fiber{0};
  return (Fiber{1} << fiber_rank_) - 1;
}

bool Semifield::contains(const Element& a) const {
  if (a.is_zero()) return true;
  if (!group_.contains(a.exponent())) return false;
  return (a.fiber() & ~fiber_mask()) == 0;
}

void Semifield::validate(const Element& a) const {
  if (!contains(a)) {
    throw ShapeError("element " + format(a) + " is not in the '" +
                     std::string(group_.name()) + "' semifield with fiber rank " +
                     std::to_string(fiber_rank_));
  }
}

Element Semifield::prime() const {
  if (!is_discrete()) {
    throw PreconditionError("discreteness",
                            "only discrete semifields have a prime element");
  }
  return Element::tangible(Rational(-1));
}

bool Semifield::is_nu_square(const Element& a) const {
  if (a.is_zero()) {
    throw PreconditionError("nonzero argument", "is_nu_square rejects zero");
  }
  return group_.is_halvable(a.exponent());
}

SquareClassTag Semifield::square_class(const Element& a) const {
  if (a.is_zero()) {
    throw PreconditionError("nonzero argument", "square_class rejects zero");
  }
  SquareClassTag c;
  c.tag = a.tag();
  c.residue = group_.is_halvable(a.exponent()) ? 0 : 1;
  c.fiber = a.is_tangible() ? a.fiber() : 0;
  return c;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::string format_signs(Fiber fiber, unsigned rank) {
  std::string out;
  for (unsigned i = 0; i < rank; ++i) out.push_back((fiber >> i) & 1 ? '-' : '+');
  return out;
}

Fiber parse_signs(std::string_view s, unsigned rank, std::string_view whole) {
  Fiber f = 0;
  unsigned i = 0;
  std::size_t pos = 0;
  while (pos < s.size()) {
    bool minus;
    if (s[pos] == '+') {
      minus = false;
      pos += 1;
    } else if (s[pos] == '-') {
      minus = true;
      pos += 1;
    } else if (s.substr(pos, 3) == "\xE2\x88\x92") {
      minus = true;
      pos += 3;
    } else {
      throw ParseError(std::to_string(pos),
                       "bad fiber sign in '" + std::string(whole) + "'");
    }
    if (i >= rank) {
      throw ParseError(std::to_string(pos), "fiber of '" + std::string(whole) +
                                                "' is longer than the fiber rank " +
                                                std::to_string(rank));
    }
    if (minus) f |= Fiber{1} << i;
    ++i;
  }
  if (i != rank) {
    throw ParseError("0", "fiber of '" + std::string(whole) + "' has " +
                              std::to_string(i) + " signs, expected " +
                              std::to_string(rank));
  }
  return f;
}

}  // namespace

Element Semifield::parse(std::string_view text) const {
  const std::string_view s = trim(text);
  if (s == "0") return {};
  if (s.size() < 3 || s[1] != ':' || (s[0] != 't' && s[0] != 'g')) {
    throw ParseError("0", "malformed element '" + std::string(text) +
                              "' (expected 0, t:<rat>[:<signs>] or g:<rat>)");
  }
  const bool tangible = s[0] == 't';
  std::string_view rest = s.substr(2);
  std::string_view signs;
  bool has_signs = false;
  if (const auto colon = rest.find(':'); colon != std::string_view::npos) {
    if (!tangible) {
      throw ParseError(std::to_string(2 + colon),
                       "ghost '" + std::string(text) + "' cannot carry a fiber");
    }
    signs = rest.substr(colon + 1);
    rest = rest.substr(0, colon);
    has_signs = true;
  }
  Rational exp;
  try {
    exp = parse_rational(rest);
  } catch (const ParseError& e) {
    throw ParseError(std::to_string(2), e.what());
  }
  if (!group_.contains(exp)) {
    throw ParseError("2", "exponent " + to_string(exp) + " of '" + std::string(text) +
                              "' is not in the '" + std::string(group_.name()) +
                              "' group");
  }
  if (!tangible) return Element::ghost(exp);
  const Fiber f = has_signs ? parse_signs(signs, fiber_rank_, text) : Fiber{0};
  return Element::tangible(exp, f);
}

std::string Semifield::format(const Element& a) const {
  switch (a.tag()) {
    case Tag::Zero:
      return "0";
    case Tag::Ghost:
      return "g:" + to_string(a.exponent());
    case Tag::Tangible: {
      std::string out = "t:" + to_string(a.exponent());
      if (fiber_rank_ > 0) out += ":" + format_signs(a.fiber(), fiber_rank_);
      return out;
    }
  }
  return "?";
}

std::string Semifield::format(const HalfElement& a) const {
  switch (a.tag()) {
    case Tag::Zero:
      return "0";
    case Tag::Ghost:
      return "g:" + to_string(a.exponent());
    case Tag::Tangible: {
      std::string out = "t:" + to_string(a.exponent());
      if (fiber_rank_ > 0) out += ":" + format_signs(a.fiber(), fiber_rank_);
      return out;
    }
  }
  return "?";
}

std::string Semifield::format(const SquareClassTag& c) const {
  switch (c.tag) {
    case Tag::Zero:
      return "[0]";
    case Tag::Ghost:
      return "[g:" + std::to_string(c.residue) + "]";
    case Tag::Tangible: {
      std::string out = "[t:" + std::to_string(c.residue);
      if (fiber_rank_ > 0) out += ":" + format_signs(c.fiber, fiber_rank_);
      return out + "]";
    }
  }
  return "?";
}

}  // namespace stqf
