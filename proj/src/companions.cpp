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

#include "stqf/companions.hpp"

#include <algorithm>

#include "stqf/errors.hpp"

namespace stqf {

// ---------------------------------------------------------------------------
// CompanionSet

CompanionSet CompanionSet::singleton(Element value) {
  CompanionSet s;
  s.kind_ = Kind::Singleton;
  s.value_ = std::move(value);
  return s;
}

CompanionSet CompanionSet::nu_leq(Rational bound2) {
  CompanionSet s;
  s.kind_ = Kind::NuLeqDoubled;
  bound2.canonicalize();
  s.param_ = std::move(bound2);
  return s;
}

CompanionSet CompanionSet::nu_lt(Rational bound2) {
  CompanionSet s;
  s.kind_ = Kind::NuLtDoubled;
  bound2.canonicalize();
  s.param_ = std::move(bound2);
  return s;
}

CompanionSet CompanionSet::nu_class(Rational exponent) {
  CompanionSet s;
  s.kind_ = Kind::NuClass;
  exponent.canonicalize();
  s.param_ = std::move(exponent);
  return s;
}

bool contains(const CompanionSet& set, const Element& beta) {
  switch (set.kind()) {
    case CompanionSet::Kind::Singleton:
      return beta == set.value();
    case CompanionSet::Kind::NuLeqDoubled:
      return beta.is_zero() || beta.exponent() * 2 <= set.bound2();
    case CompanionSet::Kind::NuLtDoubled:
      return beta.is_zero() || beta.exponent() * 2 < set.bound2();
    case CompanionSet::Kind::NuClass:
      return !beta.is_zero() && beta.exponent() == set.class_exponent();
  }
  return false;
}

Element set_min(const CompanionSet& set) {
  switch (set.kind()) {
    case CompanionSet::Kind::Singleton:
      return set.value();
    case CompanionSet::Kind::NuLeqDoubled:
    case CompanionSet::Kind::NuLtDoubled:
      return Element::zero();
    case CompanionSet::Kind::NuClass:
      return Element::tangible(set.class_exponent());
  }
  return {};
}

std::optional<Element> set_max(const CompanionSet& set, const ExponentGroup& group) {
  switch (set.kind()) {
    case CompanionSet::Kind::Singleton:
      return set.value();
    case CompanionSet::Kind::NuClass:
      return Element::ghost(set.class_exponent());
    case CompanionSet::Kind::NuLeqDoubled: {
      const Rational half = set.bound2() / 2;
      if (group.contains(half)) return Element::ghost(half);
      if (group.is_discrete()) return Element::ghost(Rational(floor(half)));
      return std::nullopt;
    }
    case CompanionSet::Kind::NuLtDoubled: {
      if (group.is_dense()) return std::nullopt;
      return Element::ghost(Rational(ceil(Rational(set.bound2() / 2)) - 1));
    }
  }
  return std::nullopt;
}

std::string describe(const CompanionSet& set, const Semifield& semifield) {
  switch (set.kind()) {
    case CompanionSet::Kind::Singleton:
      return "{" + semifield.format(set.value()) + "}";
    case CompanionSet::Kind::NuLeqDoubled:
      return "[0, g:" + to_string(Rational(set.bound2() / 2)) + "]";
    case CompanionSet::Kind::NuLtDoubled:
      return "[0, g:" + to_string(Rational(set.bound2() / 2)) + "[";
    case CompanionSet::Kind::NuClass:
      return "{b ~nu g:" + to_string(set.class_exponent()) + "}";
  }
  return "?";
}

std::string_view to_string(PairCase c) {
  switch (c) {
    case PairCase::OneSideZero:
      return "one-side-zero";
    case PairCase::Dominant:
      return "dominant";
    case PairCase::ExceptionalGhost:
      return "exceptional-ghost";
    case PairCase::ExceptionalTangible:
      return "exceptional-tangible";
    case PairCase::BoundedSquare:
      return "bounded-square";
    case PairCase::BoundedDense:
      return "bounded-dense";
    case PairCase::BoundedDiscreteTangible:
      return "bounded-discrete-tangible";
    case PairCase::BoundedDiscreteGhost:
      return "bounded-discrete-ghost";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Closed form for rank 2

namespace {

void validate_all(const Semifield& sf, std::initializer_list<const Element*> xs) {
  for (const Element* x : xs) sf.validate(*x);
}

}  // namespace

MeanContext mean_context(const Semifield& semifield, const Element& alpha1,
                         const Element& alpha2) {
  if (alpha1.is_zero() || alpha2.is_zero()) {
    throw PreconditionError("geometric mean", "mean data needs α1, α2 ≠ 0");
  }
  const ExponentGroup& g = semifield.group();
  MeanContext m;
  const Rational sum = alpha1.exponent() + alpha2.exponent();
  m.mean_exponent = sum / 2;
  m.xi = HalfElement::tangible((alpha2.exponent() - alpha1.exponent()) / 2);
  if (g.is_halvable(sum)) {
    m.which = MeanContext::Case::Square;
  } else if (g.is_dense()) {
    m.which = MeanContext::Case::DenseNonSquare;
  } else {
    m.which = MeanContext::Case::DiscreteNonSquare;
    const Rational half(1, 2);
    m.sigma = Element::tangible(m.xi.exponent() + half);
    m.tau = Element::tangible(m.xi.exponent() - half);
  }
  return m;
}

PairCase classify_pair(const Semifield& semifield, const Element& alpha1,
                       const Element& alpha2, const Element& alpha) {
  validate_all(semifield, {&alpha1, &alpha2, &alpha});
  if (alpha1.is_zero() || alpha2.is_zero()) return PairCase::OneSideZero;
  const ExponentGroup& g = semifield.group();
  const Rational sum = alpha1.exponent() + alpha2.exponent();
  const bool square = g.is_halvable(sum);
  const bool both_ghost = alpha1.is_ghost() && alpha2.is_ghost();
  // α = 0 counts as ν-exponent −∞, so it always lands in the bounded branch.
  if (!alpha.is_zero() && alpha.exponent() * 2 > sum) {
    if (g.is_discrete() && !square && alpha.exponent() * 2 == sum + 1) {
      return both_ghost ? PairCase::ExceptionalGhost : PairCase::ExceptionalTangible;
    }
    return PairCase::Dominant;
  }
  if (square) return PairCase::BoundedSquare;
  if (g.is_dense()) return PairCase::BoundedDense;
  return both_ghost ? PairCase::BoundedDiscreteGhost
                    : PairCase::BoundedDiscreteTangible;
}

CompanionSet companion_set_pair(const Semifield& semifield, const Element& alpha1,
                                const Element& alpha2, const Element& alpha) {
  const PairCase c = classify_pair(semifield, alpha1, alpha2, alpha);
  switch (c) {
    case PairCase::OneSideZero:
    case PairCase::Dominant:
      return CompanionSet::singleton(alpha);
    case PairCase::ExceptionalGhost:
      return CompanionSet::nu_leq(alpha.exponent() * 2);
    case PairCase::ExceptionalTangible:
      return CompanionSet::nu_class(alpha.exponent());
    default:
      break;
  }
  const MeanContext m = mean_context(semifield, alpha1, alpha2);
  const HalfElement mean = m.xi * alpha1;
  switch (c) {
    case PairCase::BoundedSquare:
      return CompanionSet::nu_leq(mean.exponent() * 2);
    case PairCase::BoundedDense:
      return CompanionSet::nu_lt(mean.exponent() * 2);
    case PairCase::BoundedDiscreteTangible:
      return CompanionSet::nu_leq((*m.tau * alpha1).exponent() * 2);
    case PairCase::BoundedDiscreteGhost:
      return CompanionSet::nu_leq((*m.sigma * alpha1).exponent() * 2);
    default:
      break;
  }
  return CompanionSet::singleton(alpha);
}

CompanionSet companion_set_pair_by_square_bound(const Semifield& semifield,
                                                const Element& alpha1,
                                                const Element& alpha2,
                                                const Element& alpha) {
  validate_all(semifield, {&alpha1, &alpha2, &alpha});
  if (alpha1.is_zero() || alpha2.is_zero()) return CompanionSet::singleton(alpha);
  const ExponentGroup& g = semifield.group();
  const Element product = alpha1 * alpha2;
  const bool square = semifield.is_nu_square(product);
  const bool both_ghost = alpha1.is_ghost() && alpha2.is_ghost();
  const NuComparison c = nu_compare(alpha.square(), product);
  if (c.greater()) {
    if (g.is_discrete() && !square &&
        nu_compare(alpha.square(), semifield.prime().inverse() * product).equal()) {
      if (both_ghost) return CompanionSet::nu_leq(alpha.square().exponent());
      return CompanionSet::nu_class(alpha.exponent());
    }
    return CompanionSet::singleton(alpha);
  }
  // β² ≤_ν α1α2, or β² ≤_ν π⁻¹α1α2 in the discrete non-square ghost case.
  if (g.is_discrete() && !square && both_ghost) {
    return CompanionSet::nu_leq((semifield.prime().inverse() * product).exponent());
  }
  if (g.is_dense() && !square) {
    // β² ≤_ν α1α2 cannot hold with equality since Γ misses sum/2.
    return CompanionSet::nu_lt(product.exponent());
  }
  return CompanionSet::nu_leq(product.exponent());
}

// Oracle. Write ℓ for the exponent of λ. The four ν-exponents in
//   λα1 + λ⁻¹α2 + α  =?  λα1 + λ⁻¹α2 + β
// are ℓ + a1, a2 − ℓ, a and b (absent terms drop out). Both sides are fixed by
// which of these are maximal and by the tags of the maximal terms; neither
// changes while ℓ stays inside an open interval avoiding the tie points
//   ℓ = (a2 − a1)/2,  a − a1,  a2 − a,  b − a1,  a2 − b.
// Checking every tie point that lies in Γ, one point of Γ inside each gap
// between consecutive ties, and one point beyond each end therefore decides
// the condition for all ℓ ∈ Γ. For Z the integers from ⌊first tie⌋ − 1 to
// ⌈last tie⌉ + 1 are such a set. The fiber of λ only multiplies the fiber of
// a maximal λ-term, which appears on both sides; all fibers are probed anyway
// when the rank is small.
bool companion_membership_oracle(const Semifield& semifield, const Element& alpha1,
                                 const Element& alpha2, const Element& alpha,
                                 const Element& beta) {
  validate_all(semifield, {&alpha1, &alpha2, &alpha, &beta});
  const ExponentGroup& g = semifield.group();
  std::vector<Rational> ties;
  const bool has1 = !alpha1.is_zero();
  const bool has2 = !alpha2.is_zero();
  if (has1 && has2) ties.push_back((alpha2.exponent() - alpha1.exponent()) / 2);
  for (const Element* c : {&alpha, &beta}) {
    if (c->is_zero()) continue;
    if (has1) ties.push_back(c->exponent() - alpha1.exponent());
    if (has2) ties.push_back(alpha2.exponent() - c->exponent());
  }
  std::sort(ties.begin(), ties.end());
  ties.erase(std::unique(ties.begin(), ties.end()), ties.end());

  std::vector<Rational> probes{Rational(0)};
  if (!ties.empty()) {
    const Integer lo = floor(ties.front()) - 1;
    const Integer hi = ceil(ties.back()) + 1;
    if (g.is_discrete()) {
      for (Integer k = lo; k <= hi; ++k) probes.emplace_back(k);
    } else {
      probes.emplace_back(lo);
      probes.emplace_back(hi);
      for (std::size_t i = 0; i < ties.size(); ++i) {
        if (g.contains(ties[i])) probes.push_back(ties[i]);
        if (i + 1 < ties.size()) probes.push_back(g.between(ties[i], ties[i + 1]));
      }
    }
  }

  std::vector<Fiber> fibers{0};
  if (semifield.fiber_rank() > 0 && semifield.fiber_rank() <= 6) {
    for (Fiber f = 1; f <= semifield.fiber_mask(); ++f) fibers.push_back(f);
  }

  for (const Rational& l : probes) {
    for (Fiber f : fibers) {
      const Element lambda = Element::tangible(l, f);
      const Element s = lambda * alpha1 + lambda.inverse() * alpha2;
      if (!(s + alpha == s + beta)) return false;
    }
  }
  return true;
}

std::vector<Element> membership_probes(const Semifield& semifield, const CompanionSet& set,
                                       const std::vector<Element>& extra) {
  std::vector<Element> out{Element::zero()};
  std::optional<Rational> r2;
  switch (set.kind()) {
    case CompanionSet::Kind::Singleton:
      if (!set.value().is_zero()) r2 = set.value().exponent() * 2;
      break;
    case CompanionSet::Kind::NuLeqDoubled:
    case CompanionSet::Kind::NuLtDoubled:
      r2 = set.bound2();
      break;
    case CompanionSet::Kind::NuClass:
      r2 = set.class_exponent() * 2;
      break;
  }
  if (r2) {
    const Rational mid = *r2 / 2;
    for (const Rational& d : {Rational(-1), Rational(-1, 2), Rational(-1, 3), Rational(0),
                              Rational(1, 3), Rational(1, 2), Rational(1)}) {
      const Rational x = mid + d;
      if (!semifield.group().contains(x)) continue;
      out.push_back(Element::ghost(x));
      out.push_back(Element::tangible(x));
      if (semifield.fiber_rank() > 0) out.push_back(Element::tangible(x, semifield.fiber_mask()));
    }
  }
  for (const Element& x : extra) {
    semifield.validate(x);
    out.push_back(x);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Tables

CompanionTable::CompanionTable(Semifield semifield, std::size_t n)
    : semifield_(semifield), n_(n), cells_(n * n, CompanionSet::singleton({})) {}

const CompanionSet& CompanionTable::at(std::size_t i, std::size_t j) const {
  if (i >= n_ || j >= n_) throw ShapeError("companion table index out of range");
  return cells_[i * n_ + j];
}

void CompanionTable::set(std::size_t i, std::size_t j, CompanionSet cell) {
  if (i >= n_ || j >= n_) throw ShapeError("companion table index out of range");
  cells_[i * n_ + j] = cell;
  cells_[j * n_ + i] = std::move(cell);
}

bool CompanionTable::all_singletons() const {
  return std::all_of(cells_.begin(), cells_.end(),
                     [](const CompanionSet& c) { return c.is_singleton(); });
}

CompanionTable companion_table(const QuadraticForm& q) {
  const std::size_t n = q.dimension();
  CompanionTable t(q.semifield(), n);
  for (std::size_t i = 0; i < n; ++i) {
    const Element& a = q.diag(i);
    t.set(i, i, a.is_zero() ? CompanionSet::singleton(Element::zero())
                            : CompanionSet::nu_leq(a.exponent() * 2));
    for (std::size_t j = i + 1; j < n; ++j) {
      t.set(i, j, companion_set_pair(q.semifield(), q.diag(i), q.diag(j), q.upper(i, j)));
    }
  }
  return t;
}

SymmetricBilinearForm build_companion(const CompanionTable& table,
                                      const GeneralMatrix& choice) {
  const std::size_t n = table.dimension();
  if (choice.rows() != n || choice.cols() != n) {
    throw ShapeError("choice matrix does not match the table dimension");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      if (!contains(table.at(i, j), choice(i, j))) {
        throw PreconditionError(
            "companion table",
            "choice " + table.semifield().format(choice(i, j)) + " at (" +
                std::to_string(i + 1) + "," + std::to_string(j + 1) +
                ") lies outside " + describe(table.at(i, j), table.semifield()));
      }
    }
  }
  return SymmetricBilinearForm(table.semifield(), choice);
}

bool is_companion(const QuadraticForm& q, const SymmetricBilinearForm& b) {
  if (!(q.semifield() == b.semifield())) {
    throw ShapeError("form and bilinear form belong to different semifields");
  }
  if (q.dimension() != b.dimension()) throw ShapeError("is_companion: dimension mismatch");
  const CompanionTable t = companion_table(q);
  for (std::size_t i = 0; i < q.dimension(); ++i)
    for (std::size_t j = i; j < q.dimension(); ++j)
      if (!contains(t.at(i, j), b(i, j))) return false;
  return true;
}

bool is_rigid(const QuadraticForm& q) { return q.has_zero_diagonal(); }

bool is_rigid_at_pair(const Semifield& semifield, const Element& alpha1,
                      const Element& alpha2, const Element& alpha) {
  validate_all(semifield, {&alpha1, &alpha2, &alpha});
  if (alpha1.is_zero() || alpha2.is_zero()) return true;
  if (alpha.is_zero()) return false;
  const Rational sum = alpha1.exponent() + alpha2.exponent();
  const Rational twice = alpha.exponent() * 2;
  return semifield.is_dense() ? sum < twice : sum < twice - 1;
}

bool is_quasilinear(const QuadraticForm& q) {
  const CompanionTable t = companion_table(q);
  for (std::size_t i = 0; i < q.dimension(); ++i)
    for (std::size_t j = i + 1; j < q.dimension(); ++j)
      if (!contains(t.at(i, j), Element::zero())) return false;
  return true;
}

bool is_quasilinear_pair(const Semifield& semifield, const Element& alpha1,
                         const Element& alpha2, const Element& alpha) {
  validate_all(semifield, {&alpha1, &alpha2, &alpha});
  const Element product = alpha1 * alpha2;
  const Element square = alpha.square();
  if (!nu_compare(square, product).greater()) return true;
  if (product.is_zero()) return false;
  return semifield.is_discrete() && alpha1.is_ghost() && alpha2.is_ghost() &&
         nu_compare(square, semifield.prime().inverse() * product).equal();
}

bool functionally_equal(const QuadraticForm& q1, const QuadraticForm& q2) {
  if (!(q1.semifield() == q2.semifield())) {
    throw ShapeError("forms belong to different semifields");
  }
  if (q1.dimension() != q2.dimension()) {
    throw ShapeError("functionally_equal: dimension mismatch");
  }
  const std::size_t n = q1.dimension();
  for (std::size_t i = 0; i < n; ++i)
    if (!(q1.diag(i) == q2.diag(i))) return false;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const CompanionSet cell =
          companion_set_pair(q1.semifield(), q1.diag(i), q1.diag(j), q1.upper(i, j));
      if (!contains(cell, q2.upper(i, j))) return false;
    }
  }
  return true;
}

}  // namespace stqf
