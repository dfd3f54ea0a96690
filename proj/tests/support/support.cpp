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

#include "support.hpp"

#include <algorithm>
#include <numeric>

namespace stqf::testing {

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

int uniform_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

Rational random_exponent(Rng& rng, const ExponentGroup& g, int lo, int hi, double fraction) {
  if (g.is_discrete() || !coin(rng, fraction)) return Rational(uniform_int(rng, lo, hi));
  static const int kRat[] = {2, 3, 4, 6};
  static const int kRat3[] = {3, 9};
  const int den = g.kind() == GroupKind::DenseDivisible ? kRat[uniform_int(rng, 0, 3)]
                                                        : kRat3[uniform_int(rng, 0, 1)];
  Rational r(uniform_int(rng, lo * den, hi * den), den);
  r.canonicalize();
  return r;
}

namespace {

Fiber random_fiber(Rng& rng, const Semifield& sf) {
  if (sf.fiber_rank() == 0) return 0;
  return std::uniform_int_distribution<Fiber>(0, sf.fiber_mask())(rng);
}

}  // namespace

Element random_tangible(Rng& rng, const Semifield& sf, int lo, int hi) {
  return Element::tangible(random_exponent(rng, sf.group(), lo, hi), random_fiber(rng, sf));
}

Element random_element(Rng& rng, const Semifield& sf, const ElementMix& mix) {
  if (coin(rng, mix.zero)) return Element::zero();
  if (coin(rng, mix.ghost)) return Element::ghost(random_exponent(rng, sf.group(), mix.lo, mix.hi));
  return random_tangible(rng, sf, mix.lo, mix.hi);
}

Triple random_triple(Rng& rng, const Semifield& sf) {
  const ElementMix side{0.06, 0.45, -8, 8};
  Triple t{random_element(rng, sf, side), random_element(rng, sf, side), Element::zero()};
  if (!t.alpha1.is_zero() && !t.alpha2.is_zero() && coin(rng, 0.55)) {
    const Rational mid = (t.alpha1.exponent() + t.alpha2.exponent()) / 2;
    std::vector<Rational> near;
    for (const Rational& d : {Rational(-1), Rational(-1, 2), Rational(-1, 3), Rational(0),
                              Rational(1, 3), Rational(1, 2), Rational(1)}) {
      const Rational x = mid + d;
      if (sf.group().contains(x) && x >= -8 && x <= 8) near.push_back(x);
    }
    if (!near.empty()) {
      const Rational& x = near[uniform_int(rng, 0, static_cast<int>(near.size()) - 1)];
      t.alpha = coin(rng, 0.4) ? Element::ghost(x) : Element::tangible(x, random_fiber(rng, sf));
      return t;
    }
  }
  t.alpha = random_element(rng, sf, {0.1, 0.35, -8, 8});
  return t;
}

QuadraticForm random_form(Rng& rng, const Semifield& sf, std::size_t n, const ElementMix& mix) {
  QuadraticForm q(sf, n);
  for (std::size_t i = 0; i < n; ++i) {
    q.set_diag(i, random_element(rng, sf, mix));
    for (std::size_t j = i + 1; j < n; ++j) q.set_upper(i, j, random_element(rng, sf, mix));
  }
  return q;
}

Vector random_vector(Rng& rng, const Semifield& sf, std::size_t n, const ElementMix& mix) {
  Vector x = Vector::zeros(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = random_element(rng, sf, mix);
  return x;
}

Vector probing_vector(Rng& rng, const QuadraticForm& q1, const QuadraticForm& q2) {
  const Semifield& sf = q1.semifield();
  const ExponentGroup& g = sf.group();
  const std::size_t n = q1.dimension();
  if (n < 2 || coin(rng, 0.4)) return random_vector(rng, sf, n);
  std::size_t i = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(n) - 1));
  std::size_t j = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(n) - 2));
  if (j >= i) ++j;
  if (i > j) std::swap(i, j);
  // With x_i = λ·x_j the terms have exponents 2ℓ + a_i, a_j and ℓ + b.
  std::vector<Rational> ties;
  for (const QuadraticForm* q : {&q1, &q2}) {
    const Element& ai = q->diag(i);
    const Element& aj = q->diag(j);
    const Element& b = q->upper(i, j);
    if (!ai.is_zero() && !aj.is_zero()) ties.push_back((aj.exponent() - ai.exponent()) / 2);
    if (!b.is_zero() && !ai.is_zero()) ties.push_back(b.exponent() - ai.exponent());
    if (!b.is_zero() && !aj.is_zero()) ties.push_back(aj.exponent() - b.exponent());
  }
  std::sort(ties.begin(), ties.end());
  ties.erase(std::unique(ties.begin(), ties.end()), ties.end());
  std::vector<Rational> candidates;
  for (std::size_t k = 0; k < ties.size(); ++k) {
    if (g.contains(ties[k])) candidates.push_back(ties[k]);
    if (k + 1 < ties.size()) {
      if (g.is_discrete()) {
        for (Integer m = floor(ties[k]); m <= ceil(ties[k + 1]); ++m) candidates.emplace_back(m);
      } else {
        candidates.push_back(g.between(ties[k], ties[k + 1]));
      }
    }
  }
  if (!ties.empty()) {
    candidates.emplace_back(floor(ties.front()) - 1);
    candidates.emplace_back(ceil(ties.back()) + 1);
  }
  const Rational l = candidates.empty()
                         ? random_exponent(rng, g, -4, 4)
                         : candidates[uniform_int(rng, 0, static_cast<int>(candidates.size()) - 1)];
  const Rational c = random_exponent(rng, g, -3, 3);
  Vector x = Vector::zeros(n);
  x[j] = Element::tangible(c, random_fiber(rng, sf));
  x[i] = Element::tangible(c + l, random_fiber(rng, sf));
  return x;
}

std::vector<Element> sample_members(const Semifield& sf, const CompanionSet& set) {
  std::vector<Element> out{set_min(set)};
  if (auto top = set_max(set, sf.group())) out.push_back(*top);
  for (const Element& x : membership_probes(sf, set))
    if (contains(set, x)) out.push_back(x);
  return out;
}

SymmetricBilinearForm random_companion(Rng& rng, const QuadraticForm& q) {
  const CompanionTable t = companion_table(q);
  const std::size_t n = q.dimension();
  GeneralMatrix choice(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const std::vector<Element> m = sample_members(q.semifield(), t.at(i, j));
      choice(i, j) = m[uniform_int(rng, 0, static_cast<int>(m.size()) - 1)];
      choice(j, i) = choice(i, j);
    }
  }
  return build_companion(t, choice);
}

QuadraticForm random_rigid_complement(Rng& rng, const QuadraticForm& q) {
  const std::size_t n = q.dimension();
  QuadraticForm rho(q.semifield(), n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const CompanionSet cell =
          companion_set_pair(q.semifield(), q.diag(i), q.diag(j), q.upper(i, j));
      const std::vector<Element> m = sample_members(q.semifield(), cell);
      rho.set_upper(i, j, m[uniform_int(rng, 0, static_cast<int>(m.size()) - 1)]);
    }
  }
  return rho;
}

bool leq_by_witness(const Element& x, const Element& y, const std::vector<Element>& candidates) {
  if (x + Element::zero() == y || x + x == y || x + y == y) return true;
  return std::any_of(candidates.begin(), candidates.end(),
                     [&](const Element& z) { return x + z == y; });
}

bool satisfies_companion_identity(Rng& rng, const QuadraticForm& q,
                                  const SymmetricBilinearForm& b, std::size_t samples) {
  for (std::size_t s = 0; s < samples; ++s) {
    const Vector x = random_vector(rng, q.semifield(), q.dimension());
    const Vector y = random_vector(rng, q.semifield(), q.dimension());
    if (!(eval_quadratic(q, x + y) ==
          eval_quadratic(q, x) + eval_quadratic(q, y) + eval_bilinear(b, x, y)))
      return false;
  }
  return true;
}

std::optional<GeneralMatrix> brute_force_inverse(const GeneralMatrix& m) {
  const std::size_t n = m.rows();
  const GeneralMatrix id = GeneralMatrix::identity(n);
  std::vector<std::size_t> tau(n);
  std::iota(tau.begin(), tau.end(), 0);
  do {
    GeneralMatrix x(n, n);
    bool usable = true;
    for (std::size_t i = 0; i < n && usable; ++i) {
      const Element& a = m(i, tau[i]);
      if (!a.is_tangible()) {
        usable = false;
      } else {
        x(tau[i], i) = a.inverse();
      }
    }
    if (usable && mat_mul(m, x) == id && mat_mul(x, m) == id) return x;
  } while (std::next_permutation(tau.begin(), tau.end()));
  return std::nullopt;
}

GeneralMatrix random_monomial(Rng& rng, const Semifield& sf, std::size_t n) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  GeneralMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, perm[i]) = random_tangible(rng, sf, -5, 5);
  return m;
}

namespace {

bool tangible_monomial_pattern(const GeneralMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<int> col(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    int row = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (m(i, j).is_zero()) continue;
      if (m(i, j).is_ghost()) return false;
      ++row;
      ++col[j];
    }
    if (row != 1) return false;
  }
  return std::all_of(col.begin(), col.end(), [](int c) { return c == 1; });
}

}  // namespace

GeneralMatrix random_singular(Rng& rng, const Semifield& sf, std::size_t n) {
  for (;;) {
    GeneralMatrix m = random_monomial(rng, sf, n);
    const std::size_t i = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(n) - 1));
    const std::size_t j = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(n) - 1));
    switch (uniform_int(rng, 0, 3)) {
      case 0:  // one ghost entry
        for (std::size_t c = 0; c < n; ++c)
          if (!m(i, c).is_zero()) m(i, c) = m(i, c).nu();
        break;
      case 1:  // an extra entry
        m(i, j) = random_element(rng, sf, {0.0, 0.3, -5, 5});
        break;
      case 2:  // dense random
        for (std::size_t r = 0; r < n; ++r)
          for (std::size_t c = 0; c < n; ++c) m(r, c) = random_element(rng, sf, {0.5, 0.2, -5, 5});
        break;
      default:  // an empty row
        for (std::size_t c = 0; c < n; ++c) m(i, c) = Element::zero();
        break;
    }
    if (!tangible_monomial_pattern(m)) return m;
  }
}

Rational random_rational(Rng& rng, bool nonzero) {
  for (;;) {
    const int num = uniform_int(rng, -50, 50);
    int den = uniform_int(rng, -50, 50);
    if (den == 0 || (nonzero && num == 0)) continue;
    Rational r(num, den);
    r.canonicalize();
    return r;
  }
}

RationalQuadraticForm random_rational_form(Rng& rng, std::size_t n) {
  RationalQuadraticForm q(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      q.set_coeff(i, j, coin(rng, 0.15) ? Rational(0) : random_rational(rng, true));
  return q;
}

}  // namespace stqf::testing
