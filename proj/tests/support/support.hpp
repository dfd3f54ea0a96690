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

#ifndef STQF_TESTS_SUPPORT_HPP_
#define STQF_TESTS_SUPPORT_HPP_

// Random generators and brute-force oracles shared by the unit and acceptance
// tests. Everything here is deliberately naive.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "stqf/companions.hpp"
#include "stqf/forms.hpp"
#include "stqf/linalg.hpp"
#include "stqf/semiring.hpp"
#include "stqf/stropicalize.hpp"

namespace stqf::testing {

using Rng = std::mt19937_64;

inline const GroupKind kAllKinds[] = {GroupKind::Discrete, GroupKind::DenseDivisible,
                                      GroupKind::DenseNonHalvable};

bool coin(Rng& rng, double p);
int uniform_int(Rng& rng, int lo, int hi);

// Exponent of Γ in [lo, hi]; non-integers are drawn for dense groups with
// probability `fraction`.
Rational random_exponent(Rng& rng, const ExponentGroup& g, int lo, int hi,
                         double fraction = 0.4);

struct ElementMix {
  double zero = 0.1;
  double ghost = 0.3;
  int lo = -8;
  int hi = 8;
};

Element random_element(Rng& rng, const Semifield& sf, const ElementMix& mix = {});
Element random_tangible(Rng& rng, const Semifield& sf, int lo, int hi);

struct Triple {
  Element alpha1, alpha2, alpha;
};

// Rank-2 coefficients with α pushed towards the critical exponent
// (exp α1 + exp α2)/2 about half the time, so every branch of the cell
// computation is exercised.
Triple random_triple(Rng& rng, const Semifield& sf);

QuadraticForm random_form(Rng& rng, const Semifield& sf, std::size_t n,
                          const ElementMix& mix = {});
Vector random_vector(Rng& rng, const Semifield& sf, std::size_t n,
                     const ElementMix& mix = {0.2, 0.2, -6, 6});

// Vectors that concentrate on the exponent ratios where the terms of q1 or q2
// tie: half the time supported on a random pair (i, j) with x_i/x_j at a tie
// point or between two of them, otherwise random_vector.
Vector probing_vector(Rng& rng, const QuadraticForm& q1, const QuadraticForm& q2);

// Members of a cell: min, max when attained, and boundary probes that the set
// contains.
std::vector<Element> sample_members(const Semifield& sf, const CompanionSet& set);
// A random companion of q, via a random member of every cell.
SymmetricBilinearForm random_companion(Rng& rng, const QuadraticForm& q);
// A random element of Rig(q).
QuadraticForm random_rigid_complement(Rng& rng, const QuadraticForm& q);

// x ≤ y in the minimal ordering, by searching a witness z with x + z = y
// among `candidates`, x and y.
bool leq_by_witness(const Element& x, const Element& y, const std::vector<Element>& candidates);

// b is a companion of q on `samples` random vector pairs: q(x+y) = q(x)+q(y)+b(x,y).
bool satisfies_companion_identity(Rng& rng, const QuadraticForm& q,
                                  const SymmetricBilinearForm& b, std::size_t samples);

// Exhaustive search of a two-sided inverse among matrices X with
// X_{τ(i), i} = M_{i, τ(i)}⁻¹ for some permutation τ.
std::optional<GeneralMatrix> brute_force_inverse(const GeneralMatrix& m);

GeneralMatrix random_monomial(Rng& rng, const Semifield& sf, std::size_t n);
// Square matrices that are not monomial with tangible entries.
GeneralMatrix random_singular(Rng& rng, const Semifield& sf, std::size_t n);

Rational random_rational(Rng& rng, bool nonzero);
RationalQuadraticForm random_rational_form(Rng& rng, std::size_t n);

}  // namespace stqf::testing

#endif  // STQF_TESTS_SUPPORT_HPP_
