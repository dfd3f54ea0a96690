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

#ifndef STQF_DECOMPOSITION_HPP_
#define STQF_DECOMPOSITION_HPP_

// Quasilinear-rigid decompositions q = q_QL + ρ. The set Rig(q) of rigid
// complements is infinite in general; it is described by the off-diagonal
// cells of the companion table and never enumerated.

#include <cstddef>
#include <optional>
#include <utility>

#include "stqf/companions.hpp"
#include "stqf/forms.hpp"

namespace stqf {

struct Decomposition {
  QuadraticForm ql;
  QuadraticForm rigid;
  SymmetricBilinearForm companion;  // zero diagonal, induces `rigid`
};

// q_QL(x) = Σ q(ε_i) x_i².
QuadraticForm quasilinear_part(const QuadraticForm& q);

// ρ(x) = Σ_{i<j} b(ε_i, ε_j) x_i x_j. Throws PreconditionError unless b is a
// companion of q.
QuadraticForm rigid_complement(const QuadraticForm& q, const SymmetricBilinearForm& b);

// The unique companion of a rigid form: zero diagonal, entries ρ(ε_i + ε_j).
SymmetricBilinearForm off_diagonal_companion(const QuadraticForm& rho);

struct RigExtrema {
  QuadraticForm min;
  std::optional<QuadraticForm> max;
  // First off-diagonal cell without a maximum (0-based), when max is absent.
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};

RigExtrema rig_extrema(const QuadraticForm& q);

// ρ ∈ Rig(q). Throws PreconditionError if ρ has a nonzero diagonal.
bool rig_contains(const QuadraticForm& q, const QuadraticForm& rho);

Decomposition decompose(const QuadraticForm& q, const SymmetricBilinearForm& b);

}  // namespace stqf

#endif  // STQF_DECOMPOSITION_HPP_
