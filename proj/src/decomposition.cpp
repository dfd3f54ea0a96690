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

#include "stqf/decomposition.hpp"

#include "stqf/errors.hpp"

namespace stqf {

namespace {

void require_rigid(const QuadraticForm& rho, const char* what) {
  if (!rho.has_zero_diagonal()) {
    throw PreconditionError("rigidity criterion",
                            std::string(what) + ": form has a nonzero diagonal entry");
  }
}

}  // namespace

QuadraticForm quasilinear_part(const QuadraticForm& q) {
  QuadraticForm out(q.semifield(), q.dimension());
  for (std::size_t i = 0; i < q.dimension(); ++i) out.set_diag(i, q.diag(i));
  return out;
}

QuadraticForm rigid_complement(const QuadraticForm& q, const SymmetricBilinearForm& b) {
  if (!is_companion(q, b)) {
    throw PreconditionError("companion condition",
                            "rigid_complement: b is not a companion of q");
  }
  QuadraticForm out(q.semifield(), q.dimension());
  for (std::size_t i = 0; i < q.dimension(); ++i)
    for (std::size_t j = i + 1; j < q.dimension(); ++j) out.set_upper(i, j, b(i, j));
  return out;
}

SymmetricBilinearForm off_diagonal_companion(const QuadraticForm& rho) {
  require_rigid(rho, "off_diagonal_companion");
  const std::size_t n = rho.dimension();
  SymmetricBilinearForm b(rho.semifield(), n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector x = Vector::unit(n, i);
      x[j] = Element::one();
      b.set(i, j, eval_quadratic(rho, x));
    }
  }
  return b;
}

RigExtrema rig_extrema(const QuadraticForm& q) {
  const CompanionTable table = companion_table(q);
  const std::size_t n = q.dimension();
  const ExponentGroup& g = q.semifield().group();
  RigExtrema r{QuadraticForm(q.semifield(), n), QuadraticForm(q.semifield(), n),
               std::nullopt};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const CompanionSet& cell = table.at(i, j);
      r.min.set_upper(i, j, set_min(cell));
      if (!r.max) continue;
      if (std::optional<Element> top = set_max(cell, g)) {
        r.max->set_upper(i, j, *top);
      } else {
        r.max.reset();
        r.witness = std::make_pair(i, j);
      }
    }
  }
  return r;
}

bool rig_contains(const QuadraticForm& q, const QuadraticForm& rho) {
  require_rigid(rho, "rig_contains");
  if (q.dimension() != rho.dimension()) throw ShapeError("rig_contains: dimension mismatch");
  for (std::size_t i = 0; i < q.dimension(); ++i) {
    for (std::size_t j = i + 1; j < q.dimension(); ++j) {
      const CompanionSet cell =
          companion_set_pair(q.semifield(), q.diag(i), q.diag(j), q.upper(i, j));
      if (!contains(cell, rho.upper(i, j))) return false;
    }
  }
  return true;
}

Decomposition decompose(const QuadraticForm& q, const SymmetricBilinearForm& b) {
  QuadraticForm rho = rigid_complement(q, b);
  SymmetricBilinearForm c = off_diagonal_companion(rho);
  return {quasilinear_part(q), std::move(rho), std::move(c)};
}

}  // namespace stqf
