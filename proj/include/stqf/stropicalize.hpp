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

#ifndef STQF_STROPICALIZE_HPP_
#define STQF_STROPICALIZE_HPP_

// Supertropicalization of quadratic forms over Q. A prime p gives
// φ(a) = (exponent −v_p(a)) in one of three flavours; larger ν-values
// correspond to smaller p-adic valuations, so ν∘φ behaves like the
// max-plus image of a Krull valuation.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "stqf/forms.hpp"
#include "stqf/linalg.hpp"
#include "stqf/rational.hpp"
#include "stqf/semiring.hpp"

namespace stqf {

struct SupervaluationSpec {
  enum class Mode { Tangible, Ghost, Signed };

  // nullopt is the trivial valuation: every nonzero a has exponent 0.
  std::optional<unsigned long> prime;
  Mode mode = Mode::Tangible;

  // Throws PreconditionError when `prime` is not a prime number.
  SupervaluationSpec(std::optional<unsigned long> prime, Mode mode);

  // Γ = Z, fiber rank 1 in signed mode and 0 otherwise.
  Semifield target_semifield() const;

  static Mode mode_from_name(std::string_view name);
  static std::string_view mode_name(Mode mode);
};

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  explicit RationalMatrix(const std::vector<std::vector<Rational>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  bool is_symmetric() const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

// q(x) = Σ_{i≤j} a_{i,j} x_i x_j over Q.
class RationalQuadraticForm {
 public:
  RationalQuadraticForm() = default;
  explicit RationalQuadraticForm(std::size_t n);

  std::size_t dimension() const { return n_; }
  // i ≤ j.
  const Rational& coeff(std::size_t i, std::size_t j) const;
  void set_coeff(std::size_t i, std::size_t j, Rational value);
  Rational eval(const std::vector<Rational>& x) const;

  friend bool operator==(const RationalQuadraticForm&,
                         const RationalQuadraticForm&) = default;

 private:
  std::size_t n_ = 0;
  RationalMatrix upper_;
};

// p-adic valuation of a nonzero rational (0 for the trivial valuation).
long valuation(const SupervaluationSpec& spec, const Rational& a);

Element apply_supervaluation(const SupervaluationSpec& spec, const Rational& a);

QuadraticForm stropicalize_form(const SupervaluationSpec& spec,
                                const RationalQuadraticForm& q);
GeneralMatrix stropicalize_matrix(const SupervaluationSpec& spec, const RationalMatrix& m);
// Throws ShapeError on a non-square or non-symmetric input.
SymmetricBilinearForm stropicalize_bilinear(const SupervaluationSpec& spec,
                                            const RationalMatrix& gram);

// Upper-triangular coefficient matrix of q.
RationalMatrix nabla(const RationalQuadraticForm& q);
// Symmetric ring companion: b(v_i, v_j) = a_{i,j}, b(v_i, v_i) = 2a_{i,i}.
RationalMatrix ring_companion(const RationalQuadraticForm& q);

// β = B^φ + (ᵗB)^φ with B = ∇q: off-diagonal φ(a_{i,j}), diagonal e·φ(a_{i,i}).
SymmetricBilinearForm balanced_companion_of_strop(const SupervaluationSpec& spec,
                                                  const RationalQuadraticForm& q);

struct AxisReport {
  std::size_t axis_checked = 0;
  std::size_t axis_failures = 0;
  std::size_t off_axis_checked = 0;
  // Informational: q^φ∘φ and φ∘q need not agree off the axes.
  std::size_t off_axis_mismatches = 0;
};

// Compares q^φ(φ(x)) with φ(q(x)) for `samples` random multiples c·v_i and
// `samples` random vectors, with numerators and denominators in [−50, 50].
AxisReport axis_compatibility_check(const SupervaluationSpec& spec,
                                    const RationalQuadraticForm& q, std::size_t samples,
                                    std::uint64_t seed);

// Sorted multiset of the square classes of the diagonal entries; zero entries
// give the zero class.
std::vector<SquareClassTag> square_class_sequence(const SupervaluationSpec& spec,
                                                  const RationalQuadraticForm& q);
std::vector<SquareClassTag> square_class_sequence(const QuadraticForm& q);

}  // namespace stqf

#endif  // STQF_STROPICALIZE_HPP_
