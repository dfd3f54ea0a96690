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

#include "stqf/stropicalize.hpp"

#include <gmp.h>

#include <algorithm>
#include <random>
#include <string>

#include "stqf/errors.hpp"

namespace stqf {

SupervaluationSpec::SupervaluationSpec(std::optional<unsigned long> p, Mode m)
    : prime(p), mode(m) {
  if (prime && (*prime < 2 || mpz_probab_prime_p(Integer(*prime).get_mpz_t(), 25) == 0)) {
    throw PreconditionError("p-adic valuation",
                            std::to_string(*prime) + " is not a prime number");
  }
}

Semifield SupervaluationSpec::target_semifield() const {
  return Semifield(GroupKind::Discrete, mode == Mode::Signed ? 1 : 0);
}

SupervaluationSpec::Mode SupervaluationSpec::mode_from_name(std::string_view name) {
  if (name == "tangible") return Mode::Tangible;
  if (name == "ghost") return Mode::Ghost;
  if (name == "signed") return Mode::Signed;
  throw ParseError("mode", "unknown supervaluation mode '" + std::string(name) + "'");
}

std::string_view SupervaluationSpec::mode_name(Mode mode) {
  switch (mode) {
    case Mode::Tangible:
      return "tangible";
    case Mode::Ghost:
      return "ghost";
    case Mode::Signed:
      return "signed";
  }
  return "?";
}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix::RationalMatrix(const std::vector<std::vector<Rational>>& rows)
    : RationalMatrix(rows.size(), rows.empty() ? 0 : rows.front().size()) {
  for (std::size_t i = 0; i < rows_; ++i) {
    if (rows[i].size() != cols_) throw ShapeError("ragged rational matrix");
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = rows[i][j];
  }
}

bool RationalMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

RationalQuadraticForm::RationalQuadraticForm(std::size_t n) : n_(n), upper_(n, n) {
  if (n > kMaxDimension) throw ShapeError("dimension exceeds " + std::to_string(kMaxDimension));
}

const Rational& RationalQuadraticForm::coeff(std::size_t i, std::size_t j) const {
  if (i > j || j >= n_) throw ShapeError("rational form index out of range");
  return upper_(i, j);
}

void RationalQuadraticForm::set_coeff(std::size_t i, std::size_t j, Rational value) {
  if (i > j || j >= n_) throw ShapeError("rational form index out of range");
  upper_(i, j) = std::move(value);
}

Rational RationalQuadraticForm::eval(const std::vector<Rational>& x) const {
  if (x.size() != n_) throw ShapeError("vector length does not match the form");
  Rational sum = 0;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i; j < n_; ++j) sum += upper_(i, j) * x[i] * x[j];
  return sum;
}

long valuation(const SupervaluationSpec& spec, const Rational& a) {
  if (a == 0) throw PreconditionError("p-adic valuation", "valuation of zero");
  if (!spec.prime) return 0;
  const long num = static_cast<long>(multiplicity(a.get_num(), *spec.prime));
  const long den = static_cast<long>(multiplicity(a.get_den(), *spec.prime));
  return num - den;
}

Element apply_supervaluation(const SupervaluationSpec& spec, const Rational& a) {
  if (a == 0) return Element::zero();
  const Rational exponent(-valuation(spec, a));
  switch (spec.mode) {
    case SupervaluationSpec::Mode::Tangible:
      return Element::tangible(exponent);
    case SupervaluationSpec::Mode::Ghost:
      return Element::ghost(exponent);
    case SupervaluationSpec::Mode::Signed:
      return Element::tangible(exponent, a < 0 ? 1 : 0);
  }
  return Element::zero();
}

QuadraticForm stropicalize_form(const SupervaluationSpec& spec,
                                const RationalQuadraticForm& q) {
  QuadraticForm out(spec.target_semifield(), q.dimension());
  for (std::size_t i = 0; i < q.dimension(); ++i) {
    out.set_diag(i, apply_supervaluation(spec, q.coeff(i, i)));
    for (std::size_t j = i + 1; j < q.dimension(); ++j)
      out.set_upper(i, j, apply_supervaluation(spec, q.coeff(i, j)));
  }
  return out;
}

GeneralMatrix stropicalize_matrix(const SupervaluationSpec& spec, const RationalMatrix& m) {
  GeneralMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out(i, j) = apply_supervaluation(spec, m(i, j));
  return out;
}

SymmetricBilinearForm stropicalize_bilinear(const SupervaluationSpec& spec,
                                            const RationalMatrix& gram) {
  if (!gram.is_symmetric()) throw ShapeError("Gram matrix must be square and symmetric");
  return SymmetricBilinearForm(spec.target_semifield(), stropicalize_matrix(spec, gram));
}

RationalMatrix nabla(const RationalQuadraticForm& q) {
  RationalMatrix m(q.dimension(), q.dimension());
  for (std::size_t i = 0; i < q.dimension(); ++i)
    for (std::size_t j = i; j < q.dimension(); ++j) m(i, j) = q.coeff(i, j);
  return m;
}

RationalMatrix ring_companion(const RationalQuadraticForm& q) {
  RationalMatrix m(q.dimension(), q.dimension());
  for (std::size_t i = 0; i < q.dimension(); ++i) {
    m(i, i) = 2 * q.coeff(i, i);
    for (std::size_t j = i + 1; j < q.dimension(); ++j) {
      m(i, j) = q.coeff(i, j);
      m(j, i) = q.coeff(i, j);
    }
  }
  return m;
}

SymmetricBilinearForm balanced_companion_of_strop(const SupervaluationSpec& spec,
                                                  const RationalQuadraticForm& q) {
  const GeneralMatrix b = stropicalize_matrix(spec, nabla(q));
  const std::size_t n = q.dimension();
  SymmetricBilinearForm out(spec.target_semifield(), n);
  for (std::size_t i = 0; i < n; ++i) {
    // b(i, i) + b(i, i) = e·φ(a_{i,i}).
    out.set(i, i, b(i, i) + b(i, i));
    for (std::size_t j = i + 1; j < n; ++j) out.set(i, j, b(i, j) + b(j, i));
  }
  return out;
}

namespace {

Rational random_rational(std::mt19937_64& rng, bool nonzero) {
  std::uniform_int_distribution<long> num(-50, 50);
  std::uniform_int_distribution<long> den(1, 50);
  for (;;) {
    Rational r(num(rng), den(rng));
    r.canonicalize();
    if (!nonzero || r != 0) return r;
  }
}

}  // namespace

AxisReport axis_compatibility_check(const SupervaluationSpec& spec,
                                    const RationalQuadraticForm& q, std::size_t samples,
                                    std::uint64_t seed) {
  AxisReport report;
  const std::size_t n = q.dimension();
  if (n == 0) return report;
  const QuadraticForm qphi = stropicalize_form(spec, q);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> index(0, n - 1);
  auto compare = [&](const std::vector<Rational>& x) {
    Vector image = Vector::zeros(n);
    for (std::size_t k = 0; k < n; ++k) image[k] = apply_supervaluation(spec, x[k]);
    return eval_quadratic(qphi, image) == apply_supervaluation(spec, q.eval(x));
  };
  for (std::size_t s = 0; s < samples; ++s) {
    std::vector<Rational> x(n);
    x[index(rng)] = random_rational(rng, true);
    ++report.axis_checked;
    if (!compare(x)) ++report.axis_failures;
  }
  for (std::size_t s = 0; s < samples; ++s) {
    std::vector<Rational> x(n);
    for (auto& c : x) c = random_rational(rng, false);
    ++report.off_axis_checked;
    if (!compare(x)) ++report.off_axis_mismatches;
  }
  return report;
}

std::vector<SquareClassTag> square_class_sequence(const QuadraticForm& q) {
  std::vector<SquareClassTag> out;
  for (std::size_t i = 0; i < q.dimension(); ++i) {
    const Element& a = q.diag(i);
    out.push_back(a.is_zero() ? SquareClassTag{} : q.semifield().square_class(a));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SquareClassTag> square_class_sequence(const SupervaluationSpec& spec,
                                                  const RationalQuadraticForm& q) {
  return square_class_sequence(stropicalize_form(spec, q));
}

}  // namespace stqf
