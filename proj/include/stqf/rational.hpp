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

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace stqf {

// Exact arbitrary-precision rational; always kept in canonical form.
using Rational = mpq_class;
using Integer = mpz_class;

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);

Integer floor(const Rational& r);
Integer ceil(const Rational& r);
bool is_integer(const Rational& r);

// True iff the reduced denominator of r is a power of `base` (including 1).
bool denominator_is_power_of(const Rational& r, unsigned long base);

// Exponent of the prime p in the nonzero integer n.
unsigned long multiplicity(const Integer& n, unsigned long p);

}  // namespace stqf
