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

#include "stqf/rational.hpp"

#include <cctype>

#include "stqf/errors.hpp"

namespace stqf {

namespace {

// Accepts an optional sign followed by decimal digits. The Unicode minus
// sign U+2212 is treated as '-'.
std::string normalize_integer(std::string_view text, std::string_view whole) {
  std::string out;
  std::size_t i = 0;
  if (text.substr(0, 3) == "\xE2\x88\x92") {
    out.push_back('-');
    i = 3;
  } else if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
    if (text[0] == '-') out.push_back('-');
    i = 1;
  }
  if (i == text.size()) {
    throw ParseError("0", "malformed rational '" + std::string(whole) + "'");
  }
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw ParseError(std::to_string(i),
                       "malformed rational '" + std::string(whole) + "'");
    }
    out.push_back(text[i]);
  }
  return out;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string num = normalize_integer(text.substr(0, slash), text);
  Rational r;
  if (slash == std::string_view::npos) {
    r = Rational(Integer(num), Integer(1));
  } else {
    const std::string den = normalize_integer(text.substr(slash + 1), text);
    Integer d(den);
    if (d == 0) {
      throw ParseError(std::to_string(slash + 1),
                       "zero denominator in '" + std::string(text) + "'");
    }
    r = Rational(Integer(num), d);
  }
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

Integer floor(const Rational& r) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

Integer ceil(const Rational& r) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

bool denominator_is_power_of(const Rational& r, unsigned long base) {
  Integer d = r.get_den();
  while (d % base == 0) d /= base;
  return d == 1;
}

unsigned long multiplicity(const Integer& n, unsigned long p) {
  if (n == 0) return 0;
  Integer rest = abs(n);
  unsigned long k = 0;
  while (rest % p == 0) {
    rest /= p;
    ++k;
  }
  return k;
}

}  // namespace stqf
