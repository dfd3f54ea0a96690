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

#ifndef STQF_IO_HPP_
#define STQF_IO_HPP_

// JSON encodings of the domain objects. Elements are strings in the text
// encoding of Semifield::format; rationals are strings "p/q" or integers.
// Indices in "i,j" keys are 1-based. Decoding errors are ParseErrors whose
// where() is a JSON pointer into the document.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "stqf/companions.hpp"
#include "stqf/forms.hpp"
#include "stqf/linalg.hpp"
#include "stqf/semiring.hpp"
#include "stqf/stropicalize.hpp"

namespace stqf::io {

using Json = nlohmann::json;

// Parses JSON text; syntax errors become ParseErrors at a byte offset.
Json parse_document(std::string_view text);

Json to_json(const Semifield& sf);
Semifield semifield_from_json(const Json& j, const std::string& ptr = "");

// Semifield from the document's "semifield" member, or `fallback` if given
// (the fallback wins when both are present).
Semifield document_semifield(const Json& doc, const std::optional<Semifield>& fallback);

Element element_from_json(const Json& j, const Semifield& sf, const std::string& ptr);
Rational rational_from_json(const Json& j, const std::string& ptr);
Json to_json(const Rational& r);

// {"semifield", "n", "diag": [..], "upper": {"i,j": elem}}.
Json to_json(const QuadraticForm& q);
QuadraticForm form_from_json(const Json& doc, const std::optional<Semifield>& sf = {});

// {"semifield", "coords": [..]}, or the comma-separated text "t:1,t:0".
Json to_json(const Semifield& sf, const Vector& x);
Vector vector_from_json(const Json& doc, const Semifield& sf);
Vector parse_vector_text(std::string_view text, const Semifield& sf);

// {"semifield", "gram": [[..]..]}.
Json to_json(const SymmetricBilinearForm& b);
SymmetricBilinearForm bilinear_from_json(const Json& doc,
                                         const std::optional<Semifield>& sf = {});

// {"semifield", "rows": [[..]..]}.
Json to_json(const Semifield& sf, const GeneralMatrix& m);
GeneralMatrix matrix_from_json(const Json& doc, const Semifield& sf,
                               const std::string& ptr = "");
Json to_json(const Semifield& sf, const MonomialMatrix& m);

// {"kind", "value" | "bound2" | "exp", "display"}.
Json to_json(const CompanionSet& set, const Semifield& sf);
CompanionSet companion_set_from_json(const Json& j, const Semifield& sf,
                                     const std::string& ptr);

// {"semifield", "n", "cells": [[set..]..]}.
Json to_json(const CompanionTable& t);
CompanionTable table_from_json(const Json& doc, const std::optional<Semifield>& sf = {});

Json to_json(const SquareClassTag& c, const Semifield& sf);

// {"n", "coeffs": {"i,j": rat}} with i ≤ j.
Json to_json(const RationalQuadraticForm& q);
RationalQuadraticForm rational_form_from_json(const Json& doc);

}  // namespace stqf::io

#endif  // STQF_IO_HPP_
