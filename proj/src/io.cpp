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

#include "stqf/io.hpp"

#include <charconv>
#include <utility>

#include "stqf/errors.hpp"

namespace stqf::io {

namespace {

std::string child(const std::string& ptr, std::string_view key) {
  std::string out = ptr + "/";
  for (char c : key) {
    if (c == '~') {
      out += "~0";
    } else if (c == '/') {
      out += "~1";
    } else {
      out += c;
    }
  }
  return out;
}

std::string child(const std::string& ptr, std::size_t index) {
  return ptr + "/" + std::to_string(index);
}

[[noreturn]] void fail(const std::string& ptr, const std::string& what) {
  throw ParseError(ptr.empty() ? "/" : ptr, what);
}

const Json& member(const Json& obj, std::string_view key, const std::string& ptr) {
  if (!obj.is_object()) fail(ptr, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(ptr, "missing member '" + std::string(key) + "'");
  return *it;
}

const Json& array_at(const Json& j, const std::string& ptr) {
  if (!j.is_array()) fail(ptr, "expected an array");
  return j;
}

std::size_t size_from_json(const Json& j, const std::string& ptr) {
  if (!j.is_number_integer() || j.get<long long>() < 0) {
    fail(ptr, "expected a non-negative integer");
  }
  const auto n = j.get<unsigned long long>();
  if (n > kMaxDimension) fail(ptr, "dimension exceeds " + std::to_string(kMaxDimension));
  return static_cast<std::size_t>(n);
}

std::size_t parse_index(std::string_view s, const std::string& ptr) {
  std::size_t v = 0;
  const char* end = s.data() + s.size();
  auto [p, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || p != end || s.empty()) fail(ptr, "malformed index '" + std::string(s) + "'");
  return v;
}

// "i,j" → 0-based (i, j) with 1 ≤ i ≤ j ≤ n (strict when `strict`).
std::pair<std::size_t, std::size_t> parse_key(const std::string& key, std::size_t n,
                                              bool strict, const std::string& ptr) {
  const auto comma = key.find(',');
  if (comma == std::string::npos) fail(ptr, "key '" + key + "' is not of the form \"i,j\"");
  const std::size_t i = parse_index(std::string_view(key).substr(0, comma), ptr);
  const std::size_t j = parse_index(std::string_view(key).substr(comma + 1), ptr);
  if (i < 1 || j > n || (strict ? i >= j : i > j)) {
    fail(ptr, "key '" + key + "' out of range for n = " + std::to_string(n));
  }
  return {i - 1, j - 1};
}

std::string key(std::size_t i, std::size_t j) {
  return std::to_string(i + 1) + "," + std::to_string(j + 1);
}

Json element_row(const Semifield& sf, const GeneralMatrix& m, std::size_t i) {
  Json row = Json::array();
  for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(sf.format(m(i, j)));
  return row;
}

}  // namespace

Json parse_document(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError("byte " + std::to_string(e.byte), e.what());
  }
}

Json to_json(const Semifield& sf) {
  return Json{{"group", std::string(sf.group().name())}, {"fiber_rank", sf.fiber_rank()}};
}

Semifield semifield_from_json(const Json& j, const std::string& ptr) {
  const Json& group = member(j, "group", ptr);
  if (!group.is_string()) fail(child(ptr, "group"), "expected a string");
  unsigned rank = 0;
  if (auto it = j.find("fiber_rank"); it != j.end()) {
    if (!it->is_number_integer() || it->get<long long>() < 0 ||
        it->get<long long>() > static_cast<long long>(kMaxFiberRank)) {
      fail(child(ptr, "fiber_rank"),
           "expected an integer in [0, " + std::to_string(kMaxFiberRank) + "]");
    }
    rank = it->get<unsigned>();
  }
  ExponentGroup g;
  try {
    g = ExponentGroup::from_name(group.get<std::string>());
  } catch (const ParseError& e) {
    fail(child(ptr, "group"), e.what());
  }
  return Semifield(g, rank);
}

Semifield document_semifield(const Json& doc, const std::optional<Semifield>& fallback) {
  if (fallback) return *fallback;
  return semifield_from_json(member(doc, "semifield", ""), "/semifield");
}

Element element_from_json(const Json& j, const Semifield& sf, const std::string& ptr) {
  if (!j.is_string()) fail(ptr, "expected an element string such as \"t:1\"");
  try {
    return sf.parse(j.get<std::string>());
  } catch (const ParseError& e) {
    fail(ptr, std::string(e.what()) + " (offset " + e.where() + ")");
  } catch (const ShapeError& e) {
    fail(ptr, e.what());
  }
}

Rational rational_from_json(const Json& j, const std::string& ptr) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) fail(ptr, "expected a rational string such as \"3/2\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const ParseError& e) {
    fail(ptr, std::string(e.what()) + " (offset " + e.where() + ")");
  }
}

Json to_json(const Rational& r) { return to_string(r); }

Json to_json(const QuadraticForm& q) {
  const Semifield& sf = q.semifield();
  Json diag = Json::array();
  Json upper = Json::object();
  for (std::size_t i = 0; i < q.dimension(); ++i) {
    diag.push_back(sf.format(q.diag(i)));
    for (std::size_t j = i + 1; j < q.dimension(); ++j)
      upper[key(i, j)] = sf.format(q.upper(i, j));
  }
  return Json{{"semifield", to_json(sf)}, {"n", q.dimension()}, {"diag", diag}, {"upper", upper}};
}

QuadraticForm form_from_json(const Json& doc, const std::optional<Semifield>& override_sf) {
  const Semifield sf = document_semifield(doc, override_sf);
  const Json& diag = array_at(member(doc, "diag", ""), "/diag");
  std::size_t n = diag.size();
  if (auto it = doc.find("n"); it != doc.end()) {
    n = size_from_json(*it, "/n");
    if (diag.size() != n) {
      fail("/diag", "expected " + std::to_string(n) + " entries, found " +
                        std::to_string(diag.size()));
    }
  }
  if (n > kMaxDimension) fail("/diag", "dimension exceeds " + std::to_string(kMaxDimension));
  QuadraticForm q(sf, n);
  for (std::size_t i = 0; i < n; ++i)
    q.set_diag(i, element_from_json(diag[i], sf, child("/diag", i)));
  if (auto it = doc.find("upper"); it != doc.end()) {
    if (!it->is_object()) fail("/upper", "expected an object");
    for (const auto& [k, v] : it->items()) {
      const std::string p = child("/upper", k);
      const auto [i, j] = parse_key(k, n, true, p);
      q.set_upper(i, j, element_from_json(v, sf, p));
    }
  }
  return q;
}

Json to_json(const Semifield& sf, const Vector& x) {
  Json coords = Json::array();
  for (const Element& c : x.coords()) coords.push_back(sf.format(c));
  return Json{{"semifield", to_json(sf)}, {"coords", coords}};
}

Vector vector_from_json(const Json& doc, const Semifield& sf) {
  const Json& coords = array_at(member(doc, "coords", ""), "/coords");
  Vector x = Vector::zeros(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i)
    x[i] = element_from_json(coords[i], sf, child("/coords", i));
  return x;
}

Vector parse_vector_text(std::string_view text, const Semifield& sf) {
  std::vector<Element> coords;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = text.find(',', start);
    std::string_view piece = text.substr(start, comma == std::string_view::npos
                                                    ? std::string_view::npos
                                                    : comma - start);
    while (!piece.empty() && piece.front() == ' ') piece.remove_prefix(1);
    while (!piece.empty() && piece.back() == ' ') piece.remove_suffix(1);
    try {
      coords.push_back(sf.parse(piece));
    } catch (const ParseError& e) {
      throw ParseError("coordinate " + std::to_string(coords.size() + 1),
                       std::string(e.what()));
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Vector(std::move(coords));
}

Json to_json(const SymmetricBilinearForm& b) {
  Json gram = Json::array();
  for (std::size_t i = 0; i < b.dimension(); ++i)
    gram.push_back(element_row(b.semifield(), b.gram(), i));
  return Json{{"semifield", to_json(b.semifield())}, {"gram", gram}};
}

SymmetricBilinearForm bilinear_from_json(const Json& doc,
                                         const std::optional<Semifield>& override_sf) {
  const Semifield sf = document_semifield(doc, override_sf);
  GeneralMatrix gram;
  {
    const Json& rows = array_at(member(doc, "gram", ""), "/gram");
    Json wrapped{{"rows", rows}};
    try {
      gram = matrix_from_json(wrapped, sf);
    } catch (const ParseError& e) {
      std::string where = e.where();
      if (where.rfind("/rows", 0) == 0) where = "/gram" + where.substr(5);
      throw ParseError(where, e.what());
    }
  }
  if (gram.rows() != gram.cols()) fail("/gram", "Gram matrix must be square");
  try {
    return SymmetricBilinearForm(sf, gram);
  } catch (const ShapeError& e) {
    fail("/gram", e.what());
  }
}

Json to_json(const Semifield& sf, const GeneralMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(element_row(sf, m, i));
  return Json{{"semifield", to_json(sf)}, {"rows", rows}};
}

GeneralMatrix matrix_from_json(const Json& doc, const Semifield& sf, const std::string& ptr) {
  const std::string rows_ptr = child(ptr, "rows");
  const Json& rows = array_at(member(doc, "rows", ptr), rows_ptr);
  std::vector<std::vector<Element>> data;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::string row_ptr = child(rows_ptr, i);
    const Json& row = array_at(rows[i], row_ptr);
    if (!data.empty() && row.size() != data.front().size()) {
      fail(row_ptr, "row has " + std::to_string(row.size()) + " entries, expected " +
                        std::to_string(data.front().size()));
    }
    std::vector<Element> r;
    for (std::size_t j = 0; j < row.size(); ++j)
      r.push_back(element_from_json(row[j], sf, child(row_ptr, j)));
    data.push_back(std::move(r));
  }
  return GeneralMatrix(std::move(data));
}

Json to_json(const Semifield& sf, const MonomialMatrix& m) {
  Json perm = Json::array();
  Json scales = Json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    perm.push_back(m.permutation()[i] + 1);
    scales.push_back(sf.format(m.scales()[i]));
  }
  Json out = to_json(sf, m.to_general());
  out["permutation"] = perm;
  out["scales"] = scales;
  return out;
}

Json to_json(const CompanionSet& set, const Semifield& sf) {
  Json out;
  switch (set.kind()) {
    case CompanionSet::Kind::Singleton:
      out["kind"] = "singleton";
      out["value"] = sf.format(set.value());
      break;
    case CompanionSet::Kind::NuLeqDoubled:
      out["kind"] = "nu_leq";
      out["bound2"] = to_string(set.bound2());
      break;
    case CompanionSet::Kind::NuLtDoubled:
      out["kind"] = "nu_lt";
      out["bound2"] = to_string(set.bound2());
      break;
    case CompanionSet::Kind::NuClass:
      out["kind"] = "nu_class";
      out["exp"] = to_string(set.class_exponent());
      break;
  }
  out["display"] = describe(set, sf);
  return out;
}

CompanionSet companion_set_from_json(const Json& j, const Semifield& sf,
                                     const std::string& ptr) {
  const Json& kind = member(j, "kind", ptr);
  if (!kind.is_string()) fail(child(ptr, "kind"), "expected a string");
  const std::string k = kind.get<std::string>();
  if (k == "singleton") {
    return CompanionSet::singleton(
        element_from_json(member(j, "value", ptr), sf, child(ptr, "value")));
  }
  if (k == "nu_leq") {
    return CompanionSet::nu_leq(
        rational_from_json(member(j, "bound2", ptr), child(ptr, "bound2")));
  }
  if (k == "nu_lt") {
    return CompanionSet::nu_lt(
        rational_from_json(member(j, "bound2", ptr), child(ptr, "bound2")));
  }
  if (k == "nu_class") {
    return CompanionSet::nu_class(rational_from_json(member(j, "exp", ptr), child(ptr, "exp")));
  }
  fail(child(ptr, "kind"), "unknown companion set kind '" + k + "'");
}

Json to_json(const CompanionTable& t) {
  Json cells = Json::array();
  for (std::size_t i = 0; i < t.dimension(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < t.dimension(); ++j)
      row.push_back(to_json(t.at(i, j), t.semifield()));
    cells.push_back(row);
  }
  return Json{{"semifield", to_json(t.semifield())}, {"n", t.dimension()}, {"cells", cells}};
}

CompanionTable table_from_json(const Json& doc, const std::optional<Semifield>& override_sf) {
  const Semifield sf = document_semifield(doc, override_sf);
  const Json& cells = array_at(member(doc, "cells", ""), "/cells");
  const std::size_t n = cells.size();
  if (n > kMaxDimension) fail("/cells", "dimension exceeds " + std::to_string(kMaxDimension));
  if (auto it = doc.find("n"); it != doc.end() && size_from_json(*it, "/n") != n) {
    fail("/cells", "expected " + std::to_string(size_from_json(*it, "/n")) + " rows");
  }
  std::vector<std::vector<CompanionSet>> parsed(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::string row_ptr = child("/cells", i);
    const Json& row = array_at(cells[i], row_ptr);
    if (row.size() != n) fail(row_ptr, "expected " + std::to_string(n) + " cells");
    for (std::size_t j = 0; j < n; ++j)
      parsed[i].push_back(companion_set_from_json(row[j], sf, child(row_ptr, j)));
  }
  CompanionTable t(sf, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      if (!(parsed[i][j] == parsed[j][i])) {
        fail(child(child("/cells", j), i), "table is not symmetric");
      }
      t.set(i, j, parsed[i][j]);
    }
  }
  return t;
}

Json to_json(const SquareClassTag& c, const Semifield& sf) {
  Json out;
  switch (c.tag) {
    case Tag::Zero:
      out["tag"] = "zero";
      break;
    case Tag::Tangible:
      out["tag"] = "tangible";
      break;
    case Tag::Ghost:
      out["tag"] = "ghost";
      break;
  }
  if (c.tag != Tag::Zero) out["residue"] = c.residue;
  if (c.tag == Tag::Tangible && sf.fiber_rank() > 0) {
    std::string signs;
    for (unsigned k = 0; k < sf.fiber_rank(); ++k) signs += (c.fiber >> k) & 1 ? '-' : '+';
    out["fiber"] = signs;
  }
  out["display"] = sf.format(c);
  return out;
}

Json to_json(const RationalQuadraticForm& q) {
  Json coeffs = Json::object();
  for (std::size_t i = 0; i < q.dimension(); ++i)
    for (std::size_t j = i; j < q.dimension(); ++j)
      if (q.coeff(i, j) != 0) coeffs[key(i, j)] = to_string(q.coeff(i, j));
  return Json{{"n", q.dimension()}, {"coeffs", coeffs}};
}

RationalQuadraticForm rational_form_from_json(const Json& doc) {
  const std::size_t n = size_from_json(member(doc, "n", ""), "/n");
  RationalQuadraticForm q(n);
  if (auto it = doc.find("coeffs"); it != doc.end()) {
    if (!it->is_object()) fail("/coeffs", "expected an object");
    for (const auto& [k, v] : it->items()) {
      const std::string p = child("/coeffs", k);
      const auto [i, j] = parse_key(k, n, false, p);
      q.set_coeff(i, j, rational_from_json(v, p));
    }
  }
  return q;
}

}  // namespace stqf::io
