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

#include "stqf/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "stqf/companions.hpp"
#include "stqf/decomposition.hpp"
#include "stqf/errors.hpp"
#include "stqf/io.hpp"
#include "stqf/linalg.hpp"
#include "stqf/stropicalize.hpp"

namespace stqf::cli {

namespace {

using io::Json;

struct Result {
  Json json;
  std::string pretty;
  int code = kOk;
};

struct Context {
  std::istream& in;
  bool pretty = false;
  std::string semifield_text;

  std::optional<Semifield> semifield_override() const {
    if (semifield_text.empty()) return std::nullopt;
    if (semifield_text.front() == '{') {
      try {
        return io::semifield_from_json(io::parse_document(semifield_text), "");
      } catch (const ParseError& e) {
        throw ParseError("--semifield" + (e.where() == "/" ? "" : e.where()), e.what());
      }
    }
    // Shorthand "<group>" or "<group>:<fiber rank>".
    const auto colon = semifield_text.find(':');
    Json j{{"group", semifield_text.substr(0, colon)}};
    if (colon != std::string::npos) {
      try {
        j["fiber_rank"] = std::stoi(semifield_text.substr(colon + 1));
      } catch (const std::exception&) {
        throw ParseError("--semifield", "malformed fiber rank in '" + semifield_text + "'");
      }
    }
    try {
      return io::semifield_from_json(j, "");
    } catch (const ParseError& e) {
      throw ParseError("--semifield", e.what());
    }
  }

  Json load(const std::string& path) const {
    std::string text;
    if (path == "-") {
      text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    } else {
      std::ifstream file(path, std::ios::binary);
      if (!file) throw ParseError(path, "cannot open '" + path + "'");
      text.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
    }
    try {
      return io::parse_document(text);
    } catch (const ParseError& e) {
      throw ParseError(path + ": " + e.where(), e.what());
    }
  }

  // Runs `decode` on the document at `path`, prefixing error positions with it.
  template <typename F>
  auto decode(const std::string& path, F&& f) const {
    const Json doc = load(path);
    try {
      return f(doc);
    } catch (const ParseError& e) {
      throw ParseError(path + ": " + e.where(), e.what());
    }
  }

  QuadraticForm form(const std::string& path) const {
    return decode(path, [&](const Json& d) { return io::form_from_json(d, semifield_override()); });
  }
};

// Text grid with right-aligned columns.
std::string render_grid(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows) {
    if (width.size() < r.size()) width.resize(r.size(), 0);
    for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
  }
  std::ostringstream os;
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (c > 0) line += "  ";
      line += std::string(width[c] - r[c].size(), ' ') + r[c];
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << "\n";
  }
  return os.str();
}

std::vector<std::string> header(std::size_t n) {
  std::vector<std::string> h{""};
  for (std::size_t j = 0; j < n; ++j) h.push_back(std::to_string(j + 1));
  return h;
}

std::string pretty_form(const QuadraticForm& q) {
  std::vector<std::vector<std::string>> rows{header(q.dimension())};
  for (std::size_t i = 0; i < q.dimension(); ++i) {
    std::vector<std::string> r{std::to_string(i + 1)};
    for (std::size_t j = 0; j < q.dimension(); ++j)
      r.push_back(j < i ? "" : q.semifield().format(q.coefficient(i, j)));
    rows.push_back(std::move(r));
  }
  return render_grid(rows);
}

std::string pretty_matrix(const Semifield& sf, const GeneralMatrix& m) {
  std::vector<std::vector<std::string>> rows{header(m.cols())};
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::vector<std::string> r{std::to_string(i + 1)};
    for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(sf.format(m(i, j)));
    rows.push_back(std::move(r));
  }
  return render_grid(rows);
}

std::string pretty_table(const CompanionTable& t) {
  std::vector<std::vector<std::string>> rows{header(t.dimension())};
  for (std::size_t i = 0; i < t.dimension(); ++i) {
    std::vector<std::string> r{std::to_string(i + 1)};
    for (std::size_t j = 0; j < t.dimension(); ++j)
      r.push_back(describe(t.at(i, j), t.semifield()));
    rows.push_back(std::move(r));
  }
  return render_grid(rows);
}

std::string pair_key(std::size_t i, std::size_t j) {
  return std::to_string(i + 1) + "," + std::to_string(j + 1);
}

// ---------------------------------------------------------------------------
// Commands

Result cmd_eval(const Context& ctx, const std::string& path, const std::string& vector_text) {
  const QuadraticForm q = ctx.form(path);
  const Vector x = io::parse_vector_text(vector_text, q.semifield());
  if (x.size() != q.dimension()) {
    throw ShapeError("vector has " + std::to_string(x.size()) + " coordinates, form has " +
                     std::to_string(q.dimension()));
  }
  const std::string value = q.semifield().format(eval_quadratic(q, x));
  return {Json{{"value", value}}, "q(x) = " + value + "\n"};
}

Result cmd_companions(const Context& ctx, const std::string& path) {
  const CompanionTable t = companion_table(ctx.form(path));
  return {io::to_json(t), pretty_table(t)};
}

Result cmd_decompose(const Context& ctx, const std::string& path,
                     const std::string& companion_path) {
  const QuadraticForm q = ctx.form(path);
  const CompanionTable t = companion_table(q);
  const RigExtrema ext = rig_extrema(q);
  Result r;
  r.json = Json{{"ql", io::to_json(quasilinear_part(q))},
                {"rigid_min", io::to_json(ext.min)},
                {"rigid_max", ext.max ? io::to_json(*ext.max) : Json(nullptr)},
                {"table", io::to_json(t)}};
  std::string pretty = "quasilinear part\n" + pretty_form(quasilinear_part(q)) +
                       "\nminimal rigid complement\n" + pretty_form(ext.min) +
                       "\nmaximal rigid complement\n" +
                       (ext.max ? pretty_form(*ext.max) : std::string("none\n"));
  if (!companion_path.empty()) {
    const SymmetricBilinearForm b = ctx.decode(companion_path, [&](const Json& d) {
      return io::bilinear_from_json(d, q.semifield());
    });
    const Decomposition d = decompose(q, b);
    r.json["rigid"] = io::to_json(d.rigid);
    r.json["companion"] = io::to_json(d.companion);
    pretty += "\nrigid complement from the given companion\n" + pretty_form(d.rigid);
  }
  r.pretty = pretty + "\ncompanion table\n" + pretty_table(t);
  return r;
}

Result cmd_rigid_extrema(const Context& ctx, const std::string& path) {
  const RigExtrema ext = rig_extrema(ctx.form(path));
  Json witness = nullptr;
  if (ext.witness) witness = pair_key(ext.witness->first, ext.witness->second);
  Result r;
  r.json = Json{{"min", io::to_json(ext.min)},
                {"max", ext.max ? io::to_json(*ext.max) : Json(nullptr)},
                {"no_max_witness", witness}};
  r.pretty = "min\n" + pretty_form(ext.min) + "\nmax\n" +
             (ext.max ? pretty_form(*ext.max)
                      : "none (cell " + witness.get<std::string>() + " has no maximum)\n");
  return r;
}

Result cmd_equal(const Context& ctx, const std::string& a, const std::string& b) {
  const bool eq = functionally_equal(ctx.form(a), ctx.form(b));
  return {Json{{"equal", eq}}, eq ? "equal\n" : "not equal\n"};
}

// Random vector with coordinates among 0, t:k, g:k for k ∈ [−4, 4].
Vector random_vector(const Semifield& sf, std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> tag(0, 4);
  std::uniform_int_distribution<int> exp(-4, 4);
  std::uniform_int_distribution<Fiber> fiber(0, sf.fiber_mask());
  Vector x = Vector::zeros(n);
  for (std::size_t i = 0; i < n; ++i) {
    const int t = tag(rng);
    if (t == 0) continue;
    x[i] = t == 1 ? Element::ghost(Rational(exp(rng))) : Element::tangible(Rational(exp(rng)), fiber(rng));
  }
  return x;
}

Result cmd_check(const Context& ctx, const std::string& path, const std::string& table_path,
                 const std::string& companion_path) {
  const QuadraticForm q = ctx.form(path);
  const Semifield& sf = q.semifield();
  const CompanionTable computed = companion_table(q);
  CompanionTable table = computed;
  if (!table_path.empty()) {
    table = ctx.decode(table_path, [&](const Json& d) { return io::table_from_json(d, sf); });
    if (table.dimension() != q.dimension()) throw ShapeError("table dimension does not match the form");
  }
  bool ok = true;
  Json cells = Json::array();
  std::vector<std::vector<std::string>> rows{{"cell", "set", "probes", "status"}};
  for (std::size_t i = 0; i < q.dimension(); ++i) {
    for (std::size_t j = i; j < q.dimension(); ++j) {
      const CompanionSet& cell = table.at(i, j);
      std::vector<Element> extra{q.coefficient(i, j), q.coefficient(i, j).nu()};
      for (const Element& x : membership_probes(sf, computed.at(i, j))) extra.push_back(x);
      const std::vector<Element> probes = membership_probes(sf, cell, extra);
      Json mismatch = nullptr;
      for (const Element& beta : probes) {
        bool expected;
        if (i == j) {
          const Element top = q.diag(i).nu();
          expected = top + beta == top;
        } else {
          expected = companion_membership_oracle(sf, q.diag(i), q.diag(j), q.upper(i, j), beta);
        }
        if (contains(cell, beta) != expected) {
          mismatch = Json{{"beta", sf.format(beta)},
                          {"table_contains", !expected},
                          {"oracle_contains", expected}};
          break;
        }
      }
      if (i != j && mismatch.is_null()) {
        // The bound-only description must denote the same set.
        const CompanionSet alt =
            companion_set_pair_by_square_bound(sf, q.diag(i), q.diag(j), q.upper(i, j));
        for (const Element& beta : probes) {
          if (contains(alt, beta) != contains(computed.at(i, j), beta)) {
            mismatch = Json{{"beta", sf.format(beta)}, {"square_bound_route", describe(alt, sf)}};
            break;
          }
        }
      }
      const bool cell_ok = mismatch.is_null();
      ok = ok && cell_ok;
      Json entry{{"cell", pair_key(i, j)},
                 {"set", describe(cell, sf)},
                 {"probes", probes.size()},
                 {"status", cell_ok ? "ok" : "mismatch"}};
      if (!cell_ok) entry["counterexample"] = mismatch;
      cells.push_back(entry);
      rows.push_back({pair_key(i, j), describe(cell, sf), std::to_string(probes.size()),
                      cell_ok ? "ok" : "MISMATCH"});
    }
  }
  Result r;
  r.json = Json{{"ok", ok}, {"source", table_path.empty() ? "computed" : table_path}, {"cells", cells}};
  r.pretty = render_grid(rows);
  if (!companion_path.empty()) {
    const SymmetricBilinearForm b =
        ctx.decode(companion_path, [&](const Json& d) { return io::bilinear_from_json(d, sf); });
    if (b.dimension() != q.dimension()) throw ShapeError("companion dimension does not match the form");
    const bool member = is_companion(q, b);
    // q(x + y) = q(x) + q(y) + b(x, y) on sampled pairs.
    std::mt19937_64 rng(0x5eed);
    std::size_t failures = 0;
    constexpr std::size_t kSamples = 200;
    for (std::size_t s = 0; s < kSamples; ++s) {
      const Vector x = random_vector(sf, q.dimension(), rng);
      const Vector y = random_vector(sf, q.dimension(), rng);
      if (!(eval_quadratic(q, x + y) == eval_quadratic(q, x) + eval_quadratic(q, y) + eval_bilinear(b, x, y)))
        ++failures;
    }
    // A table member must satisfy the identity everywhere.
    const bool agree = !(member && failures > 0);
    r.json["companion"] = Json{{"table_membership", member},
                               {"samples", kSamples},
                               {"identity_failures", failures},
                               {"consistent", agree}};
    r.pretty += "\ncompanion: " + std::string(member ? "member" : "not a member") + ", " +
                std::to_string(failures) + "/" + std::to_string(kSamples) +
                " sampled identity failures\n";
    ok = ok && agree;
    r.json["ok"] = ok;
  }
  r.code = ok ? kOk : kCheckFailed;
  return r;
}

Result cmd_invert(const Context& ctx, const std::string& path) {
  const std::optional<Semifield> sf_override = ctx.semifield_override();
  Semifield sf;
  const GeneralMatrix m = ctx.decode(path, [&](const Json& d) {
    sf = io::document_semifield(d, sf_override);
    return io::matrix_from_json(d, sf);
  });
  if (m.rows() != m.cols()) throw ShapeError("invert needs a square matrix");
  const InvertibilityReport rep = analyze_invertibility(m);
  Result r;
  if (rep.invertible()) {
    const MonomialMatrix inv = invert(*rep.monomial);
    r.json = Json{{"invertible", true}, {"inverse", io::to_json(sf, inv)}};
    r.pretty = "inverse\n" + pretty_matrix(sf, inv.to_general());
  } else {
    r.json = Json{{"invertible", false}, {"reason", rep.reason}};
    r.json["row"] = rep.row ? Json(*rep.row + 1) : Json(nullptr);
    r.json["column"] = rep.column ? Json(*rep.column + 1) : Json(nullptr);
    r.pretty = "not invertible: " + rep.reason + "\n";
  }
  return r;
}

SupervaluationSpec make_spec(const std::string& prime, const std::string& mode) {
  std::optional<unsigned long> p;
  if (prime != "trivial") {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(prime, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != prime.size() || prime.empty() || prime.front() == '-') {
      throw ParseError("--prime", "expected a prime number or 'trivial', got '" + prime + "'");
    }
    p = v;
  }
  return SupervaluationSpec(p, SupervaluationSpec::mode_from_name(mode));
}

Json class_list(const std::vector<SquareClassTag>& classes, const Semifield& sf,
                std::string* pretty) {
  Json out = Json::array();
  for (const SquareClassTag& c : classes) {
    out.push_back(io::to_json(c, sf));
    *pretty += (pretty->empty() ? "" : " ") + sf.format(c);
  }
  *pretty += "\n";
  return out;
}

Result cmd_stropicalize(const Context& ctx, const std::string& path, const std::string& prime,
                        const std::string& mode, bool min_plus) {
  const SupervaluationSpec spec = make_spec(prime, mode);
  const RationalQuadraticForm rq = ctx.decode(path, io::rational_form_from_json);
  const QuadraticForm q = stropicalize_form(spec, rq);
  const SymmetricBilinearForm balanced = balanced_companion_of_strop(spec, rq);
  const SymmetricBilinearForm b_phi = stropicalize_bilinear(spec, ring_companion(rq));
  std::string classes_text;
  Result r;
  r.json = Json{{"form", io::to_json(q)},
                {"balanced", io::to_json(balanced)},
                {"b_phi", io::to_json(b_phi)},
                {"quasilinear", is_quasilinear(q)},
                {"square_classes",
                 class_list(square_class_sequence(q), q.semifield(), &classes_text)}};
  if (min_plus) {
    // v_p of each nonzero coefficient, the min-plus reading of the exponents.
    Json vals = Json::object();
    for (std::size_t i = 0; i < rq.dimension(); ++i)
      for (std::size_t j = i; j < rq.dimension(); ++j)
        if (rq.coeff(i, j) != 0) vals[pair_key(i, j)] = valuation(spec, rq.coeff(i, j));
    r.json["valuations"] = vals;
  }
  r.pretty = "form\n" + pretty_form(q) + "\nbalanced companion\n" +
             pretty_matrix(q.semifield(), balanced.gram()) + "\nb_phi\n" +
             pretty_matrix(q.semifield(), b_phi.gram()) + "\nquasilinear: " +
             (is_quasilinear(q) ? "yes" : "no") + "\nsquare classes: " + classes_text;
  return r;
}

Result cmd_classes(const Context& ctx, const std::string& path, const std::string& prime,
                   const std::string& mode) {
  Result r;
  std::string text;
  if (prime.empty()) {
    const QuadraticForm q = ctx.form(path);
    r.json = Json{{"square_classes", class_list(square_class_sequence(q), q.semifield(), &text)}};
  } else {
    const SupervaluationSpec spec = make_spec(prime, mode);
    const RationalQuadraticForm rq = ctx.decode(path, io::rational_form_from_json);
    r.json = Json{{"square_classes", class_list(square_class_sequence(spec, rq),
                                                spec.target_semifield(), &text)}};
  }
  r.pretty = text;
  return r;
}

Json error_json(std::string_view kind, const std::string& message) {
  return Json{{"error", kind}, {"message", message}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Supertropical quadratic forms: companions, decompositions, stropicalization",
               "stqf"};
  app.require_subcommand(1);
  Context ctx{in, false, {}};
  app.add_flag("--pretty", ctx.pretty, "Print human-readable tables instead of JSON");
  app.add_option("--semifield", ctx.semifield_text,
                 "Semifield override: JSON object or <group>[:<fiber rank>]");

  std::string input, input2, vector_text, table_path, companion_path;
  std::string prime = "2", mode = "tangible", class_prime;
  bool min_plus = false;
  std::function<Result()> action;

  auto* eval = app.add_subcommand("eval", "Evaluate a form at a vector");
  eval->add_option("form", input, "Form JSON (- for stdin)")->required();
  eval->add_option("--vector", vector_text, "Comma-separated coordinates, e.g. t:1,t:0")
      ->required();
  eval->callback([&] { action = [&] { return cmd_eval(ctx, input, vector_text); }; });

  auto* comp = app.add_subcommand("companions", "Companion table of a form");
  comp->add_option("form", input)->required();
  comp->callback([&] { action = [&] { return cmd_companions(ctx, input); }; });

  auto* dec = app.add_subcommand("decompose", "Quasilinear part and rigid complements");
  dec->add_option("form", input)->required();
  dec->add_option("--companion", companion_path, "Bilinear form JSON to decompose along");
  dec->callback([&] { action = [&] { return cmd_decompose(ctx, input, companion_path); }; });

  auto* ext = app.add_subcommand("rigid-extrema", "Minimal and maximal rigid complements");
  ext->add_option("form", input)->required();
  ext->callback([&] { action = [&] { return cmd_rigid_extrema(ctx, input); }; });

  auto* eq = app.add_subcommand("equal", "Decide whether two forms are the same function");
  eq->add_option("first", input)->required();
  eq->add_option("second", input2)->required();
  eq->callback([&] { action = [&] { return cmd_equal(ctx, input, input2); }; });

  auto* chk = app.add_subcommand("check", "Compare companion cells against the oracle");
  chk->add_option("form", input)->required();
  chk->add_option("--table", table_path, "Companion table JSON to check instead");
  chk->add_option("--companion", companion_path, "Bilinear form JSON to test as a companion");
  chk->callback(
      [&] { action = [&] { return cmd_check(ctx, input, table_path, companion_path); }; });

  auto* inv = app.add_subcommand("invert", "Invert a matrix or explain why it is singular");
  inv->add_option("matrix", input)->required();
  inv->callback([&] { action = [&] { return cmd_invert(ctx, input); }; });

  auto* strop = app.add_subcommand("stropicalize", "Supertropicalize a rational form");
  strop->add_option("form", input, "Rational form JSON")->required();
  strop->add_option("--prime", prime, "Prime p, or 'trivial'")->capture_default_str();
  strop->add_option("--mode", mode, "tangible | ghost | signed")->capture_default_str();
  strop->add_flag("--min-plus", min_plus, "Also report the p-adic valuations");
  strop->callback(
      [&] { action = [&] { return cmd_stropicalize(ctx, input, prime, mode, min_plus); }; });

  auto* cls = app.add_subcommand("classes", "Square classes of the diagonal entries");
  cls->add_option("form", input)->required();
  cls->add_option("--prime", class_prime, "Treat the input as a rational form over this prime");
  cls->add_option("--mode", mode)->capture_default_str();
  cls->callback([&] { action = [&] { return cmd_classes(ctx, input, class_prime, mode); }; });

  std::vector<std::string> argv_store{"stqf"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    const Result r = action();
    if (ctx.pretty) {
      out << r.pretty;
    } else {
      out << r.json.dump(2) << "\n";
    }
    return r.code;
  } catch (const ParseError& e) {
    Json j = error_json("parse", e.what());
    j["where"] = e.where();
    err << j.dump() << "\n";
    return kInputError;
  } catch (const ShapeError& e) {
    err << error_json("shape", e.what()).dump() << "\n";
    return kInputError;
  } catch (const PreconditionError& e) {
    Json j = error_json("precondition", e.what());
    j["rule"] = e.rule();
    err << j.dump() << "\n";
    return kPrecondition;
  }
}

}  // namespace stqf::cli
