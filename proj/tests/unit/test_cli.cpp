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

#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "stqf/cli.hpp"

namespace stqf {
namespace {

using Json = nlohmann::json;

struct Run {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(STQF_TEST_DATA_DIR) + "/" + name; }

TEST_CASE("eval") {
  const Run r = run({"eval", data("form_t2_t9_t4.json"), "--vector", "t:1,t:0"});
  REQUIRE(r.code == 0);
  CHECK(r.json()["value"] == "t:10");
  CHECK(run({"eval", data("form_t2_t9_t4.json"), "--vector", "t:1"}).code == cli::kInputError);
}

TEST_CASE("companions") {
  const Run r = run({"companions", data("form_t2_t3_t4.json")});
  REQUIRE(r.code == 0);
  CHECK(r.json()["cells"][0][1]["display"] == "[0, g:3]");
  CHECK(r.json()["cells"][1][1]["display"] == "[0, g:4]");
  const Run pretty = run({"--pretty", "companions", data("form_t2_t3_t4.json")});
  CHECK(pretty.out.find("[0, g:3]") != std::string::npos);
}

TEST_CASE("stdin and semifield override") {
  const std::string doc = R"({"n": 2, "diag": ["t:1", "t:2"], "upper": {"1,2": "0"}})";
  const Run r = run({"--semifield", "rat3", "rigid-extrema", "-"}, doc);
  REQUIRE(r.code == 0);
  CHECK(r.json()["max"].is_null());
  CHECK(r.json()["no_max_witness"] == "1,2");
  const Run j = run({"--semifield", R"({"group": "int"})", "rigid-extrema", "-"}, doc);
  REQUIRE(j.code == 0);
  CHECK(j.json()["max"]["upper"]["1,2"] == "g:1");
}

TEST_CASE("decompose") {
  const Run r = run({"decompose", data("form_t2_t3_t4.json")});
  REQUIRE(r.code == 0);
  const Json j = r.json();
  CHECK(j["ql"]["diag"] == Json::array({"t:2", "t:4"}));
  CHECK(j["ql"]["upper"]["1,2"] == "0");
  CHECK(j["rigid_min"]["upper"]["1,2"] == "0");
  CHECK(j["rigid_max"]["upper"]["1,2"] == "g:3");
  CHECK(j["table"]["cells"][0][1]["kind"] == "nu_leq");

  const Run with = run({"decompose", data("form_t2_t3_t4.json"), "--companion",
                        data("bilinear_balanced.json")});
  REQUIRE(with.code == 0);
  CHECK(with.json()["rigid"]["upper"]["1,2"] == "t:3");
  const Run bad = run({"decompose", data("form_t2_t3_t4.json"), "--companion",
                       data("bilinear_bad.json")});
  CHECK(bad.code == cli::kPrecondition);
  CHECK(Json::parse(bad.err)["rule"] == "companion condition");
}

TEST_CASE("equal") {
  CHECK(run({"equal", data("form_t2_t3_t4.json"), data("form_t2_g3_t4.json")}).json()["equal"] ==
        true);
  CHECK(run({"equal", data("form_rigid_t1.json"), data("form_rigid_g1.json")}).json()["equal"] ==
        false);
}

TEST_CASE("check") {
  const Run ok = run({"check", data("form_t2_t3_t4.json")});
  CHECK(ok.code == 0);
  CHECK(ok.json()["ok"] == true);
  const Run rigid = run({"check", data("form_zero_diag.json")});
  CHECK(rigid.code == 0);
  for (const Json& c : rigid.json()["cells"]) CHECK(c["status"] == "ok");

  const Run bad = run({"check", data("form_t2_t3_t4.json"), "--table", data("table_corrupted.json")});
  CHECK(bad.code == cli::kCheckFailed);
  const Json j = bad.json();
  CHECK(j["ok"] == false);
  CHECK(j["cells"][0]["status"] == "ok");
  CHECK(j["cells"][1]["status"] == "mismatch");
  CHECK(j["cells"][2]["status"] == "ok");

  const Run comp = run({"check", data("form_t2_t3_t4.json"), "--companion",
                        data("bilinear_balanced.json")});
  CHECK(comp.code == 0);
  CHECK(comp.json()["companion"]["table_membership"] == true);
  CHECK(comp.json()["companion"]["identity_failures"] == 0);
}

TEST_CASE("invert") {
  const Run r = run({"invert", data("matrix_invertible.json")});
  REQUIRE(r.code == 0);
  CHECK(r.json()["invertible"] == true);
  CHECK(r.json()["inverse"]["rows"] == Json::parse(R"([["t:-2", "0"], ["0", "t:1"]])"));
  const Run s = run({"invert", data("matrix_singular.json")});
  REQUIRE(s.code == 0);
  CHECK(s.json()["invertible"] == false);
  CHECK(s.json()["row"] == 1);
}

TEST_CASE("stropicalize") {
  const Run r = run({"stropicalize", data("qform_example.json"), "--prime", "2"});
  REQUIRE(r.code == 0);
  const Json j = r.json();
  CHECK(j["form"]["diag"] == Json::array({"t:0", "t:-2"}));
  CHECK(j["form"]["upper"]["1,2"] == "t:-1");
  CHECK(j["balanced"]["gram"] == Json::parse(R"([["g:0", "t:-1"], ["t:-1", "g:-2"]])"));
  CHECK(j["b_phi"]["gram"][0][0] == "t:-1");
  CHECK(j["b_phi"]["gram"][1][1] == "t:-3");
  CHECK(j["quasilinear"] == true);
  CHECK(j["square_classes"].size() == 2);

  const Run mp = run({"stropicalize", data("qform_example.json"), "--min-plus"});
  CHECK(mp.json()["valuations"]["2,2"] == 2);
  CHECK(run({"stropicalize", data("qform_example.json"), "--prime", "6"}).code ==
        cli::kPrecondition);
  CHECK(run({"stropicalize", data("qform_example.json"), "--prime", "x"}).code ==
        cli::kInputError);
  CHECK(run({"stropicalize", data("qform_example.json"), "--prime", "trivial"}).code == 0);
}

TEST_CASE("classes") {
  const Run r = run({"classes", data("qform_signed.json"), "--prime", "2", "--mode", "signed"});
  REQUIRE(r.code == 0);
  const Json c = r.json()["square_classes"];
  REQUIRE(c.size() == 2);
  CHECK(c[0]["fiber"] != c[1]["fiber"]);
  const Run f = run({"classes", data("form_t2_t3_t4.json")});
  CHECK(f.json()["square_classes"][0]["residue"] == 0);
}

TEST_CASE("errors and exit codes") {
  const Run bad = run({"companions", data("malformed.json")});
  CHECK(bad.code == cli::kInputError);
  CHECK(Json::parse(bad.err)["error"] == "parse");
  CHECK(run({"companions", data("no_such_file.json")}).code == cli::kInputError);
  CHECK(run({"frobnicate"}).code == cli::kInputError);
  CHECK(run({}).code == cli::kInputError);
  CHECK(run({"--help"}).code == 0);
  const Run trivial = run({"--semifield", "trivial", "companions", data("form_t2_t3_t4.json")});
  CHECK(trivial.code == cli::kPrecondition);
  CHECK(Json::parse(trivial.err)["rule"] == "nontriviality");
  const Run wrong = run({"--semifield", "int:1", "companions", "-"},
                        R"({"diag": ["t:1:+-"]})");
  CHECK(wrong.code == cli::kInputError);
  CHECK(Json::parse(wrong.err)["where"].get<std::string>().find("/diag/0") != std::string::npos);
}

}  // namespace
}  // namespace stqf
