// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "origami/cli.hpp"
#include "origami/json_io.hpp"

using namespace origami;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

const char* kLizard = R"({"nodes": [{"id": "head", "kind": "terminal"}, {"id": "n1", "kind": "internal"},
  {"id": "n2", "kind": "internal"}, {"id": "tail", "kind": "terminal"}, {"id": "fl", "kind": "terminal"},
  {"id": "fr", "kind": "terminal"}, {"id": "hl", "kind": "terminal"}, {"id": "hr", "kind": "terminal"}],
  "edges": [["head", "n1", 1], ["n1", "n2", 2], ["n2", "tail", 3], ["n1", "fl", 1], ["n1", "fr", 1],
  ["n2", "hl", 1], ["n2", "hr", 1]]})";

}  // namespace

TEST_CASE("cubic golden instance") {
  const Result r = run({"cubic", "0", "-3", "-2"});
  CHECK(r.code == 0);
  const auto j = io::Json::parse(r.out);
  CHECK(j["roots"].size() == 2);
  CHECK(j["roots"][0].get<double>() == -1.0);
  CHECK(j["roots"][1].get<double>() == 2.0);
  const Line f = io::line_from_json(j["folds"][1]);
  CHECK(std::abs(*f.slope() - 2.0) < 1e-9);
  CHECK(std::abs(*f.y_intercept() + 4.0) < 1e-9);
}

TEST_CASE("exit codes") {
  CHECK(run({"cubic", "0", "0", "1", "extra"}).code == 2);
  CHECK(run({"cubic", "0", "0"}).code == 2);
  CHECK(run({"quadratic", "0", "1"}).code == 1);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"flatfold", R"({"angles_deg":[90,90,90,90],"assignment":"MMVV"})"}).code == 1);
  CHECK(run({"flatfold", R"({"angles_deg":[90,90,90,90],"assignment":"MMMV"})"}).code == 0);
  CHECK(run({"flatfold", R"({"angles_deg":[90,90,90]})"}).code == 2);
  CHECK(run({"axiom", "O5", R"({"p1":[0,1],"p2":[0,2],"l1":{"a":0,"b":1,"c":-1}})"}).code == 1);
  CHECK(run({"axiom", "O9", "{}"}).code == 2);
  CHECK(run({"trisect-angle", "180"}).code == 2);
  CHECK(run({"--tol", "5", "cubic", "0", "-3", "-2"}).code == 2);
  CHECK(run({"demo", "pythagoras"}).code == 0);
  CHECK(run({"demo", "angle-sum", "0", "0", "1", "0", "2", "0"}).code == 2);
}

TEST_CASE("flatfold reports the maekawa failure") {
  const Result r = run({"flatfold", R"({"angles_deg":[90,90,90,90],"assignment":"MMVV"})"});
  const auto j = io::Json::parse(r.out);
  CHECK(j["kawasaki"]["pass"] == true);
  CHECK(j["maekawa"]["pass"] == false);
}

TEST_CASE("axiom subcommand") {
  const Result r = run({"axiom", "O6", R"({"p1":[0,1],"l1":{"a":0,"b":1,"c":-1},"p2":[-2,-3],"l2":{"a":1,"b":0,"c":2}})"});
  CHECK(r.code == 0);
  const auto j = io::Json::parse(r.out);
  CHECK(j["axiom"] == "O6");
  CHECK(j["count"].get<int>() >= 2);
}

TEST_CASE("json and svg files") {
  const std::string json_path = "test_cli_out.json", svg_path = "test_cli_out.svg";
  const Result r = run({"--json", json_path, "--svg", svg_path, "cubic", "0", "-3", "-2"});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream j(json_path), s(svg_path);
  std::stringstream jt, st;
  jt << j.rdbuf();
  st << s.rdbuf();
  CHECK(jt.str() == run({"cubic", "0", "-3", "-2"}).out);
  CHECK(st.str().find("<svg") != std::string::npos);
  std::remove(json_path.c_str());
  std::remove(svg_path.c_str());
}

TEST_CASE("determinism") {
  for (const std::vector<std::string>& args : std::vector<std::vector<std::string>>{
           {"cubic", "1", "-2", "0.5"},
           {"trisect-angle", "75"},
           {"demo", "angle-sum"},
           {"--seed", "7", "--starts", "8", "layout", kLizard}}) {
    const Result a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}
