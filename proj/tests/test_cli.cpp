// Copyright 2026 The detrec Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "doctest.h"

#include <sstream>

#include "json.hpp"

#include "detrec/cli.hpp"
#include "detrec/identities.hpp"

using namespace detrec;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const char* env = nullptr) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err, env);
  return {code, out.str(), err.str()};
}

std::vector<nlohmann::ordered_json> json_lines(const std::string& text) {
  std::vector<nlohmann::ordered_json> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    lines.push_back(nlohmann::ordered_json::parse(line));
  }
  return lines;
}

}  // namespace

TEST_CASE("compute") {
  CHECK(run({"compute", "fib", "--n", "10"}).out == "89\n");
  CHECK(run({"compute", "lucas", "--n", "10"}).out == "123\n");
  CHECK(run({"compute", "racci", "--n", "5", "--r", "3"}).out == "13\n");
  CHECK(run({"compute", "h", "--k", "2", "--vars", "2", "--format", "pretty"}).out ==
        "x0^2 + x0*x1 + x1^2\n");
  CHECK(run({"compute", "h", "--k", "2", "--vars", "2"}).out == "\"x0^2 + x0*x1 + x1^2\"\n");
  CHECK(run({"compute", "e", "--k", "2", "--vars", "3", "--format", "pretty"}).out ==
        "x0*x1 + x0*x2 + x1*x2\n");
  CHECK(run({"compute", "schur", "--partition", "1,1", "--vars", "2", "--format", "pretty"})
            .out == "x0*x1\n");
  CHECK(run({"compute", "recurrence", "--coeffs", "7", "--n", "5"}).out == "16807\n");
  CHECK(run({"compute", "recurrence", "--r", "2", "--n", "4", "--format", "pretty"}).out ==
        "x0^4 + 3*x0^2*x1 + x1^2\n");
}

TEST_CASE("compute det") {
  CHECK(run({"compute", "det", "--family", "S", "--a-symbolic", "--b-symbolic", "--n", "4",
             "--format", "pretty"})
            .out.ends_with("\n2*a^4 + 2*b^4\n"));
  CHECK(run({"compute", "det", "--family", "S", "--n", "4"}).out == "\"2*a^4 + 2*b^4\"\n");
  CHECK(run({"compute", "det", "--family", "S", "--a", "1", "--b", "1", "--n", "3"}).out ==
        "4\n");
  CHECK(run({"compute", "det", "--family", "F", "--n", "10", "--method", "lsd"}).out == "89\n");
  CHECK(run({"compute", "det", "--family", "G", "--n", "5", "--r", "3", "--method",
             "cofactor"})
            .out == "13\n");
  CHECK(run({"compute", "det", "--family", "A", "--n", "4"}).out == "14\n");
  CHECK(run({"compute", "det", "--family", "E", "--n", "2", "--vars", "2"}).out ==
        "\"x0^2 + x0*x1 + x1^2\"\n");
  CHECK(run({"compute", "det", "--family", "C", "--coeffs", "1,-2", "--n", "3"}).out ==
        "-3\n");
  const auto pretty = run({"compute", "det", "--family", "F", "--n", "2", "--format", "pretty"});
  CHECK(pretty.out == "1\t-1\n1\t1\n\n2\n");
}

TEST_CASE("enumerate") {
  const auto tilings = json_lines(run({"enumerate", "tilings", "--n", "4", "--r", "2"}).out);
  REQUIRE(tilings.size() == 6);
  CHECK(tilings[4]["parts"] == nlohmann::ordered_json::array({2, 2}));
  CHECK(tilings[5]["count"] == 5);
  CHECK(tilings[5]["total_weight"] == "x0^4 + 3*x0^2*x1 + x1^2");

  const auto words =
      json_lines(run({"enumerate", "cyclic-words", "--n", "4", "--avoid", "ab"}).out);
  REQUIRE(words.size() == 3);
  CHECK(words[0]["word"] == "aaaa");
  CHECK(words[1]["word"] == "bbbb");
  CHECK(words[2]["total_weight"] == "a^4 + b^4");

  const auto lsds = json_lines(run({"enumerate", "lsds", "--family", "F", "--n", "4"}).out);
  REQUIRE(lsds.size() == 6);
  CHECK(lsds[5]["count"] == 5);
  CHECK(lsds[5]["total_weight"] == "5");

  const auto circular = json_lines(run({"enumerate", "circular-tilings", "--n", "5"}).out);
  CHECK(circular.back()["count"] == 11);

  const auto increasing =
      json_lines(run({"enumerate", "words", "--n", "2", "--vars", "2", "--avoid", "descent"}).out);
  CHECK(increasing.back()["count"] == 3);
  CHECK(increasing.back()["total_weight"] == "x0^2 + x0*x1 + x1^2");
  CHECK(json_lines(run({"enumerate", "words", "--n", "2", "--vars", "2"}).out).back()["count"] ==
        4);

  const auto csv = run({"enumerate", "tilings", "--n", "2", "--r", "2", "--format", "csv"});
  CHECK(csv.out == "index,item,weight\n1,1+1,x0^2\n2,2,x1\n");
}

TEST_CASE("verify") {
  const auto sury = run({"verify", "sury", "--n", "2", "--k", "2"});
  CHECK(sury.code == 0);
  const auto reports = json_lines(sury.out);
  REQUIRE(reports.size() == 1);
  CHECK(reports[0]["passed"] == true);
  CHECK(reports[0]["lhs"] == "x0^2 + x0*x1 + x1^2");
  CHECK(reports[0]["rhs"] == "x0^2 + x0*x1 + x1^2");
  CHECK(report_from_json(reports[0]).passed);

  const auto all = run({"verify", "all", "--max-n", "6"});
  CHECK(all.code == 0);
  for (const auto& j : json_lines(all.out)) CHECK(report_from_json(j).passed);

  const auto csv = run({"verify", "fib", "--n", "3", "--format", "csv"});
  CHECK(csv.out == "identity,params,lhs,rhs,passed,elapsed_ms\nfib,\"{\"\"n\"\":3}\",3,3,true,0.0\n");
  CHECK(run({"verify", "fib", "--n", "3", "--format", "pretty"}).out ==
        "PASS fib {\"n\":3}\n1 of 1 passed\n");
}

TEST_CASE("output is byte-identical across runs") {
  const std::vector<std::string> args{"verify", "all", "--max-n", "5"};
  CHECK(run(args).out == run(args).out);
  const std::vector<std::string> lsd{"enumerate", "lsds", "--family", "S", "--n", "5"};
  CHECK(run(lsd).out == run(lsd).out);
}

TEST_CASE("exit codes") {
  CHECK(run({"verify", "lucas-symbolic", "--n", "2"}).code == kExitUsage);
  CHECK(run({"compute", "fib"}).code == kExitUsage);
  CHECK(run({"compute", "nope"}).code == kExitUsage);
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"compute", "fib", "--n", "x"}).code == kExitUsage);
  CHECK(run({"compute", "det", "--family", "C", "--coeffs", "1,,2", "--n", "3"}).code ==
        kExitUsage);
  CHECK(run({"compute", "fib", "--n", "3", "--format", "csv"}).code == kExitUsage);
  CHECK(run({"enumerate", "tilings", "--n", "21", "--r", "2"}).code == kExitTooLarge);
  CHECK(run({"enumerate", "lsds", "--family", "F", "--n", "13"}).code == kExitTooLarge);
  CHECK(run({"verify", "sury", "--n", "9", "--k", "2"}).code == kExitTooLarge);
  CHECK(run({"compute", "det", "--family", "F", "--n", "9", "--method", "cofactor"}).code ==
        kExitTooLarge);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("DETREC_MAX_N lowers caps") {
  CHECK(run({"compute", "fib", "--n", "6"}, "5").code == kExitTooLarge);
  CHECK(run({"compute", "fib", "--n", "5"}, "5").out == "8\n");
  CHECK(run({"enumerate", "tilings", "--n", "20", "--r", "1"}, "100").code == kExitOk);
  CHECK(run({"enumerate", "tilings", "--n", "21", "--r", "1"}, "100").code == kExitTooLarge);
  CHECK(run({"compute", "fib", "--n", "5"}, "zero").code == kExitUsage);
  const auto capped = run({"verify", "all"}, "3");
  CHECK(capped.code == 0);
  for (const auto& j : json_lines(capped.out)) {
    for (const auto& [key, value] : j["params"].items()) {
      if (value.is_number() && key != "k" && key != "r" && key != "n_vars") CHECK(value <= 3);
    }
  }
}
