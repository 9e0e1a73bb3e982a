// Copyright 2026 The doext Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <sstream>

#include "doctest.h"
#include "doext/cli.hpp"
#include "json.hpp"

using namespace doext;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.push_back("--registry");
  args.push_back(DOEXT_TEST_REGISTRY);
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("center in one bidegree") {
  auto r = run({"center", "--family", "D", "--param", "p=1", "--bidegree", "0,2"});
  CHECK(r.code == kExitConfirmed);
  CHECK(r.out.find("dimension 1") != std::string::npos);
  CHECK(r.out.find("y2^2 + y1^2") != std::string::npos);
}

TEST_CASE("commutator") {
  auto r = run({"comm", "--family", "D", "--param", "p=1", "x1^2", "x2"});
  CHECK(r.code == kExitConfirmed);
  CHECK(r.out.substr(r.out.rfind('\n', r.out.size() - 2) + 1) == "0\n");
}

TEST_CASE("the Z misprint is falsified") {
  auto r = run({"verify-tables", "--family", "Z", "--variant", "misprint", "--bound", "2,2"});
  CHECK(r.code == kExitFalsified);
  CHECK(r.out.find("ClaimFalsified") != std::string::npos);
}

TEST_CASE("normal form with json output") {
  auto r = run({"nf", "--family", "D", "--param", "p=-1", "--format", "json", "y1^2*x2"});
  CHECK(r.code == kExitConfirmed);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["normal_form"] == "x2*y1^2 + 2*x1*y1*y2");
  CHECK(j["family"] == "D");
  CHECK(j["exit_status"] == 0);
}

TEST_CASE("text and json carry the same result") {
  auto t = run({"center", "--family", "O", "--bidegree", "2,0"});
  auto j = run({"center", "--family", "O", "--bidegree", "2,0", "--format", "json"});
  auto doc = nlohmann::json::parse(j.out);
  for (const auto& b : doc["result"]["basis"]) CHECK(t.out.find(b.get<std::string>()) != std::string::npos);
}

TEST_CASE("verdict exit codes") {
  CHECK(run({"central", "--family", "D", "--param", "p=1", "x1^2"}).code == kExitConfirmed);
  CHECK(run({"central", "--family", "D", "--param", "p=1", "x1"}).code == kExitFalsified);
  CHECK(run({"normality", "--family", "O", "x1^2 - f*x2^2"}).code == kExitConfirmed);
  CHECK(run({"normality", "--family", "O", "x1"}).code == kExitFalsified);
  CHECK(run({"power-central", "--family", "O", "--param", "f=2", "--n", "2", "x1^2 - f*x2^2"}).code ==
        kExitConfirmed);
  CHECK(run({"power-central", "--family", "O", "--param", "f=2", "--n", "1", "x1^2 - f*x2^2"}).code ==
        kExitFalsified);
  CHECK(run({"verify-consistency", "--family", "K", "--param", "q=1"}).code == kExitConfirmed);
  CHECK(run({"verify-consistency", "--family", "Z", "--variant", "misprint"}).code == kExitFalsified);
  CHECK(run({"cancellation", "--family", "C", "--bound", "2,2"}).code == kExitConfirmed);
  CHECK(run({"cancellation", "--family", "D", "--param", "p=1", "--bound", "2,2"}).code == kExitFalsified);
  CHECK(run({"verify-formulas", "--nmax", "2", "--family", "O"}).code == kExitConfirmed);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"center", "--family", "D", "--param", "p=1", "--bidegree", "0"}).code == kExitUsage);
  CHECK(run({"center", "--family", "D", "--param", "z=1", "--bidegree", "0,1"}).code == kExitUsage);
  CHECK(run({"center", "--family", "D", "--param", "f=1", "--bidegree", "0,1"}).code == kExitUsage);
  CHECK(run({"center", "--family", "D", "--bidegree", "0,1"}).code == kExitUsage);
  CHECK(run({"nf", "--family", "QQ", "x1"}).code == kExitUsage);
  CHECK(run({"nf", "--family", "O", "x1 +"}).code == kExitUsage);
  CHECK(run({"nf", "--family", "O", "--max-steps", "1", "y2^3*x2^3"}).code == kExitUsage);
  CHECK(run({"nf", "--family", "O", "--format", "xml", "x1"}).code == kExitUsage);
  auto e = run({"nf", "--family", "O", "x1 + * x2"});
  CHECK(e.err.find("position") != std::string::npos);
}

TEST_CASE("help and family listing") {
  CHECK(run({"--help"}).code == 0);
  auto l = run({"families", "list"});
  CHECK(l.code == 0);
  CHECK(l.out.find("Z[misprint]") != std::string::npos);
  auto s = run({"families", "show", "--family", "O", "--format", "json"});
  CHECK(nlohmann::json::parse(s.out)["family"] == "O");
  auto rr = run({"families", "render-relations", "--family", "A"});
  CHECK(rr.out.find("x_2x_1") != std::string::npos);
}
