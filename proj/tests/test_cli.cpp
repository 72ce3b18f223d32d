/*
   Copyright 2026 The lecycle Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"

#include "lecycle/cli.hpp"

using namespace lecycle;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

const std::vector<std::string> kFlagship{"le", "--f", "y^2+x^5+u*x^4+v^2*x^2", "--vars", "u,v,x,y"};

std::vector<std::string> with(std::vector<std::string> base, std::initializer_list<std::string> more) {
    base.insert(base.end(), more);
    return base;
}

} // namespace

TEST_CASE("le prints the Le numbers") {
    Run r = run(kFlagship);
    CHECK(r.code == kExitPass);
    CHECK(r.out.find("lambda: [4, 6, 1]\n") != std::string::npos);
    CHECK(r.out.find("Lambda^1 = 6*V(v, x, y)") != std::string::npos);
    CHECK(r.err.empty());

    Run morse = run({"le", "--f", "x^2+y^2", "--vars", "x,y"});
    CHECK(morse.code == kExitPass);
    CHECK(morse.out.find("lambda: [1]\n") != std::string::npos);
}

TEST_CASE("le structured output is deterministic and matches the golden file") {
    Run a = run(with(kFlagship, {"--format", "json"}));
    Run b = run(with(kFlagship, {"--format", "json"}));
    CHECK(a.code == kExitPass);
    CHECK(a.out == b.out);
    CHECK(a.out == slurp(LECYCLE_SOURCE_DIR "/docs/golden/flagship-le.json"));

    auto doc = nlohmann::json::parse(a.out);
    CHECK(doc["schema"] == "lecycle-report/1");
    CHECK(doc["result"]["lambda"] == nlohmann::json::array({4, 6, 1}));
    const auto& steps = doc["result"]["steps"];
    REQUIRE(steps.size() == 4);
    CHECK(steps[0]["gamma"]["text"] == "V(y)");
    CHECK(steps[1]["gamma"]["text"] == "V(4*u*x^2+5*x^3+2*v^2, y)");
    CHECK(steps[1]["lambda_cycle"]["text"] == "V(x, y)");
    CHECK(steps[2]["gamma"]["text"] == "V(4*u+5*x, v, y)");
    CHECK(steps[2]["lambda_cycle"]["components"][0]["multiplicity"] == 6);
    CHECK(steps[3]["lambda_cycle"]["components"][0]["origin"] == true);
    CHECK(steps[3]["lambda"] == 4);
}

TEST_CASE("bounds windows") {
    Run r = run({"bounds", "--lambda0", "4", "--imdim", "4"});
    CHECK(r.code == kExitPass);
    CHECK(r.out.find("betti window: [0, 0]") != std::string::npos);

    r = run({"bounds", "--lambda0", "5", "--imdim", "0"});
    CHECK(r.out.find("betti window: [3, 5] (exact lower 5/2)") != std::string::npos);

    r = run({"bounds", "--lambda0", "4", "--betti", "0", "--format", "json"});
    CHECK(r.code == kExitPass);
    CHECK(r.out == slurp(LECYCLE_SOURCE_DIR "/docs/golden/flagship-bounds.json"));

    r = run({"bounds", "--lambdas", "4,6,1", "--bettis", "0,1,0", "--imdim", "4"});
    CHECK(r.code == kExitPass);
    CHECK(r.out.find("check alternating-sum: pass") != std::string::npos);

    r = run({"bounds", "--lambdas", "4,6,1", "--bettis", "0,2,0"});
    CHECK(r.code == kExitFail);
}

TEST_CASE("corpus and perv summaries") {
    Run r = run({"corpus", "run", "--filter", "brieskorn"});
    CHECK(r.code == kExitPass);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find(" failed\n") != std::string::npos);

    r = run({"perv", "verify", "--trials", "1000", "--seed", "7", "--prime", "5"});
    CHECK(r.code == kExitPass);
    CHECK(r.out == "perv: 1000/1000 trials pass over GF(5) (seed 7)\n");

    r = run({"perv", "verify", "--trials", "0"});
    CHECK(r.code == kExitPass);

    Run a = run({"corpus", "run", "--format", "json"});
    Run b = run({"corpus", "run", "--format", "json"});
    CHECK(a.code == kExitPass);
    CHECK(a.out == b.out);
}

TEST_CASE("exit code contract") {
    CHECK(run({"le", "--f", "0", "--vars", "x,y"}).code == kExitInput);
    CHECK(run({"le", "--f", "x^", "--vars", "x,y"}).code == kExitInput);
    CHECK(run({"le", "--f", "z^2", "--vars", "x,y"}).code == kExitInput);
    CHECK(run({"le", "--f", "x^2", "--vars", "x", "--prime", "4"}).code == kExitInput);
    CHECK(run({"le", "--vars", "x"}).code == kExitInput);
    CHECK(run({"frobnicate"}).code == kExitInput);
    CHECK(run({"bounds", "--lambda0", "3", "--imdim", "4"}).code == kExitInput);
    CHECK(run({"bounds", "--lambda0", "3"}).code == kExitInput);
    CHECK(run({"corpus", "run", "--file", "/nonexistent/corpus.json"}).code == kExitInput);
    CHECK(run(with(kFlagship, {"--budget", "50"})).code == kExitBudget);
    CHECK(run({"le", "--f", "x^2*y^2", "--vars", "x,y"}).code == kExitFail);
    CHECK(run({"--help"}).code == kExitPass);

    Run err = run(with(kFlagship, {"--budget", "50", "--format", "json"}));
    CHECK(err.err.find("budget") != std::string::npos);
    auto doc = nlohmann::json::parse(err.out);
    CHECK(doc["status"] == "error");
    CHECK(doc["error"]["kind"] == "budget");
}

TEST_CASE("budget default comes from the environment") {
    ::setenv(kBudgetEnv, "50", 1);
    CHECK(run(kFlagship).code == kExitBudget);
    CHECK(run(with(kFlagship, {"--budget", "100000"})).code == kExitPass);
    ::setenv(kBudgetEnv, "lots", 1);
    CHECK(run(kFlagship).code == kExitInput);
    ::unsetenv(kBudgetEnv);
    CHECK(run(kFlagship).code == kExitPass);
}
