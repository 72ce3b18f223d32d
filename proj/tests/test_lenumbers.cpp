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

#include "doctest.h"

#include "lecycle/lenumbers.hpp"
#include "lecycle/parse.hpp"

using namespace lecycle;

namespace {

LeResult cascade(const std::string& f, std::vector<std::string> vars, Budget& b) {
    auto r = make_ring(vars);
    return le_cascade({parse(f, r), vars}, b);
}

using Counts = std::vector<std::uint64_t>;

} // namespace

TEST_CASE("suspension example: Le numbers and every intermediate cycle") {
    Budget b;
    LeResult r = cascade("y^2+x^5+u*x^4+v^2*x^2", {"u", "v", "x", "y"}, b);
    CHECK(r.s() == 2);
    CHECK(r.lambda_list() == Counts{4, 6, 1});
    CHECK(r.lambda(3) == 0);
    CHECK(r.top_gamma.to_string() == "V(0)");
    CHECK(r.step(3).gamma.to_string() == "V(y)");
    CHECK(r.step(3).lambda_cycle.empty());
    CHECK(r.step(2).gamma.to_string() == "V(4*u*x^2+5*x^3+2*v^2, y)");
    CHECK(r.step(2).lambda_cycle.to_string() == "V(x, y)");
    CHECK(r.step(1).gamma.to_string() == "V(4*u+5*x, v, y)");
    CHECK(r.step(1).lambda_cycle.to_string() == "6*V(v, x, y)");
    CHECK(r.step(0).gamma.empty());
    CHECK(r.step(0).lambda_cycle.to_string() == "4*[0]");
    for (const auto& c : r.checks) CHECK_MESSAGE(c.passed, c.name);
}

TEST_CASE("Brieskorn curves: lambda0 is the Milnor number (a-1)(b-1)") {
    for (int a = 2; a <= 6; ++a)
        for (int bb = 2; bb <= 6; ++bb) {
            Budget b;
            const std::string f = "x^" + std::to_string(a) + "+y^" + std::to_string(bb);
            LeResult r = cascade(f, {"x", "y"}, b);
            CAPTURE(f);
            CHECK(r.s() == 0);
            CHECK(r.lambda_list() == Counts{static_cast<std::uint64_t>((a - 1) * (bb - 1))});
        }
}

TEST_CASE("Brieskorn surfaces in three variables") {
    Budget b;
    CHECK(cascade("x^2+y^2+z^2", {"x", "y", "z"}, b).lambda_list() == Counts{1});
    CHECK(cascade("x^2+y^3+z^4", {"x", "y", "z"}, b).lambda_list() == Counts{6});
    CHECK(cascade("x^3+y^3+z^3", {"x", "y", "z"}, b).lambda_list() == Counts{8});
}

TEST_CASE("lambda0 agrees with the Jacobian colength for isolated singularities") {
    for (const char* f : {"x^2*y+y^4", "x^3+x*y^3", "x^3+x*y^4", "x^4+y^5+x^2*y^2"}) {
        Budget b;
        auto ring = make_ring({"x", "y"});
        LeResult r = le_cascade({parse(f, ring), {"x", "y"}}, b);
        CAPTURE(f);
        CHECK(r.lambda(0) == milnor_number_isolated(parse(f, ring), b));
    }
}

TEST_CASE("lines of singular points") {
    Budget b;
    LeResult r = cascade("y^2", {"x", "y"}, b);
    CHECK(r.s() == 1);
    CHECK(r.lambda_list() == Counts{0, 1});
    CHECK(r.step(1).lambda_cycle.to_string() == "V(y)");
    CHECK(cascade("y^3", {"x", "y"}, b).lambda_list() == Counts{0, 2});
    CHECK(cascade("x^2*y+z^2", {"y", "x", "z"}, b).lambda_list() == Counts{2, 1});
}

TEST_CASE("coordinate order matters and is validated") {
    Budget b;
    auto ring = make_ring({"x", "y", "z"});
    const Polynomial f = parse("x^2+y^2", ring);
    CHECK(le_cascade({f, {"z", "x", "y"}}, b).lambda_list() == Counts{0, 1});
    CHECK_THROWS_AS(le_cascade({f, {"x", "y"}}, b), InputError);
    CHECK_THROWS_AS(le_cascade({f, {"x", "x", "y"}}, b), InputError);
    CHECK_THROWS_AS(le_cascade({f, {"x", "y", "w"}}, b), InputError);
}

TEST_CASE("unusable functions are input errors") {
    Budget b;
    auto ring = make_ring({"x", "y"});
    CHECK_THROWS_AS(le_cascade({parse("0", ring), {"x", "y"}}, b), InputError);
    CHECK_THROWS_AS(le_cascade({parse("1+x^2", ring), {"x", "y"}}, b), InputError);
}

TEST_CASE("non-generic coordinates are reported as non-prepolar") {
    Budget b;
    auto ring = make_ring({"x", "y"});
    CHECK_THROWS_AS(le_cascade({parse("x^2*y^2", ring), {"x", "y"}}, b), NonPrepolarError);
}

TEST_CASE("a seeded linear change keeps lambda0 of an isolated singularity") {
    auto ring = make_ring({"x", "y"});
    const Polynomial f = parse("x^3+y^4", ring);
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        Budget b;
        const Polynomial g = random_linear_change(f, seed);
        CHECK(random_linear_change(f, seed) == g);
        CHECK(le_cascade({g, {"x", "y"}}, b).lambda(0) == 6);
    }
}

TEST_CASE("budget exhaustion surfaces as BudgetExceeded") {
    Budget b(20);
    CHECK_THROWS_AS(cascade("y^2+x^5+u*x^4+v^2*x^2", {"u", "v", "x", "y"}, b), BudgetExceeded);
}
