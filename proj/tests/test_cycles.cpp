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

#include "lecycle/cycles.hpp"
#include "lecycle/parse.hpp"

using namespace lecycle;

namespace {

IdealBasis ideal(const RingPtr& r, std::initializer_list<const char*> texts, Budget& b) {
    std::vector<Polynomial> gens;
    for (auto t : texts) gens.push_back(parse(t, r));
    return global_basis(std::move(gens), b);
}

Cycle sum(Cycle a, const Cycle& b) {
    a += b;
    return a;
}

} // namespace

TEST_CASE("ideal_cycle keeps reduced ideals and splits powers") {
    auto r = make_ring({"u", "v", "x", "y"});
    Budget b;
    CHECK(ideal_cycle(ideal(r, {"y"}, b), 3, b).to_string() == "V(y)");
    CHECK(ideal_cycle(ideal(r, {"x^2", "y"}, b), 2, b).to_string() == "2*V(x, y)");
    CHECK(ideal_cycle(ideal(r, {"x^2*y^3"}, b), 3, b).to_string() == "2*V(x) + 3*V(y)");
    // Lower-dimensional ideals contribute nothing in the requested dimension.
    CHECK(ideal_cycle(ideal(r, {"x", "y", "v"}, b), 2, b).empty());
}

TEST_CASE("ideal_cycle drops pieces away from the origin") {
    auto r = make_ring({"x", "y"});
    Budget b;
    CHECK(ideal_cycle(ideal(r, {"x - 1"}, b), 1, b).empty());
    // Reduced ideals are kept whole; the germ at the origin is that of V(x).
    CHECK(ideal_cycle(ideal(r, {"x*(x - 1)"}, b), 1, b).to_string() == "V(x^2-x)");
}

TEST_CASE("ideal_cycle rejects ideals of too large a dimension") {
    auto r = make_ring({"x", "y"});
    Budget b;
    try {
        ideal_cycle(ideal(r, {"x"}, b), 0, b);
        FAIL("expected a CycleError");
    } catch (const CycleError& e) {
        CHECK(e.kind() == CycleError::Kind::ImproperIntersection);
    }
}

TEST_CASE("zero-dimensional cycles carry the local length") {
    auto r = make_ring({"x", "y"});
    Budget b;
    Cycle c = ideal_cycle(ideal(r, {"x^2", "y^3"}, b), 0, b);
    CHECK(c.to_string() == "6*[0]");
    REQUIRE(c.components().size() == 1);
    CHECK(c.components().front().is_origin());
}

TEST_CASE("polar cascade of the suspension example step by step") {
    auto r = make_ring({"u", "v", "x", "y"});
    Budget b;
    const Polynomial f = parse("y^2+x^5+u*x^4+v^2*x^2", r);
    const IdealBasis sigma = ideal(r, {"2*u*x^3+v^2*x", "x^4", "v*x^2", "v^3*x", "y"}, b);

    Cycle gamma4 = Cycle::ambient(r, b);
    CHECK(gamma4.to_string() == "V(0)");

    auto [l3, g3] = split_by_locus(intersect_hypersurface(gamma4, f.partial(3), b), sigma, b);
    CHECK(l3.empty());
    CHECK(g3.to_string() == "V(y)");

    Cycle cut2 = intersect_hypersurface(g3, f.partial(2), b);
    auto [l2, g2] = split_by_locus(cut2, sigma, b);
    CHECK(l2.to_string() == "V(x, y)");
    CHECK(g2.to_string() == "V(4*u*x^2+5*x^3+2*v^2, y)");
    CHECK(sum(l2, g2) == cut2);

    Cycle cut1 = intersect_hypersurface(g2, f.partial(1), b);
    auto [l1, g1] = split_by_locus(cut1, sigma, b);
    CHECK(l1.to_string() == "6*V(v, x, y)");
    CHECK(g1.to_string() == "V(4*u+5*x, v, y)");
    CHECK(sum(l1, g1) == cut1);

    Cycle cut0 = intersect_hypersurface(g1, f.partial(0), b);
    CHECK(cut0.to_string() == "4*[0]");

    const std::size_t u = 0, uv[] = {0, 1};
    CHECK(local_degree(l2, uv, b) == 1);
    CHECK(local_degree(l1, std::span(&u, 1), b) == 6);
}

TEST_CASE("split_by_locus partitions a reducible cycle") {
    auto r = make_ring({"x", "y"});
    Budget b;
    Cycle c = ideal_cycle(ideal(r, {"x*y"}, b), 1, b);
    CHECK(c.to_string() == "V(x*y)");
    auto [in, outside] = split_by_locus(c, ideal(r, {"x"}, b), b);
    CHECK(in.to_string() == "V(x)");
    CHECK(outside.to_string() == "V(y)");
    // The two pieces recover the original reduced component.
    const IdealBasis glued = intersection(in.components()[0].ideal, outside.components()[0].ideal, b);
    CHECK(glued == c.components()[0].ideal);

    auto [all, none] = split_by_locus(c, ideal(r, {"x*y"}, b), b);
    CHECK(all == c);
    CHECK(none.empty());
}

TEST_CASE("hypersurfaces containing a component are rejected") {
    auto r = make_ring({"x", "y"});
    Budget b;
    Cycle c = ideal_cycle(ideal(r, {"y"}, b), 1, b);
    try {
        intersect_hypersurface(c, parse("x*y", r), b);
        FAIL("expected a CycleError");
    } catch (const CycleError& e) {
        CHECK(e.kind() == CycleError::Kind::VanishesOnComponent);
    }
}

TEST_CASE("cycles merge equal components") {
    auto r = make_ring({"x", "y"});
    Budget b;
    Cycle c(r, 1);
    c.add(ideal(r, {"y"}, b), 2);
    c.add(ideal(r, {"x"}, b), 1);
    c.add(ideal(r, {"2*y"}, b), 3);
    CHECK(c.to_string() == "V(x) + 5*V(y)");
    CHECK(Cycle(r, 1).to_string() == "0");
}

TEST_CASE("Jacobian reducedness test") {
    auto r = make_ring({"x", "y", "z"});
    Budget b;
    CHECK(generically_reduced(ideal(r, {"x", "y"}, b), 1, b));
    CHECK(generically_reduced(ideal(r, {"x*y"}, b), 2, b));
    CHECK_FALSE(generically_reduced(ideal(r, {"x^2", "y"}, b), 1, b));
    CHECK_FALSE(generically_reduced(ideal(r, {"x^2*y"}, b), 2, b));
}
