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

#include "lecycle/bounds.hpp"
#include "lecycle/errors.hpp"

using namespace lecycle;

namespace {

using Counts = std::vector<std::uint64_t>;

Matrix m(std::vector<std::vector<long>> rows) { return Matrix::from_rows(Field::rationals(), rows); }

Status status_of(const std::vector<Check>& checks, const std::string& name) {
    for (const auto& c : checks)
        if (c.name == name) return c.status;
    FAIL("missing check " << name);
    return Status::NotEvaluated;
}

} // namespace

TEST_CASE("betti windows") {
    BettiBounds b = main_theorem_bounds(4, 4);
    CHECK(b.window == Window{0, 0});
    CHECK(main_theorem_bounds(0, 0).window == Window{0, 0});
    b = main_theorem_bounds(5, 0);
    CHECK(b.exact_lower == mpq_class(5, 2));
    CHECK(b.window == Window{3, 5});
    CHECK_THROWS_AS(main_theorem_bounds(3, 4), InputError);
}

TEST_CASE("image windows") {
    CHECK(monodromy_image_window(4, 0) == Window{4, 4});
    CHECK(monodromy_image_window(0, 0) == Window{0, 0});
    CHECK(monodromy_image_window(6, 2) == Window{2, 4});
    CHECK(monodromy_image_window(3, 3) == Window{0, 0});
    CHECK_THROWS_AS(monodromy_image_window(2, 3), InputError);
}

TEST_CASE("the two windows describe the same inequalities") {
    for (std::uint64_t l0 = 0; l0 <= 30; ++l0)
        for (std::uint64_t im = 0; im <= l0; ++im) {
            const Window bw = main_theorem_bounds(l0, im).window;
            CHECK((bw == Window{0, 0}) == (im == l0));
            for (std::uint64_t b = 0; b <= l0; ++b)
                CHECK(bw.contains(b) == monodromy_image_window(l0, b).contains(im));
        }
}

TEST_CASE("one-dimensional relations") {
    std::vector<OneDimComponent> line{{1, 1, m({{1}})}};
    for (const auto& c : one_dim_relations(0, 1, line, 1, 0)) CHECK_MESSAGE(c.status == Status::Pass, c.name);

    // No eigenvalue 1 forces b[n-1] = 0.
    std::vector<OneDimComponent> twisted{{1, 1, m({{-1}})}};
    CHECK(fixed_part_dimension(twisted) == 0u);
    CHECK(status_of(one_dim_relations(2, 1, twisted, 1, 2), "fixed-part-bound") == Status::Fail);
    CHECK(status_of(one_dim_relations(2, 1, twisted, 0, 1), "fixed-part-bound") == Status::Pass);

    CHECK(status_of(one_dim_relations(0, 2, line, 1, 0), "lambda1-transversal-sum") == Status::Fail);

    std::vector<OneDimComponent> bare{{2, 3, std::nullopt}};
    auto checks = one_dim_relations(0, 6, bare, std::nullopt, std::nullopt);
    CHECK(status_of(checks, "lambda1-transversal-sum") == Status::Pass);
    CHECK(status_of(checks, "fixed-part-bound") == Status::NotEvaluated);
    CHECK(status_of(checks, "euler-difference") == Status::NotEvaluated);
}

TEST_CASE("malformed one-dimensional data") {
    CHECK_THROWS_AS(validate({}), InputError);
    CHECK_THROWS_AS(validate({{0, 1, std::nullopt}}), InputError);
    CHECK_THROWS_AS(validate({{1, 2, m({{1}})}}), InputError);
    CHECK_THROWS_AS(validate({{1, 2, m({{1, 1}, {1, 1}})}}), InputError);
}

TEST_CASE("chain complex constraints") {
    for (const auto& c : chain_complex_constraints({4, 6, 1}, {0, 1, 0})) CHECK_MESSAGE(c.status == Status::Pass, c.name);
    for (const auto& c : chain_complex_constraints({0, 0, 0}, {0, 0, 0})) CHECK(c.status == Status::Pass);
    for (const auto& c : chain_complex_constraints({0, 1}, {0, 1})) CHECK(c.status == Status::Pass);
    auto bad = chain_complex_constraints({4, 6, 1}, {0, 2, 0});
    CHECK(status_of(bad, "betti-below-lambda1") == Status::Pass);
    CHECK(status_of(bad, "alternating-sum") == Status::Fail);
    CHECK(status_of(chain_complex_constraints({1}, {2}), "betti-below-lambda0") == Status::Fail);
    CHECK_THROWS_AS(chain_complex_constraints({1, 2}, {1}), InputError);
}

TEST_CASE("combined report") {
    BoundReport r = build_report({4, 6, 1}, 3, 4, Counts{0, 1, 0}, std::nullopt);
    CHECK(r.betti_window->window == Window{0, 0});
    CHECK(*r.image_window == Window{4, 4});
    CHECK(r.all_pass());
    CHECK(status_of(r.checks, "imdim-in-image-window") == Status::Pass);

    BoundReport partial = build_report({4}, -1, std::nullopt, Counts{0}, std::nullopt, false);
    CHECK(status_of(partial.checks, "alternating-sum") == Status::NotEvaluated);
    CHECK(partial.all_pass());

    BoundReport wrong = build_report({5}, 1, 0, Counts{1}, std::nullopt);
    CHECK_FALSE(wrong.all_pass());
    CHECK_THROWS_AS(build_report({}, 0, 0, std::nullopt, std::nullopt), InputError);
}
