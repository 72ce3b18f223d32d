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

#include "lecycle/perv.hpp"

using namespace lecycle;

namespace {

const Field Q = Field::rationals();

Matrix m(std::vector<std::vector<long>> rows) { return Matrix::from_rows(Q, rows); }

} // namespace

TEST_CASE("identity quadruple") {
    for (std::size_t n : {1, 3}) {
        MonodromyQuadruple q(Matrix::identity(Q, n), Matrix::identity(Q, n), SelfDualWitness{Matrix::identity(Q, n), Matrix::identity(Q, n)});
        RankData d = rank_data(q);
        CHECK(d.coker_can == 0);
        CHECK(d.rank_id_minus_t == n);
        CHECK(q.monodromy() == Matrix(Q, n, n));
        SandwichBound s = sandwich_bound(q);
        CHECK(s.lower == 0);
        CHECK(s.upper == 0);
        CHECK(s.coker == 0);
        CHECK(s.holds);
        CHECK(betti_from_quadruple(q) == 0);
    }
}

TEST_CASE("complementary diagonal projections") {
    MonodromyQuadruple q(m({{1, 0}, {0, 0}}), m({{0, 0}, {0, 1}}), SelfDualWitness{m({{0, 1}, {1, 0}}), m({{0, 1}, {1, 0}})});
    RankData d = rank_data(q);
    CHECK(d.coker_can == 1);
    CHECK(d.ker_var == 1);
    CHECK(d.rank_var_can == 0);
    SandwichBound s = sandwich_bound(q);
    CHECK(s.lower == 1);
    CHECK(s.upper == 2);
    CHECK(s.coker == 1);
    CHECK(s.holds);
    CHECK(verify_witness(q));
    CHECK(betti_from_quadruple(q) == 1);
}

TEST_CASE("zero maps") {
    MonodromyQuadruple q(Matrix(Q, 2, 2), Matrix(Q, 2, 2), SelfDualWitness{Matrix::identity(Q, 2), Matrix::identity(Q, 2)});
    RankData d = rank_data(q);
    CHECK(d.coker_can == 2);
    CHECK(d.ker_var == 2);
    CHECK(d.rank_var_can == 0);
    SandwichBound s = sandwich_bound(q);
    CHECK(s.lower == 1);
    CHECK(s.upper == 2);
    CHECK(s.coker == 2);
    CHECK(betti_from_quadruple(q) == 2);
}

TEST_CASE("hypothesis violations and missing witnesses") {
    // can = 0 on K^2, var = id: coker can = 2 but ker var = 0.
    MonodromyQuadruple q(Matrix(Q, 2, 2), Matrix::identity(Q, 2));
    CHECK_THROWS_AS(sandwich_bound(q), HypothesisViolation);
    CHECK_FALSE(verify_witness(q));
    CHECK_THROWS_AS(betti_from_quadruple(q), std::invalid_argument);
    CHECK_THROWS_AS(MonodromyQuadruple(Matrix(Q, 2, 3), Matrix(Q, 2, 3)), std::invalid_argument);
}

TEST_CASE("matrix arithmetic") {
    Matrix a = m({{1, 2}, {3, 4}});
    CHECK(a.rank() == 2);
    auto inv = a.inverse();
    REQUIRE(inv);
    CHECK(a * *inv == Matrix::identity(Q, 2));
    CHECK_FALSE(m({{1, 2}, {2, 4}}).inverse());
    CHECK(m({{1, 2}, {2, 4}}).nullity() == 1);
    CHECK(a.transpose() == m({{1, 3}, {2, 4}}));
    // Over GF(2) the same matrix is singular.
    CHECK(Matrix::from_rows(Field::prime(2), {{1, 2}, {3, 4}}).rank() == 1);
    CHECK(a.to_string() == "[[1, 2], [3, 4]]");
}

TEST_CASE("self-dual generator") {
    MonodromyQuadruple empty = self_dual(3, 0, 0, Q);
    CHECK(empty.dim_psi() == 0);
    CHECK(empty.dim_phi() == 0);
    CHECK(sandwich_bound(empty).upper == 0);

    for (std::uint64_t seed = 0; seed < 50; ++seed)
        for (Field f : {Q, Field::prime(5)}) {
            MonodromyQuadruple q = self_dual(seed, seed % 5, (seed / 5) % 5, f);
            CAPTURE(seed);
            CHECK(verify_witness(q));
            RankData d = rank_data(q);
            CHECK(d.coker_can == d.ker_var);
            CHECK(d.rank_var_can <= std::min(d.rank_can, d.rank_var));
            CHECK(d.rank_id_minus_t == d.rank_var_can);
            CHECK(sandwich_bound(q).holds);
        }
    CHECK(self_dual(11, 4, 3, Q).can() == self_dual(11, 4, 3, Q).can());
}

TEST_CASE("seeded trials") {
    TrialSummary t = run_trials(300, 7, Field::prime(5));
    CHECK(t.trials == 300);
    CHECK(t.passed == 300);
    CHECK(t.failures.empty());
    CHECK(run_trials(0, 1, Q).passed == 0);
    CHECK(run_trials(50, 9, Q).passed == 50);
}
