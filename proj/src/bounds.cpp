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

#include "lecycle/bounds.hpp"

#include <algorithm>

#include "lecycle/errors.hpp"

namespace lecycle {

namespace {

Check verdict(std::string name, bool ok, std::string detail) {
    return {std::move(name), ok ? Status::Pass : Status::Fail, std::move(detail)};
}

Check skipped(std::string name, std::string why) { return {std::move(name), Status::NotEvaluated, std::move(why)}; }

std::string str(std::uint64_t v) { return std::to_string(v); }

} // namespace

std::string to_string(Status s) {
    switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::NotEvaluated: return "not-evaluated";
    }
    return "?";
}

BettiBounds main_theorem_bounds(std::uint64_t lambda0, std::uint64_t imdim) {
    if (imdim > lambda0)
        throw InputError("image dimension " + str(imdim) + " exceeds lambda0 = " + str(lambda0));
    const std::uint64_t upper = lambda0 - imdim;
    mpq_class exact(static_cast<unsigned long>(upper), 2UL);
    exact.canonicalize();
    return {exact, {(upper + 1) / 2, upper}};
}

Window monodromy_image_window(std::uint64_t lambda0, std::uint64_t betti_n) {
    if (betti_n > lambda0) throw InputError("betti number " + str(betti_n) + " exceeds lambda0 = " + str(lambda0));
    const std::uint64_t lower = lambda0 >= 2 * betti_n ? lambda0 - 2 * betti_n : 0;
    return {lower, lambda0 - betti_n};
}

void validate(const std::vector<OneDimComponent>& data) {
    if (data.empty()) throw InputError("one-dimensional data needs at least one component");
    for (std::size_t i = 0; i < data.size(); ++i) {
        const auto& c = data[i];
        const std::string at = "component " + str(i) + ": ";
        if (c.multiplicity == 0) throw InputError(at + "multiplicity must be at least 1");
        if (!c.monodromy) continue;
        const Matrix& h = *c.monodromy;
        if (h.rows() != c.transversal_milnor || h.cols() != c.transversal_milnor)
            throw InputError(at + "monodromy must be " + str(c.transversal_milnor) + " x " +
                             str(c.transversal_milnor));
        if (h.rank() != h.rows()) throw InputError(at + "monodromy is not invertible");
    }
}

std::optional<std::uint64_t> fixed_part_dimension(const std::vector<OneDimComponent>& data) {
    std::uint64_t total = 0;
    for (const auto& c : data) {
        if (!c.monodromy) return std::nullopt;
        const Matrix& h = *c.monodromy;
        total += (Matrix::identity(h.field(), h.rows()) - h).nullity();
    }
    return total;
}

std::vector<Check> one_dim_relations(std::uint64_t lambda0, std::uint64_t lambda1,
                                     const std::vector<OneDimComponent>& data,
                                     std::optional<std::uint64_t> betti_n_minus_1,
                                     std::optional<std::uint64_t> betti_n) {
    validate(data);
    std::vector<Check> out;
    std::uint64_t sum = 0;
    for (const auto& c : data) sum += c.multiplicity * c.transversal_milnor;
    out.push_back(verdict("lambda1-transversal-sum", sum == lambda1,
                          "sum mult*mu = " + str(sum) + ", lambda1 = " + str(lambda1)));

    auto fixed = fixed_part_dimension(data);
    if (!fixed)
        out.push_back(skipped("fixed-part-bound", "internal monodromy not supplied for every component"));
    else if (!betti_n_minus_1)
        out.push_back(skipped("fixed-part-bound", "b[n-1] not supplied; fixed part has dimension " + str(*fixed)));
    else
        out.push_back(verdict("fixed-part-bound", *betti_n_minus_1 <= *fixed,
                              "b[n-1] = " + str(*betti_n_minus_1) + " <= sum dim ker(id-h) = " + str(*fixed)));

    if (betti_n)
        out.push_back(verdict("top-betti-bound", *betti_n <= lambda0,
                              "b[n] = " + str(*betti_n) + " <= lambda0 = " + str(lambda0)));
    else
        out.push_back(skipped("top-betti-bound", "b[n] not supplied"));

    if (betti_n_minus_1)
        out.push_back(verdict("next-betti-bound", *betti_n_minus_1 <= lambda1,
                              "b[n-1] = " + str(*betti_n_minus_1) + " <= lambda1 = " + str(lambda1)));
    else
        out.push_back(skipped("next-betti-bound", "b[n-1] not supplied"));

    if (betti_n && betti_n_minus_1) {
        const auto lhs = static_cast<std::int64_t>(*betti_n) - static_cast<std::int64_t>(*betti_n_minus_1);
        const auto rhs = static_cast<std::int64_t>(lambda0) - static_cast<std::int64_t>(lambda1);
        out.push_back(verdict("euler-difference", lhs == rhs,
                              "b[n] - b[n-1] = " + std::to_string(lhs) + ", lambda0 - lambda1 = " +
                                  std::to_string(rhs)));
    } else {
        out.push_back(skipped("euler-difference", "needs both b[n] and b[n-1]"));
    }
    return out;
}

std::vector<Check> chain_complex_constraints(const std::vector<std::uint64_t>& lambdas,
                                             const std::vector<std::uint64_t>& betti) {
    if (lambdas.size() != betti.size())
        throw InputError("lambda list has " + str(lambdas.size()) + " entries but betti list has " +
                         str(betti.size()));
    std::vector<Check> out;
    std::int64_t alt_lambda = 0, alt_betti = 0;
    for (std::size_t k = 0; k < lambdas.size(); ++k) {
        out.push_back(verdict("betti-below-lambda" + str(k), betti[k] <= lambdas[k],
                              "b[n-" + str(k) + "] = " + str(betti[k]) + " <= lambda" + str(k) + " = " +
                                  str(lambdas[k])));
        const std::int64_t sign = k % 2 ? -1 : 1;
        alt_lambda += sign * static_cast<std::int64_t>(lambdas[k]);
        alt_betti += sign * static_cast<std::int64_t>(betti[k]);
    }
    out.push_back(verdict("alternating-sum", alt_lambda == alt_betti,
                          "lambda: " + std::to_string(alt_lambda) + ", betti: " + std::to_string(alt_betti)));
    return out;
}

bool BoundReport::all_pass() const {
    return std::none_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == Status::Fail; });
}

BoundReport build_report(std::vector<std::uint64_t> lambdas, int n, std::optional<std::uint64_t> imdim,
                         std::optional<std::vector<std::uint64_t>> betti,
                         const std::optional<std::vector<OneDimComponent>>& one_dim, bool complete) {
    if (lambdas.empty()) throw InputError("lambda list is empty");
    BoundReport r;
    r.lambdas = std::move(lambdas);
    r.n = n;
    r.imdim = imdim;
    r.betti = std::move(betti);
    const std::uint64_t l0 = r.lambdas.front();

    if (imdim) r.betti_window = main_theorem_bounds(l0, *imdim);
    if (r.betti) {
        if (r.betti->empty()) throw InputError("betti list is empty");
        r.image_window = monodromy_image_window(l0, r.betti->front());
        if (complete && r.betti->size() == r.lambdas.size()) {
            auto cc = chain_complex_constraints(r.lambdas, *r.betti);
            r.checks.insert(r.checks.end(), cc.begin(), cc.end());
        } else if (complete && r.betti->size() > 1) {
            throw InputError("lambda list has " + str(r.lambdas.size()) + " entries but betti list has " +
                             str(r.betti->size()));
        } else {
            r.checks.push_back(skipped("alternating-sum", complete ? "only b[n] supplied" : "lambda list is partial"));
        }
    }
    if (imdim && r.betti) {
        const std::uint64_t b = r.betti->front();
        r.checks.push_back(verdict("betti-in-main-window", r.betti_window->window.contains(b),
                                   "b[n] = " + str(b) + " in [" + str(r.betti_window->window.lower) + ", " +
                                       str(r.betti_window->window.upper) + "]"));
        r.checks.push_back(verdict("imdim-in-image-window", r.image_window->contains(*imdim),
                                   "imdim = " + str(*imdim) + " in [" + str(r.image_window->lower) + ", " +
                                       str(r.image_window->upper) + "]"));
    }
    if (one_dim) {
        std::optional<std::uint64_t> bn, bn1;
        if (r.betti) {
            bn = (*r.betti)[0];
            if (r.betti->size() > 1) bn1 = (*r.betti)[1];
        }
        const std::uint64_t l1 = r.lambdas.size() > 1 ? r.lambdas[1] : 0;
        auto od = one_dim_relations(l0, l1, *one_dim, bn1, bn);
        r.checks.insert(r.checks.end(), od.begin(), od.end());
    }
    return r;
}

} // namespace lecycle
