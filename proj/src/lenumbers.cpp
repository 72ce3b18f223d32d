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

#include "lecycle/lenumbers.hpp"

#include <map>
#include <random>

namespace lecycle {

void LeInput::validate() const {
    if (f.is_zero()) throw InputError("f is identically zero");
    if (!f.constant_term().is_zero()) throw InputError("f must vanish at the origin");
    const auto& vars = f.ring()->variables();
    if (coords.size() != vars.size())
        throw InputError("coordinate list must name each of the " + std::to_string(vars.size()) +
                         " variables exactly once");
    std::vector<char> seen(vars.size(), 0);
    for (const auto& c : coords) {
        std::size_t i = f.ring()->index_of(c);
        if (seen[i]) throw InputError("coordinate '" + c + "' listed twice");
        seen[i] = 1;
    }
}

std::vector<std::size_t> LeInput::coordinate_indices() const {
    std::vector<std::size_t> idx;
    for (const auto& c : coords) idx.push_back(f.ring()->index_of(c));
    return idx;
}

CriticalLocus critical_locus(const Polynomial& f, Budget& budget) {
    if (f.is_constant()) throw InputError("f is constant");
    std::vector<Polynomial> partials;
    for (std::size_t i = 0; i < f.ring()->size(); ++i) partials.push_back(f.partial(i));
    IdealBasis jac = global_basis(partials, budget);
    int dim = dimension(jac);
    int local_dim = dimension(localize(jac, budget));
    return {std::move(jac), dim, local_dim};
}

std::uint64_t LeResult::lambda(int k) const { return step(k).lambda; }

const LeStep& LeResult::step(int k) const {
    const int n = static_cast<int>(steps.size()) - 1;
    if (k < 0 || k > n) throw std::out_of_range("no cascade step k=" + std::to_string(k));
    return steps[static_cast<std::size_t>(n - k)];
}

std::vector<std::uint64_t> LeResult::lambda_list() const {
    std::vector<std::uint64_t> out;
    for (int k = 0; k <= std::max(s(), 0); ++k) out.push_back(lambda(k));
    return out;
}

LeResult le_cascade(const LeInput& input, Budget& budget) {
    input.validate();
    const std::uint64_t start = budget.used();
    const auto idx = input.coordinate_indices();
    const Polynomial& f = input.f;
    const RingPtr& ring = f.ring();
    const int n = static_cast<int>(idx.size()) - 1;

    CriticalLocus locus = critical_locus(f, budget);
    Cycle gamma = Cycle::ambient(ring, budget);
    LeResult result{input.coords, locus, gamma, {}, {}, 0};

    for (int k = n; k >= 0; --k) {
        Polynomial g = f.partial(idx[static_cast<std::size_t>(k)]);
        try {
            Cycle cut = intersect_hypersurface(gamma, g, budget);
            auto [inside, outside] = split_by_locus(cut, locus.jacobian, budget);
            std::vector<std::size_t> slice(idx.begin(), idx.begin() + k);
            std::uint64_t lam = local_degree(inside, slice, budget);
            result.steps.push_back({k, g, outside, inside, lam});
            gamma = std::move(outside);
        } catch (const CycleError& e) {
            if (e.kind() == CycleError::Kind::NotGenericallyReduced) throw;
            throw NonPrepolarError(k, e.kind(), e.what());
        }
    }

    const int s = locus.local_dimension;
    bool zero_above = true;
    for (int k = std::max(s, 0) + 1; k <= n; ++k) zero_above = zero_above && result.lambda(k) == 0;
    result.checks.push_back({"polar-dimensions", true, "each cut dropped the dimension by exactly one"});
    result.checks.push_back({"slices-zero-dimensional", true, "every Le cycle slice has finite length"});
    result.checks.push_back({"lambda-zero-above-s", zero_above, "s = " + std::to_string(s)});
    if (s >= 0) {
        bool top = result.lambda(s) > 0;
        result.checks.push_back({"lambda-s-positive", top, "lambda^" + std::to_string(s) + " = " +
                                                               std::to_string(result.lambda(s))});
    }
    result.budget_used = budget.used() - start;
    return result;
}

std::uint64_t milnor_number_isolated(const Polynomial& f, Budget& budget) {
    CriticalLocus locus = critical_locus(f, budget);
    if (locus.local_dimension > 0)
        throw InputError("critical locus has dimension " + std::to_string(locus.local_dimension) +
                         " at the origin");
    if (locus.local_dimension < 0) return 0;
    return *local_multiplicity(localize(locus.jacobian, budget));
}

Polynomial compose(const Polynomial& p, const std::vector<Polynomial>& images) {
    const RingPtr& ring = p.ring();
    if (images.size() != ring->size()) throw std::invalid_argument("compose needs one image per variable");
    RingPtr target = images.empty() ? ring : images.front().ring();
    std::map<std::pair<std::size_t, std::uint32_t>, Polynomial> powers;
    Polynomial acc(target);
    for (const auto& t : p.terms()) {
        Polynomial term = Polynomial::constant(target, t.coefficient);
        for (std::size_t i = 0; i < ring->size(); ++i) {
            std::uint32_t e = t.monomial[i];
            if (!e) continue;
            auto it = powers.find({i, e});
            if (it == powers.end()) it = powers.emplace(std::make_pair(i, e), images[i].pow(e)).first;
            term *= it->second;
        }
        acc += term;
    }
    return acc;
}

Polynomial random_linear_change(const Polynomial& f, std::uint64_t seed) {
    const std::size_t n = f.ring()->size();
    std::mt19937_64 rng(seed);
    auto draw = [&] { return static_cast<long>(rng() % 5) - 2; };
    std::vector<std::vector<long>> lo(n, std::vector<long>(n, 0)), up = lo;
    for (std::size_t i = 0; i < n; ++i) {
        lo[i][i] = up[i][i] = 1;
        for (std::size_t j = 0; j < i; ++j) lo[i][j] = draw();
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) up[i][j] = draw();
    std::vector<Polynomial> images;
    for (std::size_t i = 0; i < n; ++i) {
        Polynomial img(f.ring());
        for (std::size_t j = 0; j < n; ++j) {
            long a = 0;
            for (std::size_t k = 0; k < n; ++k) a += lo[i][k] * up[k][j];
            if (a) img += Polynomial::variable(f.ring(), j).scaled(Coefficient(f.field(), a));
        }
        images.push_back(std::move(img));
    }
    return compose(f, images);
}

} // namespace lecycle
