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

#include "lecycle/cycles.hpp"

#include <algorithm>

namespace lecycle {

std::string to_string(CycleError::Kind kind) {
    switch (kind) {
    case CycleError::Kind::ImproperIntersection: return "improper-intersection";
    case CycleError::Kind::VanishesOnComponent: return "vanishes-on-component";
    case CycleError::Kind::ZeroDivisor: return "zero-divisor";
    case CycleError::Kind::NotGenericallyReduced: return "not-generically-reduced";
    case CycleError::Kind::SliceNotZeroDimensional: return "slice-not-zero-dimensional";
    }
    return "unknown";
}

namespace {

IdealBasis origin_ideal(const RingPtr& ring, Budget& budget) {
    std::vector<Polynomial> vars;
    for (std::size_t i = 0; i < ring->size(); ++i) vars.push_back(Polynomial::variable(ring, i));
    if (vars.empty()) vars.push_back(Polynomial(ring));
    return global_basis(std::move(vars), budget);
}

bool through_origin(const IdealBasis& ideal) {
    for (const auto& g : ideal.basis())
        if (!g.constant_term().is_zero()) return false;
    return true;
}

std::uint64_t length_at_origin(const IdealBasis& ideal, Budget& budget) {
    auto len = local_multiplicity(localize(ideal, budget));
    if (!len) throw CycleError(CycleError::Kind::SliceNotZeroDimensional,
                               "ideal " + ideal.to_string() + " is not zero-dimensional at the origin");
    return *len;
}

Polynomial determinant(std::vector<std::vector<Polynomial>> m) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    Polynomial acc(m[0][0].ring());
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<Polynomial>> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<Polynomial> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(std::move(row));
        }
        Polynomial term = m[0][j] * determinant(std::move(minor));
        if (j % 2) acc -= term;
        else acc += term;
    }
    return acc;
}

// Calls fn on each increasing k-subset of {0..n-1}; stops when fn returns true.
template <class Fn>
bool for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
    if (k > n) return false;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
        if (fn(idx)) return true;
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return false;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

void add_scaled(Cycle& into, const Cycle& from, std::uint64_t factor) {
    for (const auto& c : from.components()) into.add(c.ideal, c.multiplicity * factor);
}

bool is_nonzerodivisor(const IdealBasis& ideal, const Polynomial& h, Budget& budget) {
    return same_ideal(quotient(ideal, h, budget), ideal);
}

} // namespace

bool Component::is_origin() const {
    const auto& b = ideal.basis();
    const std::size_t n = ideal.ring()->size();
    if (b.size() != n) return false;
    for (const auto& g : b)
        if (g.num_terms() != 1 || g.total_degree() != 1) return false;
    return true;
}

std::string Component::to_string() const {
    std::string body = is_origin() ? "[0]" : "V" + ideal.to_string();
    return multiplicity == 1 ? body : std::to_string(multiplicity) + "*" + body;
}

Cycle Cycle::ambient(const RingPtr& ring, Budget& budget) {
    Cycle c(ring, static_cast<int>(ring->size()));
    c.add(global_basis({Polynomial(ring)}, budget), 1);
    return c;
}

void Cycle::add(IdealBasis ideal, std::uint64_t m) {
    if (m == 0) return;
    require_same_ring(ring_, ideal.ring());
    if (ideal.order().kind() != MonomialOrder::Kind::Global)
        throw std::invalid_argument("cycle components need grevlex bases");
    for (auto& p : parts_)
        if (p.ideal == ideal) {
            p.multiplicity += m;
            return;
        }
    Component c{std::move(ideal), m};
    const std::string key = c.ideal.to_string();
    auto at = std::find_if(parts_.begin(), parts_.end(),
                           [&](const Component& p) { return key < p.ideal.to_string(); });
    parts_.insert(at, std::move(c));
}

Cycle& Cycle::operator+=(const Cycle& other) {
    require_same_ring(ring_, other.ring_);
    if (dim_ != other.dim_) throw std::invalid_argument("adding cycles of different dimensions");
    for (const auto& c : other.parts_) add(c.ideal, c.multiplicity);
    return *this;
}

std::string Cycle::to_string() const {
    if (parts_.empty()) return "0";
    std::string s;
    for (const auto& c : parts_) {
        if (!s.empty()) s += " + ";
        s += c.to_string();
    }
    return s;
}

bool operator==(const Cycle& a, const Cycle& b) {
    if (!same_ring(a.ring_, b.ring_) || a.dim_ != b.dim_ || a.parts_.size() != b.parts_.size()) return false;
    for (std::size_t i = 0; i < a.parts_.size(); ++i)
        if (!(a.parts_[i].ideal == b.parts_[i].ideal) || a.parts_[i].multiplicity != b.parts_[i].multiplicity)
            return false;
    return true;
}

bool generically_reduced(const IdealBasis& ideal, int dim, Budget& budget) {
    const std::size_t n = ideal.ring()->size();
    if (dim >= static_cast<int>(n)) return true;
    const std::size_t c = n - static_cast<std::size_t>(dim);
    const auto& rows = ideal.basis();
    if (rows.size() < c) return false;

    std::vector<std::vector<Polynomial>> jac;
    for (const auto& g : rows) {
        std::vector<Polynomial> row;
        for (std::size_t j = 0; j < n; ++j) row.push_back(g.partial(j));
        jac.push_back(std::move(row));
    }

    constexpr std::size_t kBatch = 6;
    IdealBasis acc = ideal;
    std::vector<Polynomial> batch;
    auto flush = [&] {
        acc = ideal_sum(acc, batch, budget);
        batch.clear();
        return dimension(acc) < dim;
    };
    bool done = for_each_subset(rows.size(), c, [&](const std::vector<std::size_t>& ri) {
        return for_each_subset(n, c, [&](const std::vector<std::size_t>& ci) {
            std::vector<std::vector<Polynomial>> m;
            for (auto r : ri) {
                std::vector<Polynomial> row;
                for (auto k : ci) row.push_back(jac[r][k]);
                m.push_back(std::move(row));
            }
            Polynomial d = determinant(std::move(m));
            if (d.is_zero()) return false;
            batch.push_back(std::move(d));
            return batch.size() >= kBatch && flush();
        });
    });
    if (done) return true;
    return !batch.empty() ? flush() : dimension(acc) < dim;
}

Cycle ideal_cycle(const IdealBasis& ideal, int dim, Budget& budget) {
    budget.charge();
    const RingPtr& ring = ideal.ring();
    Cycle out(ring, dim);
    if (ideal.is_unit() || !through_origin(ideal)) return out;
    int d = dimension(ideal);
    if (d < dim) return out;
    if (d > dim)
        throw CycleError(CycleError::Kind::ImproperIntersection,
                         "V" + ideal.to_string() + " has dimension " + std::to_string(d) + ", expected " +
                             std::to_string(dim));
    if (dim == 0) {
        out.add(origin_ideal(ring, budget), length_at_origin(ideal, budget));
        return out;
    }
    if (generically_reduced(ideal, dim, budget)) {
        out.add(ideal, 1);
        return out;
    }

    // Write the ideal as rest + (p) with p a nonzerodivisor on rest, then
    // split p into squarefree factors: [rest + (p)] = Σ e_i [rest + (h_i)].
    const auto& b = ideal.basis();
    for (std::size_t k = 0; k < b.size(); ++k) {
        auto factors = squarefree_factors(b[k], budget);
        if (factors.size() == 1 && factors.front().multiplicity == 1) continue;
        std::vector<Polynomial> others;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (j != k) others.push_back(b[j]);
        if (others.empty()) others.push_back(Polynomial(ring));
        IdealBasis rest = global_basis(std::move(others), budget);
        if (dimension(rest) != dim + 1) continue;
        bool regular = std::all_of(factors.begin(), factors.end(),
                                   [&](const SquarefreeFactor& f) { return is_nonzerodivisor(rest, f.factor, budget); });
        if (!regular) continue;
        for (const auto& f : factors) {
            std::vector<Polynomial> h{f.factor};
            add_scaled(out, ideal_cycle(ideal_sum(rest, h, budget), dim, budget), f.multiplicity);
        }
        return out;
    }
    throw CycleError(CycleError::Kind::NotGenericallyReduced,
                     "cannot resolve the multiplicity structure of V" + ideal.to_string());
}

Cycle intersect_hypersurface(const Cycle& c, const Polynomial& g, Budget& budget) {
    require_same_ring(c.ring(), g.ring());
    if (c.dimension() <= 0) throw std::invalid_argument("cannot cut a zero-dimensional cycle");
    const int dim = c.dimension() - 1;
    Cycle out(c.ring(), dim);
    if (c.empty()) return out;
    std::vector<SquarefreeFactor> factors;
    if (dim > 0 && !g.is_zero()) factors = squarefree_factors(g, budget);
    std::vector<Polynomial> gv{g};

    for (const auto& comp : c.components()) {
        const IdealBasis& k = comp.ideal;
        if (contains(k, g, budget))
            throw CycleError(CycleError::Kind::VanishesOnComponent,
                             g.to_string() + " vanishes on V" + k.to_string());
        if (dim == 0) {
            std::uint64_t len = length_at_origin(ideal_sum(k, gv, budget), budget);
            if (len) out.add(origin_ideal(c.ring(), budget), comp.multiplicity * len);
            continue;
        }
        for (const auto& f : factors) {
            if (!is_nonzerodivisor(k, f.factor, budget))
                throw CycleError(CycleError::Kind::ZeroDivisor,
                                 f.factor.to_string() + " is a zero divisor modulo " + k.to_string());
            std::vector<Polynomial> h{f.factor};
            add_scaled(out, ideal_cycle(ideal_sum(k, h, budget), dim, budget), comp.multiplicity * f.multiplicity);
        }
    }
    return out;
}

std::pair<Cycle, Cycle> split_by_locus(const Cycle& c, const IdealBasis& locus, Budget& budget) {
    require_same_ring(c.ring(), locus.ring());
    Cycle inside(c.ring(), c.dimension()), outside(c.ring(), c.dimension());
    auto keep = [&](Cycle& into, const IdealBasis& ideal, std::uint64_t m) {
        if (through_origin(ideal)) into.add(ideal, m);
    };
    for (const auto& comp : c.components()) {
        const IdealBasis& k = comp.ideal;
        IdealBasis out = saturation(k, locus, budget);
        if (out.is_unit() || dimension(out) < c.dimension()) {
            inside.add(k, comp.multiplicity);
        } else if (same_ideal(out, k)) {
            outside.add(k, comp.multiplicity);
        } else {
            IdealBasis in = saturation(k, out, budget);
            keep(outside, out, comp.multiplicity);
            if (!in.is_unit() && dimension(in) == c.dimension()) keep(inside, in, comp.multiplicity);
        }
    }
    return {std::move(inside), std::move(outside)};
}

std::uint64_t local_degree(const Cycle& c, std::span<const std::size_t> slice_vars, Budget& budget) {
    std::vector<Polynomial> slice;
    for (auto i : slice_vars) slice.push_back(Polynomial::variable(c.ring(), i));
    std::uint64_t total = 0;
    for (const auto& comp : c.components())
        total += comp.multiplicity * length_at_origin(ideal_sum(comp.ideal, slice, budget), budget);
    return total;
}

} // namespace lecycle
