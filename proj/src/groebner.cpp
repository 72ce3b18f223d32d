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

#include "lecycle/groebner.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace lecycle {

namespace {

OrderedTerms to_ordered(const Polynomial& p, const MonomialOrder& o) {
    OrderedTerms t = p.terms();
    if (!(o.kind() == MonomialOrder::Kind::Global && o == MonomialOrder::global(o.num_variables())))
        std::sort(t.begin(), t.end(),
                  [&](const Term& a, const Term& b) { return o.compare(a.monomial, b.monomial) > 0; });
    return t;
}

Polynomial from_ordered(const OrderedTerms& t, const RingPtr& ring) { return Polynomial::from_terms(ring, t); }

std::uint64_t ecart(const OrderedTerms& p) {
    std::uint64_t top = 0;
    for (const auto& t : p) top = std::max(top, t.monomial.degree());
    return top - p.front().monomial.degree();
}

void make_monic(OrderedTerms& p) {
    if (p.empty() || p.front().coefficient.is_one()) return;
    Coefficient inv = p.front().coefficient.inverse();
    for (auto& t : p) t.coefficient *= inv;
}

// h - c * m * g, merged in order o.
OrderedTerms sub_mul(const OrderedTerms& h, const Coefficient& c, const Monomial& m, const OrderedTerms& g,
                     const MonomialOrder& o) {
    OrderedTerms out;
    out.reserve(h.size() + g.size());
    std::size_t i = 0, j = 0;
    while (i < h.size() || j < g.size()) {
        if (j == g.size()) {
            out.push_back(h[i++]);
            continue;
        }
        Monomial gm = m * g[j].monomial;
        int cmp = i == h.size() ? -1 : o.compare(h[i].monomial, gm);
        if (cmp > 0) {
            out.push_back(h[i++]);
        } else if (cmp < 0) {
            out.push_back({std::move(gm), -(c * g[j].coefficient)});
            ++j;
        } else {
            Coefficient v = h[i].coefficient - c * g[j].coefficient;
            if (!v.is_zero()) out.push_back({std::move(gm), std::move(v)});
            ++i;
            ++j;
        }
    }
    return out;
}

OrderedTerms spoly(const OrderedTerms& f, const OrderedTerms& g, const MonomialOrder& o) {
    const Monomial l = Monomial::lcm(f.front().monomial, g.front().monomial);
    OrderedTerms a = sub_mul({}, -f.front().coefficient.inverse(), l.quotient(f.front().monomial), f, o);
    return sub_mul(a, g.front().coefficient.inverse(), l.quotient(g.front().monomial), g, o);
}

// Full reduction by a global basis: leading and tail terms.
OrderedTerms reduce_full(OrderedTerms p, const std::vector<OrderedTerms>& G, const MonomialOrder& o,
                         Budget& budget) {
    OrderedTerms r;
    while (!p.empty()) {
        const Term& lead = p.front();
        const OrderedTerms* div = nullptr;
        for (const auto& g : G)
            if (g.front().monomial.divides(lead.monomial)) {
                div = &g;
                break;
            }
        if (div) {
            budget.charge();
            Coefficient c = lead.coefficient / div->front().coefficient;
            Monomial m = lead.monomial.quotient(div->front().monomial);
            p = sub_mul(p, c, m, *div, o);
        } else {
            r.push_back(std::move(p.front()));
            p.erase(p.begin());
        }
    }
    return r;
}

// Mora's normal form with ecart-driven choice of reducer. The T-set grows
// by the current remainder whenever the chosen reducer has larger ecart.
OrderedTerms mora_nf(OrderedTerms h, const std::vector<OrderedTerms>& S, const MonomialOrder& o,
                     Budget& budget) {
    std::deque<OrderedTerms> extra;
    std::vector<std::pair<const OrderedTerms*, std::uint64_t>> T;
    T.reserve(S.size());
    for (const auto& s : S) T.emplace_back(&s, ecart(s));
    while (!h.empty()) {
        const Monomial& lm = h.front().monomial;
        std::ptrdiff_t best = -1;
        for (std::size_t i = 0; i < T.size(); ++i)
            if (T[i].first->front().monomial.divides(lm) && (best < 0 || T[i].second < T[best].second))
                best = static_cast<std::ptrdiff_t>(i);
        if (best < 0) break;
        budget.charge();
        const OrderedTerms* g = T[best].first;
        std::uint64_t eh = ecart(h);
        if (T[best].second > eh) {
            extra.push_back(h);
            T.emplace_back(&extra.back(), eh);
            g = T[best].first;
        }
        Coefficient c = h.front().coefficient / g->front().coefficient;
        Monomial m = h.front().monomial.quotient(g->front().monomial);
        h = sub_mul(h, c, m, *g, o);
    }
    return h;
}

OrderedTerms reduce(const OrderedTerms& p, const std::vector<OrderedTerms>& G, const MonomialOrder& o,
                    Budget& budget) {
    return o.is_local() ? mora_nf(p, G, o, budget) : reduce_full(p, G, o, budget);
}

struct Pair {
    std::size_t i, j;
    Monomial lcm;
};

// Index of the pair to process next: smallest lcm, then smallest (j, i).
std::size_t select_pair(const std::vector<Pair>& pairs, const MonomialOrder& o) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs.size(); ++k) {
        const Pair& a = pairs[k];
        const Pair& b = pairs[best];
        int c;
        if (o.is_local()) {
            c = a.lcm.degree() == b.lcm.degree() ? -o.compare(a.lcm, b.lcm) : (a.lcm.degree() < b.lcm.degree() ? -1 : 1);
        } else {
            c = o.compare(a.lcm, b.lcm);
        }
        if (c < 0 || (c == 0 && std::tie(a.j, a.i) < std::tie(b.j, b.i))) best = k;
    }
    return best;
}

std::vector<OrderedTerms> unit_basis(const Field& k, std::size_t n) {
    return {OrderedTerms{Term{Monomial(n), Coefficient::one(k)}}};
}

std::vector<OrderedTerms> complete(std::vector<OrderedTerms> G, const MonomialOrder& o, const Field& k,
                                   Budget& budget) {
    const std::size_t n = o.num_variables();
    const bool local = o.is_local();
    for (auto& g : G) {
        make_monic(g);
        if (g.front().monomial.is_one()) return unit_basis(k, n);
    }

    std::vector<Pair> pairs;
    std::vector<std::vector<char>> pending;
    auto add_element = [&](OrderedTerms g) {
        std::size_t j = G.size();
        G.push_back(std::move(g));
        for (auto& row : pending) row.push_back(0);
        pending.emplace_back(G.size(), 0);
        for (std::size_t i = 0; i < j; ++i) {
            pairs.push_back({i, j, Monomial::lcm(G[i].front().monomial, G[j].front().monomial)});
            pending[i][j] = pending[j][i] = 1;
        }
    };
    {
        std::vector<OrderedTerms> init = std::move(G);
        G.clear();
        for (auto& g : init) add_element(std::move(g));
    }

    while (!pairs.empty()) {
        budget.charge();
        std::size_t at = select_pair(pairs, o);
        Pair pr = std::move(pairs[at]);
        pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(at));
        pending[pr.i][pr.j] = pending[pr.j][pr.i] = 0;

        const Monomial& li = G[pr.i].front().monomial;
        const Monomial& lj = G[pr.j].front().monomial;
        if (Monomial::gcd(li, lj).is_one()) continue;
        if (!local) {
            bool chain = false;
            for (std::size_t k2 = 0; k2 < G.size() && !chain; ++k2)
                chain = k2 != pr.i && k2 != pr.j && !pending[pr.i][k2] && !pending[pr.j][k2] &&
                        G[k2].front().monomial.divides(pr.lcm);
            if (chain) continue;
        }

        OrderedTerms h = reduce(spoly(G[pr.i], G[pr.j], o), G, o, budget);
        if (h.empty()) continue;
        make_monic(h);
        if (h.front().monomial.is_one()) return unit_basis(k, n);
        add_element(std::move(h));
    }

    // Minimalize: drop elements whose leading monomial is a multiple of another's.
    std::vector<char> keep(G.size(), 1);
    for (std::size_t i = 0; i < G.size(); ++i)
        for (std::size_t j = 0; j < G.size() && keep[i]; ++j) {
            if (i == j || !keep[j]) continue;
            const Monomial& a = G[i].front().monomial;
            const Monomial& b = G[j].front().monomial;
            if (b.divides(a) && (!(a == b) || j < i)) keep[i] = 0;
        }
    std::vector<OrderedTerms> out;
    for (std::size_t i = 0; i < G.size(); ++i)
        if (keep[i]) out.push_back(std::move(G[i]));

    if (!local) {
        std::vector<OrderedTerms> reduced;
        reduced.reserve(out.size());
        for (std::size_t i = 0; i < out.size(); ++i) {
            std::vector<OrderedTerms> others;
            for (std::size_t j = 0; j < out.size(); ++j)
                if (j != i) others.push_back(out[j]);
            OrderedTerms r = reduce_full(out[i], others, o, budget);
            make_monic(r);
            reduced.push_back(std::move(r));
        }
        out = std::move(reduced);
    }
    std::sort(out.begin(), out.end(), [&](const OrderedTerms& a, const OrderedTerms& b) {
        return o.compare(a.front().monomial, b.front().monomial) > 0;
    });
    return out;
}

void require_global(const IdealBasis& I, const char* what) {
    if (I.order().kind() != MonomialOrder::Kind::Global)
        throw std::invalid_argument(std::string(what) + " needs a grevlex basis");
}

std::string fresh_name(const Ring& ring) {
    std::string name = "_t";
    while (ring.find(name)) name += '_';
    return name;
}

// R with an extra leading variable; returns the ring and the index map R -> R'.
std::pair<RingPtr, std::vector<std::size_t>> with_leading_variable(const RingPtr& ring) {
    std::vector<std::string> vars{fresh_name(*ring)};
    vars.insert(vars.end(), ring->variables().begin(), ring->variables().end());
    std::vector<std::size_t> map(ring->size());
    std::iota(map.begin(), map.end(), std::size_t{1});
    return {make_ring(std::move(vars), ring->field()), std::move(map)};
}

// Elements of a basis in R' free of variable 0, mapped back to R and re-based.
IdealBasis drop_leading_variable(const IdealBasis& big, const RingPtr& ring, Budget& budget) {
    std::vector<std::size_t> back(big.ring()->size(), 0);
    for (std::size_t i = 1; i < back.size(); ++i) back[i] = i - 1;
    std::vector<Polynomial> kept;
    for (const auto& g : big.basis())
        if (!g.depends_on(0)) kept.push_back(change_ring(g, ring, back));
    return global_basis(std::move(kept), budget);
}

} // namespace

IdealBasis make_ideal_basis(RingPtr ring, MonomialOrder order, std::vector<Polynomial> generators,
                            std::vector<OrderedTerms> ordered) {
    IdealBasis b(ring, std::move(order));
    b.generators_ = std::move(generators);
    b.basis_.reserve(ordered.size());
    for (const auto& t : ordered) b.basis_.push_back(from_ordered(t, ring));
    b.ordered_ = std::move(ordered);
    b.complete_ = true;
    return b;
}

std::vector<Monomial> IdealBasis::leading_monomials() const {
    std::vector<Monomial> out;
    out.reserve(ordered_.size());
    for (const auto& t : ordered_) out.push_back(t.front().monomial);
    return out;
}

bool IdealBasis::is_unit() const noexcept {
    return ordered_.size() == 1 && ordered_.front().front().monomial.is_one();
}

std::string IdealBasis::to_string() const {
    if (basis_.empty()) return "(0)";
    std::string s = "(";
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (i) s += ", ";
        s += primitive_form(basis_[i]).to_string();
    }
    return s + ")";
}

bool operator==(const IdealBasis& a, const IdealBasis& b) {
    return same_ring(a.ring_, b.ring_) && a.order_ == b.order_ && a.basis_ == b.basis_;
}

IdealBasis basis(std::vector<Polynomial> gens, const MonomialOrder& order, Budget& budget) {
    if (gens.empty()) throw std::invalid_argument("basis needs at least one generator to fix the ring");
    const RingPtr ring = gens.front().ring();
    for (const auto& g : gens) require_same_ring(ring, g.ring());
    if (order.num_variables() != ring->size())
        throw std::invalid_argument("monomial order has the wrong number of variables");
    std::vector<OrderedTerms> G;
    for (const auto& g : gens)
        if (!g.is_zero()) G.push_back(to_ordered(g, order));
    std::vector<OrderedTerms> done = G.empty() ? G : complete(std::move(G), order, ring->field(), budget);
    return make_ideal_basis(ring, order, std::move(gens), std::move(done));
}

IdealBasis global_basis(std::vector<Polynomial> gens, Budget& budget) {
    if (gens.empty()) throw std::invalid_argument("basis needs at least one generator to fix the ring");
    auto o = MonomialOrder::global(gens.front().ring()->size());
    return basis(std::move(gens), o, budget);
}

IdealBasis local_basis(std::vector<Polynomial> gens, Budget& budget) {
    if (gens.empty()) throw std::invalid_argument("basis needs at least one generator to fix the ring");
    auto o = MonomialOrder::local(gens.front().ring()->size());
    return basis(std::move(gens), o, budget);
}

Polynomial normal_form(const Polynomial& p, const IdealBasis& ideal, Budget& budget) {
    require_same_ring(p.ring(), ideal.ring());
    if (ideal.is_zero()) return p;
    OrderedTerms r = reduce(to_ordered(p, ideal.order()), ideal.ordered_basis(), ideal.order(), budget);
    return from_ordered(r, ideal.ring());
}

bool contains(const IdealBasis& ideal, const Polynomial& p, Budget& budget) {
    return normal_form(p, ideal, budget).is_zero();
}

bool contains(const IdealBasis& ideal, const IdealBasis& sub, Budget& budget) {
    for (const auto& g : sub.basis())
        if (!contains(ideal, g, budget)) return false;
    return true;
}

bool same_ideal(const IdealBasis& a, const IdealBasis& b) {
    require_same_ring(a.ring(), b.ring());
    if (!(a.order() == b.order()) || a.order().is_local())
        throw std::invalid_argument("same_ideal needs two bases under one global order");
    return a.basis() == b.basis();
}

bool verify_basis(const IdealBasis& ideal, Budget& budget) {
    const auto& G = ideal.ordered_basis();
    const auto& o = ideal.order();
    for (const auto& g : ideal.generators())
        if (!g.is_zero() && !reduce(to_ordered(g, o), G, o, budget).empty()) return false;
    for (std::size_t j = 0; j < G.size(); ++j)
        for (std::size_t i = 0; i < j; ++i)
            if (!reduce(spoly(G[i], G[j], o), G, o, budget).empty()) return false;
    return true;
}

namespace {

// Standard monomials in variables [from, n) avoiding `leads`, assuming each
// of those variables has a pure power among `leads`.
std::uint64_t count_from(const std::vector<Monomial>& leads, std::size_t from, std::size_t n) {
    for (const auto& m : leads) {
        bool one = true;
        for (std::size_t i = from; i < n && one; ++i) one = m[i] == 0;
        if (one) return 0;
    }
    if (from == n) return 1;
    std::uint32_t bound = 0;
    for (const auto& m : leads) {
        bool pure = m[from] > 0;
        for (std::size_t i = from + 1; i < n && pure; ++i) pure = m[i] == 0;
        if (pure && (bound == 0 || m[from] < bound)) bound = m[from];
    }
    std::uint64_t total = 0;
    for (std::uint32_t e = 0; e < bound; ++e) {
        std::vector<Monomial> slice;
        for (const auto& m : leads)
            if (m[from] <= e) slice.push_back(m);
        total += count_from(slice, from + 1, n);
    }
    return total;
}

} // namespace

std::optional<std::uint64_t> count_standard_monomials(std::span<const Monomial> leads, std::size_t nvars) {
    for (const auto& m : leads)
        if (m.is_one()) return 0;
    for (std::size_t i = 0; i < nvars; ++i) {
        bool found = false;
        for (const auto& m : leads)
            if (m[i] > 0 && m[i] == m.degree()) found = true;
        if (!found) return std::nullopt;
    }
    return count_from(std::vector<Monomial>(leads.begin(), leads.end()), 0, nvars);
}

std::optional<std::uint64_t> local_multiplicity(const IdealBasis& ideal) {
    if (!ideal.order().is_local()) throw std::invalid_argument("local_multiplicity needs a local basis");
    auto leads = ideal.leading_monomials();
    return count_standard_monomials(leads, ideal.ring()->size());
}

int dimension(const IdealBasis& ideal) {
    if (ideal.is_unit()) return -1;
    const std::size_t n = ideal.ring()->size();
    std::vector<std::uint64_t> supports;
    for (const auto& m : ideal.leading_monomials()) {
        std::uint64_t s = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (m[i]) s |= std::uint64_t{1} << i;
        supports.push_back(s);
    }
    if (n > 63) throw std::invalid_argument("dimension supports at most 63 variables");
    // Largest variable set containing no leading-monomial support.
    int best = 0;
    auto independent = [&](std::uint64_t set) {
        for (auto s : supports)
            if ((s & ~set) == 0) return false;
        return true;
    };
    auto search = [&](auto&& self, std::size_t next, std::uint64_t set, int size) -> void {
        best = std::max(best, size);
        if (size + static_cast<int>(n - next) <= best) return;
        for (std::size_t i = next; i < n; ++i) {
            std::uint64_t with = set | (std::uint64_t{1} << i);
            if (independent(with)) self(self, i + 1, with, size + 1);
        }
    };
    search(search, 0, 0, 0);
    return best;
}

IdealBasis ideal_sum(const IdealBasis& ideal, std::span<const Polynomial> extra, Budget& budget) {
    std::vector<Polynomial> gens = ideal.order().is_local() ? ideal.generators() : ideal.basis();
    for (const auto& p : extra) {
        require_same_ring(ideal.ring(), p.ring());
        gens.push_back(p);
    }
    if (gens.empty()) gens.push_back(Polynomial(ideal.ring()));
    return basis(std::move(gens), ideal.order(), budget);
}

IdealBasis intersection(const IdealBasis& a, const IdealBasis& b, Budget& budget) {
    require_same_ring(a.ring(), b.ring());
    require_global(a, "intersection");
    require_global(b, "intersection");
    if (a.is_zero()) return a;
    if (b.is_zero()) return b;
    if (a.is_unit()) return b;
    if (b.is_unit()) return a;
    auto [big, map] = with_leading_variable(a.ring());
    Polynomial t = Polynomial::variable(big, 0);
    Polynomial one_minus_t = Polynomial::constant(big, 1) - t;
    std::vector<Polynomial> gens;
    for (const auto& g : a.basis()) gens.push_back(t * change_ring(g, big, map));
    for (const auto& g : b.basis()) gens.push_back(one_minus_t * change_ring(g, big, map));
    IdealBasis e = basis(std::move(gens), MonomialOrder::elimination(big->size(), 1), budget);
    return drop_leading_variable(e, a.ring(), budget);
}

IdealBasis quotient(const IdealBasis& ideal, const Polynomial& g, Budget& budget) {
    require_same_ring(ideal.ring(), g.ring());
    require_global(ideal, "quotient");
    if (g.is_zero() || ideal.is_unit()) return global_basis({Polynomial::constant(ideal.ring(), 1)}, budget);
    if (ideal.is_zero()) return ideal;
    IdealBasis cap = intersection(ideal, global_basis({g}, budget), budget);
    std::vector<Polynomial> gens;
    for (const auto& p : cap.basis()) gens.push_back(exact_quotient(p, g));
    return global_basis(std::move(gens), budget);
}

IdealBasis quotient(const IdealBasis& ideal, const IdealBasis& by, Budget& budget) {
    require_global(by, "quotient");
    if (by.is_zero()) return global_basis({Polynomial::constant(ideal.ring(), 1)}, budget);
    std::optional<IdealBasis> acc;
    for (const auto& g : by.basis()) {
        IdealBasis q = quotient(ideal, g, budget);
        acc = acc ? intersection(*acc, q, budget) : q;
    }
    return *acc;
}

namespace {

// I : g^∞ = (I + (t*g - 1)) ∩ R.
IdealBasis saturate_by(const IdealBasis& ideal, const Polynomial& g, Budget& budget) {
    if (g.is_zero()) return global_basis({Polynomial::constant(ideal.ring(), 1)}, budget);
    if (ideal.is_zero() || ideal.is_unit() || g.is_constant()) return ideal;
    auto [big, map] = with_leading_variable(ideal.ring());
    std::vector<Polynomial> gens;
    for (const auto& p : ideal.basis()) gens.push_back(change_ring(p, big, map));
    gens.push_back(Polynomial::variable(big, 0) * change_ring(g, big, map) - Polynomial::constant(big, 1));
    IdealBasis e = basis(std::move(gens), MonomialOrder::elimination(big->size(), 1), budget);
    return drop_leading_variable(e, ideal.ring(), budget);
}

} // namespace

IdealBasis saturation(const IdealBasis& ideal, const IdealBasis& by, Budget& budget) {
    require_same_ring(ideal.ring(), by.ring());
    require_global(ideal, "saturation");
    require_global(by, "saturation");
    if (by.is_zero()) return global_basis({Polynomial::constant(ideal.ring(), 1)}, budget);
    std::optional<IdealBasis> acc;
    for (const auto& g : by.basis()) {
        IdealBasis s = saturate_by(ideal, g, budget);
        acc = acc ? intersection(*acc, s, budget) : s;
    }
    return *acc;
}

IdealBasis localize(const IdealBasis& ideal, Budget& budget) {
    std::vector<Polynomial> gens = ideal.basis();
    if (gens.empty()) gens.push_back(Polynomial(ideal.ring()));
    return local_basis(std::move(gens), budget);
}

Polynomial exact_quotient(const Polynomial& a, const Polynomial& b) {
    require_same_ring(a.ring(), b.ring());
    if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
    Polynomial q(a.ring()), r = a;
    const Term& lb = b.leading_term();
    Coefficient inv = lb.coefficient.inverse();
    while (!r.is_zero()) {
        const Term& lr = r.leading_term();
        if (!lb.monomial.divides(lr.monomial)) throw std::domain_error("polynomial division is not exact");
        Polynomial t = Polynomial::monomial(a.ring(), lr.monomial.quotient(lb.monomial), lr.coefficient * inv);
        q += t;
        r -= t * b;
    }
    return q;
}

Polynomial polynomial_gcd(const Polynomial& a, const Polynomial& b, Budget& budget) {
    require_same_ring(a.ring(), b.ring());
    if (a.is_zero()) return b.is_zero() ? b : b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant()) return Polynomial::constant(a.ring(), 1);
    IdealBasis l = intersection(global_basis({a}, budget), global_basis({b}, budget), budget);
    if (l.size() != 1) throw std::logic_error("intersection of principal ideals is not principal");
    return exact_quotient(a * b, l.basis().front()).monic();
}

std::vector<SquarefreeFactor> squarefree_factors(const Polynomial& p, Budget& budget) {
    if (p.is_zero()) throw std::domain_error("squarefree decomposition of the zero polynomial");
    const RingPtr& ring = p.ring();
    const std::size_t n = ring->size();
    std::vector<SquarefreeFactor> out;
    if (p.is_constant()) return out;

    std::vector<std::uint32_t> content(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        std::uint32_t lo = UINT32_MAX;
        for (const auto& t : p.terms()) lo = std::min(lo, t.monomial[i]);
        content[i] = lo;
    }
    Polynomial rest = exact_quotient(p, Polynomial::monomial(ring, Monomial(content), Coefficient::one(p.field())));
    for (std::size_t i = 0; i < n; ++i)
        if (content[i]) out.push_back({Polynomial::variable(ring, i), content[i]});
    if (rest.is_constant()) return out;

    Polynomial u = rest;
    bool any_partial = false;
    for (std::size_t i = 0; i < n; ++i) {
        Polynomial d = rest.partial(i);
        if (d.is_zero()) continue;
        any_partial = true;
        u = polynomial_gcd(u, d, budget);
    }
    if (!any_partial) throw std::domain_error("inseparable polynomial in positive characteristic");
    Polynomial v = exact_quotient(rest, u);
    for (std::uint32_t k = 1; !v.is_constant(); ++k) {
        Polynomial w = polynomial_gcd(v, u, budget);
        Polynomial f = exact_quotient(v, w);
        if (!f.is_constant()) out.push_back({f.monic(), k});
        u = exact_quotient(u, w);
        v = w;
    }
    return out;
}

} // namespace lecycle
