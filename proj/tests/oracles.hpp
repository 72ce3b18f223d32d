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

// Test-side reference implementations. They share no code with the library
// beyond reading terms out of its polynomials.

#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "lecycle/groebner.hpp"

namespace oracle {

using Exps = std::vector<int>;

/// Strict grevlex "less than" with x_0 > x_1 > ... > x_n.
struct GrevlexLess {
    bool operator()(const Exps& a, const Exps& b) const {
        int da = 0, db = 0;
        for (int v : a) da += v;
        for (int v : b) db += v;
        if (da != db) return da < db;
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] > b[i];
        return false;
    }
};

/// Rational polynomial as a sorted map; the leading term is the last entry.
using Poly = std::map<Exps, mpq_class, GrevlexLess>;

inline Poly from_library(const lecycle::Polynomial& p) {
    Poly out;
    for (const auto& t : p.terms()) {
        Exps e(t.monomial.exponents().begin(), t.monomial.exponents().end());
        out[e] = t.coefficient.rational();
    }
    return out;
}

inline bool divides(const Exps& a, const Exps& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

/// p -= c * x^m * g
inline void subtract(Poly& p, const mpq_class& c, const Exps& m, const Poly& g) {
    for (const auto& [e, v] : g) {
        Exps s(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) s[i] = e[i] + m[i];
        mpq_class& slot = p[s];
        slot -= c * v;
        if (slot == 0) p.erase(s);
    }
}

/// True when p reduces to zero by repeatedly cancelling its leading term.
inline bool reduces_to_zero(Poly p, const std::vector<Poly>& basis) {
    while (!p.empty()) {
        const auto [lead, coeff] = *p.rbegin();
        bool hit = false;
        for (const auto& g : basis) {
            const auto& [glead, gcoeff] = *g.rbegin();
            if (!divides(glead, lead)) continue;
            Exps m(lead.size());
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = lead[i] - glead[i];
            subtract(p, mpq_class(coeff / gcoeff), m, g);
            hit = true;
            break;
        }
        if (!hit) return false;
    }
    return true;
}

inline Poly s_polynomial(const Poly& f, const Poly& g) {
    const auto& [fl, fc] = *f.rbegin();
    const auto& [gl, gc] = *g.rbegin();
    Exps l(fl.size()), mf(fl.size()), mg(fl.size());
    for (std::size_t i = 0; i < l.size(); ++i) {
        l[i] = std::max(fl[i], gl[i]);
        mf[i] = l[i] - fl[i];
        mg[i] = l[i] - gl[i];
    }
    Poly s;
    subtract(s, mpq_class(-1 / fc), mf, f);
    subtract(s, mpq_class(1 / gc), mg, g);
    return s;
}

/// Buchberger's criterion for a global grevlex basis over QQ, plus
/// membership of every original generator.
inline bool verify_grevlex_basis(const lecycle::IdealBasis& ideal) {
    std::vector<Poly> g;
    for (const auto& p : ideal.basis()) g.push_back(from_library(p));
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j)
            if (!reduces_to_zero(s_polynomial(g[i], g[j]), g)) return false;
    for (const auto& p : ideal.generators())
        if (!reduces_to_zero(from_library(p), g)) return false;
    return true;
}

/// Number of monomials outside a zero-dimensional monomial ideal, by
/// enumerating the box cut out by its pure powers.
inline std::uint64_t staircase_count(const std::vector<Exps>& gens, std::size_t nvars) {
    std::vector<int> bound(nvars, 0);
    for (const auto& g : gens) {
        int nonzero = 0;
        std::size_t at = 0;
        for (std::size_t i = 0; i < nvars; ++i)
            if (g[i]) ++nonzero, at = i;
        if (nonzero == 1 && (bound[at] == 0 || g[at] < bound[at])) bound[at] = g[at];
    }
    std::uint64_t count = 0;
    Exps e(nvars, 0);
    while (true) {
        bool inside = false;
        for (const auto& g : gens) inside |= divides(g, e);
        if (!inside) ++count;
        std::size_t i = 0;
        while (i < nvars && ++e[i] >= bound[i]) e[i++] = 0;
        if (i == nvars) break;
    }
    return count;
}

/// Random zero-dimensional monomial ideal: a pure power of each variable
/// plus a few mixed monomials.
inline std::vector<Exps> random_monomial_ideal(std::mt19937_64& rng, std::size_t nvars) {
    std::vector<Exps> gens;
    for (std::size_t i = 0; i < nvars; ++i) {
        Exps e(nvars, 0);
        e[i] = 1 + static_cast<int>(rng() % 6);
        gens.push_back(e);
    }
    for (int k = static_cast<int>(rng() % 5); k > 0; --k) {
        Exps e(nvars);
        for (auto& v : e) v = static_cast<int>(rng() % 5);
        if (std::all_of(e.begin(), e.end(), [](int v) { return v == 0; })) continue;
        gens.push_back(e);
    }
    return gens;
}

/// Random polynomial with up to `terms` terms of degree at most `deg` and
/// coefficients in [-3, 3].
inline lecycle::Polynomial random_polynomial(std::mt19937_64& rng, const lecycle::RingPtr& ring, int terms, int deg) {
    std::vector<lecycle::Term> out;
    const std::size_t n = ring->size();
    for (int t = 0; t < terms; ++t) {
        std::vector<std::uint32_t> e(n, 0);
        int budget = static_cast<int>(rng() % (deg + 1));
        while (budget-- > 0) ++e[rng() % n];
        out.push_back({lecycle::Monomial(std::move(e)),
                       lecycle::Coefficient(ring->field(), static_cast<long>(rng() % 7) - 3)});
    }
    return lecycle::Polynomial::from_terms(ring, std::move(out));
}

} // namespace oracle

namespace oracle {

/// Random (I, J) pair for saturation tests. Every other case builds I from
/// multiples of a generator of J so that saturating actually enlarges it.
struct SaturationCase {
    std::vector<lecycle::Polynomial> ideal;
    std::vector<lecycle::Polynomial> by;
};

inline SaturationCase random_saturation_case(std::mt19937_64& rng, const lecycle::RingPtr& ring, int index) {
    auto nonzero = [&](int terms, int deg) {
        while (true) {
            lecycle::Polynomial p = random_polynomial(rng, ring, terms, deg);
            if (!p.is_zero()) return p;
        }
    };
    SaturationCase c;
    const int nby = 1 + static_cast<int>(rng() % 2);
    for (int i = 0; i < nby; ++i) c.by.push_back(nonzero(2, 2));
    if (index % 2 == 0) {
        c.ideal = {nonzero(3, 3), nonzero(3, 3)};
    } else {
        const lecycle::Polynomial& h = c.by.front();
        c.ideal = {nonzero(2, 2) * h, nonzero(2, 2) * h * h, nonzero(2, 2) * (rng() % 2 ? h : c.by.back())};
    }
    return c;
}

} // namespace oracle
