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

#include "lecycle/monomial_order.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace lecycle {

MonomialOrder::MonomialOrder(Kind kind, std::size_t nvars, std::size_t block)
    : kind_(kind), block_(block), rank_(nvars) {
    std::iota(rank_.begin(), rank_.end(), std::size_t{0});
}

MonomialOrder MonomialOrder::global(std::size_t nvars) { return MonomialOrder(Kind::Global, nvars, 0); }

MonomialOrder MonomialOrder::local(std::size_t nvars) { return MonomialOrder(Kind::Local, nvars, 0); }

MonomialOrder MonomialOrder::elimination(std::size_t nvars, std::size_t block) {
    if (block > nvars) throw std::invalid_argument("elimination block larger than the variable count");
    return MonomialOrder(Kind::Elimination, nvars, block);
}

MonomialOrder MonomialOrder::with_ranking(std::vector<std::size_t> ranking) const {
    std::vector<std::size_t> sorted = ranking;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
        if (sorted[i] != i || sorted.size() != rank_.size())
            throw std::invalid_argument("ranking is not a permutation of the variables");
    MonomialOrder o = *this;
    o.rank_ = std::move(ranking);
    return o;
}

// Reverse lexicographic tie-break over ranks [from, to): the monomial with
// the smaller exponent in the lowest-ranked differing variable is larger.
int MonomialOrder::revlex_tail(const Monomial& a, const Monomial& b, std::size_t from,
                               std::size_t to) const noexcept {
    for (std::size_t r = to; r-- > from;) {
        std::size_t i = rank_[r];
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const noexcept {
    const std::size_t n = rank_.size();
    switch (kind_) {
    case Kind::Global:
        if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
        return revlex_tail(a, b, 0, n);
    case Kind::Local:
        if (a.degree() != b.degree()) return a.degree() < b.degree() ? 1 : -1;
        return revlex_tail(a, b, 0, n);
    case Kind::Elimination: {
        std::uint64_t da = 0, db = 0;
        for (std::size_t r = 0; r < block_; ++r) {
            da += a[rank_[r]];
            db += b[rank_[r]];
        }
        if (da != db) return da > db ? 1 : -1;
        if (int c = revlex_tail(a, b, 0, block_)) return c;
        if (a.degree() - da != b.degree() - db) return a.degree() - da > b.degree() - db ? 1 : -1;
        return revlex_tail(a, b, block_, n);
    }
    }
    return 0;
}

std::string MonomialOrder::name() const {
    switch (kind_) {
    case Kind::Global: return "grevlex";
    case Kind::Local: return "neg-grevlex";
    case Kind::Elimination: return "elim(" + std::to_string(block_) + ")";
    }
    return "?";
}

} // namespace lecycle
