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

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lecycle/polynomial.hpp"

namespace lecycle {

/// Monomial orders used by the basis engine.
///
///  - Global: graded reverse lexicographic (a well-order).
///  - Local: negative degree, ties broken reverse lexicographically. Every
///    variable ranks below 1, so leading terms are the lowest-degree part
///    and bases describe the ring localized at the origin.
///  - Elimination: the first `block` ranked variables are compared first
///    (grevlex within the block), then grevlex on the rest. Any monomial
///    involving the block exceeds every monomial free of it.
///
/// The permutation lists variable indices from highest to lowest rank.
class MonomialOrder {
public:
    enum class Kind { Global, Local, Elimination };

    static MonomialOrder global(std::size_t nvars);
    static MonomialOrder local(std::size_t nvars);
    static MonomialOrder elimination(std::size_t nvars, std::size_t block);

    /// `ranking` must be a permutation of 0..n-1.
    MonomialOrder with_ranking(std::vector<std::size_t> ranking) const;

    Kind kind() const noexcept { return kind_; }
    bool is_local() const noexcept { return kind_ == Kind::Local; }
    std::size_t num_variables() const noexcept { return rank_.size(); }
    std::size_t block() const noexcept { return block_; }
    const std::vector<std::size_t>& ranking() const noexcept { return rank_; }

    /// Positive if a > b, negative if a < b, zero if equal.
    int compare(const Monomial& a, const Monomial& b) const noexcept;

    std::string name() const;

    friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

private:
    MonomialOrder(Kind kind, std::size_t nvars, std::size_t block);

    int revlex_tail(const Monomial& a, const Monomial& b, std::size_t from, std::size_t to) const noexcept;

    Kind kind_;
    std::size_t block_ = 0;
    std::vector<std::size_t> rank_;
};

} // namespace lecycle
