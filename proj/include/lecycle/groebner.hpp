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

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lecycle/errors.hpp"
#include "lecycle/monomial_order.hpp"
#include "lecycle/polynomial.hpp"

namespace lecycle {

/// Terms sorted in descending order for one particular MonomialOrder.
using OrderedTerms = std::vector<Term>;

/// Generators of an ideal together with a completed basis under one order.
///
/// Global and elimination orders yield reduced Gröbner bases (monic, sorted
/// by leading monomial), so two bases of the same ideal compare equal.
/// The local order yields a minimal standard basis of the ideal generated in
/// the ring localized at the origin; those are not unique.
class IdealBasis {
public:
    const RingPtr& ring() const noexcept { return ring_; }
    const MonomialOrder& order() const noexcept { return order_; }
    const std::vector<Polynomial>& generators() const noexcept { return generators_; }
    const std::vector<Polynomial>& basis() const noexcept { return basis_; }
    const std::vector<OrderedTerms>& ordered_basis() const noexcept { return ordered_; }
    std::vector<Monomial> leading_monomials() const;
    std::size_t size() const noexcept { return basis_.size(); }

    /// Set once the completion loop has finished; budget exhaustion throws
    /// instead of returning a partial basis.
    bool complete() const noexcept { return complete_; }
    bool is_unit() const noexcept;
    bool is_zero() const noexcept { return basis_.empty(); }

    /// "(g1, g2, ...)" with each generator in primitive integer form.
    std::string to_string() const;

    friend bool operator==(const IdealBasis& a, const IdealBasis& b);

private:
    friend IdealBasis make_ideal_basis(RingPtr, MonomialOrder, std::vector<Polynomial>,
                                       std::vector<OrderedTerms>);

    IdealBasis(RingPtr ring, MonomialOrder order) : ring_(std::move(ring)), order_(std::move(order)) {}

    RingPtr ring_;
    MonomialOrder order_;
    std::vector<Polynomial> generators_;
    std::vector<OrderedTerms> ordered_;
    std::vector<Polynomial> basis_;
    bool complete_ = false;
};

/// Completes `gens` to a basis for `order`: Buchberger with the normal
/// selection strategy and the product/chain criteria for global and
/// elimination orders, Mora's tangent-cone normal form for the local order.
/// Pair selection is deterministic.
IdealBasis basis(std::vector<Polynomial> gens, const MonomialOrder& order, Budget& budget);
IdealBasis global_basis(std::vector<Polynomial> gens, Budget& budget);
IdealBasis local_basis(std::vector<Polynomial> gens, Budget& budget);

/// Full reduction for global orders; weak (Mora) normal form for the local
/// order, which is zero exactly when p lies in the localized ideal.
Polynomial normal_form(const Polynomial& p, const IdealBasis& ideal, Budget& budget);
bool contains(const IdealBasis& ideal, const Polynomial& p, Budget& budget);
/// True when every basis element of `sub` lies in `ideal`.
bool contains(const IdealBasis& ideal, const IdealBasis& sub, Budget& budget);
/// Equality of ideals; both must use the same global order.
bool same_ideal(const IdealBasis& a, const IdealBasis& b);

/// Re-checks a finished basis independently of how it was built: every
/// S-pair reduces to zero and every original generator reduces to zero.
bool verify_basis(const IdealBasis& ideal, Budget& budget);

/// Vector-space dimension of the local quotient ring at the origin, or
/// nullopt when that dimension is infinite. Requires a local-order basis.
std::optional<std::uint64_t> local_multiplicity(const IdealBasis& ideal);

/// Number of monomials outside the monomial ideal generated by `leads`, or
/// nullopt if infinite.
std::optional<std::uint64_t> count_standard_monomials(std::span<const Monomial> leads, std::size_t nvars);

/// Krull dimension read off the leading-term ideal (largest independent
/// set of variables); -1 for the unit ideal. With a local basis this is the
/// dimension of the germ at the origin.
int dimension(const IdealBasis& ideal);

/// The following take and return reduced grevlex bases.
IdealBasis ideal_sum(const IdealBasis& ideal, std::span<const Polynomial> extra, Budget& budget);
IdealBasis intersection(const IdealBasis& a, const IdealBasis& b, Budget& budget);
IdealBasis quotient(const IdealBasis& ideal, const Polynomial& g, Budget& budget);
/// I : J, as the intersection of I : g over the basis of J.
IdealBasis quotient(const IdealBasis& ideal, const IdealBasis& by, Budget& budget);
/// I : J^∞, as the intersection of I : g^∞ over the basis of J.
IdealBasis saturation(const IdealBasis& ideal, const IdealBasis& by, Budget& budget);
/// Re-basis an ideal's generators under the local order.
IdealBasis localize(const IdealBasis& ideal, Budget& budget);

// ---------------------------------------------------------------------------
// Polynomial gcd and squarefree splitting built on the basis engine.

/// Throws std::domain_error when b does not divide a.
Polynomial exact_quotient(const Polynomial& a, const Polynomial& b);
/// Monic gcd, computed from the generator of (a) ∩ (b).
Polynomial polynomial_gcd(const Polynomial& a, const Polynomial& b, Budget& budget);

struct SquarefreeFactor {
    Polynomial factor;
    std::uint32_t multiplicity;
};

/// p = c * prod factor^multiplicity with pairwise coprime squarefree factors.
/// Monomial content is split into single variables first; the rest uses
/// repeated gcds with the partial derivatives. Constants yield no factors.
/// Throws std::domain_error in positive characteristic when every partial
/// of the non-monomial part vanishes.
std::vector<SquarefreeFactor> squarefree_factors(const Polynomial& p, Budget& budget);

} // namespace lecycle
