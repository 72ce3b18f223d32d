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
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lecycle/groebner.hpp"

namespace lecycle {

/// Raised when a cycle operation leaves the supported regime: improper
/// intersections, hypersurfaces containing a component, non-reduced
/// components that cannot be resolved, or slices of positive dimension.
class CycleError : public std::runtime_error {
public:
    enum class Kind {
        ImproperIntersection,
        VanishesOnComponent,
        ZeroDivisor,
        NotGenericallyReduced,
        SliceNotZeroDimensional,
    };

    CycleError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

std::string to_string(CycleError::Kind kind);

/// One summand of a cycle: an ideal whose top-dimensional part is
/// generically reduced, counted with a positive multiplicity. The ideal may
/// cut out several irreducible pieces that share this multiplicity.
struct Component {
    IdealBasis ideal;
    std::uint64_t multiplicity;

    /// The maximal ideal of the origin; zero-dimensional germs are stored as
    /// this ideal with their length folded into the multiplicity.
    bool is_origin() const;
    std::string to_string() const;
};

/// Formal sum of components of one dimension, as germs at the origin.
/// Components are kept sorted by their rendering and pairwise distinct.
class Cycle {
public:
    Cycle(RingPtr ring, int dimension) : ring_(std::move(ring)), dim_(dimension) {}

    /// The whole ambient space with multiplicity one.
    static Cycle ambient(const RingPtr& ring, Budget& budget);

    const RingPtr& ring() const noexcept { return ring_; }
    int dimension() const noexcept { return dim_; }
    const std::vector<Component>& components() const noexcept { return parts_; }
    bool empty() const noexcept { return parts_.empty(); }

    /// Adds m copies of the component; equal ideals merge by adding counts.
    /// Requires a grevlex basis.
    void add(IdealBasis ideal, std::uint64_t m);
    Cycle& operator+=(const Cycle& other);

    /// "V(y, 5*x^3+4*u*x^2+2*v^2) + 6*V(x, v, y)", "4*[0]" or "0".
    std::string to_string() const;

    friend bool operator==(const Cycle& a, const Cycle& b);

private:
    RingPtr ring_;
    int dim_;
    std::vector<Component> parts_;
};

/// Cycle of V(ideal) when its top-dimensional part has dimension `dim`:
/// generically reduced ideals are returned whole; otherwise a basis element
/// that is a nonzerodivisor on the rest is split into squarefree factors and
/// each factor handled recursively. Pieces missing the origin are dropped.
/// Empty when the ideal has smaller dimension.
Cycle ideal_cycle(const IdealBasis& ideal, int dim, Budget& budget);

/// C · V(g). Each component must have g as a nonzerodivisor modulo it.
/// One-dimensional input yields a multiple of the origin whose count is the
/// local length at the origin.
Cycle intersect_hypersurface(const Cycle& c, const Polynomial& g, Budget& budget);

/// Splits by containment in V(locus): a component lies inside exactly when
/// saturating it by the locus gives the unit ideal; otherwise its pieces are
/// separated by saturation. inside + outside equals c as a cycle, though a
/// reducible component may come back as its separate pieces.
std::pair<Cycle, Cycle> split_by_locus(const Cycle& c, const IdealBasis& locus, Budget& budget);

/// Sum of multiplicity × length of (component + slicing variables) at the origin.
std::uint64_t local_degree(const Cycle& c, std::span<const std::size_t> slice_vars, Budget& budget);

/// Jacobian test in characteristic zero: true when the ideal plus the
/// c × c minors of its Jacobian matrix (c the codimension of `dim`) has
/// dimension below `dim`, i.e. every top-dimensional piece is reduced.
bool generically_reduced(const IdealBasis& ideal, int dim, Budget& budget);

} // namespace lecycle
