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
#include <stdexcept>
#include <string>
#include <vector>

#include "lecycle/cycles.hpp"
#include "lecycle/groebner.hpp"

namespace lecycle {

/// f together with an ordered coordinate system (z_0, ..., z_n).
struct LeInput {
    Polynomial f;
    std::vector<std::string> coords;

    /// Checks f(0) = 0, f nonzero, and that coords permutes f's variables.
    /// Throws InputError.
    void validate() const;
    /// Ring indices of z_0, ..., z_n.
    std::vector<std::size_t> coordinate_indices() const;
};

/// The given coordinates failed one of the necessary genericity checks.
class NonPrepolarError : public std::runtime_error {
public:
    NonPrepolarError(int k, CycleError::Kind kind, const std::string& what)
        : std::runtime_error("step k=" + std::to_string(k) + ": " + what), step_(k), kind_(kind) {}

    int step() const noexcept { return step_; }
    CycleError::Kind kind() const noexcept { return kind_; }

private:
    int step_;
    CycleError::Kind kind_;
};

struct CriticalLocus {
    IdealBasis jacobian;   ///< grevlex basis of the partials
    int dimension;         ///< of the affine zero set
    int local_dimension;   ///< of the germ at the origin; -1 if the origin is not critical
};

/// Throws InputError for constant f.
CriticalLocus critical_locus(const Polynomial& f, Budget& budget);

struct Verdict {
    std::string name;
    bool passed;
    std::string detail;
};

struct LeStep {
    int k;
    Polynomial partial;   ///< ∂f/∂z_k
    Cycle gamma;          ///< Γ^k
    Cycle lambda_cycle;   ///< Λ^k
    std::uint64_t lambda; ///< λ^k
};

struct LeResult {
    std::vector<std::string> coords;
    CriticalLocus locus;
    Cycle top_gamma;            ///< Γ^{n+1}, the ambient space
    std::vector<LeStep> steps;  ///< k = n down to 0
    std::vector<Verdict> checks;
    std::uint64_t budget_used = 0;

    int s() const noexcept { return locus.local_dimension; }
    /// λ^k for 0 <= k <= n.
    std::uint64_t lambda(int k) const;
    /// λ^0, ..., λ^{max(s, 0)}.
    std::vector<std::uint64_t> lambda_list() const;
    const LeStep& step(int k) const;
};

/// Intersects Γ^{k+1} with V(∂f/∂z_k) for k = n, ..., 0, splitting off the
/// part inside the critical locus as Λ^k, and slices Λ^k by z_0..z_{k-1}.
/// Throws NonPrepolarError when a genericity check fails, CycleError when a
/// cycle leaves the supported regime, BudgetExceeded on exhaustion.
LeResult le_cascade(const LeInput& input, Budget& budget);

/// Length of the Jacobian algebra at the origin. Throws InputError unless
/// the critical locus is isolated at the origin.
std::uint64_t milnor_number_isolated(const Polynomial& f, Budget& budget);

/// Simultaneous substitution x_i -> images[i].
Polynomial compose(const Polynomial& p, const std::vector<Polynomial>& images);

/// f after a seeded unimodular integer change of coordinates (lower times
/// upper unitriangular, entries in [-2, 2]); same ring.
Polynomial random_linear_change(const Polynomial& f, std::uint64_t seed);

} // namespace lecycle
