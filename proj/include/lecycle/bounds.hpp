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
#include <string>
#include <vector>

#include <gmpxx.h>

#include "lecycle/perv.hpp"

namespace lecycle {

/// Closed integer interval.
struct Window {
    std::uint64_t lower;
    std::uint64_t upper;

    bool contains(std::uint64_t v) const noexcept { return lower <= v && v <= upper; }
    bool is_point() const noexcept { return lower == upper; }
    friend bool operator==(const Window&, const Window&) = default;
};

struct BettiBounds {
    mpq_class exact_lower;  ///< (λ⁰ − imdim) / 2 before rounding
    Window window;          ///< [ceil(exact_lower), λ⁰ − imdim]
};

/// Window for the top reduced betti number b̃_n from λ⁰ and the dimension
/// of the image of id − T. Throws InputError when imdim > λ⁰.
BettiBounds main_theorem_bounds(std::uint64_t lambda0, std::uint64_t imdim);

/// Window for dim im(id − T) from λ⁰ and b̃_n: [max(0, λ⁰ − 2b̃_n), λ⁰ − b̃_n].
/// Throws InputError when b̃_n > λ⁰.
Window monodromy_image_window(std::uint64_t lambda0, std::uint64_t betti_n);

enum class Status { Pass, Fail, NotEvaluated };
std::string to_string(Status s);

struct Check {
    std::string name;
    Status status;
    std::string detail;
};

/// One component C of a one-dimensional critical locus.
struct OneDimComponent {
    std::uint64_t multiplicity;         ///< mult C >= 1
    std::uint64_t transversal_milnor;   ///< μ°_C
    std::optional<Matrix> monodromy;    ///< internal monodromy h_C, μ°_C × μ°_C, invertible
};

/// Throws InputError on malformed data (empty, zero multiplicity, h of the
/// wrong size or singular).
void validate(const std::vector<OneDimComponent>& data);

/// λ¹ = Σ mult·μ°; b̃_{n−1} <= Σ dim ker(id − h_C) when every h_C is given;
/// b̃_n <= λ⁰; b̃_{n−1} <= λ¹; b̃_n − b̃_{n−1} = λ⁰ − λ¹. Missing inputs give
/// NotEvaluated.
std::vector<Check> one_dim_relations(std::uint64_t lambda0, std::uint64_t lambda1,
                                     const std::vector<OneDimComponent>& data,
                                     std::optional<std::uint64_t> betti_n_minus_1,
                                     std::optional<std::uint64_t> betti_n);

/// Σ_C dim ker(id − h_C), or nullopt when some h_C is missing.
std::optional<std::uint64_t> fixed_part_dimension(const std::vector<OneDimComponent>& data);

/// lambdas = (λ⁰, λ¹, ...), betti = (b̃_n, b̃_{n−1}, ...), same length.
/// Checks b̃_{n−k} <= λᵏ and Σ (−1)^k λᵏ = Σ (−1)^k b̃_{n−k}.
std::vector<Check> chain_complex_constraints(const std::vector<std::uint64_t>& lambdas,
                                             const std::vector<std::uint64_t>& betti);

/// Everything the bounds module can say about one singularity.
struct BoundReport {
    std::vector<std::uint64_t> lambdas;
    int n = 0;
    std::string lambda_source = "computed";
    std::optional<std::uint64_t> imdim;           ///< always "supplied"
    std::optional<std::vector<std::uint64_t>> betti;  ///< (b̃_n, b̃_{n−1}, ...), "supplied"
    std::optional<BettiBounds> betti_window;
    std::optional<Window> image_window;
    std::vector<Check> checks;

    bool all_pass() const;
};

/// `complete` says the lambda list runs up to λ^s. The chain-complex checks
/// need complete lists of equal length and are skipped otherwise.
BoundReport build_report(std::vector<std::uint64_t> lambdas, int n, std::optional<std::uint64_t> imdim,
                         std::optional<std::vector<std::uint64_t>> betti,
                         const std::optional<std::vector<OneDimComponent>>& one_dim, bool complete = true);

} // namespace lecycle
