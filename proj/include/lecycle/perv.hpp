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
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "lecycle/coefficient.hpp"

namespace lecycle {

/// Dense matrix over a Field, row-major.
class Matrix {
public:
    Matrix(Field field, std::size_t rows, std::size_t cols);

    static Matrix identity(Field field, std::size_t n);
    /// Entries given as integers (rows of equal length).
    static Matrix from_rows(Field field, const std::vector<std::vector<long>>& rows);

    Field field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Coefficient& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Coefficient& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    /// Exact Gaussian elimination.
    std::size_t rank() const;
    std::size_t nullity() const { return cols_ - rank(); }
    Matrix transpose() const;
    /// nullopt when singular; requires a square matrix.
    std::optional<Matrix> inverse() const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b);

    std::string to_string() const;

private:
    Field field_;
    std::size_t rows_, cols_;
    std::vector<Coefficient> data_;
};

/// Nondegenerate bilinear pairings on Ψ and Φ making var the adjoint of
/// can: canᵀ · phi = psi · var.
struct SelfDualWitness {
    Matrix psi;
    Matrix phi;
};

/// Ψ (dim a) and Φ (dim b) with can: Ψ → Φ and var: Φ → Ψ. The monodromy
/// T = id − var·can is derived on demand.
class MonodromyQuadruple {
public:
    /// can is b × a, var is a × b.
    MonodromyQuadruple(Matrix can, Matrix var, std::optional<SelfDualWitness> witness = std::nullopt);

    Field field() const noexcept { return can_.field(); }
    std::size_t dim_psi() const noexcept { return can_.cols(); }
    std::size_t dim_phi() const noexcept { return can_.rows(); }
    const Matrix& can() const noexcept { return can_; }
    const Matrix& var() const noexcept { return var_; }
    const std::optional<SelfDualWitness>& witness() const noexcept { return witness_; }

    Matrix monodromy() const;

private:
    Matrix can_;
    Matrix var_;
    std::optional<SelfDualWitness> witness_;
};

struct RankData {
    std::size_t dim_psi, dim_phi;
    std::size_t rank_can, ker_can, coker_can;
    std::size_t rank_var, ker_var, coker_var;
    std::size_t rank_var_can, ker_var_can;
    /// Rank of id − T, computed from T itself.
    std::size_t rank_id_minus_t;
};

RankData rank_data(const MonodromyQuadruple& q);

/// dim coker(can) differs from dim ker(var).
class HypothesisViolation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct SandwichBound {
    mpq_class lower;      ///< (b − r) / 2
    std::uint64_t upper;  ///< b − r
    std::uint64_t coker;  ///< dim coker(can)
    bool holds;           ///< lower <= coker <= upper
};

/// b = dim Φ, r = rank(var·can). Throws HypothesisViolation.
SandwichBound sandwich_bound(const MonodromyQuadruple& q);

/// Exact check of the witness: both pairings invertible and the adjunction holds.
bool verify_witness(const MonodromyQuadruple& q);

/// Seeded self-dual quadruple: can = X·Y of random rank, var = psi⁻¹·canᵀ·phi
/// with random invertible pairings. Entries are drawn from [-3, 3].
MonodromyQuadruple self_dual(std::uint64_t seed, std::size_t a, std::size_t b, Field field);

/// dim coker(can); throws std::invalid_argument without a witness.
std::uint64_t betti_from_quadruple(const MonodromyQuadruple& q);

struct TrialSummary {
    Field field;
    std::uint64_t seed = 0;
    std::uint64_t trials = 0;
    std::uint64_t passed = 0;
    std::vector<std::string> failures;  ///< first few, with their sub-seeds
};

/// Runs `trials` self-dual quadruples with dimensions in [0, 6] and checks
/// the witness, dim coker(can) = dim ker(var), the sandwich inequality, the
/// rank chain rank(var·can) <= rank(can), rank(var), and id − T = var·can.
TrialSummary run_trials(std::uint64_t trials, std::uint64_t seed, Field field);

} // namespace lecycle
