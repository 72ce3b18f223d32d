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

#include "lecycle/perv.hpp"

#include <algorithm>
#include <random>

namespace lecycle {

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Coefficient::zero(field)) {}

Matrix Matrix::identity(Field field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Coefficient::one(field);
    return m;
}

Matrix Matrix::from_rows(Field field, const std::vector<std::vector<long>>& rows) {
    const std::size_t c = rows.empty() ? 0 : rows.front().size();
    Matrix m(field, rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != c) throw std::invalid_argument("ragged matrix rows");
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Coefficient(field, rows[i][j]);
    }
    return m;
}

std::size_t Matrix::rank() const {
    Matrix m = *this;
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols_ && r < rows_; ++col) {
        std::size_t piv = r;
        while (piv < rows_ && m.at(piv, col).is_zero()) ++piv;
        if (piv == rows_) continue;
        for (std::size_t j = 0; j < cols_; ++j) std::swap(m.at(r, j), m.at(piv, j));
        Coefficient inv = m.at(r, col).inverse();
        for (std::size_t i = r + 1; i < rows_; ++i) {
            if (m.at(i, col).is_zero()) continue;
            Coefficient f = m.at(i, col) * inv;
            for (std::size_t j = col; j < cols_; ++j) m.at(i, j) -= f * m.at(r, j);
        }
        ++r;
    }
    return r;
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

std::optional<Matrix> Matrix::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("inverse of a non-square matrix");
    const std::size_t n = rows_;
    Matrix a = *this, inv = identity(field_, n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a.at(piv, col).is_zero()) ++piv;
        if (piv == n) return std::nullopt;
        for (std::size_t j = 0; j < n; ++j) {
            std::swap(a.at(col, j), a.at(piv, j));
            std::swap(inv.at(col, j), inv.at(piv, j));
        }
        Coefficient s = a.at(col, col).inverse();
        for (std::size_t j = 0; j < n; ++j) {
            a.at(col, j) *= s;
            inv.at(col, j) *= s;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a.at(i, col).is_zero()) continue;
            Coefficient f = a.at(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                a.at(i, j) -= f * a.at(col, j);
                inv.at(i, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_ || !(a.field_ == b.field_)) throw std::invalid_argument("matrix product shape mismatch");
    Matrix c(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) c.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix difference shape mismatch");
    Matrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
    return c;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string Matrix::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        s += i ? ", [" : "[";
        for (std::size_t j = 0; j < cols_; ++j) s += (j ? ", " : "") + at(i, j).to_string();
        s += "]";
    }
    return s + "]";
}

MonodromyQuadruple::MonodromyQuadruple(Matrix can, Matrix var, std::optional<SelfDualWitness> witness)
    : can_(std::move(can)), var_(std::move(var)), witness_(std::move(witness)) {
    if (var_.rows() != can_.cols() || var_.cols() != can_.rows())
        throw std::invalid_argument("can must be b x a and var a x b");
    if (!(can_.field() == var_.field())) throw std::invalid_argument("can and var over different fields");
    if (witness_ && (witness_->psi.rows() != dim_psi() || witness_->psi.cols() != dim_psi() ||
                     witness_->phi.rows() != dim_phi() || witness_->phi.cols() != dim_phi()))
        throw std::invalid_argument("pairing sizes do not match the quadruple");
}

Matrix MonodromyQuadruple::monodromy() const { return Matrix::identity(field(), dim_psi()) - var_ * can_; }

RankData rank_data(const MonodromyQuadruple& q) {
    const std::size_t a = q.dim_psi(), b = q.dim_phi();
    RankData d{};
    d.dim_psi = a;
    d.dim_phi = b;
    d.rank_can = q.can().rank();
    d.ker_can = a - d.rank_can;
    d.coker_can = b - d.rank_can;
    d.rank_var = q.var().rank();
    d.ker_var = b - d.rank_var;
    d.coker_var = a - d.rank_var;
    d.rank_var_can = (q.var() * q.can()).rank();
    d.ker_var_can = a - d.rank_var_can;
    d.rank_id_minus_t = (Matrix::identity(q.field(), a) - q.monodromy()).rank();
    return d;
}

SandwichBound sandwich_bound(const MonodromyQuadruple& q) {
    RankData d = rank_data(q);
    if (d.coker_can != d.ker_var)
        throw HypothesisViolation("dim coker(can) = " + std::to_string(d.coker_can) + " but dim ker(var) = " +
                                  std::to_string(d.ker_var));
    const std::uint64_t upper = d.dim_phi - d.rank_var_can;
    mpq_class lower(static_cast<unsigned long>(upper), 2UL);
    lower.canonicalize();
    const bool holds = lower <= mpq_class(static_cast<unsigned long>(d.coker_can)) && d.coker_can <= upper;
    return {lower, upper, d.coker_can, holds};
}

bool verify_witness(const MonodromyQuadruple& q) {
    if (!q.witness()) return false;
    const auto& w = *q.witness();
    if (!w.psi.inverse() || !w.phi.inverse()) return false;
    return q.can().transpose() * w.phi == w.psi * q.var();
}

namespace {

Matrix random_matrix(std::mt19937_64& rng, Field field, std::size_t r, std::size_t c) {
    Matrix m(field, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Coefficient(field, static_cast<long>(rng() % 7) - 3);
    return m;
}

std::pair<Matrix, Matrix> random_invertible(std::mt19937_64& rng, Field field, std::size_t n) {
    constexpr int kRetries = 200;
    for (int attempt = 0; attempt < kRetries; ++attempt) {
        Matrix m = random_matrix(rng, field, n, n);
        if (auto inv = m.inverse()) return {std::move(m), std::move(*inv)};
    }
    throw std::runtime_error("no invertible pairing found within the retry limit");
}

} // namespace

MonodromyQuadruple self_dual(std::uint64_t seed, std::size_t a, std::size_t b, Field field) {
    std::mt19937_64 rng(seed);
    const std::size_t r = rng() % (std::min(a, b) + 1);
    Matrix can = random_matrix(rng, field, b, r) * random_matrix(rng, field, r, a);
    auto [psi, psi_inv] = random_invertible(rng, field, a);
    auto [phi, phi_inv] = random_invertible(rng, field, b);
    Matrix var = psi_inv * can.transpose() * phi;
    return MonodromyQuadruple(std::move(can), std::move(var), SelfDualWitness{std::move(psi), std::move(phi)});
}

std::uint64_t betti_from_quadruple(const MonodromyQuadruple& q) {
    if (!q.witness()) throw std::invalid_argument("betti_from_quadruple needs a self-duality witness");
    return rank_data(q).coker_can;
}

TrialSummary run_trials(std::uint64_t trials, std::uint64_t seed, Field field) {
    constexpr std::size_t kMaxReported = 10;
    TrialSummary s{field, seed, trials, 0, {}};
    std::mt19937_64 rng(seed);
    for (std::uint64_t t = 0; t < trials; ++t) {
        const std::size_t a = rng() % 7, b = rng() % 7;
        const std::uint64_t sub = rng();
        MonodromyQuadruple q = self_dual(sub, a, b, field);
        RankData d = rank_data(q);
        std::string why;
        if (!verify_witness(q)) why = "witness";
        else if (d.coker_can != d.ker_var) why = "coker(can) != ker(var)";
        else if (!sandwich_bound(q).holds) why = "sandwich";
        else if (d.rank_var_can > std::min(d.rank_can, d.rank_var)) why = "rank chain";
        else if (!(Matrix::identity(field, a) - q.monodromy() == q.var() * q.can()) ||
                 d.rank_id_minus_t != d.rank_var_can)
            why = "id - T != var.can";
        if (why.empty()) {
            ++s.passed;
        } else if (s.failures.size() < kMaxReported) {
            s.failures.push_back("trial " + std::to_string(t) + " (seed " + std::to_string(sub) + ", a=" +
                                 std::to_string(a) + ", b=" + std::to_string(b) + "): " + why);
        }
    }
    return s;
}

} // namespace lecycle
