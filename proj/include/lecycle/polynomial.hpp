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
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lecycle/coefficient.hpp"

namespace lecycle {

/// Exponent vector with cached total degree.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
    explicit Monomial(std::vector<std::uint32_t> exponents);

    static Monomial variable(std::size_t nvars, std::size_t index, std::uint32_t power = 1);

    std::size_t size() const noexcept { return e_.size(); }
    std::uint32_t operator[](std::size_t i) const noexcept { return e_[i]; }
    std::span<const std::uint32_t> exponents() const noexcept { return e_; }
    std::uint64_t degree() const noexcept { return deg_; }
    bool is_one() const noexcept { return deg_ == 0; }

    bool divides(const Monomial& other) const noexcept;
    /// Exponent-wise difference; requires divisor.divides(*this).
    Monomial quotient(const Monomial& divisor) const;
    static Monomial lcm(const Monomial& a, const Monomial& b);
    static Monomial gcd(const Monomial& a, const Monomial& b);
    /// Throws ExponentOverflow instead of wrapping.
    Monomial pow(std::uint32_t k) const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial& a, const Monomial& b) noexcept { return a.e_ == b.e_; }

private:
    std::vector<std::uint32_t> e_;
    std::uint64_t deg_ = 0;
};

/// Graded reverse lexicographic comparison with x_0 > x_1 > ... ; returns
/// a positive value when a > b, zero on equality.
int grevlex_compare(const Monomial& a, const Monomial& b) noexcept;

/// Ordered variable names plus the coefficient field. Shared by every
/// polynomial built over it.
class Ring {
public:
    Ring(std::vector<std::string> variables, Field field);

    const std::vector<std::string>& variables() const noexcept { return vars_; }
    std::size_t size() const noexcept { return vars_.size(); }
    Field field() const noexcept { return field_; }

    std::optional<std::size_t> find(std::string_view name) const;
    /// Throws UnknownVariable.
    std::size_t index_of(std::string_view name) const;

    friend bool operator==(const Ring& a, const Ring& b) {
        return a.field_ == b.field_ && a.vars_ == b.vars_;
    }

private:
    std::vector<std::string> vars_;
    Field field_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> variables, Field field = Field::rationals());
bool same_ring(const RingPtr& a, const RingPtr& b) noexcept;
/// Throws RingMismatch when the rings differ.
void require_same_ring(const RingPtr& a, const RingPtr& b);

struct Term {
    Monomial monomial;
    Coefficient coefficient;
};

/// Sparse polynomial; terms are kept in descending grevlex order with no
/// zero coefficients, so equality is structural.
class Polynomial {
public:
    explicit Polynomial(RingPtr ring);

    static Polynomial constant(RingPtr ring, const Coefficient& c);
    static Polynomial constant(RingPtr ring, long c);
    static Polynomial variable(RingPtr ring, std::size_t index);
    static Polynomial variable(RingPtr ring, std::string_view name);
    static Polynomial monomial(RingPtr ring, Monomial m, const Coefficient& c);
    /// Combines like terms, drops zeros and sorts.
    static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

    const RingPtr& ring() const noexcept { return ring_; }
    Field field() const noexcept { return ring_->field(); }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    std::size_t num_terms() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    std::uint64_t total_degree() const noexcept;
    /// Grevlex-leading term; requires a nonzero polynomial.
    const Term& leading_term() const;
    Coefficient constant_term() const;
    bool depends_on(std::size_t index) const noexcept;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial& a, const Polynomial& b);

    Polynomial scaled(const Coefficient& c) const;
    /// Multiplies every term by m.
    Polynomial shifted(const Monomial& m) const;
    Polynomial pow(std::uint32_t k) const;

    Polynomial partial(std::size_t index) const;
    Polynomial partial(std::string_view name) const;
    /// Replaces variable `index` by `value` (same ring).
    Polynomial substitute(std::size_t index, const Polynomial& value) const;
    Coefficient evaluate(std::span<const Coefficient> point) const;

    /// Divides by the leading coefficient.
    Polynomial monic() const;

    std::string to_string() const;

private:
    RingPtr ring_;
    std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

/// Re-expresses p over `target`, sending variable i to target variable
/// index_map[i]. Fields must agree.
Polynomial change_ring(const Polynomial& p, const RingPtr& target, std::span<const std::size_t> index_map);

/// Maps p into `target`, whose variable names must contain p's (matched by
/// name). Coefficients are converted to the target field.
Polynomial embed(const Polynomial& p, const RingPtr& target);

/// Same variables, coefficients mapped into another field.
Polynomial to_field(const Polynomial& p, const RingPtr& target);

/// Rational polynomial scaled to coprime integer coefficients with positive
/// leading coefficient; other fields are returned monic. Display only.
Polynomial primitive_form(const Polynomial& p);

} // namespace lecycle
