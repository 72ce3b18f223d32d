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
#include <iosfwd>
#include <string>

#include <gmpxx.h>

namespace lecycle {

/// Base field: the rationals, or GF(p) for a prime p below 2^31.
class Field {
public:
    constexpr Field() = default;

    static constexpr Field rationals() noexcept { return Field{}; }
    /// Throws InputError unless p is a prime below 2^31.
    static Field prime(std::uint32_t p);

    constexpr bool is_rational() const noexcept { return p_ == 0; }
    constexpr std::uint32_t characteristic() const noexcept { return p_; }
    std::string name() const;

    friend constexpr bool operator==(const Field&, const Field&) = default;

private:
    std::uint32_t p_ = 0;
};

bool is_prime(std::uint64_t n) noexcept;

/// Exact field element. Rationals are kept in lowest terms with positive
/// denominator; residues lie in [0, p).
class Coefficient {
public:
    Coefficient() = default;
    Coefficient(Field field, long value);
    Coefficient(Field field, const mpz_class& value);
    /// Rational value mapped into `field`; throws InputError when the
    /// denominator vanishes mod p.
    Coefficient(Field field, const mpq_class& value);

    static Coefficient zero(Field field) { return Coefficient(field, 0L); }
    static Coefficient one(Field field) { return Coefficient(field, 1L); }

    Field field() const noexcept { return field_; }
    bool is_zero() const noexcept;
    bool is_one() const noexcept;
    /// Sign of the rational value; residues count as positive when nonzero.
    int sign() const noexcept;

    /// Valid only over the rationals.
    const mpq_class& rational() const;
    /// Valid only over GF(p).
    std::uint64_t residue() const;

    Coefficient operator-() const;
    Coefficient& operator+=(const Coefficient& o);
    Coefficient& operator-=(const Coefficient& o);
    Coefficient& operator*=(const Coefficient& o);
    /// Throws std::domain_error on division by zero.
    Coefficient& operator/=(const Coefficient& o);
    Coefficient inverse() const;

    friend Coefficient operator+(Coefficient a, const Coefficient& b) { return a += b; }
    friend Coefficient operator-(Coefficient a, const Coefficient& b) { return a -= b; }
    friend Coefficient operator*(Coefficient a, const Coefficient& b) { return a *= b; }
    friend Coefficient operator/(Coefficient a, const Coefficient& b) { return a /= b; }
    friend bool operator==(const Coefficient& a, const Coefficient& b);

    std::string to_string() const;

private:
    void check_field(const Coefficient& o) const;

    Field field_;
    mpq_class q_;
    std::uint64_t r_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Coefficient& c);

} // namespace lecycle
