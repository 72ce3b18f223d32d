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

#include "lecycle/coefficient.hpp"

#include <ostream>
#include <stdexcept>

#include "lecycle/errors.hpp"

namespace lecycle {

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Field Field::prime(std::uint32_t p) {
    if (p >= (1u << 31) || !is_prime(p))
        throw InputError("field characteristic " + std::to_string(p) + " is not a prime below 2^31");
    Field f;
    f.p_ = p;
    return f;
}

std::string Field::name() const {
    return is_rational() ? "QQ" : "GF(" + std::to_string(p_) + ")";
}

namespace {

std::uint64_t reduce_mpz(const mpz_class& v, std::uint32_t p) {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
    return r.get_ui();
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
    // a^(p-2) mod p
    std::uint64_t result = 1, base = a % p, e = p - 2;
    while (e) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return result;
}

} // namespace

Coefficient::Coefficient(Field field, long value) : field_(field) {
    if (field_.is_rational()) {
        q_ = value;
    } else {
        long p = static_cast<long>(field_.characteristic());
        long r = value % p;
        if (r < 0) r += p;
        r_ = static_cast<std::uint64_t>(r);
    }
}

Coefficient::Coefficient(Field field, const mpz_class& value) : field_(field) {
    if (field_.is_rational())
        q_ = value;
    else
        r_ = reduce_mpz(value, field_.characteristic());
}

Coefficient::Coefficient(Field field, const mpq_class& value) : field_(field) {
    if (field_.is_rational()) {
        q_ = value;
        q_.canonicalize();
        return;
    }
    const std::uint32_t p = field_.characteristic();
    std::uint64_t den = reduce_mpz(value.get_den(), p);
    if (den == 0)
        throw InputError("denominator " + value.get_den().get_str() + " is not invertible in " + field_.name());
    r_ = reduce_mpz(value.get_num(), p) * inverse_mod(den, p) % p;
}

bool Coefficient::is_zero() const noexcept {
    return field_.is_rational() ? sgn(q_) == 0 : r_ == 0;
}

bool Coefficient::is_one() const noexcept {
    return field_.is_rational() ? q_ == 1 : r_ == 1;
}

int Coefficient::sign() const noexcept {
    if (field_.is_rational()) return sgn(q_);
    return r_ == 0 ? 0 : 1;
}

const mpq_class& Coefficient::rational() const {
    if (!field_.is_rational()) throw std::logic_error("rational() on a prime-field coefficient");
    return q_;
}

std::uint64_t Coefficient::residue() const {
    if (field_.is_rational()) throw std::logic_error("residue() on a rational coefficient");
    return r_;
}

void Coefficient::check_field(const Coefficient& o) const {
    if (!(field_ == o.field_))
        throw RingMismatch("coefficient fields differ: " + field_.name() + " vs " + o.field_.name());
}

Coefficient Coefficient::operator-() const {
    Coefficient c = *this;
    if (field_.is_rational())
        c.q_ = -q_;
    else if (r_ != 0)
        c.r_ = field_.characteristic() - r_;
    return c;
}

Coefficient& Coefficient::operator+=(const Coefficient& o) {
    check_field(o);
    if (field_.is_rational())
        q_ += o.q_;
    else
        r_ = (r_ + o.r_) % field_.characteristic();
    return *this;
}

Coefficient& Coefficient::operator-=(const Coefficient& o) {
    check_field(o);
    if (field_.is_rational())
        q_ -= o.q_;
    else
        r_ = (r_ + field_.characteristic() - o.r_) % field_.characteristic();
    return *this;
}

Coefficient& Coefficient::operator*=(const Coefficient& o) {
    check_field(o);
    if (field_.is_rational())
        q_ *= o.q_;
    else
        r_ = r_ * o.r_ % field_.characteristic();
    return *this;
}

Coefficient& Coefficient::operator/=(const Coefficient& o) {
    check_field(o);
    return *this *= o.inverse();
}

Coefficient Coefficient::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero coefficient");
    Coefficient c = *this;
    if (field_.is_rational())
        c.q_ = 1 / q_;
    else
        c.r_ = inverse_mod(r_, field_.characteristic());
    return c;
}

bool operator==(const Coefficient& a, const Coefficient& b) {
    if (!(a.field_ == b.field_)) return false;
    return a.field_.is_rational() ? a.q_ == b.q_ : a.r_ == b.r_;
}

std::string Coefficient::to_string() const {
    return field_.is_rational() ? q_.get_str() : std::to_string(r_);
}

std::ostream& operator<<(std::ostream& os, const Coefficient& c) { return os << c.to_string(); }

} // namespace lecycle
