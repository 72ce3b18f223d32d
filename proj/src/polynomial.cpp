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

#include "lecycle/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "lecycle/errors.hpp"

namespace lecycle {

namespace {

constexpr std::uint64_t kMaxExponent = std::numeric_limits<std::uint32_t>::max();

std::uint32_t checked_add(std::uint32_t a, std::uint32_t b) {
    std::uint64_t s = std::uint64_t{a} + b;
    if (s > kMaxExponent) throw ExponentOverflow("exponent exceeds 2^32-1");
    return static_cast<std::uint32_t>(s);
}

bool valid_identifier(const std::string& s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    return std::all_of(s.begin(), s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

bool term_greater(const Term& a, const Term& b) { return grevlex_compare(a.monomial, b.monomial) > 0; }

} // namespace

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::vector<std::uint32_t> exponents) : e_(std::move(exponents)) {
    for (auto v : e_) deg_ += v;
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, std::uint32_t power) {
    Monomial m(nvars);
    m.e_.at(index) = power;
    m.deg_ = power;
    return m;
}

bool Monomial::divides(const Monomial& other) const noexcept {
    if (deg_ > other.deg_) return false;
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > other.e_[i]) return false;
    return true;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
    Monomial m(*this);
    for (std::size_t i = 0; i < e_.size(); ++i) {
        if (divisor.e_[i] > e_[i]) throw std::logic_error("monomial quotient: not divisible");
        m.e_[i] -= divisor.e_[i];
    }
    m.deg_ = deg_ - divisor.deg_;
    return m;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    Monomial m(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) m.e_[i] = std::max(a.e_[i], b.e_[i]);
    for (auto v : m.e_) m.deg_ += v;
    return m;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
    Monomial m(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) m.e_[i] = std::min(a.e_[i], b.e_[i]);
    for (auto v : m.e_) m.deg_ += v;
    return m;
}

Monomial Monomial::pow(std::uint32_t k) const {
    Monomial m(*this);
    m.deg_ = 0;
    for (auto& v : m.e_) {
        std::uint64_t p = std::uint64_t{v} * k;
        if (p > kMaxExponent) throw ExponentOverflow("exponent exceeds 2^32-1");
        v = static_cast<std::uint32_t>(p);
        m.deg_ += v;
    }
    return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) m.e_[i] = checked_add(a.e_[i], b.e_[i]);
    m.deg_ = a.deg_ + b.deg_;
    return m;
}

int grevlex_compare(const Monomial& a, const Monomial& b) noexcept {
    if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
}

// ---------------------------------------------------------------------------
// Ring

Ring::Ring(std::vector<std::string> variables, Field field) : vars_(std::move(variables)), field_(field) {
    std::set<std::string> seen;
    for (const auto& v : vars_) {
        if (!valid_identifier(v)) throw InputError("invalid variable name '" + v + "'");
        if (!seen.insert(v).second) throw InputError("duplicate variable name '" + v + "'");
    }
}

std::optional<std::size_t> Ring::find(std::string_view name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return i;
    return std::nullopt;
}

std::size_t Ring::index_of(std::string_view name) const {
    if (auto i = find(name)) return *i;
    throw UnknownVariable(std::string(name));
}

RingPtr make_ring(std::vector<std::string> variables, Field field) {
    return std::make_shared<const Ring>(std::move(variables), field);
}

bool same_ring(const RingPtr& a, const RingPtr& b) noexcept {
    return a == b || (a && b && *a == *b);
}

void require_same_ring(const RingPtr& a, const RingPtr& b) {
    if (!same_ring(a, b)) throw RingMismatch("polynomials belong to different rings");
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {
    if (!ring_) throw std::invalid_argument("polynomial needs a ring");
}

Polynomial Polynomial::constant(RingPtr ring, const Coefficient& c) {
    Polynomial p(std::move(ring));
    if (!(c.field() == p.field())) throw RingMismatch("constant from a different field");
    if (!c.is_zero()) p.terms_.push_back({Monomial(p.ring_->size()), c});
    return p;
}

Polynomial Polynomial::constant(RingPtr ring, long c) {
    Field f = ring->field();
    return constant(std::move(ring), Coefficient(f, c));
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
    Polynomial p(std::move(ring));
    if (index >= p.ring_->size()) throw std::out_of_range("variable index out of range");
    p.terms_.push_back({Monomial::variable(p.ring_->size(), index), Coefficient::one(p.field())});
    return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::string_view name) {
    std::size_t i = ring->index_of(name);
    return variable(std::move(ring), i);
}

Polynomial Polynomial::monomial(RingPtr ring, Monomial m, const Coefficient& c) {
    Polynomial p(std::move(ring));
    if (m.size() != p.ring_->size()) throw std::invalid_argument("monomial length differs from ring size");
    if (!c.is_zero()) p.terms_.push_back({std::move(m), c});
    return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
    Polynomial p(std::move(ring));
    std::sort(terms.begin(), terms.end(), term_greater);
    for (auto& t : terms) {
        if (t.monomial.size() != p.ring_->size())
            throw std::invalid_argument("monomial length differs from ring size");
        if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
            p.terms_.back().coefficient += t.coefficient;
            if (p.terms_.back().coefficient.is_zero()) p.terms_.pop_back();
        } else if (!t.coefficient.is_zero()) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

bool Polynomial::is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one());
}

std::uint64_t Polynomial::total_degree() const noexcept {
    return terms_.empty() ? 0 : terms_.front().monomial.degree();
}

const Term& Polynomial::leading_term() const {
    if (terms_.empty()) throw std::logic_error("leading term of the zero polynomial");
    return terms_.front();
}

Coefficient Polynomial::constant_term() const {
    if (!terms_.empty() && terms_.back().monomial.is_one()) return terms_.back().coefficient;
    return Coefficient::zero(field());
}

bool Polynomial::depends_on(std::size_t index) const noexcept {
    return std::any_of(terms_.begin(), terms_.end(), [&](const Term& t) { return t.monomial[index] > 0; });
}

Polynomial Polynomial::operator-() const {
    Polynomial p(*this);
    for (auto& t : p.terms_) t.coefficient = -t.coefficient;
    return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    require_same_ring(ring_, o.ring_);
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
        int c = a == terms_.end() ? -1 : b == o.terms_.end() ? 1 : grevlex_compare(a->monomial, b->monomial);
        if (c > 0) {
            out.push_back(std::move(*a++));
        } else if (c < 0) {
            out.push_back(*b++);
        } else {
            Coefficient s = a->coefficient + b->coefficient;
            if (!s.is_zero()) out.push_back({std::move(a->monomial), std::move(s)});
            ++a;
            ++b;
        }
    }
    terms_ = std::move(out);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    require_same_ring(a.ring_, b.ring_);
    std::vector<Term> prod;
    prod.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& s : a.terms_)
        for (const auto& t : b.terms_) prod.push_back({s.monomial * t.monomial, s.coefficient * t.coefficient});
    return Polynomial::from_terms(a.ring_, std::move(prod));
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (!same_ring(a.ring_, b.ring_) || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
        if (!(a.terms_[i].monomial == b.terms_[i].monomial) || !(a.terms_[i].coefficient == b.terms_[i].coefficient))
            return false;
    }
    return true;
}

Polynomial Polynomial::scaled(const Coefficient& c) const {
    if (c.is_zero()) return Polynomial(ring_);
    Polynomial p(*this);
    for (auto& t : p.terms_) t.coefficient *= c;
    return p;
}

Polynomial Polynomial::shifted(const Monomial& m) const {
    Polynomial p(*this);
    for (auto& t : p.terms_) t.monomial = t.monomial * m;
    return p;
}

Polynomial Polynomial::pow(std::uint32_t k) const {
    if (terms_.size() == 1) {
        Polynomial p(ring_);
        Coefficient c = Coefficient::one(field());
        for (std::uint32_t i = 0; i < k; ++i) c *= terms_[0].coefficient;
        p.terms_.push_back({terms_[0].monomial.pow(k), c});
        return p;
    }
    if (k > 0 && !terms_.empty() && terms_.front().monomial.degree() * k > kMaxExponent)
        throw ExponentOverflow("power degree exceeds 2^32-1");
    Polynomial result = constant(ring_, 1);
    Polynomial base = *this;
    while (k) {
        if (k & 1) result *= base;
        k >>= 1;
        if (k) base *= base;
    }
    return result;
}

Polynomial Polynomial::partial(std::size_t index) const {
    if (index >= ring_->size()) throw std::out_of_range("variable index out of range");
    std::vector<Term> out;
    for (const auto& t : terms_) {
        std::uint32_t e = t.monomial[index];
        if (e == 0) continue;
        std::vector<std::uint32_t> ex(t.monomial.exponents().begin(), t.monomial.exponents().end());
        ex[index] = e - 1;
        out.push_back({Monomial(std::move(ex)), t.coefficient * Coefficient(field(), static_cast<long>(e))});
    }
    return from_terms(ring_, std::move(out));
}

Polynomial Polynomial::partial(std::string_view name) const { return partial(ring_->index_of(name)); }

Polynomial Polynomial::substitute(std::size_t index, const Polynomial& value) const {
    require_same_ring(ring_, value.ring_);
    if (index >= ring_->size()) throw std::out_of_range("variable index out of range");
    Polynomial result(ring_);
    // Cache value^e for the exponents that occur.
    std::vector<std::pair<std::uint32_t, Polynomial>> powers;
    auto power_of = [&](std::uint32_t e) -> const Polynomial& {
        for (const auto& [k, p] : powers)
            if (k == e) return p;
        powers.emplace_back(e, value.pow(e));
        return powers.back().second;
    };
    for (const auto& t : terms_) {
        std::uint32_t e = t.monomial[index];
        std::vector<std::uint32_t> ex(t.monomial.exponents().begin(), t.monomial.exponents().end());
        ex[index] = 0;
        Polynomial rest = monomial(ring_, Monomial(std::move(ex)), t.coefficient);
        result += e == 0 ? rest : rest * power_of(e);
    }
    return result;
}

Coefficient Polynomial::evaluate(std::span<const Coefficient> point) const {
    if (point.size() != ring_->size()) throw std::invalid_argument("evaluation point has wrong length");
    Coefficient sum = Coefficient::zero(field());
    for (const auto& t : terms_) {
        Coefficient v = t.coefficient;
        for (std::size_t i = 0; i < point.size(); ++i)
            for (std::uint32_t k = 0; k < t.monomial[i]; ++k) v *= point[i];
        sum += v;
    }
    return sum;
}

Polynomial Polynomial::monic() const {
    if (terms_.empty()) return *this;
    return scaled(terms_.front().coefficient.inverse());
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    const auto& names = ring_->variables();
    bool first = true;
    for (const auto& t : terms_) {
        Coefficient c = t.coefficient;
        bool negative = c.sign() < 0;
        if (negative) c = -c;
        if (negative)
            os << '-';
        else if (!first)
            os << '+';
        first = false;
        bool unit = c.is_one();
        if (t.monomial.is_one()) {
            os << c.to_string();
            continue;
        }
        if (!unit) os << c.to_string();
        bool need_star = !unit;
        for (std::size_t i = 0; i < t.monomial.size(); ++i) {
            std::uint32_t e = t.monomial[i];
            if (e == 0) continue;
            if (need_star) os << '*';
            os << names[i];
            if (e > 1) os << '^' << e;
            need_star = true;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

Polynomial change_ring(const Polynomial& p, const RingPtr& target, std::span<const std::size_t> index_map) {
    if (index_map.size() != p.ring()->size()) throw std::invalid_argument("index map has wrong length");
    if (!(p.field() == target->field())) throw RingMismatch("change_ring across fields");
    std::vector<Term> out;
    out.reserve(p.num_terms());
    for (const auto& t : p.terms()) {
        std::vector<std::uint32_t> ex(target->size(), 0);
        for (std::size_t i = 0; i < index_map.size(); ++i) {
            if (t.monomial[i] == 0) continue;
            if (index_map[i] >= target->size()) throw std::out_of_range("index map target out of range");
            ex[index_map[i]] = checked_add(ex[index_map[i]], t.monomial[i]);
        }
        out.push_back({Monomial(std::move(ex)), t.coefficient});
    }
    return Polynomial::from_terms(target, std::move(out));
}

namespace {

Coefficient convert(const Coefficient& c, Field target) {
    if (c.field() == target) return c;
    if (!c.field().is_rational()) throw RingMismatch("cannot lift a prime-field coefficient");
    return Coefficient(target, c.rational());
}

} // namespace

Polynomial embed(const Polynomial& p, const RingPtr& target) {
    std::vector<std::size_t> map;
    map.reserve(p.ring()->size());
    for (const auto& name : p.ring()->variables()) map.push_back(target->index_of(name));
    std::vector<Term> out;
    for (const auto& t : p.terms()) {
        std::vector<std::uint32_t> ex(target->size(), 0);
        for (std::size_t i = 0; i < map.size(); ++i) ex[map[i]] = t.monomial[i];
        out.push_back({Monomial(std::move(ex)), convert(t.coefficient, target->field())});
    }
    return Polynomial::from_terms(target, std::move(out));
}

Polynomial to_field(const Polynomial& p, const RingPtr& target) {
    if (p.ring()->variables() != target->variables()) throw RingMismatch("to_field needs identical variables");
    std::vector<Term> out;
    for (const auto& t : p.terms()) out.push_back({t.monomial, convert(t.coefficient, target->field())});
    return Polynomial::from_terms(target, std::move(out));
}

Polynomial primitive_form(const Polynomial& p) {
    if (p.is_zero()) return p;
    if (!p.field().is_rational()) return p.monic();
    mpz_class den = 1, num = 0;
    for (const auto& t : p.terms()) {
        const mpq_class& q = t.coefficient.rational();
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
    }
    for (const auto& t : p.terms()) {
        const mpq_class& q = t.coefficient.rational();
        mpz_class v = q.get_num() * (den / q.get_den());
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), v.get_mpz_t());
    }
    mpq_class scale(den, num);
    if (p.leading_term().coefficient.sign() < 0) scale = -scale;
    return p.scaled(Coefficient(p.field(), scale));
}

} // namespace lecycle
