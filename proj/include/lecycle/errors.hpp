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
#include <stdexcept>
#include <string>

namespace lecycle {

/// Malformed user input: bad polynomial text, unknown variables, invalid
/// coordinate lists, inconsistent numeric arguments.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ParseError : public InputError {
public:
    ParseError(const std::string& what, std::size_t position)
        : InputError(what + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class UnknownVariable : public InputError {
public:
    explicit UnknownVariable(const std::string& name)
        : InputError("unknown variable '" + name + "'"), name_(name) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

/// Operands live over different variable lists or fields.
class RingMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ExponentOverflow : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

/// A computation ran past its configured step budget.
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(std::uint64_t limit)
        : std::runtime_error("step budget of " + std::to_string(limit) + " reductions exceeded"),
          limit_(limit) {}

    std::uint64_t limit() const noexcept { return limit_; }

private:
    std::uint64_t limit_;
};

/// Counts reduction steps across a computation and aborts once the limit is hit.
class Budget {
public:
    static constexpr std::uint64_t kDefaultLimit = 1'000'000;

    explicit Budget(std::uint64_t limit = kDefaultLimit) : limit_(limit) {}

    void charge(std::uint64_t steps = 1) {
        used_ += steps;
        if (used_ > limit_) throw BudgetExceeded(limit_);
    }

    std::uint64_t used() const noexcept { return used_; }
    std::uint64_t limit() const noexcept { return limit_; }

private:
    std::uint64_t limit_;
    std::uint64_t used_ = 0;
};

} // namespace lecycle
