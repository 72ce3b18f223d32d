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

#include <string>
#include <string_view>
#include <vector>

#include "lecycle/polynomial.hpp"

namespace lecycle {

/// Parses a polynomial expression over `ring`.
///
/// Grammar (whitespace ignored):
///
///     expr    := term (('+' | '-') term)*
///     term    := unary (('*' | '/') unary)*
///     unary   := ('+' | '-') unary | power
///     power   := primary ('^' integer)?
///     primary := integer | identifier | '(' expr ')'
///
/// Division is only allowed by nonzero constants, which is what makes the
/// rendering of rational coefficients ("5/4*x") parse back.
///
/// Throws ParseError (with a 0-based byte position) or UnknownVariable.
Polynomial parse(std::string_view text, const RingPtr& ring);

Polynomial parse(std::string_view text, const std::vector<std::string>& variables,
                 Field field = Field::rationals());

/// Splits "u,v,x,y" (commas and/or whitespace) into names.
std::vector<std::string> split_variable_list(std::string_view text);

} // namespace lecycle
