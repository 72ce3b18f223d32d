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

#include "json.hpp"
#include "lecycle/bounds.hpp"
#include "lecycle/corpus.hpp"
#include "lecycle/lenumbers.hpp"
#include "lecycle/perv.hpp"

namespace lecycle {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kReportSchema = "lecycle-report/1";
inline constexpr std::string_view kVersion = "0.1.0";

// Structured reports. Key order is fixed and no timing data is recorded, so
// equal inputs give byte-identical documents.

Json to_json(const Cycle& c);
Json to_json(const LeResult& r);
Json to_json(const BoundReport& r);
Json to_json(const TrialSummary& s);
Json to_json(const EntryVerdict& v);
Json to_json(const CorpusSummary& s);

/// Wraps a payload with schema, version, command and inputs.
Json envelope(std::string_view command, Json inputs, Json body);

/// Two-space indented rendering with a trailing newline.
std::string render(const Json& doc);

} // namespace lecycle
