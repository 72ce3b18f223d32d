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
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lecycle/bounds.hpp"
#include "lecycle/lenumbers.hpp"

namespace lecycle {

/// Expected cycle summand: either a list of generators or the origin.
struct ExpectedComponent {
    std::uint64_t multiplicity = 1;
    bool origin = false;
    std::vector<std::string> ideal;
};

struct CorpusEntry {
    std::string name;
    std::string f;
    std::vector<std::string> vars;
    std::vector<std::string> coords;
    std::vector<std::uint64_t> lambda;  ///< λ⁰, ..., λ^{max(s,0)}
    int sigma_dim = 0;
    std::optional<std::vector<std::uint64_t>> betti;  ///< b̃_n, b̃_{n-1}, ...
    std::optional<std::uint64_t> imdim;
    std::optional<std::vector<OneDimComponent>> one_dim;
    std::map<int, std::vector<ExpectedComponent>> gamma;          ///< by k
    std::map<int, std::vector<ExpectedComponent>> lambda_cycles;  ///< by k
    std::map<std::string, std::string> provenance;
    std::string notes;
};

struct Corpus {
    std::string format;
    std::vector<CorpusEntry> entries;
};

inline constexpr std::string_view kCorpusFormat = "lecycle-corpus/1";

/// Parses and validates a corpus document. Every expected value needs a
/// provenance label. Throws InputError.
Corpus load_corpus(std::string_view json_text);
/// The corpus compiled into the library.
std::string_view builtin_corpus_text();
const Corpus& builtin_corpus();

/// Builds the expected cycle of dimension `dim` over `ring`.
Cycle expected_cycle(const std::vector<ExpectedComponent>& parts, const RingPtr& ring, int dim, Budget& budget);

struct Assertion {
    std::string name;
    bool passed;
    std::string detail;
};

struct EntryVerdict {
    std::string name;
    bool passed = false;
    std::vector<Assertion> assertions;
    std::optional<LeResult> result;
    std::optional<BoundReport> report;
    std::string error_kind;  ///< empty, "input", "budget", "non-prepolar", "cycle"
    std::string error;
    std::uint64_t budget_limit = 0;
    std::uint64_t budget_used = 0;
};

/// Runs the cascade and every applicable check for one entry. Computation
/// errors become a failed verdict.
EntryVerdict run_entry(const CorpusEntry& entry, std::uint64_t budget_limit = Budget::kDefaultLimit);

struct CorpusSummary {
    std::string filter;
    std::vector<EntryVerdict> entries;  ///< sorted by name
    std::size_t passed = 0;
    std::size_t failed = 0;
};

/// Entries whose name contains `filter`, run in parallel.
CorpusSummary run_all(const Corpus& corpus, const std::string& filter = "",
                      std::uint64_t budget_limit = Budget::kDefaultLimit);

} // namespace lecycle
