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

#include <fstream>
#include <sstream>

#include "doctest.h"

#include "lecycle/corpus.hpp"

using namespace lecycle;

namespace {

std::string minimal_entry(const std::string& name, const std::string& f, const std::string& lambda,
                          const std::string& provenance = R"({"lambda": "trivial", "sigma_dim": "trivial"})") {
    return R"({"name": ")" + name + R"(", "f": ")" + f + R"(", "vars": ["x", "y"], "lambda": )" + lambda +
           R"(, "sigma_dim": 0, "provenance": )" + provenance + R"(, "notes": "test entry"})";
}

std::string document(const std::string& entries, const std::string& format = "lecycle-corpus/1") {
    return R"({"format": ")" + format + R"(", "entries": [)" + entries + "]}";
}

} // namespace

TEST_CASE("built-in corpus matches the data file") {
    std::ifstream in(LECYCLE_SOURCE_DIR "/data/corpus.json");
    REQUIRE(in);
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str() == builtin_corpus_text());
}

TEST_CASE("built-in corpus coverage") {
    const Corpus& c = builtin_corpus();
    CHECK(c.format == kCorpusFormat);
    CHECK(c.entries.size() >= 12);
    int isolated = 0, line = 0, surface = 0;
    bool flagship = false;
    for (const auto& e : c.entries) {
        CHECK_FALSE(e.notes.empty());
        (e.sigma_dim == 0 ? isolated : e.sigma_dim == 1 ? line : surface)++;
        flagship |= e.name == "suspension-flagship";
    }
    CHECK(flagship);
    CHECK(isolated >= 6);
    CHECK(line >= 3);
    CHECK(surface >= 2);
}

TEST_CASE("every built-in entry passes") {
    CorpusSummary s = run_all(builtin_corpus());
    CHECK(s.entries.size() == builtin_corpus().entries.size());
    CHECK(s.failed == 0);
    for (const auto& e : s.entries) {
        CAPTURE(e.name);
        CHECK(e.passed);
        CHECK(e.error_kind.empty());
        for (const auto& a : e.assertions) CHECK_MESSAGE(a.passed, e.name << ": " << a.name << " " << a.detail);
    }
    for (std::size_t i = 1; i < s.entries.size(); ++i) CHECK(s.entries[i - 1].name < s.entries[i].name);
}

TEST_CASE("filters select by name") {
    CorpusSummary s = run_all(builtin_corpus(), "brieskorn");
    CHECK(s.entries.size() >= 6);
    for (const auto& e : s.entries) CHECK(e.name.find("brieskorn") != std::string::npos);
    CHECK(run_all(builtin_corpus(), "no-such-entry").entries.empty());
}

TEST_CASE("a wrong expectation fails its entry") {
    Corpus c = load_corpus(document(minimal_entry("good", "x^2+y^3", "[2]") + "," +
                                    minimal_entry("bad", "x^2+y^3", "[3]")));
    CorpusSummary s = run_all(c);
    CHECK(s.passed == 1);
    CHECK(s.failed == 1);
    CHECK(s.entries[0].name == "bad");
    CHECK_FALSE(s.entries[0].passed);
    CHECK(s.entries[0].assertions.front().detail == "computed [2], expected [3]");
}

TEST_CASE("computation errors become failed verdicts") {
    Corpus c = load_corpus(document(minimal_entry("zero", "0", "[0]") + "," + minimal_entry("garbled", "x^", "[1]")));
    CorpusSummary s = run_all(c);
    CHECK(s.failed == 2);
    for (const auto& e : s.entries) CHECK(e.error_kind == "input");
    EntryVerdict starved = run_entry(builtin_corpus().entries.front(), 3);
    CHECK(starved.error_kind == "budget");
    CHECK_FALSE(starved.passed);
}

TEST_CASE("malformed corpus documents") {
    CHECK_THROWS_AS(load_corpus("not json"), InputError);
    CHECK_THROWS_AS(load_corpus(document("", "other/9")), InputError);
    CHECK_THROWS_AS(load_corpus(R"({"format": "lecycle-corpus/1"})"), InputError);
    // Expected values without a provenance label are refused.
    CHECK_THROWS_AS(load_corpus(document(minimal_entry("x", "x^2+y^2", "[1]", R"({"lambda": "trivial"})"))),
                    InputError);
    CHECK_THROWS_AS(load_corpus(document(minimal_entry("x", "x^2+y^2", "[1]",
                                                       R"({"lambda": "guess", "sigma_dim": "trivial"})"))),
                    InputError);
    CHECK_THROWS_AS(load_corpus(document(minimal_entry("x", "x^2+y^2", "[1]") + "," +
                                         minimal_entry("x", "x^2+y^2", "[1]"))),
                    InputError);
    CHECK_THROWS_AS(load_corpus(document(minimal_entry("x", "x^2+y^2", "[-1]"))), InputError);
}
