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

#include "lecycle/corpus.hpp"

#include <algorithm>
#include <future>
#include <set>

#include "corpus_data.hpp"
#include "json.hpp"
#include "lecycle/parse.hpp"

namespace lecycle {

namespace {

using nlohmann::json;

const std::set<std::string> kProvenanceLabels = {"worked-example", "hand-derived", "trivial", "back-solved"};

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw InputError("corpus " + where + ": " + what);
}

const json& field(const json& obj, const char* key, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end()) fail(where, std::string("missing field '") + key + "'");
    return *it;
}

std::vector<std::uint64_t> counts(const json& j, const std::string& where) {
    if (!j.is_array()) fail(where, "expected an array of nonnegative integers");
    std::vector<std::uint64_t> out;
    for (const auto& v : j) {
        if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
            fail(where, "expected a nonnegative integer");
        out.push_back(v.get<std::uint64_t>());
    }
    return out;
}

std::vector<std::string> names(const json& j, const std::string& where) {
    if (!j.is_array()) fail(where, "expected an array of strings");
    std::vector<std::string> out;
    for (const auto& v : j) {
        if (!v.is_string()) fail(where, "expected a string");
        out.push_back(v.get<std::string>());
    }
    return out;
}

std::map<int, std::vector<ExpectedComponent>> cycles_by_k(const json& j, const std::string& where) {
    if (!j.is_object()) fail(where, "expected an object keyed by k");
    std::map<int, std::vector<ExpectedComponent>> out;
    for (auto it = j.begin(); it != j.end(); ++it) {
        int k;
        try {
            k = std::stoi(it.key());
        } catch (const std::exception&) {
            fail(where, "cycle key '" + it.key() + "' is not an integer");
        }
        auto& parts = out[k];
        for (const auto& c : it.value()) {
            ExpectedComponent e;
            e.multiplicity = c.value("multiplicity", std::uint64_t{1});
            e.origin = c.value("origin", false);
            if (!e.origin) e.ideal = names(field(c, "ideal", where), where);
            parts.push_back(std::move(e));
        }
    }
    return out;
}

CorpusEntry parse_entry(const json& j) {
    CorpusEntry e;
    if (!j.is_object()) fail("entry", "expected an object");
    e.name = field(j, "name", "entry").get<std::string>();
    const std::string where = "entry '" + e.name + "'";
    e.f = field(j, "f", where).get<std::string>();
    e.vars = names(field(j, "vars", where), where);
    e.coords = j.contains("coords") ? names(j["coords"], where) : e.vars;
    e.lambda = counts(field(j, "lambda", where), where);
    e.sigma_dim = field(j, "sigma_dim", where).get<int>();
    if (j.contains("betti")) e.betti = counts(j["betti"], where);
    if (j.contains("imdim")) e.imdim = field(j, "imdim", where).get<std::uint64_t>();
    if (j.contains("one_dim")) {
        std::vector<OneDimComponent> data;
        for (const auto& c : j["one_dim"]) {
            OneDimComponent oc{field(c, "multiplicity", where).get<std::uint64_t>(),
                               field(c, "transversal_milnor", where).get<std::uint64_t>(), std::nullopt};
            if (c.contains("monodromy"))
                oc.monodromy = Matrix::from_rows(Field::rationals(), c["monodromy"].get<std::vector<std::vector<long>>>());
            data.push_back(std::move(oc));
        }
        validate(data);
        e.one_dim = std::move(data);
    }
    if (j.contains("gamma")) e.gamma = cycles_by_k(j["gamma"], where);
    if (j.contains("lambda_cycles")) e.lambda_cycles = cycles_by_k(j["lambda_cycles"], where);
    e.notes = j.value("notes", std::string());

    const json& prov = field(j, "provenance", where);
    for (auto it = prov.begin(); it != prov.end(); ++it) {
        const std::string label = it.value().get<std::string>();
        if (!kProvenanceLabels.count(label)) fail(where, "unknown provenance label '" + label + "'");
        e.provenance[it.key()] = label;
    }
    std::vector<std::string> needed{"lambda", "sigma_dim"};
    if (e.betti) needed.push_back("betti");
    if (e.imdim) needed.push_back("imdim");
    if (e.one_dim) needed.push_back("one_dim");
    if (!e.gamma.empty() || !e.lambda_cycles.empty()) needed.push_back("cycles");
    for (const auto& key : needed)
        if (!e.provenance.count(key)) fail(where, "expected value '" + key + "' has no provenance label");
    if (e.notes.empty()) fail(where, "notes describing the oracle are required");
    return e;
}

std::string join(const std::vector<std::uint64_t>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
    return s + "]";
}

} // namespace

Corpus load_corpus(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("corpus is not valid JSON: ") + e.what());
    }
    Corpus c;
    try {
        c.format = field(doc, "format", "document").get<std::string>();
        if (c.format != kCorpusFormat) fail("document", "unsupported format '" + c.format + "'");
        std::set<std::string> seen;
        for (const auto& e : field(doc, "entries", "document")) {
            c.entries.push_back(parse_entry(e));
            if (!seen.insert(c.entries.back().name).second) fail("document", "duplicate entry " + c.entries.back().name);
        }
    } catch (const json::exception& e) {
        throw InputError(std::string("corpus has a malformed field: ") + e.what());
    }
    return c;
}

std::string_view builtin_corpus_text() { return kBuiltinCorpus; }

const Corpus& builtin_corpus() {
    static const Corpus corpus = load_corpus(kBuiltinCorpus);
    return corpus;
}

Cycle expected_cycle(const std::vector<ExpectedComponent>& parts, const RingPtr& ring, int dim, Budget& budget) {
    Cycle c(ring, dim);
    for (const auto& p : parts) {
        std::vector<Polynomial> gens;
        if (p.origin)
            for (std::size_t i = 0; i < ring->size(); ++i) gens.push_back(Polynomial::variable(ring, i));
        else
            for (const auto& g : p.ideal) gens.push_back(parse(g, ring));
        c.add(global_basis(std::move(gens), budget), p.multiplicity);
    }
    return c;
}

EntryVerdict run_entry(const CorpusEntry& entry, std::uint64_t budget_limit) {
    EntryVerdict v;
    v.name = entry.name;
    v.budget_limit = budget_limit;
    Budget budget(budget_limit);
    auto check = [&](std::string name, bool ok, std::string detail) {
        v.assertions.push_back({std::move(name), ok, std::move(detail)});
    };
    try {
        auto ring = make_ring(entry.vars);
        Polynomial f = parse(entry.f, ring);
        LeResult r = le_cascade({f, entry.coords}, budget);
        const int n = static_cast<int>(ring->size()) - 1;

        check("lambda", r.lambda_list() == entry.lambda,
              "computed " + join(r.lambda_list()) + ", expected " + join(entry.lambda));
        check("sigma-dim", r.s() == entry.sigma_dim,
              "computed " + std::to_string(r.s()) + ", expected " + std::to_string(entry.sigma_dim));
        auto compare_cycles = [&](const std::map<int, std::vector<ExpectedComponent>>& want, bool polar) {
            for (const auto& [k, parts] : want) {
                const std::string label = std::string(polar ? "gamma" : "lambda-cycle") + std::to_string(k);
                if (k < 0 || k > n) {
                    check(label, false, "no cascade step k=" + std::to_string(k));
                    continue;
                }
                Cycle exp = expected_cycle(parts, ring, k, budget);
                const Cycle& got = polar ? r.step(k).gamma : r.step(k).lambda_cycle;
                check(label, got == exp, "computed " + got.to_string() + ", expected " + exp.to_string());
            }
        };
        compare_cycles(entry.gamma, true);
        compare_cycles(entry.lambda_cycles, false);
        for (const auto& c : r.checks) check("cascade:" + c.name, c.passed, c.detail);
        if (r.s() == 0) {
            std::uint64_t mu = milnor_number_isolated(f, budget);
            check("milnor-number", mu == r.lambda(0),
                  "Jacobian length " + std::to_string(mu) + ", lambda0 " + std::to_string(r.lambda(0)));
        }
        check("jacobian-basis", verify_basis(r.locus.jacobian, budget), r.locus.jacobian.to_string());

        BoundReport report = build_report(r.lambda_list(), n, entry.imdim, entry.betti, entry.one_dim);
        for (const auto& c : report.checks)
            if (c.status != Status::NotEvaluated) check("bounds:" + c.name, c.status == Status::Pass, c.detail);
        v.result = std::move(r);
        v.report = std::move(report);
    } catch (const BudgetExceeded& e) {
        v.error_kind = "budget";
        v.error = e.what();
    } catch (const NonPrepolarError& e) {
        v.error_kind = "non-prepolar";
        v.error = e.what();
    } catch (const CycleError& e) {
        v.error_kind = "cycle";
        v.error = e.what();
    } catch (const InputError& e) {
        v.error_kind = "input";
        v.error = e.what();
    } catch (const std::exception& e) {
        v.error_kind = "internal";
        v.error = e.what();
    }
    v.budget_used = budget.used();
    v.passed = v.error_kind.empty() && !v.assertions.empty() &&
               std::all_of(v.assertions.begin(), v.assertions.end(), [](const Assertion& a) { return a.passed; });
    return v;
}

CorpusSummary run_all(const Corpus& corpus, const std::string& filter, std::uint64_t budget_limit) {
    std::vector<std::future<EntryVerdict>> jobs;
    for (const auto& e : corpus.entries)
        if (e.name.find(filter) != std::string::npos)
            jobs.push_back(std::async(std::launch::async, [&e, budget_limit] { return run_entry(e, budget_limit); }));
    CorpusSummary s;
    s.filter = filter;
    for (auto& j : jobs) s.entries.push_back(j.get());
    std::sort(s.entries.begin(), s.entries.end(),
              [](const EntryVerdict& a, const EntryVerdict& b) { return a.name < b.name; });
    for (const auto& e : s.entries) (e.passed ? s.passed : s.failed)++;
    return s;
}

} // namespace lecycle
