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

#include "lecycle/report.hpp"

namespace lecycle {

namespace {

Json generators(const IdealBasis& ideal) {
    Json out = Json::array();
    for (const auto& g : ideal.basis()) out.push_back(primitive_form(g).to_string());
    return out;
}

Json window(const Window& w) { return Json{{"lower", w.lower}, {"upper", w.upper}}; }

} // namespace

Json to_json(const Cycle& c) {
    Json parts = Json::array();
    for (const auto& p : c.components()) {
        Json j;
        j["multiplicity"] = p.multiplicity;
        j["origin"] = p.is_origin();
        j["ideal"] = generators(p.ideal);
        parts.push_back(std::move(j));
    }
    Json out;
    out["dimension"] = c.dimension();
    out["text"] = c.to_string();
    out["components"] = std::move(parts);
    return out;
}

Json to_json(const LeResult& r) {
    Json out;
    out["coords"] = r.coords;
    out["critical_locus"] = {{"jacobian", generators(r.locus.jacobian)},
                             {"dimension", r.locus.dimension},
                             {"local_dimension", r.locus.local_dimension}};
    out["gamma_top"] = to_json(r.top_gamma);
    Json steps = Json::array();
    for (const auto& s : r.steps) {
        Json j;
        j["k"] = s.k;
        j["partial"] = s.partial.to_string();
        j["gamma"] = to_json(s.gamma);
        j["lambda_cycle"] = to_json(s.lambda_cycle);
        j["lambda"] = s.lambda;
        steps.push_back(std::move(j));
    }
    out["steps"] = std::move(steps);
    out["lambda"] = r.lambda_list();
    Json checks = Json::array();
    for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    out["checks"] = std::move(checks);
    return out;
}

Json to_json(const BoundReport& r) {
    Json out;
    out["n"] = r.n >= 0 ? Json(r.n) : Json(nullptr);
    out["lambda"] = {{"values", r.lambdas}, {"source", r.lambda_source}};
    out["imdim"] = r.imdim ? Json{{"value", *r.imdim}, {"source", "supplied"}} : Json(nullptr);
    out["betti"] = r.betti ? Json{{"values", *r.betti}, {"source", "supplied"}} : Json(nullptr);
    if (r.betti_window)
        out["betti_window"] = {{"exact_lower", r.betti_window->exact_lower.get_str()},
                               {"lower", r.betti_window->window.lower},
                               {"upper", r.betti_window->window.upper}};
    else
        out["betti_window"] = nullptr;
    out["image_window"] = r.image_window ? window(*r.image_window) : Json(nullptr);
    Json checks = Json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}});
    out["checks"] = std::move(checks);
    out["all_pass"] = r.all_pass();
    return out;
}

Json to_json(const TrialSummary& s) {
    Json out;
    out["field"] = s.field.name();
    out["seed"] = s.seed;
    out["trials"] = s.trials;
    out["passed"] = s.passed;
    out["failed"] = s.trials - s.passed;
    out["failures"] = s.failures;
    return out;
}

Json to_json(const EntryVerdict& v) {
    Json out;
    out["name"] = v.name;
    out["passed"] = v.passed;
    out["budget"] = {{"limit", v.budget_limit}, {"used", v.budget_used}};
    if (!v.error_kind.empty()) out["error"] = {{"kind", v.error_kind}, {"message", v.error}};
    Json asserts = Json::array();
    for (const auto& a : v.assertions) asserts.push_back({{"name", a.name}, {"passed", a.passed}, {"detail", a.detail}});
    out["assertions"] = std::move(asserts);
    if (v.result) out["result"] = to_json(*v.result);
    if (v.report) out["bounds"] = to_json(*v.report);
    return out;
}

Json to_json(const CorpusSummary& s) {
    Json out;
    out["filter"] = s.filter;
    out["total"] = s.entries.size();
    out["passed"] = s.passed;
    out["failed"] = s.failed;
    Json entries = Json::array();
    for (const auto& e : s.entries) entries.push_back(to_json(e));
    out["entries"] = std::move(entries);
    return out;
}

Json envelope(std::string_view command, Json inputs, Json body) {
    Json out;
    out["schema"] = kReportSchema;
    out["version"] = kVersion;
    out["command"] = command;
    out["inputs"] = std::move(inputs);
    for (auto& [key, value] : body.items()) out[key] = std::move(value);
    return out;
}

std::string render(const Json& doc) { return doc.dump(2) + "\n"; }

} // namespace lecycle
