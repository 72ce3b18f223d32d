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

#include "lecycle/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "lecycle/parse.hpp"
#include "lecycle/report.hpp"

namespace lecycle {

namespace {

std::uint64_t parse_count(std::string_view text, const std::string& what) {
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
    std::uint64_t v = 0;
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || ec != std::errc() || end != text.data() + text.size())
        throw InputError(what + ": '" + std::string(text) + "' is not a nonnegative integer");
    return v;
}

std::vector<std::uint64_t> parse_counts(std::string text, const std::string& what) {
    if (!text.empty() && text.front() == '[' && text.back() == ']') text = text.substr(1, text.size() - 2);
    std::vector<std::uint64_t> out;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) out.push_back(parse_count(item, what));
    if (out.empty()) throw InputError(what + " is empty");
    return out;
}

std::uint64_t resolve_budget(const std::optional<std::uint64_t>& flag) {
    if (flag) return *flag;
    const char* env = std::getenv(kBudgetEnv);
    if (!env || !*env) return Budget::kDefaultLimit;
    const std::uint64_t v = parse_count(env, kBudgetEnv);
    if (v == 0) throw InputError(std::string(kBudgetEnv) + " must be positive");
    return v;
}

Field resolve_field(const std::optional<std::uint64_t>& prime) {
    if (!prime) return Field::rationals();
    if (*prime >= (1ULL << 31)) throw InputError("prime " + std::to_string(*prime) + " is not below 2^31");
    return Field::prime(static_cast<std::uint32_t>(*prime));
}

std::string list(const std::vector<std::uint64_t>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
    return s + "]";
}

std::string pass_word(bool ok) { return ok ? "pass" : "FAIL"; }

struct Session {
    std::string_view command;
    const std::string& format;
    Json inputs;
    std::ostream& out;
    std::ostream& err;

    int error(int code, const std::string& kind, const std::string& message) {
        err << "lecycle " << command << ": " << kind << " error: " << message << "\n";
        if (format == "json")
            out << render(envelope(command, inputs, Json{{"status", "error"}, {"error", {{"kind", kind}, {"message", message}}}}));
        return code;
    }

    int guarded(const std::function<int()>& body) {
        try {
            return body();
        } catch (const BudgetExceeded& e) {
            return error(kExitBudget, "budget", e.what());
        } catch (const InputError& e) {
            return error(kExitInput, "input", e.what());
        } catch (const NonPrepolarError& e) {
            return error(kExitFail, "non-prepolar", e.what());
        } catch (const CycleError& e) {
            return error(kExitFail, "cycle", e.what());
        } catch (const std::exception& e) {
            return error(kExitFail, "internal", e.what());
        }
    }
};

struct LeOptions {
    std::string f, vars, coords;
    std::optional<std::uint64_t> prime, budget;
    std::uint64_t seed = 1;
    bool random_coords = false;
};

int cmd_le(const LeOptions& o, Session& s) {
    s.inputs = {{"f", o.f}, {"vars", o.vars}, {"coords", o.coords.empty() ? Json(nullptr) : Json(o.coords)},
                {"field", nullptr}, {"random_coords", o.random_coords}, {"seed", o.seed}, {"budget", nullptr}};
    return s.guarded([&] {
        const Field field = resolve_field(o.prime);
        const std::uint64_t limit = resolve_budget(o.budget);
        s.inputs["field"] = field.name();
        s.inputs["budget"] = limit;
        const auto vars = split_variable_list(o.vars);
        const auto coords = o.coords.empty() ? vars : split_variable_list(o.coords);
        Polynomial f = parse(o.f, make_ring(vars, field));
        if (o.random_coords) f = random_linear_change(f, o.seed);
        Budget budget(limit);
        LeResult r = le_cascade({f, coords}, budget);
        const bool ok = std::all_of(r.checks.begin(), r.checks.end(), [](const Verdict& v) { return v.passed; });

        if (s.format == "json") {
            Json body;
            body["status"] = ok ? "pass" : "fail";
            body["budget"] = {{"limit", limit}, {"used", budget.used()}};
            body["f"] = f.to_string();
            body["result"] = to_json(r);
            s.out << render(envelope(s.command, s.inputs, std::move(body)));
        } else {
            s.out << "f: " << f.to_string() << "\n";
            s.out << "field: " << field.name() << "\n";
            s.out << "coords: (" << [&] {
                std::string c;
                for (std::size_t i = 0; i < coords.size(); ++i) c += (i ? ", " : "") + coords[i];
                return c;
            }() << ")\n";
            s.out << "critical locus: " << r.locus.jacobian.to_string() << ", dim " << r.locus.local_dimension
                  << " at the origin\n";
            s.out << "Gamma^" << r.top_gamma.dimension() << " = " << r.top_gamma.to_string() << "\n";
            for (const auto& st : r.steps) {
                s.out << "k = " << st.k << ": d f/d " << coords[st.k] << " = " << st.partial.to_string() << "\n";
                s.out << "  Gamma^" << st.k << " = " << st.gamma.to_string() << "\n";
                s.out << "  Lambda^" << st.k << " = " << st.lambda_cycle.to_string() << "\n";
                s.out << "  lambda^" << st.k << " = " << st.lambda << "\n";
            }
            s.out << "lambda: " << list(r.lambda_list()) << "\n";
            for (const auto& c : r.checks) s.out << "check " << c.name << ": " << pass_word(c.passed) << " (" << c.detail << ")\n";
            s.out << "budget: " << budget.used() << " of " << limit << " steps\n";
        }
        return ok ? kExitPass : kExitFail;
    });
}

struct BoundsOptions {
    std::optional<std::uint64_t> lambda0, imdim, betti;
    std::optional<int> n;
    std::string lambdas, bettis;
};

int cmd_bounds(const BoundsOptions& o, Session& s) {
    s.inputs = {{"lambda0", o.lambda0 ? Json(*o.lambda0) : Json(nullptr)},
                {"lambdas", o.lambdas.empty() ? Json(nullptr) : Json(o.lambdas)},
                {"imdim", o.imdim ? Json(*o.imdim) : Json(nullptr)},
                {"betti", o.betti ? Json(*o.betti) : Json(nullptr)},
                {"bettis", o.bettis.empty() ? Json(nullptr) : Json(o.bettis)},
                {"n", o.n ? Json(*o.n) : Json(nullptr)}};
    return s.guarded([&] {
        std::vector<std::uint64_t> lambdas;
        const bool complete = !o.lambdas.empty();
        if (complete) {
            lambdas = parse_counts(o.lambdas, "--lambdas");
            if (o.lambda0 && *o.lambda0 != lambdas.front())
                throw InputError("--lambda0 disagrees with the first entry of --lambdas");
        } else if (o.lambda0) {
            lambdas = {*o.lambda0};
        } else {
            throw InputError("give --lambda0 or --lambdas");
        }
        std::optional<std::vector<std::uint64_t>> betti;
        if (!o.bettis.empty()) betti = parse_counts(o.bettis, "--bettis");
        if (o.betti) {
            if (betti && betti->front() != *o.betti) throw InputError("--betti disagrees with the first entry of --bettis");
            if (!betti) betti = std::vector<std::uint64_t>{*o.betti};
        }
        if (!o.imdim && !betti) throw InputError("give --imdim, --betti or --bettis");
        const int n = o.n ? *o.n : (complete ? static_cast<int>(lambdas.size()) - 1 : -1);

        BoundReport r = build_report(lambdas, n, o.imdim, betti, std::nullopt, complete);
        r.lambda_source = "supplied";
        const bool ok = r.all_pass();
        if (s.format == "json") {
            s.out << render(envelope(s.command, s.inputs, Json{{"status", ok ? "pass" : "fail"}, {"result", to_json(r)}}));
        } else {
            s.out << "lambda: " << list(r.lambdas) << " (supplied)\n";
            if (r.betti_window)
                s.out << "betti window: [" << r.betti_window->window.lower << ", " << r.betti_window->window.upper
                      << "] (exact lower " << r.betti_window->exact_lower.get_str() << ")\n";
            if (r.image_window)
                s.out << "image window: [" << r.image_window->lower << ", " << r.image_window->upper << "]\n";
            for (const auto& c : r.checks)
                s.out << "check " << c.name << ": " << to_string(c.status) << " (" << c.detail << ")\n";
        }
        return ok ? kExitPass : kExitFail;
    });
}

struct CorpusOptions {
    std::string filter, file;
    std::optional<std::uint64_t> budget;
};

int cmd_corpus(const CorpusOptions& o, Session& s) {
    s.inputs = {{"filter", o.filter}, {"file", o.file.empty() ? Json("builtin") : Json(o.file)}, {"budget", nullptr}};
    return s.guarded([&] {
        const std::uint64_t limit = resolve_budget(o.budget);
        s.inputs["budget"] = limit;
        Corpus loaded;
        if (!o.file.empty()) {
            std::ifstream in(o.file);
            if (!in) throw InputError("cannot read corpus file " + o.file);
            std::stringstream buf;
            buf << in.rdbuf();
            loaded = load_corpus(buf.str());
        }
        const Corpus& corpus = o.file.empty() ? builtin_corpus() : loaded;
        CorpusSummary sum = run_all(corpus, o.filter, limit);

        int code = kExitPass;
        bool input = false, budget_only = sum.failed > 0;
        for (const auto& e : sum.entries) {
            if (e.passed) continue;
            input |= e.error_kind == "input";
            budget_only &= e.error_kind == "budget";
        }
        if (input) code = kExitInput;
        else if (budget_only) code = kExitBudget;
        else if (sum.failed) code = kExitFail;

        if (s.format == "json") {
            s.out << render(envelope(s.command, s.inputs,
                                     Json{{"status", sum.failed ? "fail" : "pass"}, {"result", to_json(sum)}}));
        } else {
            for (const auto& e : sum.entries) {
                s.out << (e.passed ? "PASS " : "FAIL ") << e.name << " (" << e.assertions.size() << " assertions, "
                      << e.budget_used << " steps)\n";
                if (!e.error_kind.empty()) s.out << "  " << e.error_kind << " error: " << e.error << "\n";
                for (const auto& a : e.assertions)
                    if (!a.passed) s.out << "  " << a.name << ": " << a.detail << "\n";
            }
            s.out << "corpus: " << sum.entries.size() << " entries, " << sum.passed << " passed, " << sum.failed
                  << " failed\n";
        }
        return code;
    });
}

struct PervOptions {
    std::uint64_t trials = 1000, seed = 1;
    std::optional<std::uint64_t> prime;
};

int cmd_perv(const PervOptions& o, Session& s) {
    s.inputs = {{"trials", o.trials}, {"seed", o.seed}, {"field", nullptr}};
    return s.guarded([&] {
        const Field field = resolve_field(o.prime);
        s.inputs["field"] = field.name();
        TrialSummary t = run_trials(o.trials, o.seed, field);
        const bool ok = t.passed == t.trials;
        if (s.format == "json") {
            s.out << render(envelope(s.command, s.inputs, Json{{"status", ok ? "pass" : "fail"}, {"result", to_json(t)}}));
        } else {
            s.out << "perv: " << t.passed << "/" << t.trials << " trials pass over " << field.name() << " (seed "
                  << t.seed << ")\n";
            for (const auto& f : t.failures) s.out << "  " << f << "\n";
        }
        return ok ? kExitPass : kExitFail;
    });
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Le cycles, Le numbers and Betti bounds for hypersurface singularities", "lecycle"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kVersion));
    std::string format = "text";
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    };
    auto add_budget = [&](CLI::App* sub, std::optional<std::uint64_t>& slot) {
        sub->add_option("--budget", slot, std::string("Step budget (default from ") + kBudgetEnv + ")")
            ->check(CLI::PositiveNumber);
    };

    LeOptions le_opt;
    auto* le = app.add_subcommand("le", "Compute the polar cascade, Le cycles and Le numbers of f");
    le->add_option("--f", le_opt.f, "Polynomial, e.g. y^2+x^5+u*x^4+v^2*x^2")->required();
    le->add_option("--vars", le_opt.vars, "Comma-separated variable order")->required();
    le->add_option("--coords", le_opt.coords, "Coordinate order z_0,...,z_n (default: --vars)");
    le->add_option("--prime", le_opt.prime, "Work over GF(p) instead of QQ");
    add_budget(le, le_opt.budget);
    le->add_option("--seed", le_opt.seed, "Seed for --random-coords");
    le->add_flag("--random-coords", le_opt.random_coords, "Apply a seeded unitriangular linear change first");
    add_format(le);

    BoundsOptions b_opt;
    auto* bounds = app.add_subcommand("bounds", "Betti and image windows from Le numbers");
    bounds->add_option("--lambda0", b_opt.lambda0, "lambda^0");
    bounds->add_option("--lambdas", b_opt.lambdas, "Full list lambda^0,...,lambda^s");
    bounds->add_option("--imdim", b_opt.imdim, "dim im(id - T)");
    bounds->add_option("--betti", b_opt.betti, "Top reduced Betti number of the Milnor fibre");
    bounds->add_option("--bettis", b_opt.bettis, "Reduced Betti numbers b_n,b_(n-1),...");
    bounds->add_option("--n", b_opt.n, "Ambient dimension minus one");
    add_format(bounds);

    CorpusOptions c_opt;
    auto* corpus = app.add_subcommand("corpus", "Regression corpus");
    corpus->require_subcommand(1);
    auto* corpus_run = corpus->add_subcommand("run", "Run corpus entries and check every expectation");
    corpus_run->add_option("--filter", c_opt.filter, "Only entries whose name contains this text");
    corpus_run->add_option("--file", c_opt.file, "Corpus file (default: the built-in corpus)");
    add_budget(corpus_run, c_opt.budget);
    add_format(corpus_run);

    PervOptions p_opt;
    auto* perv = app.add_subcommand("perv", "Perverse-sheaf linear algebra");
    perv->require_subcommand(1);
    auto* perv_verify = perv->add_subcommand("verify", "Seeded trials of the sandwich inequality");
    perv_verify->add_option("--trials", p_opt.trials, "Number of random quadruples")->capture_default_str();
    perv_verify->add_option("--seed", p_opt.seed, "Seed")->capture_default_str();
    perv_verify->add_option("--prime", p_opt.prime, "Work over GF(p) instead of QQ");
    add_format(perv_verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitPass : kExitInput;
    }

    if (le->parsed()) {
        Session s{"le", format, {}, out, err};
        return cmd_le(le_opt, s);
    }
    if (bounds->parsed()) {
        Session s{"bounds", format, {}, out, err};
        return cmd_bounds(b_opt, s);
    }
    if (corpus_run->parsed()) {
        Session s{"corpus run", format, {}, out, err};
        return cmd_corpus(c_opt, s);
    }
    Session s{"perv verify", format, {}, out, err};
    return cmd_perv(p_opt, s);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv{"lecycle"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

} // namespace lecycle
