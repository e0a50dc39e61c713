// Copyright 2026 The Plausible Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "runner.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <set>
#include <sstream>

#include "plausible/axioms.hpp"

#ifndef PLAUSIBLE_GOLDEN_DIR
#define PLAUSIBLE_GOLDEN_DIR "golden"
#endif

namespace plausible {

namespace {

using Clock = std::chrono::steady_clock;

std::vector<Index> dims_or(const RunConfig &cfg, std::vector<Index> fallback) {
    return cfg.dims.empty() ? fallback : cfg.dims;
}

RunResult finish(const char *suite, const RunConfig &cfg, Json results, int exit_code,
                 std::string text, Clock::time_point start) {
    RunResult r;
    r.exit_code = exit_code;
    r.text = std::move(text);
    std::chrono::duration<double> elapsed = Clock::now() - start;
    r.report = {{"suite", suite},
                {"config", to_json(cfg)},
                {"seed", cfg.seed},
                {"results", std::move(results)},
                {"wall_time", elapsed.count()},
                {"status", exit_code == EXIT_PASS ? "pass" : "fail"}};
    return r;
}

std::string sci(Real v) {
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << v;
    return os.str();
}

Json read_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open '" + path + "'");
    }
    try {
        return Json::parse(in);
    } catch (const Json::parse_error &e) {
        throw std::runtime_error("'" + path + "' is not valid JSON: " + e.what());
    }
}

}  // namespace

void RunConfig::validate() const {
    for (Index d : dims) {
        if (d < 1) {
            throw DomainError("dims must all be at least 1");
        }
    }
    if (trials < 1) {
        throw DomainError("trials must be at least 1");
    }
    if (samples < 1) {
        throw DomainError("samples must be at least 1");
    }
    if (format != "json" && format != "text") {
        throw DomainError("format must be 'json' or 'text'");
    }
    tol.validate();
}

RunConfig config_from_json(const Json &j, RunConfig base) {
    if (!j.is_object()) {
        throw DomainError("config file must hold a JSON object");
    }
    if (j.contains("dims")) base.dims = j.at("dims").get<std::vector<Index>>();
    base.trials = j.value("trials", base.trials);
    base.seed = j.value("seed", base.seed);
    base.format = j.value("format", base.format);
    base.output_path = j.value("out", base.output_path);
    if (j.contains("tolerance")) base.tol = tolerance_from_json(j.at("tolerance"), base.tol);
    if (j.contains("laws")) base.laws = j.at("laws").get<std::vector<std::string>>();
    if (j.contains("relax")) {
        base.relax.dropped.clear();
        for (const std::string &name : j.at("relax").get<std::vector<std::string>>()) {
            base.relax.dropped.insert(parse_requirement(name));
        }
    }
    base.d_max = j.value("d_max", base.d_max);
    base.mu_max = j.value("mu_max", base.mu_max);
    base.g1_max = j.value("g1_max", base.g1_max);
    base.samples = j.value("samples", base.samples);
    base.golden_dir = j.value("golden_dir", base.golden_dir);
    return base;
}

Json to_json(const RunConfig &cfg) {
    Json relax = Json::array();
    for (Requirement r : cfg.relax.dropped) relax.push_back(to_string(r));
    Json j = {{"dims", cfg.dims},   {"trials", cfg.trials}, {"seed", cfg.seed},
              {"format", cfg.format}, {"tolerance", to_json(cfg.tol)}, {"relax", relax},
              {"d_max", cfg.d_max}, {"mu_max", cfg.mu_max}, {"g1_max", cfg.g1_max},
              {"samples", cfg.samples}};
    if (!cfg.laws.empty()) j["laws"] = cfg.laws;
    if (cfg.trial_seed) j["trial_seed"] = *cfg.trial_seed;
    return j;
}

std::string golden_name(const RelaxationMode &relax) {
    if (relax.dropped.empty()) {
        return "classify_none";
    }
    std::string name = "classify";
    for (Requirement r : relax.dropped) {
        name += (name == "classify" ? "_" : "+") + to_string(r);
    }
    return name;
}

// ---------------------------------------------------------------------------------------------

RunResult run_axioms(const RunConfig &cfg) {
    auto start = Clock::now();
    cfg.validate();
    std::vector<Index> dims = dims_or(cfg, {2, 3, 4, 5});
    for (const std::string &name : cfg.laws) {
        find_law(name);  // unknown names are operational errors
    }

    if (cfg.trial_seed) {
        // Replay: one trial per selected law and dimension with the given seed.
        if (cfg.laws.empty()) {
            throw DomainError("--trial-seed needs --law");
        }
        Json results = Json::array();
        std::string text;
        bool ok = true;
        for (const std::string &name : cfg.laws) {
            const Law &law = find_law(name);
            for (Index d : dims) {
                LawOutcome o = law.check(d, *cfg.trial_seed, cfg.tol);
                ok = ok && o.passed;
                results.push_back({{"law", name}, {"d", d}, {"trial_seed", *cfg.trial_seed},
                                   {"passed", o.passed}, {"detail", o.detail}});
                text += (o.passed ? "PASS " : "FAIL ") + name + " d=" + std::to_string(d) +
                        (o.detail.empty() ? "" : " " + o.detail) + "\n";
            }
        }
        return finish("axioms", cfg, results, ok ? EXIT_PASS : EXIT_VERIFICATION, text, start);
    }

    AxiomSuiteResult suite = run_axiom_suite(dims, cfg.trials, cfg.seed, cfg.tol, cfg.laws);
    Json results = Json::array();
    std::string text;
    for (const LawTally &t : suite.tallies) {
        results.push_back({{"law", t.law},
                           {"module", t.module},
                           {"d", t.d},
                           {"trials", t.trials},
                           {"passed", t.trials - t.violations},
                           {"violations", t.violations},
                           {"skipped", t.skipped},
                           {"failing_seeds", t.failing_seeds},
                           {"first_failure", t.first_failure}});
        std::string status = t.skipped ? "SKIP" : (t.violations == 0 ? "PASS" : "FAIL");
        text += status + " " + t.module + "/" + t.law + " d=" + std::to_string(t.d) + " " +
                std::to_string(t.trials - t.violations) + "/" + std::to_string(t.trials);
        if (t.violations) {
            text += " replay: --law " + t.law + " --dims " + std::to_string(t.d) +
                    " --trial-seed " + std::to_string(t.failing_seeds.front()) + " (" +
                    t.first_failure + ")";
        }
        text += "\n";
    }
    text += "violations: " + std::to_string(suite.violations()) + "\n";
    return finish("axioms", cfg, results, suite.violations() == 0 ? EXIT_PASS : EXIT_VERIFICATION,
                  text, start);
}

// ---------------------------------------------------------------------------------------------

RunResult run_classify(const RunConfig &cfg) {
    auto start = Clock::now();
    cfg.validate();
    std::vector<DimensionProfile> found =
        classify_solutions(cfg.d_max, cfg.mu_max, cfg.g1_max, cfg.relax);

    const std::string dir = cfg.golden_dir.empty() ? PLAUSIBLE_GOLDEN_DIR : cfg.golden_dir;
    const std::string path = dir + "/" + golden_name(cfg.relax) + ".json";
    Json golden = read_json_file(path);
    const Json *expected = nullptr;
    const Json *fallback = nullptr;
    for (const Json &c : golden.at("cases")) {
        if (!c.contains("mu_max")) {
            fallback = &c;
        } else if (c.at("mu_max").get<int>() == cfg.mu_max) {
            expected = &c;
        }
    }
    if (!expected) expected = fallback;
    if (!expected) {
        throw std::runtime_error("no golden expectation in '" + path + "' for mu_max=" +
                                 std::to_string(cfg.mu_max));
    }

    using Key = std::tuple<std::string, std::string, std::string>;
    std::set<Key> want;
    for (const Json &f : expected->at("families")) {
        want.emplace(f.at("P").get<std::string>(), f.at("G").get<std::string>(),
                     f.at("label").get<std::string>());
    }
    std::set<Key> got;
    Json profiles = Json::array();
    std::string text;
    for (const DimensionProfile &p : found) {
        got.emplace(p.P.to_string(), p.G.to_string(), to_string(p.label));
        Json entry = to_json(constraint_residuals(p, cfg.d_max));
        Json mk = Json::array();  // row d holds M_k(d) for k = 0..d
        for (std::int64_t d = 1; d <= cfg.d_max; ++d) {
            Json row = Json::array();
            for (std::int64_t k = 0; k <= d; ++k) row.push_back(mk_dimension(p, k, d));
            mk.push_back(row);
        }
        entry["M_k"] = mk;
        profiles.push_back(entry);
        text += "family P=" + p.P.to_string() + " G=" + p.G.to_string() + " [" +
                to_string(p.label) + ", " + p.structure_group + "]\n";
    }
    Json missing = Json::array();
    Json unexpected = Json::array();
    for (const Key &k : want) {
        if (!got.count(k)) missing.push_back({{"P", std::get<0>(k)}, {"G", std::get<1>(k)}, {"label", std::get<2>(k)}});
    }
    for (const Key &k : got) {
        if (!want.count(k)) unexpected.push_back({{"P", std::get<0>(k)}, {"G", std::get<1>(k)}, {"label", std::get<2>(k)}});
    }
    bool match = missing.empty() && unexpected.empty();
    for (const Json &m : missing) {
        text += "- missing P=" + m["P"].get<std::string>() + " G=" + m["G"].get<std::string>() + "\n";
    }
    for (const Json &u : unexpected) {
        text += "+ unexpected P=" + u["P"].get<std::string>() + " G=" + u["G"].get<std::string>() + "\n";
    }
    text += std::string(match ? "PASS" : "FAIL") + " " + std::to_string(found.size()) +
            " families vs golden " + golden_name(cfg.relax) + "\n";
    Json results = {{"families", profiles},
                    {"golden", path},
                    {"match", match},
                    {"diff", {{"missing", missing}, {"unexpected", unexpected}}}};
    return finish("classify", cfg, results, match ? EXIT_PASS : EXIT_VERIFICATION, text, start);
}

// ---------------------------------------------------------------------------------------------

RunResult run_manifolds(const RunConfig &cfg) {
    auto start = Clock::now();
    cfg.validate();
    // Grassmannians up to d = 6 and flags up to d = 5 unless dims are given.
    std::vector<Index> grass_dims = dims_or(cfg, {2, 3, 4, 5, 6});
    std::vector<Index> flag_dims = dims_or(cfg, {1, 2, 3, 4, 5});
    Json results = Json::array();
    std::string text;
    bool ok = true;
    auto record = [&](const char *kind, Index d, const std::vector<int> &part, std::int64_t expect) {
        std::uint64_t s = derive_seed(cfg.seed, {static_cast<std::uint64_t>(d), part.size(),
                                                 static_cast<std::uint64_t>(part.front())});
        Json entry = {{"kind", kind}, {"d", d}, {"partition", part}, {"expected", expect}, {"seed", s}};
        std::string line;
        try {
            int got = numeric_orbit_dimension(static_cast<int>(d), part, cfg.samples, s);
            entry["numeric"] = got;
            entry["passed"] = got == expect;
            ok = ok && got == expect;
        } catch (const RankInstability &e) {
            entry["passed"] = false;
            entry["error"] = e.what();
            ok = false;
        }
        std::string ps;
        for (int k : part) ps += (ps.empty() ? "" : ",") + std::to_string(k);
        text += std::string(entry["passed"].get<bool>() ? "PASS " : "FAIL ") + kind + " d=" +
                std::to_string(d) + " [" + ps + "] expected " + std::to_string(expect) +
                (entry.contains("numeric") ? " got " + std::to_string(entry["numeric"].get<int>()) : "") +
                "\n";
        results.push_back(entry);
    };
    for (Index d : grass_dims) {
        for (Index k = 1; k < d; ++k) {
            record("grassmannian", d, {static_cast<int>(k)}, 2 * k * (d - k));
        }
    }
    for (Index d : flag_dims) {
        for (const std::vector<int> &part : integer_partitions(static_cast<int>(d))) {
            std::int64_t sq = 0;
            for (int k : part) sq += static_cast<std::int64_t>(k) * k;
            record("flag", d, part, d * d - sq);
        }
    }
    return finish("manifolds", cfg, results, ok ? EXIT_PASS : EXIT_VERIFICATION, text, start);
}

// ---------------------------------------------------------------------------------------------

namespace {

struct ContinuityInstance {
    Json entry;
    bool passed = false;
    bool marginal = false;
};

ContinuityInstance continuity_instance(const std::vector<Index> &dims, std::uint64_t s,
                                       const Tolerance &tol) {
    Rng rng(s);
    Index d = dims[rng.next() % dims.size()];
    Index l = 2 + static_cast<Index>(rng.next() % static_cast<std::uint64_t>(d - 2));  // 2..d-1
    Index k = 1 + static_cast<Index>(rng.next() % static_cast<std::uint64_t>(l - 1));  // 1..l-1
    AppendixConfiguration conf = sample_appendix_configuration(d, k, l, rng.next(), 0.01, tol);
    AppendixReport report = verify_appendix(conf.aux, tol);
    ContinuityCheck forms = continuity_detail(conf.aux.rho, conf.aux.g, tol);
    Real largest = largest_continuous_step(conf.aux.rho, rng.next(), tol);

    ContinuityInstance out;
    out.marginal = report.marginal || forms.marginal;
    bool levels = report.z_level == k && report.complement_level == l - k &&
                  report.b_star_level == d - l + k;
    bool forms_agree = forms.support_form == forms.probability_form;
    out.passed = report.all_passed() && levels && forms_agree && forms.support_form;
    out.entry = {{"trial_seed", s},         {"d", d},
                 {"k", k},                  {"l", l},
                 {"epsilon", conf.epsilon}, {"delta", conf.delta},
                 {"largest_continuous_step", largest},
                 {"continuity", forms.support_form},
                 {"forms_agree", forms_agree},
                 {"levels_exact", levels},
                 {"appendix", to_json(report)},
                 {"marginal", out.marginal},
                 {"passed", out.passed}};
    return out;
}

}  // namespace

RunResult run_continuity(const RunConfig &cfg) {
    auto start = Clock::now();
    cfg.validate();
    std::vector<Index> dims = dims_or(cfg, {4, 5});
    for (Index d : dims) {
        if (d < 3) {
            throw DomainError("continuity needs every d >= 3 so that k < l < d");
        }
    }
    std::vector<std::uint64_t> seeds;
    if (cfg.trial_seed) {
        seeds.push_back(*cfg.trial_seed);
    } else {
        for (int t = 0; t < cfg.trials; ++t) {
            seeds.push_back(derive_seed(cfg.seed, {static_cast<std::uint64_t>(t)}));
        }
    }
    Json instances = Json::array();
    Json failing = Json::array();
    Json marginal = Json::array();
    int counted = 0;
    int passed = 0;
    for (std::uint64_t s : seeds) {
        ContinuityInstance inst = continuity_instance(dims, s, cfg.tol);
        instances.push_back(inst.entry);
        if (inst.marginal) {
            marginal.push_back(s);
            continue;
        }
        ++counted;
        if (inst.passed) {
            ++passed;
        } else {
            failing.push_back(s);
        }
    }
    bool ok = failing.empty();
    std::string text;
    for (const Json &f : failing) {
        text += "FAIL instance replay: --trial-seed " + std::to_string(f.get<std::uint64_t>()) + "\n";
    }
    text += std::string(ok ? "PASS" : "FAIL") + " appendix checks " + std::to_string(passed) + "/" +
            std::to_string(counted) + " (marginal excluded: " + std::to_string(marginal.size()) + ")\n";
    Json results = {{"instances", instances},
                    {"counted", counted},
                    {"passed", passed},
                    {"failing_seeds", failing},
                    {"marginal_seeds", marginal}};
    return finish("continuity", cfg, results, ok ? EXIT_PASS : EXIT_VERIFICATION, text, start);
}

// ---------------------------------------------------------------------------------------------

namespace {

/// Keep factors in [0, 1] and a final rescale that the pre-rescale state admits.
std::string plan_defect(const PreparationPlan &plan, const Tolerance &tol) {
    for (const PreparationStep &step : plan.steps) {
        for (Real lambda : step.keep_factors) {
            if (!(lambda >= 0.0 && lambda <= 1.0)) {
                return "keep factor " + sci(lambda) + " outside [0, 1]";
            }
        }
    }
    PreparationPlan unscaled = plan;
    unscaled.final_rescale = 1.0;
    Real bound = rescale_bound(run_preparation(unscaled, tol));
    if (plan.final_rescale > bound * (1.0 + 1e-12)) {
        return "final rescale " + sci(plan.final_rescale) + " exceeds bound " + sci(bound);
    }
    return {};
}

}  // namespace

RunResult run_prepare(const RunConfig &cfg) {
    auto start = Clock::now();
    cfg.validate();
    constexpr Real max_error = 1e-10;

    if (!cfg.plan_path.empty()) {
        PreparationPlan plan = plan_from_json(read_json_file(cfg.plan_path), cfg.tol);
        std::string defect = plan_defect(plan, cfg.tol);
        State out = run_preparation(plan, cfg.tol);
        Json results = {{"plan", to_json(plan)}, {"state", to_json(out)}, {"admissible", defect.empty()}};
        return finish("prepare", cfg, results, defect.empty() ? EXIT_PASS : EXIT_VERIFICATION,
                      defect.empty() ? "PASS plan executed\n" : "FAIL " + defect + "\n", start);
    }
    if (!cfg.target_path.empty()) {
        State target = state_from_json(read_json_file(cfg.target_path), cfg.tol);
        PreparationPlan plan = synthesize_preparation(target, cfg.tol);
        Real err = frobenius_distance(run_preparation(plan, cfg.tol), target);
        std::string defect = plan_defect(plan, cfg.tol);
        bool ok = defect.empty() && err <= max_error;
        Json results = {{"plan", to_json(plan)}, {"round_trip_error", err}, {"admissible", defect.empty()}};
        return finish("prepare", cfg, results, ok ? EXIT_PASS : EXIT_VERIFICATION,
                      std::string(ok ? "PASS" : "FAIL") + " round trip error " + sci(err) +
                          (defect.empty() ? "" : " " + defect) + "\n",
                      start);
    }

    std::vector<Index> dims = dims_or(cfg, {2, 3, 4, 5});
    Json per_dim = Json::array();
    Json failing = Json::array();
    Real worst = 0.0;
    std::string text;
    for (Index d : dims) {
        Real worst_d = 0.0;
        int bad = 0;
        int count = cfg.trial_seed ? 1 : cfg.trials;
        for (int t = 0; t < count; ++t) {
            std::uint64_t s = cfg.trial_seed ? *cfg.trial_seed
                                             : derive_seed(cfg.seed, {static_cast<std::uint64_t>(d),
                                                                      static_cast<std::uint64_t>(t)});
            Rng rng(s);
            Index rank = 1 + static_cast<Index>(rng.next() % static_cast<std::uint64_t>(d));
            State target = random_state(d, rank, rng);
            PreparationPlan plan = synthesize_preparation(target, cfg.tol);
            Real err = frobenius_distance(run_preparation(plan, cfg.tol), target);
            std::string defect = plan_defect(plan, cfg.tol);
            worst_d = std::max(worst_d, err);
            if (err > max_error || !defect.empty()) {
                ++bad;
                failing.push_back({{"d", d}, {"trial_seed", s}, {"error", err}, {"defect", defect}});
                text += "FAIL d=" + std::to_string(d) + " replay: --dims " + std::to_string(d) +
                        " --trial-seed " + std::to_string(s) + "\n";
            }
        }
        worst = std::max(worst, worst_d);
        per_dim.push_back({{"d", d}, {"targets", count}, {"failures", bad}, {"max_error", worst_d}});
        text += std::string(bad ? "FAIL" : "PASS") + " d=" + std::to_string(d) + " " +
                std::to_string(count - bad) + "/" + std::to_string(count) + " max error " + sci(worst_d) + "\n";
    }
    Json results = {{"per_dim", per_dim}, {"max_error", worst}, {"failing", failing}};
    return finish("prepare", cfg, results, failing.empty() ? EXIT_PASS : EXIT_VERIFICATION, text, start);
}

}  // namespace plausible
