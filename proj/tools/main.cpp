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

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "runner.hpp"

using namespace plausible;

namespace {

struct Flags {
    std::vector<Index> dims;
    int trials = 0;
    std::uint64_t seed = 0;
    std::string out;
    std::string format;
    std::string config;
    double rank_rel = 0.0;
    double subspace_angle = 0.0;
    double prob_abs = 0.0;
    std::vector<std::string> laws;
    std::uint64_t trial_seed = 0;
    std::vector<std::string> relax;
    int d_max = 0;
    int mu_max = 0;
    int g1_max = 0;
    std::string golden_dir;
    int samples = 0;
    std::string plan;
    std::string target;
};

void add_common(CLI::App *sub, Flags &f) {
    sub->add_option("--dims", f.dims, "Ambient dimensions to test");
    sub->add_option("--trials", f.trials, "Randomized trials per law / dimension");
    sub->add_option("--seed", f.seed, "Base seed");
    sub->add_option("--out", f.out, "Write the report to this file");
    sub->add_option("--format", f.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--config", f.config, "JSON config file; flags take precedence")
        ->check(CLI::ExistingFile);
    sub->add_option("--rank-rel", f.rank_rel, "Relative eigenvalue cut for ranks");
    sub->add_option("--subspace-angle", f.subspace_angle, "Principal-angle tolerance");
    sub->add_option("--prob-abs", f.prob_abs, "Absolute probability tolerance");
    sub->add_option("--trial-seed", f.trial_seed, "Replay a single instance with this seed");
}

bool given(CLI::App *sub, const std::string &name) {
    const CLI::Option *opt = sub->get_option_no_throw(name);
    return opt != nullptr && opt->count() > 0;
}

RunConfig build_config(CLI::App *sub, const Flags &f) {
    RunConfig cfg;
    if (given(sub, "--config")) {
        std::ifstream in(f.config);
        cfg = config_from_json(Json::parse(in), cfg);
    }
    if (given(sub, "--dims")) cfg.dims = f.dims;
    if (given(sub, "--trials")) cfg.trials = f.trials;
    if (given(sub, "--seed")) cfg.seed = f.seed;
    if (given(sub, "--out")) cfg.output_path = f.out;
    if (given(sub, "--format")) cfg.format = f.format;
    if (given(sub, "--rank-rel")) cfg.tol.rank_rel = f.rank_rel;
    if (given(sub, "--subspace-angle")) cfg.tol.subspace_angle = f.subspace_angle;
    if (given(sub, "--prob-abs")) cfg.tol.prob_abs = f.prob_abs;
    if (given(sub, "--trial-seed")) cfg.trial_seed = f.trial_seed;
    if (given(sub, "--law")) cfg.laws = f.laws;
    if (given(sub, "--relax")) {
        cfg.relax.dropped.clear();
        for (const std::string &r : f.relax) cfg.relax.dropped.insert(parse_requirement(r));
    }
    if (given(sub, "--d-max")) cfg.d_max = f.d_max;
    if (given(sub, "--mu-max")) cfg.mu_max = f.mu_max;
    if (given(sub, "--g1-max")) cfg.g1_max = f.g1_max;
    if (given(sub, "--golden-dir")) cfg.golden_dir = f.golden_dir;
    if (given(sub, "--samples")) cfg.samples = f.samples;
    if (given(sub, "--plan")) cfg.plan_path = f.plan;
    if (given(sub, "--target")) cfg.target_path = f.target;
    cfg.validate();
    return cfg;
}

void emit(const RunConfig &cfg, const RunResult &r) {
    std::string body = cfg.format == "json" ? r.report.dump(2) + "\n" : r.text;
    if (cfg.output_path.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream out(cfg.output_path);
    if (!out || !(out << body)) {
        throw std::runtime_error("cannot write '" + cfg.output_path + "'");
    }
    std::cout << r.report["suite"].get<std::string>() << ": " << r.report["status"].get<std::string>()
              << " (report in " << cfg.output_path << ")\n";
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Verification kernel for subspace hypotheses, states, filters and transformations"};
    app.require_subcommand(1);
    Flags f;

    CLI::App *axioms = app.add_subcommand("axioms", "Randomized checks of every law");
    add_common(axioms, f);
    axioms->add_option("--law", f.laws, "Restrict to these laws");

    CLI::App *classify = app.add_subcommand("classify", "Solve the dimension constraints");
    add_common(classify, f);
    classify->add_option("--relax", f.relax, "Requirements to drop")
        ->check(CLI::IsMember({"preparation", "composition_states", "composition_transformations",
                               "continuity"}));
    classify->add_option("--d-max", f.d_max, "Largest d at which residuals are evaluated");
    classify->add_option("--mu-max", f.mu_max, "Largest exponent of P(d) = d^mu");
    classify->add_option("--g1-max", f.g1_max, "Largest G(1) searched");
    classify->add_option("--golden-dir", f.golden_dir, "Directory of golden expectations");

    CLI::App *manifolds = app.add_subcommand("manifolds", "Tangent-rank orbit dimensions");
    add_common(manifolds, f);
    manifolds->add_option("--samples", f.samples, "Random base points per orbit");

    CLI::App *continuity = app.add_subcommand("continuity", "Continuity and auxiliary construction");
    add_common(continuity, f);

    CLI::App *prepare = app.add_subcommand("prepare", "Preparation synthesis round trips");
    add_common(prepare, f);
    auto *plan_opt = prepare->add_option("--plan", f.plan, "Run a plan from JSON")->check(CLI::ExistingFile);
    prepare->add_option("--target", f.target, "Synthesize a plan for a JSON state")
        ->check(CLI::ExistingFile)
        ->excludes(plan_opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return EXIT_OPERATIONAL;
    }

    try {
        CLI::App *sub = app.get_subcommands().front();
        RunConfig cfg = build_config(sub, f);
        RunResult r;
        if (sub == axioms) r = run_axioms(cfg);
        else if (sub == classify) r = run_classify(cfg);
        else if (sub == manifolds) r = run_manifolds(cfg);
        else if (sub == continuity) r = run_continuity(cfg);
        else r = run_prepare(cfg);
        emit(cfg, r);
        return r.exit_code;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return EXIT_OPERATIONAL;
    }
}
