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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "plausible/serialization.hpp"

namespace plausible {

/// Exit codes shared by every subcommand.
constexpr int EXIT_PASS = 0;
constexpr int EXIT_OPERATIONAL = 1;
constexpr int EXIT_VERIFICATION = 2;

struct RunConfig {
    /// Empty means the suite's own default range.
    std::vector<Index> dims;
    int trials = 200;
    std::uint64_t seed = 20260501;
    Tolerance tol;
    std::string output_path;
    std::string format = "json";

    // axioms
    std::vector<std::string> laws;
    std::optional<std::uint64_t> trial_seed;

    // classify
    RelaxationMode relax;
    int d_max = 8;
    int mu_max = 4;
    int g1_max = 3;
    std::string golden_dir;

    // manifolds
    int samples = 5;

    // prepare
    std::string plan_path;
    std::string target_path;

    void validate() const;
};

/// Reads the JSON config file format; keys mirror the long flag names.
RunConfig config_from_json(const Json &j, RunConfig base = {});
Json to_json(const RunConfig &cfg);

struct RunResult {
    int exit_code = EXIT_PASS;
    /// {suite, config, seed, results, wall_time, status}.
    Json report;
    /// Human-readable summary, one line per check.
    std::string text;
};

RunResult run_axioms(const RunConfig &cfg);
RunResult run_classify(const RunConfig &cfg);
RunResult run_manifolds(const RunConfig &cfg);
RunResult run_continuity(const RunConfig &cfg);
RunResult run_prepare(const RunConfig &cfg);

/// File stem of the golden expectations for a relaxation, e.g. "classify_none".
std::string golden_name(const RelaxationMode &relax);

}  // namespace plausible
