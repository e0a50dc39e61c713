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
#include <functional>
#include <string>
#include <vector>

#include "plausible/numeric.hpp"

namespace plausible {

struct LawOutcome {
    bool passed = true;
    std::string detail;
};

/// A randomized property of the calculus, checked one trial at a time.
struct Law {
    std::string name;
    std::string module;
    std::string statement;
    /// Smallest ambient dimension where the law has content; smaller dims are skipped.
    Index min_dim = 1;
    std::function<LawOutcome(Index d, std::uint64_t seed, const Tolerance &tol)> check;
};

/// Every law checked by the suite, grouped by module.
const std::vector<Law> &law_catalog();

const Law &find_law(const std::string &name);

/// Seed of one trial; replaying `find_law(name).check(d, trial_seed(...), tol)` reproduces it.
std::uint64_t trial_seed(std::uint64_t base, const std::string &law, Index d, int trial);

struct LawTally {
    std::string law;
    std::string module;
    Index d = 0;
    int trials = 0;
    int violations = 0;
    bool skipped = false;
    std::vector<std::uint64_t> failing_seeds;  // first few
    std::string first_failure;
};

struct AxiomSuiteResult {
    std::vector<LawTally> tallies;
    int violations() const;
};

/// Runs `trials` randomized trials of each selected law (all when `only` is empty) per d.
AxiomSuiteResult run_axiom_suite(const std::vector<Index> &dims, int trials, std::uint64_t seed,
                                 const Tolerance &tol = {},
                                 const std::vector<std::string> &only = {});

}  // namespace plausible
