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

#include <optional>
#include <vector>

#include "plausible/transformation.hpp"

namespace plausible {

/// P_b rho P_b: the update on learning that b was tested, before reading the outcome.
State apply_filter(const Hypothesis &b, const State &rho, const Tolerance &tol = {});

/// P_b rho P_b / rho(b): the update after reading "b is true".
/// Throws DiscardedError when rho(b) is not above `prob_abs`.
State read_outcome(const Hypothesis &b, const State &rho, const Tolerance &tol = {});

/// sum_i lambda_i P_{b_i} rho P_{b_i} for a complete refinement set and keep factors in [0, 1].
State apply_channel(const RefinementSet &rs, const std::vector<Real> &lambdas, const State &rho,
                    const Tolerance &tol = {});

/// One preparation procedure: test a complete set, keep each outcome with probability
/// lambda_i, then optionally relabel.
struct PreparationStep {
    RefinementSet refinements;
    std::vector<Real> keep_factors;
    std::optional<Transformation> transform;
};

/// A sequence of procedures applied to the ignorance state, followed by a rescale.
struct PreparationPlan {
    Index ambient_dim = 1;
    std::vector<PreparationStep> steps;
    Real final_rescale = 1.0;
};

/// One-step plan reproducing `target`: test its eigenbasis, keep outcome i with probability
/// p_i / p_max, then rescale by d p_max. Throws DomainError for the zero state.
PreparationPlan synthesize_preparation(const State &target, const Tolerance &tol = {});

/// Runs a plan forward from ignorance_state(d).
/// Throws DomainError for malformed steps and InadmissibleRescale for a bad final rescale.
State run_preparation(const PreparationPlan &plan, const Tolerance &tol = {});

}  // namespace plausible
