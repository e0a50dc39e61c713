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

#include <gtest/gtest.h>

#include "plausible/errors.hpp"
#include "plausible/filter.hpp"
#include "test_util.hpp"

using namespace plausible;
using namespace plausible::testing;

namespace {

Hypothesis e(Index d, Index i) { return Hypothesis::coordinate(d, {i}); }

}  // namespace

TEST(filter, apply_filter_examples) {
    State rho = random_state(3, 3, 4);
    EXPECT_LT(frobenius_distance(apply_filter(Hypothesis::full(3), rho), rho), 1e-15);
    EXPECT_LT(fro(apply_filter(e(2, 0), ignorance_state(2)).op(), diag({0.5, 0.0})), 1e-15);
    // P_e1 |+><+| P_e1 = |<e1|+>|^2 |e1><e1|.
    Real weight = overlap2(basis_vector(2, 0), plus_vector());
    EXPECT_LT(fro(apply_filter(e(2, 0), pure_state(plus_vector())).op(), diag({weight, 0.0})), 1e-15);
    EXPECT_THROW(apply_filter(e(3, 0), ignorance_state(2)), DomainError);
}

TEST(filter, read_outcome_examples) {
    EXPECT_LT(fro(read_outcome(e(2, 0), ignorance_state(2)).op(), diag({1.0, 0.0})), 1e-15);
    State rho(diag({0.6, 0.0, 0.4}));
    EXPECT_THROW(read_outcome(e(3, 1), rho), DiscardedError);
    State normalised = random_state(3, 2, 8);
    normalised = rescale(normalised, rescale_bound(normalised));
    EXPECT_LT(frobenius_distance(read_outcome(Hypothesis::full(3), normalised), normalised), 1e-14);
}

TEST(filter, apply_channel_examples) {
    State rho = random_state(3, 3, 10);
    EigenDecomposition eig = hermitian_eig(rho.op());
    std::vector<Hypothesis> rays;
    for (Index i = 0; i < 3; ++i) {
        rays.emplace_back(Matrix(eig.vectors.col(i)));
    }
    RefinementSet eigenbasis = make_refinement_set(Hypothesis::full(3), rays);
    EXPECT_LT(frobenius_distance(apply_channel(eigenbasis, {1, 1, 1}, rho), rho), 1e-14);
    EXPECT_EQ(apply_channel(eigenbasis, {0, 0, 0}, rho).op().norm(), 0.0);

    RefinementSet coords = refine_fully(Hypothesis::full(2));
    EXPECT_LT(fro(apply_channel(coords, {1, 0}, ignorance_state(2)).op(), diag({0.5, 0.0})), 1e-15);

    EXPECT_THROW(apply_channel(coords, {1}, ignorance_state(2)), DomainError);
    EXPECT_THROW(apply_channel(coords, {1, 1.5}, ignorance_state(2)), DomainError);
    RefinementSet partial = make_refinement_set(Hypothesis::full(2), {e(2, 0)});
    EXPECT_THROW(apply_channel(partial, {1}, ignorance_state(2)), DomainError);
}

TEST(filter, synthesize_ignorance_is_fixed_point) {
    PreparationPlan plan = synthesize_preparation(ignorance_state(4));
    ASSERT_EQ(plan.steps.size(), 1u);
    for (Real lambda : plan.steps[0].keep_factors) {
        EXPECT_NEAR(lambda, 1.0, 1e-15);
    }
    EXPECT_NEAR(plan.final_rescale, 1.0, 1e-15);
}

TEST(filter, synthesize_diagonal_target) {
    // lambda_i = p_i / p_max and final rescale d p_max.
    const Real p[] = {0.5, 0.3, 0.2};
    const Real pmax = 0.5;
    State target(diag({p[0], p[1], p[2]}));
    PreparationPlan plan = synthesize_preparation(target);
    ASSERT_EQ(plan.steps.size(), 1u);
    const std::vector<Real> &lambdas = plan.steps[0].keep_factors;
    ASSERT_EQ(lambdas.size(), 3u);
    for (int i = 0; i < 3; ++i) {
        EXPECT_NEAR(lambdas[i], p[i] / pmax, 1e-14);
    }
    EXPECT_NEAR(plan.final_rescale, 3 * pmax, 1e-14);
    EXPECT_LT(frobenius_distance(run_preparation(plan), target), 1e-14);
}

TEST(filter, synthesize_pure_target) {
    PreparationPlan plan = synthesize_preparation(pure_state(plus_vector()));
    const PreparationStep &step = plan.steps.at(0);
    int kept = 0;
    for (std::size_t i = 0; i < step.keep_factors.size(); ++i) {
        if (step.keep_factors[i] > 0.5) {
            ++kept;
            EXPECT_NEAR(step.keep_factors[i], 1.0, 1e-14);
            EXPECT_NEAR(overlap2(step.refinements.members[i].basis().col(0), plus_vector()), 1.0, 1e-14);
        } else {
            EXPECT_NEAR(step.keep_factors[i], 0.0, 1e-14);
        }
    }
    EXPECT_EQ(kept, 1);
    EXPECT_NEAR(plan.final_rescale, 2.0, 1e-14);
    EXPECT_THROW(synthesize_preparation(State::zero(2)), DomainError);
}

TEST(filter, run_preparation_examples) {
    PreparationPlan empty{3, {}, 1.0};
    EXPECT_LT(frobenius_distance(run_preparation(empty), ignorance_state(3)), 1e-15);

    Transformation g = haar_transformation(3, 5);
    PreparationPlan turn{3, {PreparationStep{refine_fully(Hypothesis::full(3)), {1, 1, 1}, g}}, 1.0};
    EXPECT_LT(frobenius_distance(run_preparation(turn), ignorance_state(3)), 1e-14);

    PreparationPlan greedy{2, {}, 1.5};
    EXPECT_THROW(run_preparation(greedy), InadmissibleRescale);

    for (int s = 0; s < 50; ++s) {
        State target = random_state(4, 1 + s % 4, 300 + s);
        EXPECT_LT(frobenius_distance(run_preparation(synthesize_preparation(target)), target), 1e-10);
    }
}
