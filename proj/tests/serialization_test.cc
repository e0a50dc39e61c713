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
#include "plausible/serialization.hpp"
#include "test_util.hpp"

using namespace plausible;
using namespace plausible::testing;

TEST(serialization, matrix_round_trip) {
    Matrix m = sample_haar_unitary(3, 4).leftCols(2);
    Json j = matrix_to_json(m);
    EXPECT_EQ(j["rows"], 3);
    EXPECT_EQ(j["cols"], 2);
    EXPECT_EQ(j["data"].size(), 6u);
    EXPECT_EQ(matrix_from_json(j), m);
}

TEST(serialization, matrix_accepts_real_entries_and_rejects_bad_shapes) {
    Json j = Json::parse(R"({"rows": 2, "cols": 2, "data": [1, 0, [0, 1], 0]})");
    Matrix m = matrix_from_json(j);
    EXPECT_EQ(m(1, 0), Complex(0.0, 1.0));
    EXPECT_THROW(matrix_from_json(Json::parse(R"({"rows": 2, "cols": 2, "data": [1]})")), DomainError);
    EXPECT_THROW(matrix_from_json(Json::parse(R"({"rows": -1, "cols": 2, "data": []})")), DomainError);
}

TEST(serialization, domain_objects_round_trip) {
    Hypothesis x = random_hypothesis(4, 2, 3);
    EXPECT_TRUE(same_hypothesis(hypothesis_from_json(to_json(x)), x));
    Hypothesis empty = Hypothesis::absurd(3);
    EXPECT_TRUE(hypothesis_from_json(to_json(empty)).is_absurd());

    State rho = random_state(3, 2, 5);
    EXPECT_LT(frobenius_distance(state_from_json(to_json(rho)), rho), 1e-15);
    Transformation g = haar_transformation(3, 6);
    EXPECT_EQ(transformation_from_json(to_json(g)).matrix(), g.matrix());
}

TEST(serialization, plan_round_trip) {
    State target = random_state(3, 3, 8);
    PreparationPlan plan = synthesize_preparation(target);
    plan.steps[0].transform = Transformation::identity(3);
    PreparationPlan back = plan_from_json(to_json(plan));
    EXPECT_LT(frobenius_distance(run_preparation(back), target), 1e-10);
    EXPECT_TRUE(back.steps[0].refinements.complete);
    EXPECT_TRUE(back.steps[0].transform.has_value());
}

TEST(serialization, tolerance_overrides) {
    Tolerance t = tolerance_from_json(Json::parse(R"({"prob_abs": 1e-7})"));
    EXPECT_EQ(t.prob_abs, 1e-7);
    EXPECT_EQ(t.rank_rel, Tolerance{}.rank_rel);
    EXPECT_THROW(tolerance_from_json(Json::parse(R"({"prob_abs": 0.5})")), DomainError);
}

TEST(serialization, profile_and_report) {
    Json p = to_json(quantum_profile());
    EXPECT_EQ(p["P"], "d^2");
    EXPECT_EQ(p["label"], "quantum");
    EXPECT_EQ(p["params"]["nu"], 2);
    Json r = to_json(constraint_residuals(classical_profile(), 4));
    EXPECT_EQ(r["satisfied"], true);
    EXPECT_EQ(r["constraints"].size(), 10u);
}
