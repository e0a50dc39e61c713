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
#include "plausible/transformation.hpp"
#include "test_util.hpp"

using namespace plausible;
using namespace plausible::testing;

TEST(transformation, construction_requires_unitarity) {
    EXPECT_THROW(Transformation(diag({1.0, 0.5})), DomainError);
    EXPECT_THROW(Transformation(Matrix::Identity(2, 3)), DomainError);
    EXPECT_NO_THROW(Transformation(sample_haar_unitary(4, 1)));
}

TEST(transformation, act_on_state_examples) {
    State rho = random_state(3, 2, 3);
    EXPECT_LT(frobenius_distance(act_on_state(Transformation::identity(3), rho), rho), 1e-15);
    Transformation g = haar_transformation(4, 8);
    EXPECT_LT(frobenius_distance(act_on_state(g, ignorance_state(4)), ignorance_state(4)), 1e-12);
    State swapped = act_on_state(coordinate_swap(2, 0, 1), State(diag({0.7, 0.3})));
    EXPECT_LT(fro(swapped.op(), diag({0.3, 0.7})), 1e-15);
    EXPECT_THROW(act_on_state(g, rho), DomainError);
}

TEST(transformation, act_on_hypothesis_examples) {
    Hypothesis x = random_hypothesis(3, 2, 4);
    EXPECT_TRUE(same_hypothesis(act_on_hypothesis(Transformation::identity(3), x), x));
    Hypothesis moved = act_on_hypothesis(coordinate_swap(2, 0, 1), Hypothesis::coordinate(2, {0}));
    EXPECT_TRUE(same_hypothesis(moved, Hypothesis::coordinate(2, {1})));
    EXPECT_TRUE(act_on_hypothesis(haar_transformation(3, 1), Hypothesis::absurd(3)).is_absurd());
}

TEST(transformation, transport_examples) {
    Hypothesis x = random_hypothesis(4, 2, 10);
    EXPECT_TRUE(same_hypothesis(act_on_hypothesis(transport(x, x), x), x));
    Hypothesis e1 = Hypothesis::coordinate(2, {0});
    Hypothesis e2 = Hypothesis::coordinate(2, {1});
    Transformation g = transport(e1, e2);
    EXPECT_TRUE(same_hypothesis(act_on_hypothesis(g, e1), e2));
    EXPECT_TRUE(same_hypothesis(act_on_hypothesis(g, e2), e1));
    EXPECT_THROW(transport(e1, Hypothesis::full(2)), DomainError);
}

TEST(transformation, transport_random_pairs) {
    for (int s = 0; s < 100; ++s) {
        Rng rng(derive_seed(5, {static_cast<std::uint64_t>(s)}));
        Index d = 1 + static_cast<Index>(rng.next() % 6);
        Index k = static_cast<Index>(rng.next() % (d + 1));
        Hypothesis x = random_hypothesis(d, k, rng);
        Hypothesis y = random_hypothesis(d, k, rng);
        Hypothesis gx = act_on_hypothesis(transport(x, y), x);
        for (Real a : principal_angles(gx.basis(), y.basis())) {
            EXPECT_LT(a, 1e-8) << "seed " << s;
        }
    }
}

TEST(transformation, near_identity_examples) {
    Transformation g = sample_near_identity(3, 1e-3, 12);
    // ||exp(-iH) - I||_op <= ||H||_op <= delta.
    Matrix diff = g.matrix() - Matrix::Identity(3, 3);
    EXPECT_LE(operator_norm(diff), 1e-3 + 1e-6);
    EXPECT_LE(distance_to_identity(g), 1e-3 + 1e-12);
    EXPECT_EQ(sample_near_identity(3, 1e-3, 12).matrix(), g.matrix());
    Real previous = 1.0;
    for (Real delta : {1e-1, 1e-3, 1e-6, 1e-9}) {
        Real dist = fro(sample_near_identity(4, delta, 2).matrix(), Matrix::Identity(4, 4));
        EXPECT_LT(dist, previous);
        previous = dist;
    }
    EXPECT_LT(previous, 1e-8);
}

TEST(transformation, group_operations) {
    Transformation g = haar_transformation(3, 1);
    Transformation h = haar_transformation(3, 2);
    State rho = random_state(3, 3, 3);
    State sequential = act_on_state(g, act_on_state(h, rho));
    EXPECT_LT(frobenius_distance(act_on_state(g * h, rho), sequential), 1e-14);
    EXPECT_LT(fro((g.inverse() * g).matrix(), Matrix::Identity(3, 3)), 1e-14);
    EXPECT_THROW(coordinate_swap(2, 0, 2), DomainError);
}
