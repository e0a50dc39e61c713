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
#include "plausible/hypothesis.hpp"
#include "plausible/oracles.hpp"
#include "test_util.hpp"

using namespace plausible;
using namespace plausible::testing;

namespace {

Hypothesis ray(const Vector &v) { return Hypothesis::span(column(v)); }

Hypothesis e(Index d, Index i) { return Hypothesis::coordinate(d, {i}); }

}  // namespace

TEST(hypothesis, construction_validates_basis) {
    Matrix not_orthonormal(2, 1);
    not_orthonormal << 2.0, 0.0;
    EXPECT_THROW(Hypothesis{not_orthonormal}, DomainError);
    EXPECT_EQ(Hypothesis::span(not_orthonormal).level(), 1);
    EXPECT_THROW(Hypothesis::coordinate(3, {3}), DomainError);
    EXPECT_THROW(Hypothesis::coordinate(3, {1, 1}), DomainError);
}

TEST(hypothesis, implies_examples) {
    EXPECT_TRUE(implies(Hypothesis::absurd(3), random_hypothesis(3, 2, 5)));
    EXPECT_TRUE(implies(e(3, 0), Hypothesis::coordinate(3, {0, 1})));
    EXPECT_FALSE(implies(ray(plus_vector()), e(2, 0)));
    EXPECT_THROW(implies(e(2, 0), e(3, 0)), DomainError);
}

TEST(hypothesis, contradicts_examples) {
    EXPECT_TRUE(contradicts(e(2, 0), e(2, 1)));
    EXPECT_TRUE(contradicts(Hypothesis::full(2), Hypothesis::absurd(2)));
    EXPECT_FALSE(contradicts(e(2, 0), ray(plus_vector())));
    EXPECT_THROW(contradicts(e(2, 0), e(4, 0)), DomainError);
}

TEST(hypothesis, relative_complement_examples) {
    Hypothesis c = relative_complement(Hypothesis::full(3), {e(3, 0)});
    EXPECT_TRUE(same_hypothesis(c, Hypothesis::coordinate(3, {1, 2})));

    Hypothesis none = relative_complement(Hypothesis::coordinate(3, {0, 1}), {e(3, 0), e(3, 1)});
    EXPECT_TRUE(none.is_absurd());

    Vector minus(2);
    minus << 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0);
    Hypothesis m = relative_complement(Hypothesis::full(2), {ray(plus_vector())});
    ASSERT_EQ(m.level(), 1);
    EXPECT_NEAR(overlap2(m.basis().col(0), minus), 1.0, 1e-14);
}

TEST(hypothesis, relative_complement_rejects_bad_members) {
    // Member not inside a.
    EXPECT_THROW(relative_complement(e(2, 0), {ray(plus_vector())}), DomainError);
    // Overlapping members.
    EXPECT_THROW(relative_complement(Hypothesis::full(2), {e(2, 0), ray(plus_vector())}),
                 DomainError);
}

TEST(hypothesis, complete_refinement_sets) {
    Hypothesis i3 = Hypothesis::full(3);
    EXPECT_TRUE(make_refinement_set(i3, {e(3, 0), e(3, 1), e(3, 2)}).complete);
    EXPECT_FALSE(make_refinement_set(Hypothesis::full(2), {e(2, 0)}).complete);
    Rng rng(8);
    Vector u = complex_gaussian(2, 1, rng).col(0).normalized();
    Hypothesis hu = ray(u);
    RefinementSet rs = make_refinement_set(Hypothesis::full(2), {hu, negation(hu)});
    EXPECT_TRUE(rs.complete);
    EXPECT_TRUE(is_complete_refinement_set(rs));
    // Members must imply the parent and exclude each other.
    EXPECT_THROW(make_refinement_set(e(2, 0), {e(2, 1)}), DomainError);
    EXPECT_THROW(make_refinement_set(Hypothesis::full(2), {e(2, 0), e(2, 0)}), DomainError);
}

TEST(hypothesis, coarse_level_examples) {
    EXPECT_EQ(coarse_level(Hypothesis::absurd(4)), 0);
    EXPECT_EQ(coarse_level(Hypothesis::full(5)), 5);
    EXPECT_EQ(coarse_level(Hypothesis::coordinate(4, {0, 2})), 2);
}

TEST(hypothesis, refine_fully_examples) {
    RefinementSet two = refine_fully(Hypothesis::full(2));
    ASSERT_EQ(two.members.size(), 2u);
    EXPECT_TRUE(same_hypothesis(two.members[0], e(2, 0)));
    EXPECT_TRUE(same_hypothesis(two.members[1], e(2, 1)));

    RefinementSet sub = refine_fully(Hypothesis::coordinate(4, {0, 2}));
    ASSERT_EQ(sub.members.size(), 2u);
    EXPECT_TRUE(same_hypothesis(sub.members[0], e(4, 0)));
    EXPECT_TRUE(same_hypothesis(sub.members[1], e(4, 2)));

    for (Index k = 1; k <= 5; ++k) {
        RefinementSet rs = refine_fully(random_hypothesis(5, k, 40 + k));
        EXPECT_EQ(static_cast<Index>(rs.members.size()), k);
        EXPECT_TRUE(rs.complete);
    }
    EXPECT_THROW(refine_fully(Hypothesis::absurd(3)), DomainError);
}

TEST(hypothesis, jointly_decidable_examples) {
    EXPECT_TRUE(jointly_decidable(e(2, 0), e(2, 1)));
    EXPECT_TRUE(jointly_decidable(e(3, 0), Hypothesis::coordinate(3, {0, 1})));
    EXPECT_FALSE(jointly_decidable(e(2, 0), ray(plus_vector())));
    EXPECT_THROW(jointly_decidable(e(2, 0), e(3, 0)), DomainError);
}

TEST(hypothesis, jointly_decidable_agrees_with_definition_search) {
    Hypothesis plus = ray(plus_vector());
    EXPECT_FALSE(oracle::jointly_decidable_by_definition(e(2, 0), plus, {}));
    EXPECT_TRUE(oracle::jointly_decidable_by_definition(e(2, 0), e(2, 1), {}));
    EXPECT_TRUE(oracle::jointly_decidable_by_definition(e(3, 0), Hypothesis::coordinate(3, {0, 1}), {}));
    for (int s = 0; s < 100; ++s) {
        Rng rng(derive_seed(77, {static_cast<std::uint64_t>(s)}));
        Index d = 1 + static_cast<Index>(rng.next() % 4);
        Hypothesis x = random_hypothesis(d, static_cast<Index>(rng.next() % (d + 1)), rng);
        Hypothesis y = random_hypothesis(d, static_cast<Index>(rng.next() % (d + 1)), rng);
        EXPECT_EQ(jointly_decidable(x, y), oracle::jointly_decidable_by_definition(x, y, {}))
            << "seed " << s;
    }
}

TEST(hypothesis, random_hypothesis_examples) {
    Hypothesis full = random_hypothesis(4, 4, 3);
    for (Real a : principal_angles(full.basis(), Matrix::Identity(4, 4))) {
        EXPECT_LT(a, 1e-8);
    }
    EXPECT_TRUE(random_hypothesis(4, 0, 3).is_absurd());
    EXPECT_TRUE(same_hypothesis(random_hypothesis(4, 2, 1), random_hypothesis(4, 2, 1)));
    EXPECT_EQ(random_hypothesis(4, 2, 1).basis(), random_hypothesis(4, 2, 1).basis());
    EXPECT_THROW(random_hypothesis(3, 4, 1), DomainError);
}

TEST(hypothesis, negation_is_orthocomplement) {
    Hypothesis x = random_hypothesis(5, 2, 12);
    Hypothesis n = negation(x);
    EXPECT_EQ(n.level(), 3);
    EXPECT_TRUE(contradicts(x, n));
    EXPECT_TRUE(make_refinement_set(Hypothesis::full(5), {x, n}).complete);
}

TEST(hypothesis, single_dimension_has_one_hypothesis) {
    // In d = 1 the only non-absurd hypothesis is the full space.
    for (int s = 0; s < 5; ++s) {
        EXPECT_TRUE(same_hypothesis(random_hypothesis(1, 1, s), Hypothesis::full(1)));
    }
}
