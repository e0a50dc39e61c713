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

#include "plausible/continuity.hpp"
#include "plausible/errors.hpp"
#include "test_util.hpp"

using namespace plausible;
using namespace plausible::testing;

namespace {

/// supp(rho) plus (l - k) random directions orthogonal to it.
Hypothesis enclosing(const State &rho, Index l, std::uint64_t seed) {
    Hypothesis s = support(rho);
    Hypothesis rest = negation(s);
    Matrix extra = rest.basis() * sample_haar_unitary(rest.level(), seed).leftCols(l - s.level());
    Matrix cols(rho.ambient_dim(), l);
    cols << s.basis(), extra;
    return Hypothesis::span(cols);
}

const AppendixCheck &check(const AppendixReport &r, const std::string &name) {
    for (const AppendixCheck &c : r.checks) {
        if (c.name == name) return c;
    }
    throw std::out_of_range(name);
}

}  // namespace

TEST(continuity, epsilon_floor_examples) {
    EXPECT_NEAR(epsilon_floor(State(diag({0.3, 0.0, 0.2}))), 0.2, 1e-15);
    EXPECT_NEAR(epsilon_floor(ignorance_state(4)), 0.25, 1e-15);
    EXPECT_NEAR(epsilon_floor(pure_state(plus_vector(3), 0.7)), 0.7, 1e-14);
    EXPECT_THROW(epsilon_floor(State::zero(2)), DomainError);
}

TEST(continuity, check_continuity_examples) {
    State rho = random_state(4, 2, 3);
    EXPECT_TRUE(check_continuity(rho, Transformation::identity(4)));
    State full = random_state(4, 4, 3);
    for (int s = 0; s < 10; ++s) EXPECT_TRUE(check_continuity(full, haar_transformation(4, s)));
    State e1(diag({1.0, 0.0}));
    EXPECT_FALSE(check_continuity(e1, coordinate_swap(2, 0, 1)));
    ContinuityCheck detail = continuity_detail(e1, coordinate_swap(2, 0, 1));
    EXPECT_FALSE(detail.probability_form);
    EXPECT_EQ(detail.min_witness_probability, 0.0);
}

TEST(continuity, two_forms_agree) {
    for (int s = 0; s < 200; ++s) {
        Rng rng(derive_seed(8, {static_cast<std::uint64_t>(s)}));
        Index d = 2 + static_cast<Index>(rng.next() % 4);
        State rho = random_state(d, 1 + static_cast<Index>(rng.next() % d), rng);
        // Cycle through small moves and large ones.
        Transformation g = s % 3 == 0   ? sample_near_identity(d, 0.05, rng)
                           : s % 3 == 1 ? haar_transformation(d, rng)
                                        : coordinate_swap(d, 0, d - 1);
        ContinuityCheck c = continuity_detail(rho, g);
        if (!c.marginal) {
            EXPECT_EQ(c.support_form, c.probability_form) << "seed " << s;
        }
    }
}

TEST(continuity, near_identity_is_continuous) {
    int counted = 0;
    for (int s = 0; s < 500; ++s) {
        Rng rng(derive_seed(9, {static_cast<std::uint64_t>(s)}));
        Index d = 1 + static_cast<Index>(rng.next() % 5);
        State rho = random_state(d, 1 + static_cast<Index>(rng.next() % d), rng);
        Real eps = epsilon_floor(rho);
        if (eps < 0.01) continue;
        ++counted;
        EXPECT_TRUE(check_continuity(rho, sample_near_identity(d, eps / 10, rng))) << "seed " << s;
    }
    EXPECT_GT(counted, 100);
}

TEST(continuity, build_auxiliary_identity) {
    State rho = random_state(4, 2, 17);
    Hypothesis b = enclosing(rho, 3, 18);
    AuxiliaryConstruction aux = build_auxiliary(rho, b, Transformation::identity(4));
    EXPECT_TRUE(same_hypothesis(aux.z, support(rho)));
    EXPECT_EQ(aux.b_minus_z.level(), 1);
    EXPECT_EQ(aux.b_star.level(), 3);
    EXPECT_TRUE(verify_appendix(aux).all_passed());
}

TEST(continuity, build_auxiliary_levels) {
    struct Case {
        Index d, k, l;
    };
    for (Case c : {Case{4, 1, 2}, Case{5, 2, 3}}) {
        State rho = random_state(c.d, c.k, 100 + c.d);
        Hypothesis b = enclosing(rho, c.l, 200 + c.d);
        AuxiliaryConstruction aux = build_auxiliary(rho, b, sample_near_identity(c.d, 1e-3, 300 + c.d));
        EXPECT_EQ(aux.z.level(), c.k);
        EXPECT_EQ(aux.b_minus_z.level(), c.l - c.k);
        EXPECT_EQ(aux.b_star.level(), c.d - c.l + c.k);
        EXPECT_TRUE(verify_appendix(aux).all_passed());
    }
}

TEST(continuity, build_auxiliary_rejects_small_b) {
    State rho = random_state(3, 2, 1);
    EXPECT_THROW(build_auxiliary(rho, Hypothesis::coordinate(3, {0}), Transformation::identity(3)),
                 DomainError);
}

TEST(continuity, random_configurations_pass) {
    for (int s = 0; s < 100; ++s) {
        Index d = 4 + s % 2;
        Index l = 2 + s % (d - 2);
        Index k = 1 + s % (l - 1);
        AppendixConfiguration conf = sample_appendix_configuration(d, k, l, 1000 + s);
        EXPECT_GE(conf.epsilon, 0.01);
        EXPECT_NEAR(conf.delta, conf.epsilon / 10, 1e-15);
        AppendixReport r = verify_appendix(conf.aux);
        if (r.marginal) continue;
        EXPECT_TRUE(r.all_passed()) << "seed " << s;
        EXPECT_EQ(r.z_level, k);
        EXPECT_EQ(r.complement_level, l - k);
        EXPECT_EQ(r.b_star_level, d - l + k);
    }
}

TEST(continuity, discontinuous_move_blames_precondition) {
    // rho lives on {e1, e2}; the swap sends e2 to e3, outside b = {e1, e2, e4}.
    State rho(diag({0.5, 0.3, 0.0, 0.0}));
    Hypothesis b = Hypothesis::coordinate(4, {0, 1, 3});
    AppendixReport r = verify_appendix(build_auxiliary(rho, b, coordinate_swap(4, 1, 2)));
    EXPECT_FALSE(r.continuity_precondition);
    EXPECT_FALSE(r.all_passed());
    EXPECT_FALSE(check(r, "filtered_rank_lower").passed);
    EXPECT_FALSE(check(r, "z_level").passed);
    EXPECT_TRUE(check(r, "moved_support_orthogonal").passed);
    EXPECT_FALSE(r.theorem_violated());
}

TEST(continuity, parameter_count_examples) {
    EXPECT_EQ(parameter_count_identity(4, 1, 2), (std::pair<std::int64_t, std::int64_t>{6, 2 + 4}));
    EXPECT_EQ(parameter_count_identity(6, 2, 4), (std::pair<std::int64_t, std::int64_t>{16, 8 + 8}));
    for (std::int64_t d = 1; d <= 8; ++d)
        for (std::int64_t k = 0; k <= d; ++k) {
            auto [lhs, rhs] = parameter_count_identity(d, k, k);
            EXPECT_EQ(lhs, 2 * k * (d - k));
            EXPECT_EQ(rhs, lhs);
        }
    EXPECT_THROW(parameter_count_identity(3, 2, 1), DomainError);
}

TEST(continuity, largest_step_is_positive_and_continuous) {
    State rho = random_state(4, 2, 44);
    Real t = largest_continuous_step(rho, 45);
    EXPECT_GT(t, 0.0);
    EXPECT_LE(t, std::acos(-1.0));
    EXPECT_NEAR(largest_continuous_step(random_state(3, 3, 1), 2), std::acos(-1.0), 1e-15);
}
