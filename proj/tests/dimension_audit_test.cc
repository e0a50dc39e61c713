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

#include <set>

#include "plausible/dimension_audit.hpp"
#include "plausible/errors.hpp"

using namespace plausible;

namespace {

IntPolynomial d_pow(int n) { return IntPolynomial::monomial(n); }

using Family = std::pair<std::string, std::string>;

std::set<Family> families(const std::vector<DimensionProfile> &ps) {
    std::set<Family> out;
    for (const DimensionProfile &p : ps) out.emplace(p.P.to_string(), p.G.to_string());
    return out;
}

RelaxationMode drop(std::initializer_list<Requirement> rs) { return RelaxationMode{rs}; }

const std::set<Family> kThree{{"d", "0"}, {"d", "d"}, {"d^2", "d^2"}};

}  // namespace

TEST(dimension_audit, polynomial_arithmetic_and_printing) {
    IntPolynomial p = d_pow(2) - d_pow(1);
    EXPECT_EQ(p(5), 20);
    EXPECT_EQ(p.to_string(), "d^2 - d");
    EXPECT_EQ(IntPolynomial().to_string(), "0");
    EXPECT_EQ(IntPolynomial::monomial(1, 2).to_string(), "2*d");
    EXPECT_TRUE((d_pow(3) - d_pow(3)).is_zero());
}

TEST(dimension_audit, mk_dimension_examples) {
    EXPECT_EQ(mk_dimension(quantum_profile(), 1, 2), 2);
    EXPECT_EQ(mk_dimension(quantum_profile(), 2, 5), 12);
    for (std::int64_t d = 0; d <= 7; ++d)
        for (std::int64_t k = 0; k <= d; ++k) {
            EXPECT_EQ(mk_dimension(classical_profile(), k, d), 0);
            EXPECT_EQ(mk_dimension(semiclassical_profile(), k, d), 0);
        }
    for (std::int64_t d = 0; d <= 12; ++d)
        for (std::int64_t k = 0; k <= d; ++k) EXPECT_EQ(mk_dimension(quantum_profile(), k, d), 2 * k * (d - k));
    EXPECT_THROW(mk_dimension(quantum_profile(), 3, 2), DomainError);
}

TEST(dimension_audit, quantum_functional_equation) {
    for (std::int64_t d = 1; d <= 12; ++d)
        for (std::int64_t l = 1; l <= d; ++l)
            for (std::int64_t k = 1; k <= l; ++k)
                EXPECT_EQ(2 * k * (l - k) + 2 * k * (d - l), mk_dimension(quantum_profile(), k, d));
}

TEST(dimension_audit, named_profiles_satisfy_everything) {
    for (const DimensionProfile &p : {classical_profile(), semiclassical_profile(), quantum_profile()}) {
        ConstraintReport r = constraint_residuals(p, 6);
        EXPECT_TRUE(r.satisfied) << p.name;
        for (const ConstraintTable &t : r.constraints) EXPECT_TRUE(t.zero()) << p.name << " " << t.name;
    }
    EXPECT_EQ(quantum_profile().params.mu, 2);
    EXPECT_EQ(quantum_profile().params.g1, 1);
    EXPECT_EQ(quantum_profile().params.g2, 4);
    EXPECT_EQ(quantum_profile().structure_group, "U(d)");
}

TEST(dimension_audit, cubic_group_breaks_quadratic_form) {
    DimensionProfile cubic = make_profile("cubic", d_pow(3), d_pow(3));
    // Quadratic form ((G2 - 2 G1) / 2) d (d - 1) + G1 d with G1 = 1, G2 = 8, at d = 3.
    const std::int64_t g1 = 1, g2 = 8, d = 3;
    const std::int64_t form = (g2 - 2 * g1) * d * (d - 1) / 2 + g1 * d;
    ASSERT_EQ(form, 21);
    ConstraintReport r = constraint_residuals(cubic, 6);
    const ConstraintTable &q = r.table("continuity_quadratic");
    bool checked = false;
    for (const Residual &res : q.residuals) {
        if (res.d == 3) {
            EXPECT_EQ(res.value, 27 - form);
            checked = true;
        }
    }
    EXPECT_TRUE(checked);
    EXPECT_FALSE(r.satisfied);
    EXPECT_TRUE(r.satisfied_except(drop({Requirement::continuity})));
}

TEST(dimension_audit, integer_partitions_counts) {
    // Partition numbers p(1..6).
    const std::size_t expected[] = {1, 2, 3, 5, 7, 11};
    for (int n = 1; n <= 6; ++n) EXPECT_EQ(integer_partitions(n).size(), expected[n - 1]);
    EXPECT_TRUE(integer_partitions(0).empty());
}

TEST(dimension_audit, classify_without_relaxation) {
    std::vector<DimensionProfile> ps = classify_solutions(8, 4, 3, {});
    EXPECT_EQ(families(ps), kThree);
    ASSERT_EQ(ps.size(), 3u);
    EXPECT_EQ(ps[0].label, ProfileLabel::classical);
    EXPECT_EQ(ps[1].label, ProfileLabel::semiclassical);
    EXPECT_EQ(ps[2].label, ProfileLabel::quantum);
    for (const DimensionProfile &p : ps) {
        for (std::int64_t d = 1; d <= 8; ++d)
            for (std::int64_t k = 0; k <= d; ++k) EXPECT_GE(mk_dimension(p, k, d), 0);
    }
}

TEST(dimension_audit, classify_is_stable_under_larger_search) {
    EXPECT_EQ(families(classify_solutions(10, 6, 6, {})), kThree);
    EXPECT_EQ(families(classify_solutions(4, 3, 1, {})), kThree);
}

TEST(dimension_audit, classify_relaxations) {
    std::set<Family> ct = kThree;
    ct.emplace("d^2", "d^2 - d");
    EXPECT_EQ(families(classify_solutions(8, 4, 3, drop({Requirement::composition_transformations}))), ct);

    std::set<Family> cont = kThree;
    cont.emplace("d^3", "d^3");
    cont.emplace("d^4", "d^4");
    EXPECT_EQ(families(classify_solutions(8, 4, 3, drop({Requirement::continuity}))), cont);

    std::set<Family> prep;
    for (const char *P : {"d", "d^2", "d^3", "d^4"})
        for (const char *G : {"0", "d", "d^2"}) prep.emplace(P, G);
    EXPECT_EQ(families(classify_solutions(8, 4, 3, drop({Requirement::preparation}))), prep);

    EXPECT_EQ(families(classify_solutions(8, 4, 3, drop({Requirement::composition_states}))), kThree);
}

TEST(dimension_audit, classify_rejects_tiny_search) {
    EXPECT_THROW(classify_solutions(1, 4, 3, {}), DomainError);
    EXPECT_THROW(classify_solutions(8, 0, 3, {}), DomainError);
}

TEST(dimension_audit, requirement_names_round_trip) {
    for (Requirement r : {Requirement::preparation, Requirement::composition_states,
                          Requirement::composition_transformations, Requirement::continuity})
        EXPECT_EQ(parse_requirement(to_string(r)), r);
    EXPECT_THROW(parse_requirement("gravity"), DomainError);
}

TEST(dimension_audit, orbit_dimension_examples) {
    EXPECT_EQ(numeric_orbit_dimension(2, {1}, 3, 1), 2);
    EXPECT_EQ(numeric_orbit_dimension(3, {1}, 3, 1), 4);
    EXPECT_EQ(numeric_orbit_dimension(4, {1, 1, 2}, 3, 1), 16 - (1 + 1 + 4));
    EXPECT_EQ(numeric_orbit_dimension(5, {2}, 3, 1), 12);
    EXPECT_EQ(numeric_orbit_dimension(3, {3}, 2, 1), 0);
    EXPECT_THROW(numeric_orbit_dimension(2, {3}, 1, 1), DomainError);
    EXPECT_THROW(numeric_orbit_dimension(2, {0, 1}, 1, 1), DomainError);
}

TEST(dimension_audit, orbit_matches_quantum_counts) {
    for (int d = 2; d <= 6; ++d)
        for (int k = 1; k < d; ++k)
            EXPECT_EQ(numeric_orbit_dimension(d, {k}, 2, 9), mk_dimension(quantum_profile(), k, d));
    for (int d = 1; d <= 5; ++d)
        for (const std::vector<int> &part : integer_partitions(d))
            EXPECT_EQ(numeric_orbit_dimension(d, part, 2, 9), flag_dimension(quantum_profile(), d, part));
}
