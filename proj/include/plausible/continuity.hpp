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
#include <string>
#include <vector>

#include "plausible/filter.hpp"

namespace plausible {

/// Smallest probability of any non-absurd refinement of the support: the smallest retained
/// eigenvalue. Throws DomainError for the zero state.
Real epsilon_floor(const State &rho, const Tolerance &tol = {});

/// Both readings of "probabilities do not jump to zero under g".
struct ContinuityCheck {
    /// supp(pi_supp g(rho)) == supp(rho).
    bool support_form = false;
    /// Every rank-one refinement of supp(rho) keeps positive probability under g(rho); tested on
    /// the minimizing witness.
    bool probability_form = false;
    Real min_witness_probability = 0.0;
    /// Some eigenvalue of the filtered operator lies within a factor 10 of the rank cut.
    bool marginal = false;
};

ContinuityCheck continuity_detail(const State &rho, const Transformation &g,
                                  const Tolerance &tol = {});

/// Support form of the continuity condition.
bool check_continuity(const State &rho, const Transformation &g, const Tolerance &tol = {});

/// The auxiliary hypotheses derived from a state and an enclosing hypothesis b under g.
struct AuxiliaryConstruction {
    State rho;
    Hypothesis b;
    Transformation g;
    Hypothesis z;          // supp(pi_b g(rho))
    Hypothesis b_minus_z;  // {b \ z, z} completes b
    Hypothesis b_star;     // {b*, b \ z} completes I_d
    Index k = 0;           // level of supp(rho)
    Index l = 0;           // level of b
    Index d = 0;
};

/// Throws DomainError unless supp(rho) implies b.
AuxiliaryConstruction build_auxiliary(const State &rho, const Hypothesis &b,
                                      const Transformation &g, const Tolerance &tol = {});

struct AppendixCheck {
    std::string name;
    bool passed = false;
    /// True for checks whose proof needs the continuity precondition.
    bool needs_continuity = false;
    std::string detail;
};

struct AppendixReport {
    std::vector<AppendixCheck> checks;
    bool continuity_precondition = false;
    bool marginal = false;
    Index z_level = 0;
    Index complement_level = 0;
    Index b_star_level = 0;

    bool all_passed() const;
    /// A check failed although its preconditions held.
    bool theorem_violated() const;
};

AppendixReport verify_appendix(const AuxiliaryConstruction &aux, const Tolerance &tol = {});

/// (M_k(d), M_k(l) + M_k(d - l + k)) for the quantum profile.
std::pair<std::int64_t, std::int64_t> parameter_count_identity(std::int64_t d, std::int64_t k,
                                                               std::int64_t l);

/// Largest t in [0, pi] found by 8 bisection steps for which exp(-i t H) stays continuous on
/// rho, H a random Hermitian direction of unit operator norm.
Real largest_continuous_step(const State &rho, std::uint64_t seed, const Tolerance &tol = {});

/// A random configuration in the tested regime: rank-k state with epsilon >= min_epsilon,
/// level-l hypothesis containing its support, and g near the identity at delta = epsilon / 10.
struct AppendixConfiguration {
    AuxiliaryConstruction aux;
    Real epsilon = 0.0;
    Real delta = 0.0;
    std::uint64_t seed = 0;
};

AppendixConfiguration sample_appendix_configuration(Index d, Index k, Index l, std::uint64_t seed,
                                                    Real min_epsilon = 0.01,
                                                    const Tolerance &tol = {});

}  // namespace plausible
