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

#include "plausible/continuity.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "plausible/dimension_audit.hpp"

namespace plausible {

Real epsilon_floor(const State &rho, const Tolerance &tol) {
    EigenDecomposition e = hermitian_eig(rho.op(), tol);
    Real cut = support_threshold(e, tol);
    Real floor = -1.0;
    for (Index i = 0; i < e.values.size(); ++i) {
        if (e.values(i) > cut) {
            floor = e.values(i);
        }
    }
    if (floor < 0.0) {
        throw DomainError("epsilon_floor of the zero state is undefined");
    }
    return floor;
}

ContinuityCheck continuity_detail(const State &rho, const Transformation &g, const Tolerance &tol) {
    ContinuityCheck out;
    Hypothesis s = support(rho, tol);
    if (s.is_absurd()) {
        throw DomainError("continuity is undefined for the zero state");
    }
    State moved = act_on_state(g, rho, tol);
    State filtered = apply_filter(s, moved, tol);

    EigenDecomposition e = hermitian_eig(filtered.op(), tol);
    Real cut = support_threshold(e, tol);
    for (Index i = 0; i < e.values.size(); ++i) {
        Real v = e.values(i);
        if ((v > cut && v <= 10.0 * cut) || (v <= cut && v >= 0.1 * cut)) {
            out.marginal = true;
        }
    }
    out.support_form = same_hypothesis(support(filtered, tol), s, tol);

    // The least likely ray inside supp(rho) after the move.
    Matrix restricted = s.basis().adjoint() * moved.op() * s.basis();
    EigenDecomposition r = hermitian_eig(restricted, tol);
    Vector witness = s.basis() * r.vectors.col(r.vectors.cols() - 1);
    out.min_witness_probability = probability(moved, Hypothesis(Matrix(witness), tol));
    out.probability_form = out.min_witness_probability > cut;
    return out;
}

bool check_continuity(const State &rho, const Transformation &g, const Tolerance &tol) {
    return continuity_detail(rho, g, tol).support_form;
}

AuxiliaryConstruction build_auxiliary(const State &rho, const Hypothesis &b,
                                      const Transformation &g, const Tolerance &tol) {
    Hypothesis s = support(rho, tol);
    if (!implies(s, b, tol)) {
        throw DomainError("auxiliary hypothesis b must contain the support of rho");
    }
    const Index d = rho.ambient_dim();
    State filtered = apply_filter(b, act_on_state(g, rho, tol), tol);
    Hypothesis z = support(filtered, tol);
    Hypothesis b_minus_z = relative_complement(b, {z}, tol);
    Hypothesis b_star = relative_complement(Hypothesis::full(d), {b_minus_z}, tol);
    return AuxiliaryConstruction{rho, b, g, z, b_minus_z, b_star, s.level(), b.level(), d};
}

bool AppendixReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const AppendixCheck &c) { return c.passed; });
}

bool AppendixReport::theorem_violated() const {
    for (const AppendixCheck &c : checks) {
        if (!c.passed && (!c.needs_continuity || continuity_precondition)) {
            return true;
        }
    }
    return false;
}

AppendixReport verify_appendix(const AuxiliaryConstruction &aux, const Tolerance &tol) {
    AppendixReport report;
    const Index d = aux.d;
    const Hypothesis full = Hypothesis::full(d);
    const Hypothesis s = support(aux.rho, tol);
    const Hypothesis moved_support = act_on_hypothesis(aux.g, s, tol);
    const State moved = act_on_state(aux.g, aux.rho, tol);

    ContinuityCheck cont = continuity_detail(aux.rho, aux.g, tol);
    report.continuity_precondition = cont.support_form;
    report.marginal = cont.marginal;
    report.z_level = aux.z.level();
    report.complement_level = aux.b_minus_z.level();
    report.b_star_level = aux.b_star.level();

    auto add = [&](std::string name, bool passed, bool needs_continuity, std::string detail) {
        report.checks.push_back({std::move(name), passed, needs_continuity, std::move(detail)});
    };
    auto levels = [](Index got, Index want) {
        return std::to_string(got) + " (expected " + std::to_string(want) + ")";
    };

    add("b_split_complete",
        is_complete_refinement_set(make_refinement_set(aux.b, {aux.b_minus_z, aux.z}, tol), tol),
        false, "{b\\z, z} refines b completely");
    add("full_split_complete",
        is_complete_refinement_set(make_refinement_set(full, {aux.b_star, aux.b_minus_z}, tol), tol),
        false, "{b*, b\\z} refines I_d completely");
    add("z_within_b_star", implies(aux.z, aux.b_star, tol), false, "z implies b*");
    Real leaked = probability(moved, aux.b_minus_z);
    add("complement_probability_zero", leaked <= tol.prob_abs, false,
        "g(rho)(b\\z) = " + std::to_string(leaked));
    add("moved_support_orthogonal", contradicts(moved_support, aux.b_minus_z, tol), false,
        "g(supp rho) contradicts b\\z");
    add("moved_support_within_b_star", implies(moved_support, aux.b_star, tol), false,
        "g(supp rho) implies b*");

    Index filtered_rank = evidence_rank(apply_filter(aux.b, moved, tol), tol);
    Index moved_rank = evidence_rank(moved, tol);
    Index rho_rank = evidence_rank(aux.rho, tol);
    Index support_filtered_rank = evidence_rank(apply_filter(s, moved, tol), tol);
    add("filtered_rank_upper", filtered_rank <= moved_rank && moved_rank == rho_rank, false,
        "d(pi_b g rho) = " + std::to_string(filtered_rank) + ", d(g rho) = " +
            std::to_string(moved_rank) + ", d(rho) = " + std::to_string(rho_rank));
    add("filtered_rank_lower", filtered_rank >= support_filtered_rank && support_filtered_rank == rho_rank,
        true,
        "d(pi_b g rho) = " + std::to_string(filtered_rank) + ", d(pi_supp g rho) = " +
            std::to_string(support_filtered_rank));
    add("z_level", aux.z.level() == aux.k, true, levels(aux.z.level(), aux.k));
    add("complement_level", aux.b_minus_z.level() == aux.l - aux.k, true,
        levels(aux.b_minus_z.level(), aux.l - aux.k));
    add("b_star_level", aux.b_star.level() == d - aux.l + aux.k, true,
        levels(aux.b_star.level(), d - aux.l + aux.k));
    return report;
}

std::pair<std::int64_t, std::int64_t> parameter_count_identity(std::int64_t d, std::int64_t k,
                                                               std::int64_t l) {
    if (!(0 <= k && k <= l && l <= d)) {
        throw DomainError("parameter_count_identity needs k <= l <= d");
    }
    const DimensionProfile q = quantum_profile();
    return {mk_dimension(q, k, d), mk_dimension(q, k, l) + mk_dimension(q, k, d - l + k)};
}

Real largest_continuous_step(const State &rho, std::uint64_t seed, const Tolerance &tol) {
    const Index d = rho.ambient_dim();
    Rng rng(seed);
    Matrix g = complex_gaussian(d, d, rng);
    Matrix h = (g + g.adjoint()) / 2.0;
    Real n = operator_norm(h);
    if (n > 0.0) {
        h /= n;
    }
    auto continuous_at = [&](Real t) {
        return check_continuity(rho, Transformation(unitary_exponential(h, t)), tol);
    };
    Real lo = 0.0;
    Real hi = std::numbers::pi;
    if (continuous_at(hi)) {
        return hi;
    }
    for (int step = 0; step < 8; ++step) {
        Real mid = 0.5 * (lo + hi);
        if (continuous_at(mid)) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return lo;
}

AppendixConfiguration sample_appendix_configuration(Index d, Index k, Index l, std::uint64_t seed,
                                                    Real min_epsilon, const Tolerance &tol) {
    if (!(1 <= k && k <= l && l <= d)) {
        throw DomainError("appendix configuration needs 1 <= k <= l <= d");
    }
    Rng rng(seed);
    State rho = random_state(d, k, rng);
    Real eps = epsilon_floor(rho, tol);
    for (int attempt = 0; eps < min_epsilon; ++attempt) {
        if (attempt > 10000) {
            throw DomainError("could not draw a state with the requested epsilon floor");
        }
        rho = random_state(d, k, rng);
        eps = epsilon_floor(rho, tol);
    }
    Hypothesis s = support(rho, tol);
    Hypothesis rest = negation(s, tol);
    Matrix extra = rest.basis() * sample_haar_unitary(d - k == 0 ? 1 : d - k, rng)
                                      .leftCols(l - k)
                                      .topRows(rest.level());
    Matrix b_basis(d, l);
    b_basis << s.basis(), extra;
    Hypothesis b = Hypothesis::span(b_basis, tol);

    Real delta = eps / 10.0;
    Transformation g = sample_near_identity(d, delta, rng);
    return AppendixConfiguration{build_auxiliary(rho, b, g, tol), eps, delta, seed};
}

}  // namespace plausible
