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

#include "plausible/axioms.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "plausible/composition.hpp"
#include "plausible/filter.hpp"
#include "plausible/oracles.hpp"

namespace plausible {

namespace {

LawOutcome pass() { return {}; }

LawOutcome fail(std::string detail) { return {false, std::move(detail)}; }

std::string fmt(Real v) {
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << v;
    return os.str();
}

Index rand_index(Rng &rng, Index lo, Index hi) {
    return lo + static_cast<Index>(rng.next() % static_cast<std::uint64_t>(hi - lo + 1));
}

Hypothesis rotate_within(const Hypothesis &h, Rng &rng) {
    if (h.level() == 0) {
        return h;
    }
    return Hypothesis::span(h.basis() * sample_haar_unitary(h.level(), rng));
}

Hypothesis rand_hyp(Index d, Rng &rng, Index lo = 0, Index hi = -1) {
    if (hi < 0) {
        hi = d;
    }
    return random_hypothesis(d, rand_index(rng, lo, hi), rng);
}

State rand_state(Index d, Rng &rng) { return random_state(d, rand_index(rng, 1, d), rng); }

/// x implies y by construction: nested column blocks of one unitary, each re-based.
std::pair<Hypothesis, Hypothesis> nested_pair(Index d, Rng &rng) {
    Index b = rand_index(rng, 0, d);
    Index a = rand_index(rng, 0, b);
    Matrix u = sample_haar_unitary(d, rng);
    return {rotate_within(Hypothesis(u.leftCols(a)), rng),
            rotate_within(Hypothesis(u.leftCols(b)), rng)};
}

/// Random split of n into positive parts.
std::vector<Index> random_composition(Index n, Rng &rng) {
    std::vector<Index> parts;
    Index rest = n;
    while (rest > 0) {
        Index p = rand_index(rng, 1, rest);
        parts.push_back(p);
        rest -= p;
    }
    return parts;
}

/// Complete refinement set of `a` with random block sizes and random bases.
std::vector<Hypothesis> split_hypothesis(const Hypothesis &a, Rng &rng) {
    std::vector<Hypothesis> members;
    if (a.is_absurd()) {
        return members;
    }
    Matrix b = a.basis() * sample_haar_unitary(a.level(), rng);
    Index col = 0;
    for (Index p : random_composition(a.level(), rng)) {
        members.emplace_back(Matrix(b.middleCols(col, p)));
        col += p;
    }
    return members;
}

/// rho <= sigma by construction.
std::pair<State, State> ordered_pair(Index d, Rng &rng) {
    State a = rand_state(d, rng);
    State c = rand_state(d, rng);
    Real t = rng.uniform();
    Matrix rho = 0.5 * t * a.op();
    Matrix sigma = rho + 0.5 * c.op();
    return {State(rho), State(sigma)};
}

Real op_distance(const State &a, const State &b) { return (a.op() - b.op()).norm(); }

Real max_abs(const Matrix &m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

// ---------------------------------------------------------------------------------------------
// Hypothesis lattice.

LawOutcome implication_reflexive(Index d, std::uint64_t seed, const Tolerance &tol) {
    Rng rng(seed);
    Hypothesis x = rand_hyp(d, rng);
    Hypothesis same = rotate_within(x, rng);
    if (!implies(x, x, tol) || !implies(x, same, tol)) {
        return fail("x does not imply itself at level " + std::to_string(x.level()));
    }
    return pass();
}

LawOutcome implication_antisymmetric(Index d, std::uint64_t seed, const Tolerance &tol) {
    Rng rng(seed);
    Hypothesis x = rand_hyp(d, rng);
    Hypothesis y = rotate_within(x, rng);
    Hypothesis other = rand_hyp(d, rng);
    for (const Hypothesis *z : {&y, &other}) {
        if (implies(x, *z, tol) && implies(*z, x, tol) && !same_hypothesis(x, *z, tol)) {
            return fail("mutual implication without equality");
        }
    }
    if (!(implies(x, y, tol) && implies(y, x, tol))) {
        return fail("re-based copy not mutually implied");
    }
    return pass();
}

LawOutcome implication_transitive(Index d, std::uint64_t seed, const Tolerance &tol) {
    Rng rng(seed);
    Index c = rand_index(rng, 0, d);
    Index b = rand_index(rng, 0, c);
    Index a = rand_index(rng, 0, b);
    Matrix u = sample_haar_unitary(d, rng);
    Hypothesis x = rotate_within(Hypothesis(u.leftCols(a)), rng);
    Hypothesis y = rotate_within(Hypothesis(u.leftCols(b)), rng);
    Hypothesis z = rotate_within(Hypothesis(u.leftCols(c)), rng);
    if (!implies(x, y, tol) || !implies(y, z, tol)) {
        return fail("constructed chain not recognised");
    }
    if (!implies(x, z, tol)) {
        return fail("x<=y<=z but not x<=z");
    }
    return pass();
}

LawOutcome absurd_implies_everything(Index d, std::uint64_t seed, const Tolerance &tol) {
    Rng rng(seed);
    Hypothesis y = rand_hyp(d, rng);
    Hypothesis empty = Hypothesis::absurd(d);
    if (!implies(empty, y, tol) || !contradicts(empty, y, tol)) {
        return fail("absurd hypothesis is not below y");
    }
    if (!y.is_absurd() && implies(y, empty, tol)) {
        return fail("non-absurd y implies the absurd hypothesis");
    }
    return pass();
}

LawOutcome level_monotone(Index d, std::uint64_t seed, const Tolerance &tol) {
    Rng rng(seed);
    auto [x, y] = nested_pair(d, rng);
    if (!implies(x, y, tol) || coarse_level(x) > coarse_level(y)) {
        return fail("nested pair with d(x)=" + std::to_string(x.level()) +
                    " > d(y)=" + std::to_string(y.level()));
    }
    return pass();
}

LawOutcome level_zero_iff_absurd(Index d, std::uint64_t seed, const Tolerance &tol) {
    Rng rng(seed);
    Index k = rand_index(rng, 0, d);
    Matrix vecs = complex_gaussian(d, k, rng);
    Hypothesis spanned = Hypothesis::span(vecs, tol);
    Hypothesis zero = Hypothesis::span(Matrix::Zero(d, std::max<Index>(k, 1)), tol);
    if (coarse_level(zero) != 0 || !zero.is_absurd()) {
        return fail("span of zero vectors is not absurd");
    }
    if ((coarse_level(spanned) == 0) != (k == 0)) {
        return fail("span of " + std::to_string(k) + " generic vectors has level " +
                    std::to_string(spanned.level()));
    }
    return pass();
}

LawOutcome level_group_invariant(Index d, std::uint64_t seed, const Tolerance &tol) {
    Rng rng(seed);
    Hypothesis x = rand_hyp(d, rng);
    Transformation g = haar_transformation(d, rng);
    if (coarse_level(act_on_hypothesis(g, x, tol)) != coarse_level(x)) {
        return fail("level changed under g");
    }
    return pass();
}

LawOutcome refinement_additivity(Index d, std::uint64_t seed, const Tolerance &tol) {
    Rng rng(seed);
    Hypothesis a = rand_hyp(d, rng, 1);
    std::vector<Hypothesis> parts = split_hypothesis(a, rng);
    RefinementSet rs = make_refinement_set(a, parts, tol);
    Index sum = 0;
    for (const Hypothesis &b : rs.members) {
        sum += coarse_level(b);
    }
    if (!rs.complete) {
        return fail("random split not recognised as complete");
    }
    if (sum != coarse_level(a)) {
        return fail("levels sum to " + std::to_string(sum) + " not " + std::to_string(a.level()));
    }
    return pass();
}

LawOutcome complement_completes(Index d, std::uint64_t seed, const Tolerance &tol) {
    Rng rng(seed);
    Hypothesis a = rand_hyp(d, rng);
    std::vector<Hypothesis> parts = split_hypothesis(a, rng);
    // Drop a random subset so the remainder is incomplete.
    std::vector<Hypothesis> kept;
    for (Hypothesis &p : parts) {
        if (rng.uniform() < 0.5) {
            kept.push_back(std::move(p));
        }
    }
    Hypothesis c = relative_complement(a, kept, tol);
    for (const Hypothesis &b : kept) {
        if (!contradicts(c, b, tol)) {
            return fail("complement overlaps a member");
        }
    }
    kept.push_back(c);
    if (!make_refinement_set(a, kept, tol).complete) {
        return fail("complement does not complete the set");
    }
    return pass();
}

LawOutcome joint_decidability_definition(Index d, std::uint64_t seed, const Tolerance &tol) {
    Rng rng(seed);
    Hypothesis x = Hypothesis::absurd(d);
    Hypothesis y = Hypothesis::absurd(d);
    switch (rng.next() % 4) {
        case 0: {  // nested
            auto p = nested_pair(d, rng);
            x = p.first;
            y = p.second;
            break;
        }
        case 1: {  // commuting: unions of blocks of a common basis
            Matrix u = sample_haar_unitary(d, rng);
            std::vector<Index> xs, ys;
            for (Index i = 0; i < d; ++i) {
                if (rng.uniform() < 0.5) xs.push_back(i);
                if (rng.uniform() < 0.5) ys.push_back(i);
            }
            Matrix bx(d, static_cast<Index>(xs.size()));
            Matrix by(d, static_cast<Index>(ys.size()));
            for (std::size_t j = 0; j < xs.size(); ++j) bx.col(static_cast<Index>(j)) = u.col(xs[j]);
            for (std::size_t j = 0; j < ys.size(); ++j) by.col(static_cast<Index>(j)) = u.col(ys[j]);
            x = rotate_within(Hypothesis(bx), rng);
            y = rotate_within(Hypothesis(by), rng);
            break;
        }
        case 2: {  // rotated ray pair inside a random plane
            if (d < 2) {
                x = rand_hyp(d, rng);
                y = rand_hyp(d, rng);
                break;
            }
            Matrix u = sample_haar_unitary(d, rng);
            Real theta = rng.uniform() * 1.5707963267948966;
            Vector w = std::cos(theta) * u.col(0) + std::sin(theta) * u.col(1);
            x = Hypothesis(Matrix(u.col(0)));
            y = Hypothesis::span(Matrix(w));
            break;
        }
        default:
            x = rand_hyp(d, rng);
            y = rand_hyp(d, rng);
    }
    bool fast = jointly_decidable(x, y, tol);
    bool slow = oracle::jointly_decidable_by_definition(x, y, tol);
    if (fast != slow) {
        return fail(std::string("commutation says ") + (fast ? "true" : "false") +
                    ", definition says " + (slow ? "true" : "false"));
    }
    return pass();
}

// ---------------------------------------------------------------------------------------------
// State space.

LawOutcome probability_monotone(Index d, std::uint64_t seed, const Tolerance &tol) {
    Rng rng(seed);
    auto [x, y] = nested_pair(d, rng);
    State rho = rand_state(d, rng);
    Real px = probability(rho, x);
    Real py = probability(rho, y);
    if (px > py + tol.prob_abs) {
        return fail("rho(x)=" + fmt(px) + " > rho(y)=" + fmt(py));
    }
    return pass();
}

LawOutcome probability_converse_witness(Index d, std::uint64_t seed, const Tolerance &tol) {
    Rng rng(seed);
    Hypothesis x = rand_hyp(d, rng, 1);
    Hypothesis y = rand_hyp(d, rng, 0, d - 1);
    if (implies(x, y, tol)) {
        return pass();  // vacuous
    }
    Matrix outside = x.basis() - y.basis() * (y.basis().adjoint() * x.basis());
    Index col = 0;
    outside.colwise().norm().maxCoeff(&col);
    State witness = pure_state(x.basis().col(col));
    Real px = probability(witness, x);
    Real py = probability(witness, y);
    if (!(px > py + tol.prob_abs)) {
        return fail("witness gives rho(x)=" + fmt(px) + " <= rho(y)=" + fmt(py));
    }
    return pass();
}

LawOutcome sum_rule(Index d, std::uint64_t seed, const Tolerance &tol) {
    Rng rng(seed);
    Hypothesis a = rand_hyp(d, rng, 1);
    std::vector<Hypothesis> parts = split_hypothesis(a, rng);
    State rho = rand_state(d, rng);
    Real total = 0.0;
    for (const Hypothesis &b : parts) {
        total += probability(rho, b);
    }
    Real pa = probability(rho, a);
    if (std::abs(pa - total) > static_cast<Real>(d) * tol.prob_abs) {
        return fail("rho(a)=" + fmt(pa) + " vs sum " + fmt(total));
    }
    return pass();
}

LawOutcome probability_calibration(Index d, std::uint64_t seed, const Tolerance &tol) {
    Rng rng(seed);
    State rho = rand_state(d, rng);
    Hypothesis x = rand_hyp(d, rng);
    if (probability(rho, Hypothesis::absurd(d)) != 0.0) {
        return fail("rho(empty) != 0");
    }
    Real p = probability(rho, x);
    if (p < 0.0 || p > 1.0) {
        return fail("probability outside [0, 1]");
    }
    Real ignorant = probability(ignorance_state(d), x);
    Real expect = static_cast<Real>(x.level()) / static_cast<Real>(d);
    if (std::abs(ignorant - expect) > tol.prob_abs) {
        return fail("ignorance gives " + fmt(ignorant) + " for level " + std::to_string(x.level()));
    }
    return pass();
}

LawOutcome order_matches_rank_one_tests(Index d, std::uint64_t seed, const Tolerance &tol) {
    Rng rng(seed);
    State rho = State::zero(d);
    State sigma = State::zero(d);
    if (rng.uniform() < 0.5) {
        auto p = ordered_pair(d, rng);
        rho = p.first;
        sigma = p.second;
    } else {
        rho = rand_state(d, rng);
        sigma = rand_state(d, rng);
    }
    bool ordered = leq(rho, sigma, tol);
    if (ordered) {
        for (int i = 0; i < 50; ++i) {
            Hypothesis x = random_hypothesis(d, 1, rng);
            if (probability(rho, x) > probability(sigma, x) + tol.prob_abs) {
                return fail("leq holds but a ray is more likely under rho");
            }
        }
        return pass();
    }
    EigenDecomposition e = hermitian_eig(sigma.op() - rho.op(), tol);
    Hypothesis ray(Matrix(e.vectors.col(d - 1)));
    if (!(probability(rho, ray) > probability(sigma, ray) + tol.prob_abs)) {
        return fail("leq fails but the extremal ray is no witness");
    }
    return pass();
}

LawOutcome order_rank_monotone(Index d, std::uint64_t seed, const Tolerance &tol) {
    Rng rng(seed);
    auto [rho, sigma] = ordered_pair(d, rng);
    if (!leq(rho, sigma, tol)) {
        return fail("constructed pair not ordered");
    }
    if (evidence_rank(rho, tol) > evidence_rank(sigma, tol)) {
        return fail("rho <= sigma but d(rho) > d(sigma)");
    }
    return pass();
}

LawOutcome support_covariant(Index d, std::uint64_t seed, const Tolerance &tol) {
    Rng rng(seed);
    State rho = rand_state(d, rng);
    Transformation g = haar_transformation(d, rng);
    Hypothesis lhs = support(act_on_state(g, rho, tol), tol);
    Hypothesis rhs = act_on_hypothesis(g, support(rho, tol), tol);
    if (!same_hypothesis(lhs, rhs, tol)) {
        return fail("supp(g rho) != g supp(rho)");
    }
    return pass();
}

LawOutcome evidence_zero_iff_zero(Index d, std::uint64_t seed, const Tolerance &tol) {
    Rng rng(seed);
    if (evidence_rank(State::zero(d), tol) != 0) {
        return fail("zero state has positive evidence rank");
    }
    Index r = rand_index(rng, 1, d);
    State rho = random_state(d, r, rng);
    if (evidence_rank(rho, tol) != r) {
        return fail("rank-" + std::to_string(r) + " state has evidence rank " +
                    std::to_string(evidence_rank(rho, tol)));
    }
    return pass();
}

LawOutcome mix_closure(Index d, std::uint64_t seed, const Tolerance &tol) {
    Rng rng(seed);
    State rho = rand_state(d, rng);
    State sigma = rand_state(d, rng);
    Real t = rng.uniform();
    State m = mix(rho, sigma, t, tol);
    Hypothesis x = rand_hyp(d, rng);
    Real expect = t * probability(rho, x) + (1.0 - t) * probability(sigma, x);
    if (std::abs(probability(m, x) - expect) > tol.prob_abs) {
        return fail("mixture probability is not the weighted sum");
    }
    return pass();
}

LawOutcome rescale_boundary(Index d, std::uint64_t seed, const Tolerance &tol) {
    Rng rng(seed);
    State rho = rand_state(d, rng);
    Real bound = rescale_bound(rho);
    State top = rescale(rho, bound, tol);
    Real p = probability(top, Hypothesis::full(d));
    if (std::abs(p - 1.0) > tol.prob_abs) {
        return fail("rescale at the bound gives rho(I)=" + fmt(p));
    }
    try {
        rescale(rho, bound * (1.0 + 1e-6), tol);
        return fail("rescale beyond the bound accepted");
    } catch (const InadmissibleRescale &e) {
        if (std::abs(e.bound() - bound) > 1e-12 * bound) {
            return fail("reported bound differs");
        }
    }
    return pass();
}

LawOutcome ignorance_invariant(Index d, std::uint64_t seed, const Tolerance &tol) {
    Rng rng(seed);
    Transformation g = haar_transformation(d, rng);
    State rho0 = ignorance_state(d);
    Real dist = op_distance(act_on_state(g, rho0, tol), rho0);
    if (dist > 1e-12) {
        return fail("g moves the ignorance state by " + fmt(dist));
    }
    return pass();
}

// ---------------------------------------------------------------------------------------------
// Filters.

LawOutcome filter_bounded_by_survival(Index d, std::uint64_t seed, const Tolerance &tol) {
    Rng rng(seed);
    State rho = rand_state(d, rng);
    Hypothesis b = rand_hyp(d, rng);
    State f = apply_filter(b, rho, tol);
    Real survive = probability(rho, b);
    for (int i = 0; i < 5; ++i) {
        Hypothesis x = rand_hyp(d, rng);
        if (probability(f, x) > survive + tol.prob_abs) {
            return fail("post-filter probability exceeds survival probability");
        }
    }
    return pass();
}

LawOutcome filter_fixes_refinements(Index d, std::uint64_t seed, const Tolerance &tol) {
    Rng rng(seed);
    auto [x, b] = nested_pair(d, rng);
    State rho = rand_state(d, rng);
    Real before = probability(rho, x);
    Real after = probability(apply_filter(b, rho, tol), x);
    if (std::abs(before - after) > tol.prob_abs) {
        return fail("filtering by b changed rho(x) for x <= b");
    }
    // Converse on a sampled counterexample: some state must tell x apart when x is not below b.
    Hypothesis x2 = rand_hyp(d, rng, 1);
    Hypothesis b2 = rand_hyp(d, rng, 0, d - 1);
    if (!implies(x2, b2, tol)) {
        Matrix outside = x2.basis() - b2.basis() * (b2.basis().adjoint() * x2.basis());
        Index col = 0;
        outside.colwise().norm().maxCoeff(&col);
        State w = pure_state(x2.basis().col(col));
        Real gap = probability(w, x2) - probability(apply_filter(b2, w, tol), x2);
        if (!(gap > tol.prob_abs)) {
            return fail("no state distinguishes filtering for x not below b");
        }
    }
    return pass();
}

LawOutcome filter_order_preserving(Index d, std::uint64_t seed, const Tolerance &tol) {
    Rng rng(seed);
    auto [rho, sigma] = ordered_pair(d, rng);
    Hypothesis b = rand_hyp(d, rng);
    if (!leq(apply_filter(b, rho, tol), apply_filter(b, sigma, tol), tol)) {
        return fail("filter broke the order");
    }
    return pass();
}

LawOutcome filter_nesting(Index d, std::uint64_t seed, const Tolerance &tol) {
    Rng rng(seed);
    auto [b, a] = nested_pair(d, rng);
    State rho = rand_state(d, rng);
    State fb = apply_filter(b, rho, tol);
    State ba = apply_filter(b, apply_filter(a, rho, tol), tol);
    State ab = apply_filter(a, apply_filter(b, rho, tol), tol);
    Real e = std::max(op_distance(ba, fb), op_distance(ab, fb));
    if (e > tol.prob_abs) {
        return fail("finer filter not absorbing, error " + fmt(e));
    }
    return pass();
}

LawOutcome filter_contradiction(Index d, std::uint64_t seed, const Tolerance &tol) {
    Rng rng(seed);
    Index la = rand_index(rng, 0, d);
    Index lb = rand_index(rng, 0, d - la);
    Matrix u = sample_haar_unitary(d, rng);
    Hypothesis a = rotate_within(Hypothesis(u.leftCols(la)), rng);
    Hypothesis b = rotate_within(Hypothesis(u.middleCols(la, lb)), rng);
    if (!contradicts(a, b, tol)) {
        return fail("orthogonal blocks not recognised as contradictory");
    }
    State rho = rand_state(d, rng);
    Real e1 = apply_filter(a, apply_filter(b, rho, tol), tol).op().norm();
    Real e2 = apply_filter(b, apply_filter(a, rho, tol), tol).op().norm();
    if (std::max(e1, e2) > tol.prob_abs) {
        return fail("contradictory filters let something through");
    }
    return pass();
}

LawOutcome filter_noncommutation(Index d, std::uint64_t seed, const Tolerance &tol) {
    Rng rng(seed);
    Matrix u = sample_haar_unitary(d, rng);
    Real c2 = 0.25 + 0.5 * rng.uniform();
    Vector w = std::sqrt(c2) * u.col(0) + std::sqrt(1.0 - c2) * u.col(1);
    Hypothesis a(Matrix(u.col(0)));
    Hypothesis b = Hypothesis::span(Matrix(w));
    State noisy = random_state(d, d, rng);
    State rho(0.5 * ignorance_state(d).op() + 0.5 * noisy.op() / noisy.trace());
    Real gap = op_distance(apply_filter(a, apply_filter(b, rho, tol), tol),
                           apply_filter(b, apply_filter(a, rho, tol), tol));
    if (jointly_decidable(a, b, tol)) {
        return fail("overlapping rays reported as commuting");
    }
    if (!(gap > 0.01)) {
        return fail("filter orders differ by only " + fmt(gap));
    }
    return pass();
}

LawOutcome filter_linear(Index d, std::uint64_t seed, const Tolerance &tol) {
    Rng rng(seed);
    State rho = rand_state(d, rng);
    State sigma = rand_state(d, rng);
    Real u = rng.uniform();
    Real v = (1.0 - u) * rng.uniform();
    Hypothesis b = rand_hyp(d, rng);
    State combined(u * rho.op() + v * sigma.op());
    Matrix lhs = apply_filter(b, combined, tol).op();
    Matrix rhs = u * apply_filter(b, rho, tol).op() + v * apply_filter(b, sigma, tol).op();
    if ((lhs - rhs).norm() > tol.prob_abs) {
        return fail("filter not linear");
    }
    return pass();
}

LawOutcome filter_support_inclusion(Index d, std::uint64_t seed, const Tolerance &tol) {
    Rng rng(seed);
    State rho = rand_state(d, rng);
    Hypothesis x = rand_hyp(d, rng);
    if (!implies(support(apply_filter(x, rho, tol), tol), x, tol)) {
        return fail("support of the filtered state leaves x");
    }
    return pass();
}

LawOutcome filter_strict_support(Index d, std::uint64_t seed, const Tolerance &tol) {
    Rng rng(seed);
    State rho = rand_state(d, rng);
    Hypothesis x = rand_hyp(d, rng, 1);
    State f = apply_filter(x, rho, tol);
    bool strict = support(f, tol).level() < x.level();
    // Independent side: the least likely ray inside x.
    EigenDecomposition fe = hermitian_eig(f.op(), tol);
    Real cut = support_threshold(fe, tol);
    Matrix restricted = x.basis().adjoint() * rho.op() * x.basis();
    EigenDecomposition r = hermitian_eig(restricted, tol);
    Hypothesis ray(Matrix(x.basis() * r.vectors.col(x.level() - 1)));
    bool vanishing = probability(rho, ray) <= cut;
    if (strict != vanishing) {
        return fail(std::string("strict inclusion ") + (strict ? "true" : "false") +
                    " but vanishing ray " + (vanishing ? "true" : "false"));
    }
    return pass();
}

LawOutcome filter_narrowing(Index d, std::uint64_t seed, const Tolerance &tol) {
    Rng rng(seed);
    State rho = rand_state(d, rng);
    Hypothesis x = rand_hyp(d, rng);
    if (evidence_rank(apply_filter(x, rho, tol), tol) > evidence_rank(rho, tol)) {
        return fail("filtering increased the evidence rank");
    }
    return pass();
}

LawOutcome read_outcome_normalises(Index d, std::uint64_t seed, const Tolerance &tol) {
    Rng rng(seed);
    State rho = rand_state(d, rng);
    Hypothesis b = rand_hyp(d, rng, 1);
    State post = read_outcome(b, rho, tol);
    if (std::abs(probability(post, b) - 1.0) > tol.prob_abs) {
        return fail("posterior does not give b probability one");
    }
    // A hypothesis orthogonal to the support must be discarded.
    Hypothesis s = support(rho, tol);
    if (s.level() < d) {
        try {
            read_outcome(negation(s, tol), rho, tol);
            return fail("impossible outcome was not discarded");
        } catch (const DiscardedError &) {
        }
    }
    return pass();
}

// ---------------------------------------------------------------------------------------------
// Transformations.

LawOutcome transformation_duality(Index d, std::uint64_t seed, const Tolerance &tol) {
    Rng rng(seed);
    State rho = rand_state(d, rng);
    Hypothesis x = rand_hyp(d, rng);
    Transformation g = haar_transformation(d, rng);
    Real lhs = probability(act_on_state(g, rho, tol), x);
    Real rhs = probability(rho, act_on_hypothesis(g.inverse(), x, tol));
    if (std::abs(lhs - rhs) > tol.prob_abs) {
        return fail("g(rho)(x)=" + fmt(lhs) + " vs rho(g^-1 x)=" + fmt(rhs));
    }
    return pass();
}

LawOutcome transformation_order(Index d, std::uint64_t seed, const Tolerance &tol) {
    Rng rng(seed);
    Transformation g = haar_transformation(d, rng);
    auto [x, y] = nested_pair(d, rng);
    Hypothesis p = rand_hyp(d, rng);
    Hypothesis q = rand_hyp(d, rng);
    for (auto [a, b] : {std::pair{x, y}, std::pair{y, x}, std::pair{p, q}}) {
        if (implies(a, b, tol) != implies(act_on_hypothesis(g, a, tol), act_on_hypothesis(g, b, tol), tol)) {
            return fail("g changed an implication");
        }
    }
    return pass();
}

LawOutcome filter_exchange(Index d, std::uint64_t seed, const Tolerance &tol) {
    Rng rng(seed);
    State rho = rand_state(d, rng);
    Hypothesis b = rand_hyp(d, rng);
    Transformation g = haar_transformation(d, rng);
    State lhs = act_on_state(g, apply_filter(b, rho, tol), tol);
    State rhs = apply_filter(act_on_hypothesis(g, b, tol), act_on_state(g, rho, tol), tol);
    Real e = op_distance(lhs, rhs);
    if (e > tol.prob_abs) {
        return fail("g pi_b != pi_gb g, error " + fmt(e));
    }
    return pass();
}

LawOutcome transformation_linear(Index d, std::uint64_t seed, const Tolerance &tol) {
    Rng rng(seed);
    State rho = rand_state(d, rng);
    State sigma = rand_state(d, rng);
    Real u = rng.uniform();
    Real v = (1.0 - u) * rng.uniform();
    Transformation g = haar_transformation(d, rng);
    Matrix lhs = act_on_state(g, State(u * rho.op() + v * sigma.op()), tol).op();
    Matrix rhs = u * act_on_state(g, rho, tol).op() + v * act_on_state(g, sigma, tol).op();
    if ((lhs - rhs).norm() > tol.prob_abs) {
        return fail("transformation not linear");
    }
    return pass();
}

LawOutcome group_closure(Index d, std::uint64_t seed, const Tolerance &) {
    Rng rng(seed);
    Transformation g = haar_transformation(d, rng);
    Transformation h = haar_transformation(d, rng);
    Transformation gh = g * h;
    if (unitarity_defect(gh.matrix()) > 1e-12) {
        return fail("product not unitary");
    }
    Real e = max_abs((g * g.inverse()).matrix() - Matrix::Identity(d, d));
    if (e > 1e-12) {
        return fail("g g^-1 differs from identity by " + fmt(e));
    }
    return pass();
}

LawOutcome transport_transitive(Index d, std::uint64_t seed, const Tolerance &tol) {
    Rng rng(seed);
    Index k = rand_index(rng, 0, d);
    Hypothesis x = random_hypothesis(d, k, rng);
    Hypothesis y = random_hypothesis(d, k, rng);
    Transformation g = transport(x, y, tol);
    if (!same_hypothesis(act_on_hypothesis(g, x, tol), y, tol)) {
        return fail("transport missed its target at level " + std::to_string(k));
    }
    return pass();
}

// ---------------------------------------------------------------------------------------------
// Composition.

LawOutcome tensor_level_multiplicative(Index d, std::uint64_t seed, const Tolerance &tol) {
    Rng rng(seed);
    Index d2 = rand_index(rng, 1, 3);
    Hypothesis x1 = rand_hyp(d, rng);
    Hypothesis x2 = rand_hyp(d2, rng);
    if (coarse_level(tensor_hypothesis(x1, x2)) != x1.level() * x2.level()) {
        return fail("levels do not multiply");
    }
    Hypothesis r1 = random_hypothesis(d, 1, rng);
    Hypothesis r2 = random_hypothesis(d2, 1, rng);
    Hypothesis joint = tensor_hypothesis(r1, r2);
    if (joint.level() != 1 || !implies(joint, tensor_hypothesis(Hypothesis::full(d), r2), tol)) {
        return fail("ray (x) ray is not a ray");
    }
    return pass();
}

LawOutcome tensor_completeness(Index d, std::uint64_t seed, const Tolerance &tol) {
    Rng rng(seed);
    Index d2 = rand_index(rng, 1, 3);
    std::vector<Hypothesis> a = split_hypothesis(Hypothesis::full(d), rng);
    std::vector<Hypothesis> b = split_hypothesis(Hypothesis::full(d2), rng);
    std::vector<Hypothesis> joint;
    for (const Hypothesis &x : a) {
        for (const Hypothesis &y : b) {
            joint.push_back(tensor_hypothesis(x, y));
        }
    }
    if (!make_refinement_set(Hypothesis::full(d * d2), joint, tol).complete) {
        return fail("product of complete sets is not complete");
    }
    return pass();
}

LawOutcome tensor_filter_compatible(Index d, std::uint64_t seed, const Tolerance &tol) {
    Rng rng(seed);
    Index d2 = rand_index(rng, 1, 3);
    State r1 = rand_state(d, rng);
    State r2 = rand_state(d2, rng);
    Hypothesis x1 = rand_hyp(d, rng);
    Hypothesis x2 = rand_hyp(d2, rng);
    State lhs = apply_filter(tensor_hypothesis(x1, x2), tensor_state(r1, r2, tol), tol);
    State rhs = tensor_state(apply_filter(x1, r1, tol), apply_filter(x2, r2, tol), tol);
    if (op_distance(lhs, rhs) > tol.prob_abs) {
        return fail("filtering does not factor over the product");
    }
    return pass();
}

LawOutcome tensor_probability_factorizes(Index d, std::uint64_t seed, const Tolerance &tol) {
    Rng rng(seed);
    Index d2 = rand_index(rng, 1, 3);
    State r1 = rand_state(d, rng);
    State r2 = rand_state(d2, rng);
    Hypothesis x1 = rand_hyp(d, rng);
    Hypothesis x2 = rand_hyp(d2, rng);
    Real joint = probability(tensor_state(r1, r2, tol), tensor_hypothesis(x1, x2));
    Real product = probability(r1, x1) * probability(r2, x2);
    if (std::abs(joint - product) > 1e-10) {
        return fail("joint " + fmt(joint) + " vs product " + fmt(product));
    }
    return pass();
}

LawOutcome tensor_transformation_compatible(Index d, std::uint64_t seed, const Tolerance &tol) {
    Rng rng(seed);
    Index d2 = rand_index(rng, 1, 3);
    State r1 = rand_state(d, rng);
    State r2 = rand_state(d2, rng);
    Transformation g1 = haar_transformation(d, rng);
    Transformation g2 = haar_transformation(d2, rng);
    State lhs = act_on_state(tensor_transformation(g1, g2), tensor_state(r1, r2, tol), tol);
    State rhs = tensor_state(act_on_state(g1, r1, tol), act_on_state(g2, r2, tol), tol);
    if (op_distance(lhs, rhs) > 1e-10) {
        return fail("(g1 x g2)(r1 x r2) != g1(r1) x g2(r2)");
    }
    return pass();
}

std::vector<Law> build_catalog() {
    return {
        {"implication_reflexive", "hypothesis_lattice", "x implies x", 1, implication_reflexive},
        {"implication_antisymmetric", "hypothesis_lattice", "mutual implication is equality", 1,
         implication_antisymmetric},
        {"implication_transitive", "hypothesis_lattice", "x<=y, y<=z => x<=z", 1, implication_transitive},
        {"absurd_implies_everything", "hypothesis_lattice", "the absurd hypothesis implies all", 1,
         absurd_implies_everything},
        {"level_monotone", "hypothesis_lattice", "x<=y => d(x)<=d(y)", 1, level_monotone},
        {"level_zero_iff_absurd", "hypothesis_lattice", "d(x)=0 <=> x absurd", 1, level_zero_iff_absurd},
        {"level_group_invariant", "hypothesis_lattice", "d(g x) = d(x)", 1, level_group_invariant},
        {"refinement_additivity", "hypothesis_lattice", "complete sets add levels", 1, refinement_additivity},
        {"complement_completes", "hypothesis_lattice", "relative complement completes a set", 1,
         complement_completes},
        {"joint_decidability_definition", "hypothesis_lattice",
         "commutation agrees with the refinement-set definition", 1, joint_decidability_definition},
        {"probability_monotone", "state_space", "x<=y => rho(x)<=rho(y)", 1, probability_monotone},
        {"probability_converse_witness", "state_space", "not x<=y => some rho has rho(x)>rho(y)", 1,
         probability_converse_witness},
        {"sum_rule", "state_space", "rho(a) = sum rho(b_i) over a complete set", 1, sum_rule},
        {"probability_calibration", "state_space", "rho(empty)=0, ignorance gives d(x)/d", 1,
         probability_calibration},
        {"order_matches_rank_one_tests", "state_space", "PSD order equals order on all rays", 1,
         order_matches_rank_one_tests},
        {"order_rank_monotone", "state_space", "rho<=sigma => d(rho)<=d(sigma)", 1, order_rank_monotone},
        {"support_covariant", "state_space", "supp(g rho) = g supp(rho)", 1, support_covariant},
        {"evidence_zero_iff_zero", "state_space", "d(rho)=0 <=> rho=0", 1, evidence_zero_iff_zero},
        {"mix_closure", "state_space", "mixtures are states with mixed probabilities", 1, mix_closure},
        {"rescale_boundary", "state_space", "rescale admissible exactly up to 1/rho(I)", 1,
         rescale_boundary},
        {"ignorance_invariant", "state_space", "g(rho0) = rho0", 1, ignorance_invariant},
        {"filter_bounded_by_survival", "filters", "pi_b rho(x) <= rho(b)", 1, filter_bounded_by_survival},
        {"filter_fixes_refinements", "filters", "x<=b => pi_b rho(x) = rho(x)", 1,
         filter_fixes_refinements},
        {"filter_order_preserving", "filters", "rho<=sigma => pi_b rho <= pi_b sigma", 1,
         filter_order_preserving},
        {"filter_nesting", "filters", "b<=a => pi_b pi_a = pi_a pi_b = pi_b", 1, filter_nesting},
        {"filter_contradiction", "filters", "a perp b => pi_a pi_b = pi_b pi_a = 0", 1,
         filter_contradiction},
        {"filter_noncommutation", "filters", "overlapping rays give order-dependent filters", 2,
         filter_noncommutation},
        {"filter_linear", "filters", "pi_b is linear", 1, filter_linear},
        {"filter_support_inclusion", "filters", "supp(pi_x rho) <= x", 1, filter_support_inclusion},
        {"filter_strict_support", "filters", "strict support iff a ray in x has zero probability", 1,
         filter_strict_support},
        {"filter_narrowing", "filters", "d(pi_x rho) <= d(rho)", 1, filter_narrowing},
        {"read_outcome_normalises", "filters", "posterior certain of b; impossible b discarded", 1,
         read_outcome_normalises},
        {"transformation_duality", "transformations", "g(rho)(x) = rho(g^-1 x)", 1, transformation_duality},
        {"transformation_order", "transformations", "x<=y <=> g x <= g y", 1, transformation_order},
        {"filter_exchange", "transformations", "g pi_b = pi_gb g", 1, filter_exchange},
        {"transformation_linear", "transformations", "g is linear on states", 1, transformation_linear},
        {"group_closure", "transformations", "products and inverses stay unitary", 1, group_closure},
        {"transport_transitive", "transformations", "equal levels are related by some g", 1,
         transport_transitive},
        {"tensor_level_multiplicative", "composition", "d(x1 x x2) = d(x1) d(x2)", 1,
         tensor_level_multiplicative},
        {"tensor_completeness", "composition", "products of complete sets are complete", 1,
         tensor_completeness},
        {"tensor_filter_compatible", "composition", "pi_(x1 x x2) factors", 1, tensor_filter_compatible},
        {"tensor_probability_factorizes", "composition", "probabilities multiply", 1,
         tensor_probability_factorizes},
        {"tensor_transformation_compatible", "composition", "(g1 x g2) acts factorwise", 1,
         tensor_transformation_compatible},
    };
}

std::uint64_t name_hash(const std::string &s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h = (h ^ c) * 0x100000001b3ULL;
    }
    return h;
}

}  // namespace

const std::vector<Law> &law_catalog() {
    static const std::vector<Law> catalog = build_catalog();
    return catalog;
}

const Law &find_law(const std::string &name) {
    for (const Law &law : law_catalog()) {
        if (law.name == name) {
            return law;
        }
    }
    throw DomainError("unknown law '" + name + "'");
}

std::uint64_t trial_seed(std::uint64_t base, const std::string &law, Index d, int trial) {
    return derive_seed(base, {name_hash(law), static_cast<std::uint64_t>(d),
                              static_cast<std::uint64_t>(trial)});
}

int AxiomSuiteResult::violations() const {
    int n = 0;
    for (const LawTally &t : tallies) {
        n += t.violations;
    }
    return n;
}

AxiomSuiteResult run_axiom_suite(const std::vector<Index> &dims, int trials, std::uint64_t seed,
                                 const Tolerance &tol, const std::vector<std::string> &only) {
    AxiomSuiteResult result;
    for (const Law &law : law_catalog()) {
        if (!only.empty() && std::find(only.begin(), only.end(), law.name) == only.end()) {
            continue;
        }
        for (Index d : dims) {
            LawTally tally{law.name, law.module, d, 0, 0, d < law.min_dim, {}, {}};
            if (!tally.skipped) {
                for (int t = 0; t < trials; ++t) {
                    std::uint64_t s = trial_seed(seed, law.name, d, t);
                    LawOutcome outcome;
                    try {
                        outcome = law.check(d, s, tol);
                    } catch (const std::exception &e) {
                        outcome = fail(std::string("exception: ") + e.what());
                    }
                    ++tally.trials;
                    if (!outcome.passed) {
                        ++tally.violations;
                        if (tally.failing_seeds.size() < 5) {
                            tally.failing_seeds.push_back(s);
                        }
                        if (tally.first_failure.empty()) {
                            tally.first_failure = outcome.detail;
                        }
                    }
                }
            }
            result.tallies.push_back(std::move(tally));
        }
    }
    return result;
}

}  // namespace plausible
