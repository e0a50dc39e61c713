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

#include "plausible/hypothesis.hpp"

namespace plausible {

/// A non-normalised probability distribution over the hypotheses of C^d.
///
/// Represented by a Hermitian positive-semidefinite operator with trace at most one;
/// the probability of x is tr(rho P_x).
class State {
   public:
    /// Validates that `op` is positive semidefinite with trace <= 1, within `prob_abs`.
    explicit State(Matrix op, const Tolerance &tol = {});

    static State zero(Index d);

    Index ambient_dim() const { return op_.rows(); }
    const Matrix &op() const { return op_; }
    Real trace() const { return op_.trace().real(); }

   private:
    State() = default;
    Matrix op_;
};

/// tr(rho P_x), clamped to [0, 1]; exactly 0 for the absurd hypothesis.
Real probability(const State &rho, const Hypothesis &x);

/// t rho + (1 - t) sigma for t in [0, 1].
State mix(const State &rho, const State &sigma, Real t, const Tolerance &tol = {});

/// Largest s with s rho still a valid state: 1 / rho(I_d), infinite for the zero state.
Real rescale_bound(const State &rho);

/// s rho; throws InadmissibleRescale when s exceeds rescale_bound(rho).
State rescale(const State &rho, Real s, const Tolerance &tol = {});

/// rho(x) <= sigma(x) for every x, i.e. sigma - rho is positive semidefinite.
bool leq(const State &rho, const State &sigma, const Tolerance &tol = {});

/// Eigenvalue cut used for support and evidence rank.
///
/// Relative to the largest eigenvalue, but never below `rank_rel` in absolute probability
/// units, so rounding residue of an exactly-zero state does not acquire a support.
Real support_threshold(const EigenDecomposition &e, const Tolerance &tol = {});

/// Smallest hypothesis whose filter leaves rho unchanged: the range of the operator.
Hypothesis support(const State &rho, const Tolerance &tol = {});

/// Level of the support.
Index evidence_rank(const State &rho, const Tolerance &tol = {});

/// identity / d: every hypothesis x gets d(x) / d.
State ignorance_state(Index d);

/// G G^dagger scaled to a trace drawn uniformly from (0, 1], with G a d x rank Gaussian matrix.
State random_state(Index d, Index rank, std::uint64_t seed);
State random_state(Index d, Index rank, Rng &rng);

/// Pure direction with the given trace.
State pure_state(const Vector &v, Real weight = 1.0);

Real frobenius_distance(const State &a, const State &b);

}  // namespace plausible
