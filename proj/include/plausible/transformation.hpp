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

#include "plausible/state.hpp"

namespace plausible {

/// A consistency-preserving relabeling of hypotheses, represented as a d x d unitary.
class Transformation {
   public:
    /// Throws DomainError unless `u` is unitary within 1e-12.
    explicit Transformation(Matrix u);

    static Transformation identity(Index d);

    Index ambient_dim() const { return u_.rows(); }
    const Matrix &matrix() const { return u_; }

    Transformation inverse() const;
    /// Apply `rhs` first, then `*this`.
    Transformation operator*(const Transformation &rhs) const;

   private:
    Matrix u_;
};

/// U rho U^dagger.
State act_on_state(const Transformation &g, const State &rho, const Tolerance &tol = {});

/// The image subspace U x.
Hypothesis act_on_hypothesis(const Transformation &g, const Hypothesis &x,
                             const Tolerance &tol = {});

/// A unitary carrying x onto y; throws DomainError when their levels differ.
Transformation transport(const Hypothesis &x, const Hypothesis &y, const Tolerance &tol = {});

/// Haar-random element of U(d).
Transformation haar_transformation(Index d, std::uint64_t seed);
Transformation haar_transformation(Index d, Rng &rng);

/// exp(K) with K a random antihermitian generator whose operator norm is uniform in (0, delta).
Transformation sample_near_identity(Index d, Real delta, std::uint64_t seed);
Transformation sample_near_identity(Index d, Real delta, Rng &rng);

/// Operator norm of the principal generator: largest |arg| over the eigenvalues of U.
Real distance_to_identity(const Transformation &g);

/// Swap of two coordinate directions.
Transformation coordinate_swap(Index d, Index i, Index j);

}  // namespace plausible
