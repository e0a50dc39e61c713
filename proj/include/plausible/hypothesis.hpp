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
#include <vector>

#include "plausible/numeric.hpp"

namespace plausible {

/// A hypothesis about a system with maximum evidence `d`: a subspace of C^d.
///
/// Stored as an orthonormal basis. Zero columns is the absurd hypothesis, `d` columns the
/// maximal one. The projector is derived on demand.
class Hypothesis {
   public:
    /// Takes ownership of an orthonormal basis; throws DomainError if it is not one.
    explicit Hypothesis(Matrix basis, const Tolerance &tol = {});

    /// Orthonormalizes the columns of `vectors` and spans them.
    static Hypothesis span(const MatrixCRef &vectors, const Tolerance &tol = {});
    static Hypothesis absurd(Index d);
    static Hypothesis full(Index d);
    /// span{e_i : i in indices}.
    static Hypothesis coordinate(Index d, const std::vector<Index> &indices);

    Index ambient_dim() const { return basis_.rows(); }
    Index level() const { return basis_.cols(); }
    bool is_absurd() const { return basis_.cols() == 0; }
    const Matrix &basis() const { return basis_; }
    Matrix projector() const { return basis_ * basis_.adjoint(); }

   private:
    Hypothesis() = default;
    Matrix basis_;
};

/// Mutually contradicting refinements of a parent hypothesis.
struct RefinementSet {
    Hypothesis parent;
    std::vector<Hypothesis> members;
    bool complete = false;
};

/// Number of alternative most-refined outcomes: the subspace dimension.
inline Index coarse_level(const Hypothesis &x) { return x.level(); }

/// x implies y: every basis vector of x lies in y.
bool implies(const Hypothesis &x, const Hypothesis &y, const Tolerance &tol = {});

/// P_x P_y = 0.
bool contradicts(const Hypothesis &x, const Hypothesis &y, const Tolerance &tol = {});

/// Same subspace: equal level and all principal angles below tolerance.
bool same_hypothesis(const Hypothesis &x, const Hypothesis &y, const Tolerance &tol = {});

/// Projectors commute, i.e. some complete refinement set of I_d refines both.
bool jointly_decidable(const Hypothesis &x, const Hypothesis &y, const Tolerance &tol = {});

/// The hypothesis "a, but none of bs": range of P_a - sum P_b.
/// Throws DomainError unless every b implies a and the bs pairwise contradict.
Hypothesis relative_complement(const Hypothesis &a, const std::vector<Hypothesis> &bs,
                               const Tolerance &tol = {});

/// Orthocomplement within the full space.
Hypothesis negation(const Hypothesis &a, const Tolerance &tol = {});

/// Builds a refinement set, validating membership and pairwise contradiction and setting
/// `complete` from the projector sum.
RefinementSet make_refinement_set(Hypothesis parent, std::vector<Hypothesis> members,
                                  const Tolerance &tol = {});

/// Recomputes completeness: sum of member projectors equals the parent projector.
bool is_complete_refinement_set(const RefinementSet &rs, const Tolerance &tol = {});

/// Splits `a` into its individual basis directions. Throws DomainError for the absurd hypothesis.
RefinementSet refine_fully(const Hypothesis &a, const Tolerance &tol = {});

/// First k columns of a Haar unitary.
Hypothesis random_hypothesis(Index d, Index k, std::uint64_t seed);
Hypothesis random_hypothesis(Index d, Index k, Rng &rng);

}  // namespace plausible
