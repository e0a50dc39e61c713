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

#include "plausible/state.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace plausible {

State::State(Matrix op, const Tolerance &tol) {
    if (op.rows() < 1 || op.rows() != op.cols()) {
        throw DomainError("state operator must be square with dimension >= 1");
    }
    require_finite(op, "state operator");
    if (hermiticity_defect(op) > tol.prob_abs) {
        throw DomainError("state operator is not Hermitian");
    }
    op_ = (op + op.adjoint()) / 2.0;
    EigenDecomposition e = hermitian_eig(op_, tol);
    Real lo = e.values(e.values.size() - 1);
    if (lo < -tol.prob_abs) {
        throw DomainError("state operator has negative eigenvalue " + std::to_string(lo));
    }
    if (trace() > 1.0 + tol.prob_abs) {
        throw DomainError("state trace " + std::to_string(trace()) + " exceeds 1");
    }
}

State State::zero(Index d) {
    if (d < 1) {
        throw DomainError("state needs ambient dimension >= 1");
    }
    State s;
    s.op_ = Matrix::Zero(d, d);
    return s;
}

namespace {

void require_same_ambient(Index a, Index b, const char *op) {
    if (a != b) {
        throw DomainError(std::string(op) + ": ambient dimensions differ (" + std::to_string(a) +
                          " vs " + std::to_string(b) + ")");
    }
}

}  // namespace

Real probability(const State &rho, const Hypothesis &x) {
    require_same_ambient(rho.ambient_dim(), x.ambient_dim(), "probability");
    if (x.is_absurd()) {
        return 0.0;
    }
    const Matrix &b = x.basis();
    Real p = (b.adjoint() * rho.op() * b).trace().real();
    return std::clamp(p, 0.0, 1.0);
}

State mix(const State &rho, const State &sigma, Real t, const Tolerance &tol) {
    require_same_ambient(rho.ambient_dim(), sigma.ambient_dim(), "mix");
    if (!(t >= 0.0 && t <= 1.0)) {
        throw DomainError("mixing weight must lie in [0, 1]");
    }
    return State(t * rho.op() + (1.0 - t) * sigma.op(), tol);
}

Real rescale_bound(const State &rho) {
    Real tr = rho.trace();
    return tr > 0.0 ? 1.0 / tr : std::numeric_limits<Real>::infinity();
}

State rescale(const State &rho, Real s, const Tolerance &tol) {
    if (!(s >= 0.0)) {
        throw DomainError("rescale factor must be non-negative");
    }
    Real bound = rescale_bound(rho);
    if (s > bound * (1.0 + 1e-12)) {
        throw InadmissibleRescale(s, bound);
    }
    Matrix op = s * rho.op();
    Real tr = op.trace().real();
    if (tr > 1.0) {
        op /= tr;  // rounding at the exact bound
    }
    return State(std::move(op), tol);
}

bool leq(const State &rho, const State &sigma, const Tolerance &tol) {
    require_same_ambient(rho.ambient_dim(), sigma.ambient_dim(), "leq");
    EigenDecomposition e = hermitian_eig(sigma.op() - rho.op(), tol);
    return e.values(e.values.size() - 1) >= -tol.prob_abs;
}

Real support_threshold(const EigenDecomposition &e, const Tolerance &tol) {
    Real top = e.values.size() == 0 ? 0.0 : e.values(0);
    return tol.rank_rel * std::max(top, 1.0);
}

Hypothesis support(const State &rho, const Tolerance &tol) {
    EigenDecomposition e = hermitian_eig(rho.op(), tol);
    Real cut = support_threshold(e, tol);
    Index keep = static_cast<Index>((e.values.array() > cut).count());
    if (keep == 0) {
        return Hypothesis::absurd(rho.ambient_dim());
    }
    return Hypothesis(e.vectors.leftCols(keep), tol);
}

Index evidence_rank(const State &rho, const Tolerance &tol) { return support(rho, tol).level(); }

State ignorance_state(Index d) {
    if (d < 1) {
        throw DomainError("ignorance state needs d >= 1");
    }
    return State(Matrix::Identity(d, d) / static_cast<Real>(d));
}

State random_state(Index d, Index rank, Rng &rng) {
    if (d < 1 || rank < 1 || rank > d) {
        throw DomainError("random_state needs 1 <= rank <= d");
    }
    Matrix g = complex_gaussian(d, rank, rng);
    Matrix a = g * g.adjoint();
    a /= a.trace().real();
    Real weight = 1.0 - rng.uniform();  // (0, 1]
    a *= weight;
    return State(std::move(a));
}

State random_state(Index d, Index rank, std::uint64_t seed) {
    Rng rng(seed);
    return random_state(d, rank, rng);
}

State pure_state(const Vector &v, Real weight) {
    Vector u = v.normalized();
    return State(weight * u * u.adjoint());
}

Real frobenius_distance(const State &a, const State &b) {
    require_same_ambient(a.ambient_dim(), b.ambient_dim(), "frobenius_distance");
    return (a.op() - b.op()).norm();
}

}  // namespace plausible
