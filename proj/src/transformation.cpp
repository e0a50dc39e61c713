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

#include "plausible/transformation.hpp"

#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

namespace plausible {

namespace {

constexpr Real kUnitaryTol = 1e-12;

void require_same_ambient(Index a, Index b, const char *op) {
    if (a != b) {
        throw DomainError(std::string(op) + ": ambient dimensions differ (" + std::to_string(a) +
                          " vs " + std::to_string(b) + ")");
    }
}

}  // namespace

Transformation::Transformation(Matrix u) : u_(std::move(u)) {
    if (u_.rows() < 1 || u_.rows() != u_.cols()) {
        throw DomainError("transformation must be square with dimension >= 1");
    }
    require_finite(u_, "transformation");
    Real defect = unitarity_defect(u_);
    if (defect > kUnitaryTol) {
        throw DomainError("transformation is not unitary (defect " + std::to_string(defect) + ")");
    }
}

Transformation Transformation::identity(Index d) { return Transformation(Matrix::Identity(d, d)); }

Transformation Transformation::inverse() const { return Transformation(u_.adjoint()); }

Transformation Transformation::operator*(const Transformation &rhs) const {
    require_same_ambient(ambient_dim(), rhs.ambient_dim(), "compose");
    return Transformation(u_ * rhs.u_);
}

State act_on_state(const Transformation &g, const State &rho, const Tolerance &tol) {
    require_same_ambient(g.ambient_dim(), rho.ambient_dim(), "act_on_state");
    return State(g.matrix() * rho.op() * g.matrix().adjoint(), tol);
}

Hypothesis act_on_hypothesis(const Transformation &g, const Hypothesis &x, const Tolerance &tol) {
    require_same_ambient(g.ambient_dim(), x.ambient_dim(), "act_on_hypothesis");
    if (x.is_absurd()) {
        return x;
    }
    return Hypothesis(orthonormalize(g.matrix() * x.basis(), tol), tol);
}

Transformation transport(const Hypothesis &x, const Hypothesis &y, const Tolerance &tol) {
    require_same_ambient(x.ambient_dim(), y.ambient_dim(), "transport");
    if (x.level() != y.level()) {
        throw DomainError("transport needs equal coarse-graining levels (" +
                          std::to_string(x.level()) + " vs " + std::to_string(y.level()) + ")");
    }
    const Index d = x.ambient_dim();
    Matrix from(d, d);
    Matrix to(d, d);
    from << x.basis(), negation(x, tol).basis();
    to << y.basis(), negation(y, tol).basis();
    Matrix u = to * from.adjoint();
    // Re-orthonormalize to strip accumulated rounding.
    return Transformation(orthonormalize(u, tol));
}

Transformation haar_transformation(Index d, Rng &rng) {
    return Transformation(sample_haar_unitary(d, rng));
}

Transformation haar_transformation(Index d, std::uint64_t seed) {
    Rng rng(seed);
    return haar_transformation(d, rng);
}

Transformation sample_near_identity(Index d, Real delta, Rng &rng) {
    if (!(delta > 0.0)) {
        throw DomainError("near-identity sampling needs delta > 0");
    }
    if (d < 1) {
        throw DomainError("near-identity sampling needs d >= 1");
    }
    Matrix g = complex_gaussian(d, d, rng);
    Matrix h = (g + g.adjoint()) / 2.0;
    Real norm = operator_norm(h);
    if (norm == 0.0) {
        h = Matrix::Identity(d, d);
        norm = 1.0;
    }
    Real u = 0.0;
    while (u == 0.0) {
        u = rng.uniform();
    }
    h *= (delta * u) / norm;
    return Transformation(unitary_exponential(h));
}

Transformation sample_near_identity(Index d, Real delta, std::uint64_t seed) {
    Rng rng(seed);
    return sample_near_identity(d, delta, rng);
}

Real distance_to_identity(const Transformation &g) {
    Eigen::ComplexEigenSolver<Matrix> es(g.matrix());
    Real worst = 0.0;
    for (Index i = 0; i < es.eigenvalues().size(); ++i) {
        worst = std::max(worst, std::abs(std::arg(es.eigenvalues()(i))));
    }
    return worst;
}

Transformation coordinate_swap(Index d, Index i, Index j) {
    if (i < 0 || j < 0 || i >= d || j >= d) {
        throw DomainError("swap index out of range");
    }
    Matrix p = Matrix::Identity(d, d);
    p.row(i).swap(p.row(j));
    return Transformation(std::move(p));
}

}  // namespace plausible
