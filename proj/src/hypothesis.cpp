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

#include "plausible/hypothesis.hpp"

#include <string>

namespace plausible {

namespace {

void require_same_ambient(const Hypothesis &x, const Hypothesis &y, const char *op) {
    if (x.ambient_dim() != y.ambient_dim()) {
        throw DomainError(std::string(op) + ": ambient dimensions differ (" +
                          std::to_string(x.ambient_dim()) + " vs " +
                          std::to_string(y.ambient_dim()) + ")");
    }
}

}  // namespace

Hypothesis::Hypothesis(Matrix basis, const Tolerance &tol) : basis_(std::move(basis)) {
    if (basis_.rows() < 1) {
        throw DomainError("hypothesis needs ambient dimension >= 1");
    }
    if (basis_.cols() > basis_.rows()) {
        throw DomainError("hypothesis basis has more columns than the ambient dimension");
    }
    require_finite(basis_, "hypothesis basis");
    if (basis_.cols() > 0) {
        Matrix gram = basis_.adjoint() * basis_;
        Real defect = (gram - Matrix::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff();
        if (defect > tol.subspace_angle) {
            throw DomainError("hypothesis basis is not orthonormal (defect " +
                              std::to_string(defect) + ")");
        }
    }
}

Hypothesis Hypothesis::span(const MatrixCRef &vectors, const Tolerance &tol) {
    Hypothesis h;
    if (vectors.rows() < 1) {
        throw DomainError("hypothesis needs ambient dimension >= 1");
    }
    h.basis_ = orthonormalize(vectors, tol);
    return h;
}

Hypothesis Hypothesis::absurd(Index d) {
    if (d < 1) {
        throw DomainError("hypothesis needs ambient dimension >= 1");
    }
    Hypothesis h;
    h.basis_ = Matrix(d, 0);
    return h;
}

Hypothesis Hypothesis::full(Index d) {
    if (d < 1) {
        throw DomainError("hypothesis needs ambient dimension >= 1");
    }
    Hypothesis h;
    h.basis_ = Matrix::Identity(d, d);
    return h;
}

Hypothesis Hypothesis::coordinate(Index d, const std::vector<Index> &indices) {
    Matrix b = Matrix::Zero(d, static_cast<Index>(indices.size()));
    for (std::size_t j = 0; j < indices.size(); ++j) {
        if (indices[j] < 0 || indices[j] >= d) {
            throw DomainError("coordinate index out of range");
        }
        b(indices[j], static_cast<Index>(j)) = 1.0;
    }
    return Hypothesis(std::move(b));
}

bool implies(const Hypothesis &x, const Hypothesis &y, const Tolerance &tol) {
    require_same_ambient(x, y, "implies");
    if (x.is_absurd()) {
        return true;
    }
    if (x.level() > y.level()) {
        return false;
    }
    const Matrix &bx = x.basis();
    const Matrix &by = y.basis();
    Matrix outside = bx - by * (by.adjoint() * bx);
    return outside.colwise().norm().maxCoeff() <= tol.subspace_angle;
}

bool contradicts(const Hypothesis &x, const Hypothesis &y, const Tolerance &tol) {
    require_same_ambient(x, y, "contradicts");
    if (x.is_absurd() || y.is_absurd()) {
        return true;
    }
    return operator_norm(y.basis().adjoint() * x.basis()) <= tol.subspace_angle;
}

bool same_hypothesis(const Hypothesis &x, const Hypothesis &y, const Tolerance &tol) {
    require_same_ambient(x, y, "same_hypothesis");
    return same_span(x.basis(), y.basis(), tol);
}

bool jointly_decidable(const Hypothesis &x, const Hypothesis &y, const Tolerance &tol) {
    require_same_ambient(x, y, "jointly_decidable");
    if (x.is_absurd() || y.is_absurd()) {
        return true;
    }
    Matrix px = x.projector();
    Matrix py = y.projector();
    return operator_norm(px * py - py * px) <= tol.subspace_angle;
}

Hypothesis relative_complement(const Hypothesis &a, const std::vector<Hypothesis> &bs,
                               const Tolerance &tol) {
    for (std::size_t i = 0; i < bs.size(); ++i) {
        require_same_ambient(a, bs[i], "relative_complement");
        if (!implies(bs[i], a, tol)) {
            throw DomainError("relative_complement: member " + std::to_string(i) +
                              " does not imply the parent");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (!contradicts(bs[i], bs[j], tol)) {
                throw DomainError("relative_complement: members " + std::to_string(j) + " and " +
                                  std::to_string(i) + " do not contradict");
            }
        }
    }
    Matrix rest = a.projector();
    for (const Hypothesis &b : bs) {
        rest -= b.projector();
    }
    // `rest` is a projector up to rounding, so its spectrum clusters at 0 and 1.
    EigenDecomposition e = hermitian_eig(rest, tol);
    Index keep = static_cast<Index>((e.values.array() > 0.5).count());
    if (keep == 0) {
        return Hypothesis::absurd(a.ambient_dim());
    }
    return Hypothesis(e.vectors.leftCols(keep), tol);
}

Hypothesis negation(const Hypothesis &a, const Tolerance &tol) {
    return relative_complement(Hypothesis::full(a.ambient_dim()), {a}, tol);
}

bool is_complete_refinement_set(const RefinementSet &rs, const Tolerance &tol) {
    Matrix sum = Matrix::Zero(rs.parent.ambient_dim(), rs.parent.ambient_dim());
    for (const Hypothesis &m : rs.members) {
        sum += m.projector();
    }
    return operator_norm(sum - rs.parent.projector()) <= tol.subspace_angle;
}

RefinementSet make_refinement_set(Hypothesis parent, std::vector<Hypothesis> members,
                                  const Tolerance &tol) {
    for (std::size_t i = 0; i < members.size(); ++i) {
        require_same_ambient(parent, members[i], "make_refinement_set");
        if (!implies(members[i], parent, tol)) {
            throw DomainError("refinement set member " + std::to_string(i) +
                              " does not imply the parent");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (!contradicts(members[i], members[j], tol)) {
                throw DomainError("refinement set members " + std::to_string(j) + " and " +
                                  std::to_string(i) + " do not contradict");
            }
        }
    }
    RefinementSet rs{std::move(parent), std::move(members), false};
    rs.complete = is_complete_refinement_set(rs, tol);
    return rs;
}

RefinementSet refine_fully(const Hypothesis &a, const Tolerance &tol) {
    if (a.is_absurd()) {
        throw DomainError("the absurd hypothesis has no refinements");
    }
    std::vector<Hypothesis> members;
    members.reserve(static_cast<std::size_t>(a.level()));
    for (Index j = 0; j < a.level(); ++j) {
        members.emplace_back(Matrix(a.basis().col(j)), tol);
    }
    return make_refinement_set(a, std::move(members), tol);
}

Hypothesis random_hypothesis(Index d, Index k, Rng &rng) {
    if (k < 0 || k > d) {
        throw DomainError("random_hypothesis needs 0 <= k <= d");
    }
    Matrix u = sample_haar_unitary(d, rng);
    return Hypothesis(u.leftCols(k));
}

Hypothesis random_hypothesis(Index d, Index k, std::uint64_t seed) {
    Rng rng(seed);
    return random_hypothesis(d, k, rng);
}

}  // namespace plausible
