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

#include "plausible/filter.hpp"

#include <algorithm>
#include <string>

namespace plausible {

namespace {

void require_same_ambient(Index a, Index b, const char *op) {
    if (a != b) {
        throw DomainError(std::string(op) + ": ambient dimensions differ (" + std::to_string(a) +
                          " vs " + std::to_string(b) + ")");
    }
}

Matrix congruence(const Hypothesis &b, const Matrix &op) {
    if (b.is_absurd()) {
        return Matrix::Zero(op.rows(), op.cols());
    }
    const Matrix &basis = b.basis();
    return basis * (basis.adjoint() * op * basis) * basis.adjoint();
}

}  // namespace

State apply_filter(const Hypothesis &b, const State &rho, const Tolerance &tol) {
    require_same_ambient(b.ambient_dim(), rho.ambient_dim(), "apply_filter");
    return State(congruence(b, rho.op()), tol);
}

State read_outcome(const Hypothesis &b, const State &rho, const Tolerance &tol) {
    require_same_ambient(b.ambient_dim(), rho.ambient_dim(), "read_outcome");
    Real p = probability(rho, b);
    if (!(p > tol.prob_abs)) {
        throw DiscardedError("hypothesis tested false with certainty; system discarded");
    }
    Matrix op = congruence(b, rho.op()) / p;
    Real tr = op.trace().real();
    if (tr > 1.0) {
        op /= tr;
    }
    return State(std::move(op), tol);
}

State apply_channel(const RefinementSet &rs, const std::vector<Real> &lambdas, const State &rho,
                    const Tolerance &tol) {
    require_same_ambient(rs.parent.ambient_dim(), rho.ambient_dim(), "apply_channel");
    if (lambdas.size() != rs.members.size()) {
        throw DomainError("apply_channel: " + std::to_string(lambdas.size()) +
                          " keep factors for " + std::to_string(rs.members.size()) + " members");
    }
    if (!rs.complete) {
        throw DomainError("apply_channel needs a complete refinement set");
    }
    Matrix out = Matrix::Zero(rho.ambient_dim(), rho.ambient_dim());
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
        Real l = lambdas[i];
        if (!(l >= 0.0 && l <= 1.0)) {
            throw DomainError("keep factor " + std::to_string(l) + " outside [0, 1]");
        }
        if (l > 0.0) {
            out += l * congruence(rs.members[i], rho.op());
        }
    }
    return State(std::move(out), tol);
}

PreparationPlan synthesize_preparation(const State &target, const Tolerance &tol) {
    const Index d = target.ambient_dim();
    EigenDecomposition e = hermitian_eig(target.op(), tol);
    Real top = e.values(0);
    if (!(top > tol.prob_abs)) {
        throw DomainError("cannot synthesize a preparation for the zero state");
    }
    std::vector<Hypothesis> members;
    std::vector<Real> lambdas;
    for (Index i = 0; i < d; ++i) {
        members.emplace_back(Matrix(e.vectors.col(i)), tol);
        lambdas.push_back(std::clamp(e.values(i) / top, 0.0, 1.0));
    }
    PreparationStep step{make_refinement_set(Hypothesis::full(d), std::move(members), tol),
                         std::move(lambdas), std::nullopt};
    if (!step.refinements.complete) {
        throw DomainError("eigenbasis did not form a complete refinement set");
    }
    PreparationPlan plan;
    plan.ambient_dim = d;
    plan.steps.push_back(std::move(step));
    plan.final_rescale = static_cast<Real>(d) * top;
    return plan;
}

State run_preparation(const PreparationPlan &plan, const Tolerance &tol) {
    State rho = ignorance_state(plan.ambient_dim);
    for (std::size_t s = 0; s < plan.steps.size(); ++s) {
        const PreparationStep &step = plan.steps[s];
        if (step.refinements.parent.level() != plan.ambient_dim) {
            throw DomainError("preparation step " + std::to_string(s) +
                              " does not refine the full space");
        }
        rho = apply_channel(step.refinements, step.keep_factors, rho, tol);
        if (step.transform) {
            rho = act_on_state(*step.transform, rho, tol);
        }
    }
    return rescale(rho, plan.final_rescale, tol);
}

}  // namespace plausible
