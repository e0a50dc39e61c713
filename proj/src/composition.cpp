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

#include "plausible/composition.hpp"

#include <unsupported/Eigen/KroneckerProduct>

namespace plausible {

Matrix kron(const MatrixCRef &a, const MatrixCRef &b) { return Eigen::kroneckerProduct(a, b); }

Hypothesis tensor_hypothesis(const Hypothesis &x1, const Hypothesis &x2) {
    const Index d = x1.ambient_dim() * x2.ambient_dim();
    if (x1.is_absurd() || x2.is_absurd()) {
        return Hypothesis::absurd(d);
    }
    return Hypothesis(kron(x1.basis(), x2.basis()));
}

State tensor_state(const State &rho1, const State &rho2, const Tolerance &tol) {
    return State(kron(rho1.op(), rho2.op()), tol);
}

Transformation tensor_transformation(const Transformation &g1, const Transformation &g2) {
    return Transformation(kron(g1.matrix(), g2.matrix()));
}

}  // namespace plausible
