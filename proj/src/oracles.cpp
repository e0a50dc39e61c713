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

#include "plausible/oracles.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace plausible::oracle {

Hypothesis intersection(const Hypothesis &x, const Hypothesis &y, Real sine_tol) {
    const Index d = x.ambient_dim();
    if (x.is_absurd() || y.is_absurd()) {
        return Hypothesis::absurd(d);
    }
    Matrix outside = x.basis() - y.basis() * (y.basis().adjoint() * x.basis());
    Eigen::JacobiSVD<Matrix> svd(outside, Eigen::ComputeFullV);
    const RealVector &s = svd.singularValues();
    const Index k = x.level();
    std::vector<Index> null_cols;
    for (Index i = 0; i < k; ++i) {
        Real sv = i < s.size() ? s(i) : 0.0;
        if (sv <= sine_tol) {
            null_cols.push_back(i);
        }
    }
    if (null_cols.empty()) {
        return Hypothesis::absurd(d);
    }
    Matrix v(k, static_cast<Index>(null_cols.size()));
    for (std::size_t j = 0; j < null_cols.size(); ++j) {
        v.col(static_cast<Index>(j)) = svd.matrixV().col(null_cols[j]);
    }
    return Hypothesis::span(x.basis() * v);
}

bool jointly_decidable_by_definition(const Hypothesis &x, const Hypothesis &y,
                                     const Tolerance &tol) {
    const Index d = x.ambient_dim();
    const Hypothesis not_x = negation(x, tol);
    const Hypothesis not_y = negation(y, tol);
    std::vector<Hypothesis> atoms{intersection(x, y), intersection(x, not_y),
                                  intersection(not_x, y), intersection(not_x, not_y)};

    // Finest candidate: every atom split into rays.
    std::vector<Hypothesis> rays;
    for (const Hypothesis &a : atoms) {
        for (Index j = 0; j < a.level(); ++j) {
            rays.emplace_back(Matrix(a.basis().col(j)));
        }
    }
    Matrix sum = Matrix::Zero(d, d);
    for (const Hypothesis &r : rays) {
        sum += r.projector();
    }
    if ((sum - Matrix::Identity(d, d)).norm() > 1e-6) {
        return false;
    }

    auto some_subset_refines = [&](const Hypothesis &target) {
        const std::size_t n = rays.size();
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            Matrix acc = Matrix::Zero(d, d);
            bool inside = true;
            for (std::size_t i = 0; i < n && inside; ++i) {
                if (mask & (std::uint64_t{1} << i)) {
                    inside = implies(rays[i], target, tol);
                    acc += rays[i].projector();
                }
            }
            if (inside && (acc - target.projector()).norm() <= 1e-6) {
                return true;
            }
        }
        return false;
    };
    return some_subset_refines(x) && some_subset_refines(y);
}

Index gram_rank(const MatrixCRef &vectors, Real rel_tol) {
    if (vectors.cols() == 0) {
        return 0;
    }
    Matrix gram = vectors.adjoint() * vectors;
    Eigen::SelfAdjointEigenSolver<Matrix> es(gram);
    const RealVector &ev = es.eigenvalues();
    Real top = ev.maxCoeff();
    if (top <= 0.0) {
        return 0;
    }
    Index r = 0;
    for (Index i = 0; i < ev.size(); ++i) {
        // Gram eigenvalues are squared singular values.
        if (std::sqrt(std::max(ev(i), 0.0)) > rel_tol * std::sqrt(top)) {
            ++r;
        }
    }
    return r;
}

}  // namespace plausible::oracle
