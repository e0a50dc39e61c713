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

#include "plausible/transformation.hpp"

namespace plausible {

// Kronecker convention throughout: the first factor carries the slow (outer) index, so
// e_i (x) f_j sits at position i * d2 + j.

/// Hypothesis "x1 about system 1 and x2 about system 2" on C^(d1 d2).
Hypothesis tensor_hypothesis(const Hypothesis &x1, const Hypothesis &x2);

State tensor_state(const State &rho1, const State &rho2, const Tolerance &tol = {});

Transformation tensor_transformation(const Transformation &g1, const Transformation &g2);

/// Raw Kronecker product of two dense matrices.
Matrix kron(const MatrixCRef &a, const MatrixCRef &b);

}  // namespace plausible
