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

// Reference checks that follow definitions literally instead of the fast algebraic route.
// They back the law suite and the tests; nothing in the core library depends on them.

#include "plausible/hypothesis.hpp"

namespace plausible::oracle {

/// Largest subspace contained in both x and y, from the null space of (1 - P_y) B_x.
Hypothesis intersection(const Hypothesis &x, const Hypothesis &y, Real sine_tol = 1e-6);

/// Joint decidability by the definition: build the finest refinement set generated by
/// x, not-x, y, not-y and search every index subset for complete refinements of x and y.
bool jointly_decidable_by_definition(const Hypothesis &x, const Hypothesis &y,
                                     const Tolerance &tol = {});

/// Rank of a set of vectors from the eigenvalues of its Gram matrix.
Index gram_rank(const MatrixCRef &vectors, Real rel_tol = 1e-10);

}  // namespace plausible::oracle
