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

#include <json.hpp>

#include "plausible/continuity.hpp"
#include "plausible/dimension_audit.hpp"
#include "plausible/filter.hpp"

namespace plausible {

using Json = nlohmann::json;

/// {"rows", "cols", "data": [[re, im], ...]} in row-major order.
Json matrix_to_json(const Matrix &m);
Matrix matrix_from_json(const Json &j);

Json to_json(const Hypothesis &h);
Hypothesis hypothesis_from_json(const Json &j, const Tolerance &tol = {});

Json to_json(const State &rho);
State state_from_json(const Json &j, const Tolerance &tol = {});

Json to_json(const Transformation &g);
Transformation transformation_from_json(const Json &j);

Json to_json(const PreparationPlan &plan);
/// Rebuilds refinement sets against the full space of the plan; completeness is re-derived.
PreparationPlan plan_from_json(const Json &j, const Tolerance &tol = {});

Json to_json(const Tolerance &tol);
/// Overrides only the keys present in `j`.
Tolerance tolerance_from_json(const Json &j, Tolerance base = {});

Json to_json(const DimensionProfile &profile);
Json to_json(const ConstraintReport &report);
Json to_json(const AppendixReport &report);

}  // namespace plausible
