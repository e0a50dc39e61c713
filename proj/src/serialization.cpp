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

#include "plausible/serialization.hpp"

namespace plausible {

namespace {

Index checked_dim(const Json &j, const char *key) {
    if (!j.contains(key) || !j.at(key).is_number_integer() || j.at(key).get<Index>() < 0) {
        throw DomainError(std::string("missing or invalid '") + key + "'");
    }
    return j.at(key).get<Index>();
}

}  // namespace

Json matrix_to_json(const Matrix &m) {
    Json data = Json::array();
    for (Index r = 0; r < m.rows(); ++r) {
        for (Index c = 0; c < m.cols(); ++c) {
            data.push_back({m(r, c).real(), m(r, c).imag()});
        }
    }
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", data}};
}

Matrix matrix_from_json(const Json &j) {
    Index rows = checked_dim(j, "rows");
    Index cols = checked_dim(j, "cols");
    const Json &data = j.at("data");
    if (!data.is_array() || static_cast<Index>(data.size()) != rows * cols) {
        throw DomainError("matrix data has the wrong number of entries");
    }
    Matrix m(rows, cols);
    for (Index r = 0; r < rows; ++r) {
        for (Index c = 0; c < cols; ++c) {
            const Json &e = data.at(static_cast<std::size_t>(r * cols + c));
            if (e.is_number()) {
                m(r, c) = Complex(e.get<Real>(), 0.0);
            } else {
                m(r, c) = Complex(e.at(0).get<Real>(), e.at(1).get<Real>());
            }
        }
    }
    require_finite(m, "matrix");
    return m;
}

Json to_json(const Hypothesis &h) {
    return {{"ambient_dim", h.ambient_dim()}, {"level", h.level()}, {"basis", matrix_to_json(h.basis())}};
}

Hypothesis hypothesis_from_json(const Json &j, const Tolerance &tol) {
    Matrix basis = matrix_from_json(j.at("basis"));
    if (j.contains("ambient_dim") && checked_dim(j, "ambient_dim") != basis.rows()) {
        throw DomainError("hypothesis basis does not match ambient_dim");
    }
    return Hypothesis::span(basis, tol);
}

Json to_json(const State &rho) {
    return {{"ambient_dim", rho.ambient_dim()}, {"operator", matrix_to_json(rho.op())}};
}

State state_from_json(const Json &j, const Tolerance &tol) {
    Matrix op = matrix_from_json(j.at("operator"));
    if (op.rows() != op.cols()) {
        throw DomainError("state operator must be square");
    }
    return State(op, tol);
}

Json to_json(const Transformation &g) {
    return {{"ambient_dim", g.ambient_dim()}, {"matrix", matrix_to_json(g.matrix())}};
}

Transformation transformation_from_json(const Json &j) {
    return Transformation(matrix_from_json(j.at("matrix")));
}

Json to_json(const PreparationPlan &plan) {
    Json steps = Json::array();
    for (const PreparationStep &s : plan.steps) {
        Json refinements = Json::array();
        for (const Hypothesis &h : s.refinements.members) {
            refinements.push_back(to_json(h));
        }
        Json step = {{"refinements", refinements}, {"lambdas", s.keep_factors}};
        if (s.transform) {
            step["transform"] = to_json(*s.transform);
        }
        steps.push_back(step);
    }
    return {{"ambient_dim", plan.ambient_dim}, {"steps", steps}, {"final_rescale", plan.final_rescale}};
}

PreparationPlan plan_from_json(const Json &j, const Tolerance &tol) {
    PreparationPlan plan;
    plan.ambient_dim = checked_dim(j, "ambient_dim");
    if (plan.ambient_dim < 1) {
        throw DomainError("plan ambient_dim must be at least 1");
    }
    plan.final_rescale = j.value("final_rescale", 1.0);
    for (const Json &s : j.value("steps", Json::array())) {
        std::vector<Hypothesis> members;
        for (const Json &h : s.at("refinements")) {
            members.push_back(hypothesis_from_json(h, tol));
        }
        PreparationStep step{make_refinement_set(Hypothesis::full(plan.ambient_dim), members, tol),
                             s.at("lambdas").get<std::vector<Real>>(),
                             std::nullopt};
        if (s.contains("transform")) {
            step.transform = transformation_from_json(s.at("transform"));
        }
        plan.steps.push_back(std::move(step));
    }
    return plan;
}

Json to_json(const Tolerance &tol) {
    return {{"rank_rel", tol.rank_rel}, {"subspace_angle", tol.subspace_angle}, {"prob_abs", tol.prob_abs}};
}

Tolerance tolerance_from_json(const Json &j, Tolerance base) {
    base.rank_rel = j.value("rank_rel", base.rank_rel);
    base.subspace_angle = j.value("subspace_angle", base.subspace_angle);
    base.prob_abs = j.value("prob_abs", base.prob_abs);
    base.validate();
    return base;
}

Json to_json(const DimensionProfile &profile) {
    Json params = {{"mu", profile.params.mu}, {"g1", profile.params.g1}, {"g2", profile.params.g2}};
    params["nu"] = profile.params.nu ? Json(*profile.params.nu) : Json(nullptr);
    return {{"name", profile.name},
            {"P", profile.P.to_string()},
            {"G", profile.G.to_string()},
            {"params", params},
            {"label", to_string(profile.label)},
            {"structure_group", profile.structure_group}};
}

Json to_json(const ConstraintReport &report) {
    Json tables = Json::array();
    for (const ConstraintTable &t : report.constraints) {
        Json residuals = Json::array();
        for (const Residual &r : t.residuals) {
            residuals.push_back({{"d", r.d}, {"detail", r.detail}, {"value", r.value}});
        }
        tables.push_back({{"name", t.name},
                          {"requirement", t.requirement ? Json(to_string(*t.requirement)) : Json(nullptr)},
                          {"zero", t.zero()},
                          {"residuals", residuals}});
    }
    return {{"profile", to_json(report.profile)}, {"satisfied", report.satisfied}, {"constraints", tables}};
}

Json to_json(const AppendixReport &report) {
    Json checks = Json::array();
    for (const AppendixCheck &c : report.checks) {
        checks.push_back({{"name", c.name},
                          {"passed", c.passed},
                          {"needs_continuity", c.needs_continuity},
                          {"detail", c.detail}});
    }
    return {{"checks", checks},
            {"continuity_precondition", report.continuity_precondition},
            {"marginal", report.marginal},
            {"levels",
             {{"z", report.z_level}, {"b_minus_z", report.complement_level}, {"b_star", report.b_star_level}}},
            {"all_passed", report.all_passed()},
            {"theorem_violated", report.theorem_violated()}};
}

}  // namespace plausible
