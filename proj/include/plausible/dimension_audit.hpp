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

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "plausible/numeric.hpp"

namespace plausible {

/// Integer polynomial in the maximum evidence d: sum_i coeffs[i] d^i.
class IntPolynomial {
   public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<std::int64_t> coeffs);

    static IntPolynomial monomial(int power, std::int64_t coeff = 1);

    std::int64_t operator()(std::int64_t d) const;
    const std::vector<std::int64_t> &coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    /// e.g. "d^2 - d", "0".
    std::string to_string() const;

    friend IntPolynomial operator+(const IntPolynomial &a, const IntPolynomial &b);
    friend IntPolynomial operator-(const IntPolynomial &a, const IntPolynomial &b);
    friend bool operator==(const IntPolynomial &a, const IntPolynomial &b) = default;
    friend auto operator<=>(const IntPolynomial &a, const IntPolynomial &b) = default;

   private:
    void trim();
    std::vector<std::int64_t> coeffs_;
};

enum class ProfileLabel { classical, semiclassical, quantum, relaxation_extra };

std::string to_string(ProfileLabel label);

/// (mu, nu, G(1), G(2)) summary of a profile; nu is empty when G is not a pure power.
struct ProfileParams {
    int mu = 0;
    std::optional<int> nu;
    std::int64_t g1 = 0;
    std::int64_t g2 = 0;
};

/// Dimension counts of the state manifold P(d) and structure group G(d).
///
/// The hypothesis-manifold dimension M_k(d) = G(d) - G(k) - G(d-k) is derived, never stored.
struct DimensionProfile {
    std::string name;
    IntPolynomial P;
    IntPolynomial G;
    ProfileParams params;
    ProfileLabel label = ProfileLabel::relaxation_extra;
    std::string structure_group;
};

/// Derives the summary parameters and the family label from P and G.
DimensionProfile make_profile(std::string name, IntPolynomial P, IntPolynomial G);

DimensionProfile classical_profile();
DimensionProfile semiclassical_profile();
DimensionProfile quantum_profile();

/// G(d) - G(k) - G(d - k).
std::int64_t mk_dimension(const DimensionProfile &profile, std::int64_t k, std::int64_t d);

/// Flag-manifold dimension by stacking Grassmannians: choose the first block in C^d, the
/// next in the orthocomplement, and so on.
std::int64_t flag_dimension(const DimensionProfile &profile, std::int64_t d,
                            const std::vector<int> &partition);

/// The consistency requirements whose dimensional constraints the audit checks.
enum class Requirement { preparation, composition_states, composition_transformations, continuity };

std::string to_string(Requirement r);
Requirement parse_requirement(const std::string &name);

struct RelaxationMode {
    std::set<Requirement> dropped;
    bool drops(Requirement r) const { return dropped.count(r) != 0; }
};

/// One evaluated instance of a constraint.
struct Residual {
    std::int64_t d = 0;
    std::vector<int> detail;  // partition, or (k, l) for the functional equation
    std::int64_t value = 0;
};

struct ConstraintTable {
    std::string name;
    /// Requirement this constraint encodes; empty for identities every profile must meet.
    std::optional<Requirement> requirement;
    std::vector<Residual> residuals;

    bool zero() const;
};

struct ConstraintReport {
    DimensionProfile profile;
    std::vector<ConstraintTable> constraints;
    bool satisfied = false;

    /// All residuals vanish except possibly those of dropped requirements.
    bool satisfied_except(const RelaxationMode &relax) const;
    const ConstraintTable &table(const std::string &name) const;
};

/// All partitions of n into positive parts, parts non-increasing.
std::vector<std::vector<int>> integer_partitions(int n);

/// Evaluates every dimensional constraint for d = 1..d_max. `partitions` lists the partitions
/// to use in the partition-indexed constraints; empty means every partition of every d.
ConstraintReport constraint_residuals(const DimensionProfile &profile, int d_max,
                                      const std::vector<std::vector<int>> &partitions = {});

/// Enumerates product-power families and returns those admitted by every requirement not
/// dropped in `relax`, ordered by (mu, G(1), G(2)).
std::vector<DimensionProfile> classify_solutions(int d_max, int mu_max, int g1_max,
                                                 const RelaxationMode &relax);

/// Real dimension of the orbit of a random flag with the given block sizes, measured as the
/// rank of H -> ([H, P_1], ..., [H, P_r]) over antihermitian H. Throws RankInstability if the
/// rank differs between the `samples` base points.
int numeric_orbit_dimension(int d, const std::vector<int> &partition, int samples,
                            std::uint64_t seed);

}  // namespace plausible
