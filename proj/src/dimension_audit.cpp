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

#include "plausible/dimension_audit.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include <Eigen/SVD>

#include "plausible/hypothesis.hpp"

namespace plausible {

namespace {

std::int64_t ipow(std::int64_t base, int exp) {
    std::int64_t r = 1;
    for (int i = 0; i < exp; ++i) {
        r *= base;
    }
    return r;
}

/// Exponent e with 2^e == v, if any.
std::optional<int> log2_exact(std::int64_t v) {
    if (v < 1) {
        return std::nullopt;
    }
    int e = 0;
    while (v % 2 == 0) {
        v /= 2;
        ++e;
    }
    return v == 1 ? std::optional<int>(e) : std::nullopt;
}

int log2_round(std::int64_t v) {
    return v < 1 ? 0 : static_cast<int>(std::lround(std::log2(static_cast<double>(v))));
}

}  // namespace

IntPolynomial::IntPolynomial(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) {
        coeffs_.pop_back();
    }
}

IntPolynomial IntPolynomial::monomial(int power, std::int64_t coeff) {
    std::vector<std::int64_t> c(static_cast<std::size_t>(power) + 1, 0);
    c.back() = coeff;
    return IntPolynomial(std::move(c));
}

std::int64_t IntPolynomial::operator()(std::int64_t d) const {
    std::int64_t r = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        r = r * d + coeffs_[i];
    }
    return r;
}

std::string IntPolynomial::to_string() const {
    if (coeffs_.empty()) {
        return "0";
    }
    std::string out;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        std::int64_t c = coeffs_[i];
        if (c == 0) {
            continue;
        }
        std::int64_t mag = c < 0 ? -c : c;
        if (out.empty()) {
            out += c < 0 ? "-" : "";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (i == 0) {
            out += std::to_string(mag);
            continue;
        }
        if (mag != 1) {
            out += std::to_string(mag) + "*";
        }
        out += i == 1 ? "d" : "d^" + std::to_string(i);
    }
    return out;
}

IntPolynomial operator+(const IntPolynomial &a, const IntPolynomial &b) {
    std::vector<std::int64_t> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
    return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial &a, const IntPolynomial &b) {
    std::vector<std::int64_t> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
    return IntPolynomial(std::move(c));
}

std::string to_string(ProfileLabel label) {
    switch (label) {
        case ProfileLabel::classical:
            return "classical";
        case ProfileLabel::semiclassical:
            return "semiclassical";
        case ProfileLabel::quantum:
            return "quantum";
        case ProfileLabel::relaxation_extra:
            return "relaxation-extra";
    }
    return "unknown";
}

DimensionProfile make_profile(std::string name, IntPolynomial P, IntPolynomial G) {
    DimensionProfile p;
    p.name = std::move(name);
    p.P = P;
    p.G = G;
    p.params.mu = log2_exact(P(2)).value_or(0);
    p.params.g1 = G(1);
    p.params.g2 = G(2);
    if (!G.is_zero()) {
        for (int nu = 1; nu <= 16; ++nu) {
            if (G == IntPolynomial::monomial(nu)) {
                p.params.nu = nu;
            }
        }
    }
    const auto d1 = IntPolynomial::monomial(1);
    const auto d2 = IntPolynomial::monomial(2);
    if (P == d1 && G.is_zero()) {
        p.label = ProfileLabel::classical;
        p.structure_group = "discrete (permutations)";
    } else if (P == d1 && G == d1) {
        p.label = ProfileLabel::semiclassical;
        p.structure_group = "U(1)^d";
    } else if (P == d2 && G == d2) {
        p.label = ProfileLabel::quantum;
        p.structure_group = "U(d)";
    } else if (G == d2 - d1) {
        p.structure_group = "SO(d) x SO(d)";
    } else if (P == G && p.params.mu >= 3) {
        p.structure_group = "unspecified (many)";
    } else {
        p.structure_group = "unspecified";
    }
    return p;
}

DimensionProfile classical_profile() {
    return make_profile("classical", IntPolynomial::monomial(1), IntPolynomial());
}

DimensionProfile semiclassical_profile() {
    return make_profile("semiclassical", IntPolynomial::monomial(1), IntPolynomial::monomial(1));
}

DimensionProfile quantum_profile() {
    return make_profile("quantum", IntPolynomial::monomial(2), IntPolynomial::monomial(2));
}

std::int64_t mk_dimension(const DimensionProfile &profile, std::int64_t k, std::int64_t d) {
    if (k < 0 || k > d) {
        throw DomainError("mk_dimension needs 0 <= k <= d");
    }
    return profile.G(d) - profile.G(k) - profile.G(d - k);
}

std::int64_t flag_dimension(const DimensionProfile &profile, std::int64_t d,
                            const std::vector<int> &partition) {
    std::int64_t remaining = d;
    std::int64_t total = 0;
    for (int k : partition) {
        if (k < 0 || k > remaining) {
            throw DomainError("partition exceeds the ambient dimension");
        }
        total += mk_dimension(profile, k, remaining);
        remaining -= k;
    }
    return total;
}

std::string to_string(Requirement r) {
    switch (r) {
        case Requirement::preparation:
            return "preparation";
        case Requirement::composition_states:
            return "composition_states";
        case Requirement::composition_transformations:
            return "composition_transformations";
        case Requirement::continuity:
            return "continuity";
    }
    return "unknown";
}

Requirement parse_requirement(const std::string &name) {
    for (Requirement r : {Requirement::preparation, Requirement::composition_states,
                          Requirement::composition_transformations, Requirement::continuity}) {
        if (to_string(r) == name) {
            return r;
        }
    }
    throw DomainError("unknown requirement '" + name + "'");
}

bool ConstraintTable::zero() const {
    return std::all_of(residuals.begin(), residuals.end(),
                       [](const Residual &r) { return r.value == 0; });
}

bool ConstraintReport::satisfied_except(const RelaxationMode &relax) const {
    for (const ConstraintTable &t : constraints) {
        if (t.requirement && relax.drops(*t.requirement)) {
            continue;
        }
        if (!t.zero()) {
            return false;
        }
    }
    return true;
}

const ConstraintTable &ConstraintReport::table(const std::string &name) const {
    for (const ConstraintTable &t : constraints) {
        if (t.name == name) {
            return t;
        }
    }
    throw std::out_of_range("no constraint named " + name);
}

std::vector<std::vector<int>> integer_partitions(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    auto rec = [&](auto &&self, int rest, int max_part) -> void {
        if (rest == 0) {
            out.push_back(current);
            return;
        }
        for (int p = std::min(rest, max_part); p >= 1; --p) {
            current.push_back(p);
            self(self, rest - p, p);
            current.pop_back();
        }
    };
    if (n >= 1) {
        rec(rec, n, n);
    }
    return out;
}

ConstraintReport constraint_residuals(const DimensionProfile &profile, int d_max,
                                      const std::vector<std::vector<int>> &partitions) {
    const IntPolynomial &P = profile.P;
    const IntPolynomial &G = profile.G;
    auto M = [&](std::int64_t k, std::int64_t d) { return mk_dimension(profile, k, d); };

    ConstraintTable unit{"unit_state", std::nullopt, {}};
    ConstraintTable quotient{"quotient", std::nullopt, {}};
    ConstraintTable positivity{"positivity", std::nullopt, {}};
    ConstraintTable flag{"flag_identity", std::nullopt, {}};
    ConstraintTable prep_partition{"preparation_partition", Requirement::preparation, {}};
    ConstraintTable prep{"preparation", Requirement::preparation, {}};
    ConstraintTable states{"state_composition", Requirement::composition_states, {}};
    ConstraintTable transforms{"transformation_composition",
                               Requirement::composition_transformations, {}};
    ConstraintTable functional{"continuity_functional", Requirement::continuity, {}};
    ConstraintTable quadratic{"continuity_quadratic", Requirement::continuity, {}};

    unit.residuals.push_back({1, {}, P(1) - 1});

    const int mu = log2_round(P(2));
    const std::int64_t g1 = G(1);
    const std::int64_t g2 = G(2);
    const bool zero_branch = g1 == 0;
    const int nu = log2_round(g2);

    std::vector<std::vector<int>> chosen = partitions;
    if (chosen.empty()) {
        for (int d = 1; d <= d_max; ++d) {
            auto ps = integer_partitions(d);
            chosen.insert(chosen.end(), ps.begin(), ps.end());
        }
    }

    for (std::int64_t d = 1; d <= d_max; ++d) {
        for (std::int64_t k = 0; k <= d; ++k) {
            // Quotient by the stabilizer of a two-block flag.
            quotient.residuals.push_back(
                {d, {static_cast<int>(k)}, M(k, d) - flag_dimension(profile, d, {static_cast<int>(k)})});
            std::int64_t m = M(k, d);
            positivity.residuals.push_back({d, {static_cast<int>(k)}, m < 0 ? m : 0});
        }
        prep.residuals.push_back({d, {}, G(d) - (P(d) + (g1 - 1) * d)});
        states.residuals.push_back({d, {}, P(d) - ipow(d, mu)});
        transforms.residuals.push_back({d, {}, zero_branch ? G(d) : G(d) - ipow(d, nu)});
        // (G(2) - 2 G(1)) d (d - 1) / 2 is integral because d (d - 1) is even.
        quadratic.residuals.push_back({d, {}, G(d) - ((g2 - 2 * g1) * (d * (d - 1) / 2) + g1 * d)});
        for (std::int64_t l = 1; l <= d; ++l) {
            for (std::int64_t k = 1; k <= l; ++k) {
                functional.residuals.push_back({d,
                                                {static_cast<int>(k), static_cast<int>(l)},
                                                M(k, d) - (M(k, l) + M(k, d - l + k))});
            }
        }
    }

    for (const std::vector<int> &part : chosen) {
        std::int64_t d = 0;
        for (int k : part) d += k;
        if (d < 1 || d > d_max) {
            continue;
        }
        std::int64_t sum_g = 0;
        std::int64_t sum_p = 0;
        for (int k : part) {
            sum_g += G(k);
            sum_p += P(k);
        }
        flag.residuals.push_back({d, part, flag_dimension(profile, d, part) - (G(d) - sum_g)});
        prep_partition.residuals.push_back({d, part, P(d) - (G(d) - sum_g + sum_p)});
    }

    ConstraintReport report;
    report.profile = profile;
    report.constraints = {unit,   quotient,   positivity, flag,       prep_partition,
                          prep,   states,     transforms, functional, quadratic};
    report.satisfied = report.satisfied_except(RelaxationMode{});
    return report;
}

std::vector<DimensionProfile> classify_solutions(int d_max, int mu_max, int g1_max,
                                                 const RelaxationMode &relax) {
    if (d_max < 2 || mu_max < 1 || g1_max < 0) {
        throw DomainError("classify_solutions needs d_max >= 2, mu_max >= 1, g1_max >= 0");
    }
    const auto d1 = IntPolynomial::monomial(1);

    // Structure-group dimension shapes are 0 and pure powers. The d(d-1) shape joins only when
    // composition of transformations no longer forces a pure power.
    std::vector<IntPolynomial> group_shapes{IntPolynomial()};
    for (int nu = 1; nu <= mu_max; ++nu) {
        group_shapes.push_back(IntPolynomial::monomial(nu));
    }
    if (relax.drops(Requirement::composition_transformations)) {
        group_shapes.push_back(IntPolynomial::monomial(2) - d1);
    }
    auto is_group_shape = [&](const IntPolynomial &g) {
        return std::find(group_shapes.begin(), group_shapes.end(), g) != group_shapes.end();
    };

    std::vector<std::pair<IntPolynomial, IntPolynomial>> candidates;
    if (!relax.drops(Requirement::preparation)) {
        // G follows from P and G(1) through the all-rank-one preparation count.
        for (int mu = 1; mu <= mu_max; ++mu) {
            IntPolynomial P = IntPolynomial::monomial(mu);
            for (int g1 = 0; g1 <= g1_max; ++g1) {
                candidates.emplace_back(P, P + IntPolynomial::monomial(1, g1 - 1));
            }
        }
        if (relax.drops(Requirement::composition_states)) {
            // P no longer forced to a power: recover it from each group shape instead.
            for (const IntPolynomial &G : group_shapes) {
                candidates.emplace_back(G - IntPolynomial::monomial(1, G(1) - 1), G);
            }
        }
    } else {
        for (int mu = 1; mu <= mu_max; ++mu) {
            for (const IntPolynomial &G : group_shapes) {
                candidates.emplace_back(IntPolynomial::monomial(mu), G);
            }
        }
    }

    std::map<std::pair<IntPolynomial, IntPolynomial>, DimensionProfile> admitted;
    for (const auto &[P, G] : candidates) {
        if (!is_group_shape(G) || admitted.count({P, G})) {
            continue;
        }
        DimensionProfile profile = make_profile("P=" + P.to_string() + ", G=" + G.to_string(), P, G);
        ConstraintReport report = constraint_residuals(profile, d_max);
        if (report.satisfied_except(relax)) {
            admitted.emplace(std::make_pair(P, G), std::move(profile));
        }
    }

    std::vector<DimensionProfile> out;
    for (auto &[key, profile] : admitted) {
        out.push_back(std::move(profile));
    }
    std::sort(out.begin(), out.end(), [](const DimensionProfile &a, const DimensionProfile &b) {
        return std::tie(a.params.mu, a.params.g1, a.params.g2) <
               std::tie(b.params.mu, b.params.g1, b.params.g2);
    });
    return out;
}

namespace {

/// Basis of the d^2-dimensional real space of antihermitian matrices.
std::vector<Matrix> antihermitian_basis(int d) {
    std::vector<Matrix> basis;
    const Complex i(0.0, 1.0);
    for (int a = 0; a < d; ++a) {
        Matrix m = Matrix::Zero(d, d);
        m(a, a) = i;
        basis.push_back(m);
        for (int b = a + 1; b < d; ++b) {
            Matrix re = Matrix::Zero(d, d);
            re(a, b) = 1.0;
            re(b, a) = -1.0;
            basis.push_back(re);
            Matrix im = Matrix::Zero(d, d);
            im(a, b) = i;
            im(b, a) = i;
            basis.push_back(im);
        }
    }
    return basis;
}

int tangent_rank(const std::vector<Matrix> &projectors, const std::vector<Matrix> &generators) {
    const Index n = projectors.empty() ? 0 : projectors[0].rows();
    const Index block = 2 * n * n;
    RealMatrix a(block * static_cast<Index>(projectors.size()),
                 static_cast<Index>(generators.size()));
    for (std::size_t c = 0; c < generators.size(); ++c) {
        const Matrix &h = generators[c];
        for (std::size_t p = 0; p < projectors.size(); ++p) {
            Matrix comm = h * projectors[p] - projectors[p] * h;
            Index base = block * static_cast<Index>(p);
            for (Index e = 0; e < n * n; ++e) {
                a(base + 2 * e, static_cast<Index>(c)) = comm(e).real();
                a(base + 2 * e + 1, static_cast<Index>(c)) = comm(e).imag();
            }
        }
    }
    if (a.size() == 0) {
        return 0;
    }
    Eigen::JacobiSVD<RealMatrix> svd(a);
    const RealVector &s = svd.singularValues();
    // Generators have unit norm, so an absolute floor also catches the all-noise case.
    if (s.size() == 0 || s(0) < 1e-8) {
        return 0;
    }
    return static_cast<int>((s.array() > 1e-8 * s(0)).count());
}

}  // namespace

int numeric_orbit_dimension(int d, const std::vector<int> &partition, int samples,
                            std::uint64_t seed) {
    if (d < 1 || samples < 1) {
        throw DomainError("numeric_orbit_dimension needs d >= 1 and samples >= 1");
    }
    int total = 0;
    for (int k : partition) {
        if (k < 1) {
            throw DomainError("partition parts must be positive");
        }
        total += k;
    }
    if (total > d) {
        throw DomainError("partition sums beyond the ambient dimension");
    }
    const std::vector<Matrix> generators = antihermitian_basis(d);
    std::optional<int> rank;
    for (int s = 0; s < samples; ++s) {
        Matrix u = sample_haar_unitary(d, derive_seed(seed, {static_cast<std::uint64_t>(s)}));
        std::vector<Matrix> projectors;
        Index col = 0;
        for (int k : partition) {
            Hypothesis block(u.middleCols(col, k));
            projectors.push_back(block.projector());
            col += k;
        }
        int r = tangent_rank(projectors, generators);
        if (rank && *rank != r) {
            throw RankInstability("orbit rank " + std::to_string(r) + " at sample " +
                                  std::to_string(s) + " differs from " + std::to_string(*rank) +
                                  "; review the tangent-rank tolerance");
        }
        rank = r;
    }
    return *rank;
}

}  // namespace plausible
