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

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Core>

#include "plausible/errors.hpp"

namespace plausible {

using Real = double;
using Complex = std::complex<Real>;
using Index = Eigen::Index;

using Matrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;
using Vector = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;
using RealMatrix = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;
using RealVector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

using MatrixCRef = Eigen::Ref<const Matrix>;
using RealMatrixCRef = Eigen::Ref<const RealMatrix>;

/// The single tolerance policy shared by every module.
///
/// `rank_rel` is relative to the largest eigenvalue (or singular value),
/// `subspace_angle` is in radians and `prob_abs` is in absolute probability units.
struct Tolerance {
    Real rank_rel = 1e-10;
    Real subspace_angle = 1e-8;
    Real prob_abs = 1e-9;

    /// Throws DomainError unless every field is in (0, 1e-3).
    void validate() const;
};

/// Eigenvalues in descending order with the matching eigenvector columns.
struct EigenDecomposition {
    RealVector values;
    Matrix vectors;
};

/// Deterministic random source; every sampler takes one explicitly.
class Rng {
   public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    Real uniform() { return std::uniform_real_distribution<Real>(0.0, 1.0)(engine_); }
    Real normal() { return std::normal_distribution<Real>(0.0, 1.0)(engine_); }
    /// Standard complex Gaussian, E|z|^2 = 1.
    Complex complex_normal() {
        constexpr Real s = 0.70710678118654752440;
        Real re = normal();
        Real im = normal();
        return {s * re, s * im};
    }
    std::uint64_t next() { return engine_(); }

   private:
    std::mt19937_64 engine_;
};

/// Mixes a base seed with a stream of indices (splitmix64 finalizer).
std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> indices);

/// Throws DomainError if any entry is NaN or infinite.
void require_finite(const MatrixCRef &m, const char *what);

/// Max |m_ij - conj(m_ji)|.
Real hermiticity_defect(const MatrixCRef &m);

/// Orthonormal basis of the column span of `m`, one column per unit of numeric rank.
///
/// Columns already of full rank are processed with two-pass modified Gram-Schmidt so an
/// orthonormal input comes back unchanged; rank-deficient input falls back to the leading
/// left singular vectors, each phase-fixed so its largest component is real positive.
/// An all-zero input yields a matrix with zero columns.
Matrix orthonormalize(const MatrixCRef &m, const Tolerance &tol = {});

/// Count of singular values above `rank_rel` times the largest one.
Index matrix_rank(const MatrixCRef &m, const Tolerance &tol = {});

/// Spectral decomposition of a Hermitian matrix, eigenvalues descending.
/// Throws DomainError if `h` is not Hermitian within `prob_abs`.
EigenDecomposition hermitian_eig(const MatrixCRef &h, const Tolerance &tol = {});

/// Number of eigenvalues above `rank_rel` times the largest eigenvalue; 0 for the zero matrix.
Index numeric_rank(const MatrixCRef &h, const Tolerance &tol = {});

/// Haar-distributed d x d unitary, deterministic per seed.
Matrix sample_haar_unitary(Index d, std::uint64_t seed);

/// Same as above but drawing from an existing generator.
Matrix sample_haar_unitary(Index d, Rng &rng);

/// d x k matrix of independent standard complex Gaussians.
Matrix complex_gaussian(Index rows, Index cols, Rng &rng);

/// Principal angles between the spans of two orthonormal bases, ascending.
///
/// Small angles come from sines and large ones from cosines so neither end loses precision.
/// Throws DomainError on mismatched ambient dimension.
std::vector<Real> principal_angles(const MatrixCRef &b1, const MatrixCRef &b2);

/// Equal column counts and every principal angle below `subspace_angle`.
bool same_span(const MatrixCRef &b1, const MatrixCRef &b2, const Tolerance &tol = {});

/// Largest singular value.
Real operator_norm(const MatrixCRef &m);

/// Max |u^dagger u - 1| entry.
Real unitarity_defect(const MatrixCRef &u);

/// exp(-i t h) for Hermitian h, through its eigendecomposition.
Matrix unitary_exponential(const MatrixCRef &hermitian, Real t = 1.0);

}  // namespace plausible
