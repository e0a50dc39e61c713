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

#include "plausible/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>

namespace plausible {

void Tolerance::validate() const {
    for (Real v : {rank_rel, subspace_angle, prob_abs}) {
        if (!(v > 0.0 && v < 1e-3)) {
            throw DomainError("tolerances must lie in (0, 1e-3), got " + std::to_string(v));
        }
    }
}

std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> indices) {
    auto mix = [](std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    };
    std::uint64_t h = mix(base);
    for (std::uint64_t i : indices) {
        h = mix(h ^ mix(i));
    }
    return h;
}

void require_finite(const MatrixCRef &m, const char *what) {
    if (!m.allFinite()) {
        throw DomainError(std::string(what) + " has non-finite entries");
    }
}

Real hermiticity_defect(const MatrixCRef &m) {
    if (m.rows() != m.cols()) {
        throw DomainError("hermiticity check needs a square matrix");
    }
    if (m.size() == 0) {
        return 0.0;
    }
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

namespace {

RealVector singular_values(const MatrixCRef &m) {
    if (m.size() == 0) {
        return RealVector();
    }
    Eigen::JacobiSVD<Matrix> svd(m);
    return svd.singularValues();
}

void fix_column_phase(Eigen::Ref<Vector> v) {
    Index arg = 0;
    v.cwiseAbs().maxCoeff(&arg);
    Complex c = v(arg);
    if (std::abs(c) > 0.0) {
        v *= std::conj(c) / std::abs(c);
    }
}

}  // namespace

Index matrix_rank(const MatrixCRef &m, const Tolerance &tol) {
    RealVector s = singular_values(m);
    if (s.size() == 0 || s(0) == 0.0) {
        return 0;
    }
    Real cut = tol.rank_rel * s(0);
    return static_cast<Index>((s.array() > cut).count());
}

Matrix orthonormalize(const MatrixCRef &m, const Tolerance &tol) {
    require_finite(m, "orthonormalize input");
    const Index rows = m.rows();
    const Index rank = matrix_rank(m, tol);
    if (rank == 0) {
        return Matrix(rows, 0);
    }

    if (rank == m.cols()) {
        Matrix q = m;
        for (Index j = 0; j < q.cols(); ++j) {
            for (int pass = 0; pass < 2; ++pass) {
                for (Index i = 0; i < j; ++i) {
                    q.col(j) -= q.col(i).dot(q.col(j)) * q.col(i);
                }
            }
            Real n = q.col(j).norm();
            if (n <= tol.rank_rel * m.colwise().norm().maxCoeff()) {
                // Numerically dependent despite the SVD verdict; defer to the SVD basis.
                break;
            }
            q.col(j) /= n;
            if (j == q.cols() - 1) {
                return q;
            }
        }
    }

    Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinU);
    Matrix u = svd.matrixU().leftCols(rank);
    for (Index j = 0; j < rank; ++j) {
        fix_column_phase(u.col(j));
    }
    return u;
}

EigenDecomposition hermitian_eig(const MatrixCRef &h, const Tolerance &tol) {
    require_finite(h, "hermitian_eig input");
    if (hermiticity_defect(h) > tol.prob_abs) {
        throw DomainError("matrix is not Hermitian within tolerance");
    }
    const Index n = h.rows();
    EigenDecomposition out;
    if (n == 0) {
        out.values = RealVector();
        out.vectors = Matrix();
        return out;
    }
    Matrix sym = (h + h.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<Matrix> es(sym);
    // Eigen sorts ascending.
    out.values = es.eigenvalues().reverse();
    out.vectors = es.eigenvectors().rowwise().reverse();
    return out;
}

Index numeric_rank(const MatrixCRef &h, const Tolerance &tol) {
    EigenDecomposition e = hermitian_eig(h, tol);
    if (e.values.size() == 0 || e.values(0) <= 0.0) {
        return 0;
    }
    Real cut = tol.rank_rel * e.values(0);
    return static_cast<Index>((e.values.array() > cut).count());
}

Matrix complex_gaussian(Index rows, Index cols, Rng &rng) {
    Matrix g(rows, cols);
    // Column-major fill order keeps the stream layout independent of Eigen internals.
    for (Index j = 0; j < cols; ++j) {
        for (Index i = 0; i < rows; ++i) {
            g(i, j) = rng.complex_normal();
        }
    }
    return g;
}

Matrix sample_haar_unitary(Index d, Rng &rng) {
    if (d < 1) {
        throw DomainError("Haar sampling needs d >= 1");
    }
    Matrix z = complex_gaussian(d, d, rng);
    Eigen::HouseholderQR<Matrix> qr(z);
    Matrix q = qr.householderQ() * Matrix::Identity(d, d);
    Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Index j = 0; j < d; ++j) {
        Complex rjj = r(j, j);
        Real a = std::abs(rjj);
        Complex phase = a > 0.0 ? rjj / a : Complex(1.0, 0.0);
        q.col(j) *= phase;
    }
    return q;
}

Matrix sample_haar_unitary(Index d, std::uint64_t seed) {
    Rng rng(seed);
    return sample_haar_unitary(d, rng);
}

std::vector<Real> principal_angles(const MatrixCRef &b1, const MatrixCRef &b2) {
    if (b1.rows() != b2.rows()) {
        throw DomainError("principal angles need a common ambient dimension");
    }
    const Index k = std::min(b1.cols(), b2.cols());
    std::vector<Real> angles;
    if (k == 0) {
        return angles;
    }
    const MatrixCRef &small = b1.cols() <= b2.cols() ? b1 : b2;
    const MatrixCRef &large = b1.cols() <= b2.cols() ? b2 : b1;

    RealVector cosines = singular_values(large.adjoint() * small);  // descending
    Matrix residual = small - large * (large.adjoint() * small);
    RealVector sines = singular_values(residual);  // descending
    angles.resize(static_cast<std::size_t>(k));
    for (Index i = 0; i < k; ++i) {
        Real c = std::clamp(cosines(i), 0.0, 1.0);
        Real s = std::clamp(sines(k - 1 - i), 0.0, 1.0);
        angles[static_cast<std::size_t>(i)] = c * c >= 0.5 ? std::asin(s) : std::acos(c);
    }
    std::sort(angles.begin(), angles.end());
    return angles;
}

bool same_span(const MatrixCRef &b1, const MatrixCRef &b2, const Tolerance &tol) {
    if (b1.rows() != b2.rows() || b1.cols() != b2.cols()) {
        return false;
    }
    for (Real a : principal_angles(b1, b2)) {
        if (!(a < tol.subspace_angle)) {
            return false;
        }
    }
    return true;
}

Real operator_norm(const MatrixCRef &m) {
    RealVector s = singular_values(m);
    return s.size() == 0 ? 0.0 : s(0);
}

Real unitarity_defect(const MatrixCRef &u) {
    if (u.rows() != u.cols()) {
        return INFINITY;
    }
    Matrix e = u.adjoint() * u - Matrix::Identity(u.rows(), u.cols());
    return e.size() == 0 ? 0.0 : e.cwiseAbs().maxCoeff();
}

Matrix unitary_exponential(const MatrixCRef &hermitian, Real t) {
    Eigen::SelfAdjointEigenSolver<Matrix> es((hermitian + hermitian.adjoint()) / 2.0);
    const Matrix &v = es.eigenvectors();
    Vector phases(v.cols());
    for (Index i = 0; i < v.cols(); ++i) {
        phases(i) = std::polar(1.0, -t * es.eigenvalues()(i));
    }
    return v * phases.asDiagonal() * v.adjoint();
}

}  // namespace plausible
