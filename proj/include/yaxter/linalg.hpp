// Copyright 2026 The yaxter Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file
 * Small dense complex matrix kernel: Kronecker products, inverses,
 * spectral projectors and exponentials of Hermitian generators.
 *
 * Everything here works on fixed-size Eigen matrices of
 * `std::complex<Scalar>`; the two-qubit space is 4x4 and the three-strand
 * braid space is 8x8. `CMat` is the runtime-sized view used at I/O
 * boundaries and never exceeds 4x4.
 */
#pragma once

#include <cmath>
#include <complex>
#include <sstream>
#include <string>
#include <string_view>
#include <type_traits>

#include <Eigen/Dense>

#include "errors.hpp"

namespace yaxter {

template <typename Scalar> using Complex = std::complex<Scalar>;

template <typename Scalar, int N>
using SquareMatrix = Eigen::Matrix<Complex<Scalar>, N, N>;

template <typename Scalar> using Matrix2 = SquareMatrix<Scalar, 2>;
template <typename Scalar> using Matrix4 = SquareMatrix<Scalar, 4>;
template <typename Scalar> using Matrix8 = SquareMatrix<Scalar, 8>;
template <typename Scalar> using Vector4 = Eigen::Matrix<Complex<Scalar>, 4, 1>;

/// Runtime-sized complex matrix, at most 4x4.
template <typename Scalar>
using CMat = Eigen::Matrix<Complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic,
                           Eigen::ColMajor, 4, 4>;

/**
 * Absolute plus relative tolerance on Frobenius norms.
 *
 * A quantity `r` passes when `r < absolute + relative * scale`, where the
 * scale is the natural magnitude of the compared objects.
 */
template <typename Scalar> struct Tolerance {
    Scalar absolute = Scalar(1e-10);
    Scalar relative = Scalar(1e-10);

    [[nodiscard]] Scalar bound(Scalar scale) const {
        return absolute + relative * scale;
    }
};

namespace detail {

template <typename Derived>
using RealOf = typename Eigen::NumTraits<typename Derived::Scalar>::Real;

template <typename Derived> constexpr void require_fixed_square() {
    static_assert(Derived::RowsAtCompileTime != Eigen::Dynamic &&
                      Derived::RowsAtCompileTime == Derived::ColsAtCompileTime,
                  "expected a fixed-size square matrix");
}

template <typename Derived>
using PlainSquare = Eigen::Matrix<typename Derived::Scalar,
                                  Derived::RowsAtCompileTime,
                                  Derived::ColsAtCompileTime>;

inline std::string with_context(std::string message, std::string_view context) {
    if (!context.empty()) {
        message += " at ";
        message += context;
    }
    return message;
}

} // namespace detail

/// Kronecker product, (A⊗B)[i·n+k][j·n+l] = A[i][j]·B[k][l].
template <typename DerivedA, typename DerivedB>
auto kron(const Eigen::MatrixBase<DerivedA> &a,
          const Eigen::MatrixBase<DerivedB> &b) {
    static_assert(std::is_same_v<typename DerivedA::Scalar,
                                 typename DerivedB::Scalar>);
    constexpr int ar = DerivedA::RowsAtCompileTime;
    constexpr int ac = DerivedA::ColsAtCompileTime;
    constexpr int br = DerivedB::RowsAtCompileTime;
    constexpr int bc = DerivedB::ColsAtCompileTime;
    static_assert(ar > 0 && ac > 0 && br > 0 && bc > 0,
                  "kron needs fixed sizes; use tensor() for CMat");
    Eigen::Matrix<typename DerivedA::Scalar, ar * br, ac * bc> out;
    for (int i = 0; i < ar; ++i) {
        for (int j = 0; j < ac; ++j) {
            out.template block<br, bc>(i * br, j * bc) = a(i, j) * b;
        }
    }
    return out;
}

/// Runtime-checked Kronecker product for I/O-sized matrices.
template <typename Scalar>
CMat<Scalar> tensor(const CMat<Scalar> &a, const CMat<Scalar> &b) {
    const auto rows = a.rows() * b.rows();
    const auto cols = a.cols() * b.cols();
    if (rows > 4 || cols > 4) {
        std::ostringstream msg;
        msg << "tensor product of " << a.rows() << "x" << a.cols() << " and "
            << b.rows() << "x" << b.cols() << " exceeds 4x4";
        throw DimensionError(msg.str());
    }
    CMat<Scalar> out(rows, cols);
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) =
                a(i, j) * b;
        }
    }
    return out;
}

template <typename Derived>
detail::RealOf<Derived> max_abs(const Eigen::MatrixBase<Derived> &a) {
    return a.cwiseAbs().maxCoeff();
}

/// Scale-aware singularity test: |det A| < 1e-12 · (max |a_ij|)^N.
template <typename Derived>
bool is_singular(const Eigen::MatrixBase<Derived> &a) {
    detail::require_fixed_square<Derived>();
    using Real = detail::RealOf<Derived>;
    const Real scale = std::pow(max_abs(a), Real(Derived::RowsAtCompileTime));
    if (scale == Real(0)) {
        return true;
    }
    return std::abs(a.determinant()) < Real(1e-12) * scale;
}

template <typename Derived>
auto inverse(const Eigen::MatrixBase<Derived> &a, std::string_view context = {}) {
    detail::require_fixed_square<Derived>();
    if (is_singular(a)) {
        throw SingularMatrixError(
            detail::with_context("singular matrix", context));
    }
    detail::PlainSquare<Derived> out = a.partialPivLu().inverse();
    return out;
}

template <typename Derived>
auto identity_like(const Eigen::MatrixBase<Derived> &) {
    detail::require_fixed_square<Derived>();
    return detail::PlainSquare<Derived>::Identity();
}

template <typename Derived>
detail::RealOf<Derived> hermiticity_defect(const Eigen::MatrixBase<Derived> &h) {
    return (h - h.adjoint()).norm();
}

/// ‖U·U† − I‖_F.
template <typename Derived>
detail::RealOf<Derived> unitarity_defect(const Eigen::MatrixBase<Derived> &u) {
    detail::require_fixed_square<Derived>();
    return (u * u.adjoint() - identity_like(u)).norm();
}

template <typename Scalar, int N> struct SpectralProjectors {
    SquareMatrix<Scalar, N> first;
    SquareMatrix<Scalar, N> second;
};

/**
 * Projectors onto the two eigenspaces of a matrix with minimal polynomial
 * (b − λ1)(b − λ2):
 *
 *     P1 = (b − λ2)/(λ1 − λ2),  P2 = (b − λ1)/(λ2 − λ1).
 *
 * Throws DegenerateSpectrumError when λ1 = λ2 and SpectrumMismatchError when
 * the quadratic does not annihilate b.
 */
template <typename Derived>
auto spectral_projectors(
    const Eigen::MatrixBase<Derived> &b, typename Derived::Scalar lambda1,
    typename Derived::Scalar lambda2,
    Tolerance<detail::RealOf<Derived>> tol = {}) {
    detail::require_fixed_square<Derived>();
    using Real = detail::RealOf<Derived>;
    constexpr int n = Derived::RowsAtCompileTime;
    const auto id = identity_like(b);

    const Real gap = std::abs(lambda1 - lambda2);
    if (gap <= tol.bound(std::max(std::abs(lambda1), std::abs(lambda2)))) {
        throw DegenerateSpectrumError("eigenvalues coincide: spectral "
                                      "projectors need two distinct values");
    }
    const Real bnorm = b.norm();
    const Real residual = ((b - lambda1 * id) * (b - lambda2 * id)).norm();
    if (residual > tol.bound((bnorm + std::abs(lambda1)) *
                             (bnorm + std::abs(lambda2)))) {
        std::ostringstream msg;
        msg << "minimal polynomial residual " << residual
            << " exceeds tolerance: matrix is not two-eigenvalue";
        throw SpectrumMismatchError(msg.str());
    }
    SpectralProjectors<Real, n> out;
    out.first = (b - lambda2 * id) / (lambda1 - lambda2);
    out.second = (b - lambda1 * id) / (lambda2 - lambda1);
    return out;
}

/**
 * e^{−iHθ} for Hermitian H, through the eigendecomposition H = V·diag(ε)·V†.
 */
template <typename Derived>
auto expm_hermitian(const Eigen::MatrixBase<Derived> &h,
                    detail::RealOf<Derived> theta,
                    Tolerance<detail::RealOf<Derived>> tol = {}) {
    detail::require_fixed_square<Derived>();
    using Plain = detail::PlainSquare<Derived>;
    using C = typename Derived::Scalar;
    const auto defect = hermiticity_defect(h);
    if (defect > tol.bound(h.norm())) {
        std::ostringstream msg;
        msg << "expm_hermitian: generator is not Hermitian (‖H−H†‖ = "
            << defect << ")";
        throw NonHermitianError(msg.str());
    }
    const Plain sym = (h + h.adjoint()) / C(2);
    Eigen::SelfAdjointEigenSolver<Plain> eig(sym);
    const auto &v = eig.eigenvectors();
    const auto phases =
        (C(0, -theta) * eig.eigenvalues().template cast<C>()).array().exp();
    Plain out = v * phases.matrix().asDiagonal() * v.adjoint();
    return out;
}

/**
 * Overall scalar c with a ≈ c·b. The reference entry is (0,0) when b(0,0)
 * is nonzero, otherwise the first nonzero entry of b in row-major order.
 */
template <typename DerivedA, typename DerivedB>
typename DerivedA::Scalar proportionality(const Eigen::MatrixBase<DerivedA> &a,
                                          const Eigen::MatrixBase<DerivedB> &b) {
    using Real = detail::RealOf<DerivedA>;
    const Real floor = Real(1e-300);
    for (Eigen::Index i = 0; i < b.rows(); ++i) {
        for (Eigen::Index j = 0; j < b.cols(); ++j) {
            if (std::abs(b(i, j)) > floor) {
                return a(i, j) / b(i, j);
            }
        }
    }
    throw DomainError("proportionality: reference matrix is zero");
}

/// Relative distance of a from the ray through b: ‖a − c·b‖ / ‖a‖.
template <typename DerivedA, typename DerivedB>
detail::RealOf<DerivedA> proportionality_defect(
    const Eigen::MatrixBase<DerivedA> &a, const Eigen::MatrixBase<DerivedB> &b) {
    const auto c = proportionality(a, b);
    const auto na = a.norm();
    const auto diff = (a - c * b).norm();
    return na > 0 ? diff / na : diff;
}

template <typename Scalar> Matrix2<Scalar> pauli_x() {
    Matrix2<Scalar> m;
    m << 0, 1, 1, 0;
    return m;
}

template <typename Scalar> Matrix2<Scalar> pauli_y() {
    using C = Complex<Scalar>;
    Matrix2<Scalar> m;
    m << C(0), C(0, -1), C(0, 1), C(0);
    return m;
}

template <typename Scalar> Matrix2<Scalar> pauli_z() {
    Matrix2<Scalar> m;
    m << 1, 0, 0, -1;
    return m;
}

/// σ₊ = (σx + iσy)/2, the upper-right unit matrix.
template <typename Scalar> Matrix2<Scalar> sigma_plus() {
    Matrix2<Scalar> m;
    m << 0, 1, 0, 0;
    return m;
}

/// σ₋ = (σx − iσy)/2, the lower-left unit matrix.
template <typename Scalar> Matrix2<Scalar> sigma_minus() {
    Matrix2<Scalar> m;
    m << 0, 0, 1, 0;
    return m;
}

/// Single-qubit operator from an index in {1, σx, σy, σz}.
template <typename Scalar> Matrix2<Scalar> pauli(int index) {
    switch (index) {
    case 0:
        return Matrix2<Scalar>::Identity();
    case 1:
        return pauli_x<Scalar>();
    case 2:
        return pauli_y<Scalar>();
    case 3:
        return pauli_z<Scalar>();
    default:
        throw DomainError("pauli index must be in 0..3");
    }
}

template <typename Scalar> bool is_finite(Complex<Scalar> z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

} // namespace yaxter
