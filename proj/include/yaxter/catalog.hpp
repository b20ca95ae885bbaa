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
 * Braid-group representations of the six- and eight-vertex families.
 *
 * Every `build_b` output is the literal displayed matrix, with the scalar
 * normalization fixed (for example the first eight-vertex family has
 * w₁ = 1). The basis order is |00⟩, |01⟩, |10⟩, |11⟩ throughout.
 */
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "linalg.hpp"

namespace yaxter {

enum class Family { SixNonStd, SixStd, EightI, EightII, EightIII, EightIV, BellPhi };

/// The ± branch of the eight-vertex b± matrices.
enum class Sign { Plus, Minus };

inline constexpr std::array<Family, 7> kAllFamilies = {
    Family::SixNonStd, Family::SixStd,  Family::EightI, Family::EightII,
    Family::EightIII,  Family::EightIV, Family::BellPhi};

constexpr int sign_value(Sign s) { return s == Sign::Plus ? 1 : -1; }

constexpr std::string_view family_name(Family f) {
    switch (f) {
    case Family::SixNonStd:
        return "six-nonstd";
    case Family::SixStd:
        return "six-std";
    case Family::EightI:
        return "eight1";
    case Family::EightII:
        return "eight2";
    case Family::EightIII:
        return "eight3";
    case Family::EightIV:
        return "eight4";
    case Family::BellPhi:
        return "bell-phi";
    }
    return "unknown";
}

inline std::optional<Family> parse_family(std::string_view name) {
    for (Family f : kAllFamilies) {
        if (family_name(f) == name) {
            return f;
        }
    }
    return std::nullopt;
}

constexpr bool is_six_vertex(Family f) {
    return f == Family::SixNonStd || f == Family::SixStd;
}

/// Families whose b-matrix is the three-eigenvalue matrix with w₁/w₅ = t.
constexpr bool uses_three_eigenvalue_b(Family f) {
    return f == Family::EightIII || f == Family::EightIV;
}

/**
 * A family together with its parameter point.
 *
 * `q` is the deformation parameter (six-vertex q = e^γ, eight-vertex q on
 * the unit circle), `t` the eight-vertex II/III/IV parameter and `phi` the
 * phase of b±(φ). Only the fields a family uses are read.
 */
template <typename Scalar> struct FamilySpec {
    using C = Complex<Scalar>;

    Family family = Family::SixNonStd;
    C q{1, 0};
    C t{0, 0};
    Scalar phi = 0;
    Sign sign = Sign::Plus;

    static FamilySpec six_nonstd(C q) { return {Family::SixNonStd, q, {}, 0, Sign::Plus}; }
    static FamilySpec six_std(C q) { return {Family::SixStd, q, {}, 0, Sign::Plus}; }
    /// Six-vertex point with q = e^γ.
    static FamilySpec six_gamma(Family f, Scalar gamma) {
        return {f, C(std::exp(gamma), 0), {}, 0, Sign::Plus};
    }
    static FamilySpec eight_one(C q, Sign s) { return {Family::EightI, q, {}, 0, s}; }
    static FamilySpec eight_two(Scalar t, C q, Sign s) {
        return {Family::EightII, q, C(t, 0), 0, s};
    }
    static FamilySpec eight_three(C t, C q, Sign s) { return {Family::EightIII, q, t, 0, s}; }
    static FamilySpec eight_four(C t, C q, Sign s) { return {Family::EightIV, q, t, 0, s}; }
    static FamilySpec bell_phi(Scalar phi, Sign s) {
        return {Family::BellPhi, C(1, 0), {}, phi, s};
    }

    [[nodiscard]] int s() const { return sign_value(sign); }

    /// γ with q = e^γ; meaningful for positive real q.
    [[nodiscard]] Scalar gamma() const { return std::log(std::abs(q)); }

    /// z = (t² − 2t + 2)^{1/2}, principal branch.
    [[nodiscard]] C z() const { return std::sqrt(t * t - C(2) * t + C(2)); }

    /// Deformation parameter seen by the matrix; b±(φ) uses q = e^{−iφ}.
    [[nodiscard]] C effective_q() const {
        return family == Family::BellPhi ? std::polar(Scalar(1), -phi) : q;
    }
};

template <typename Scalar> bool uses_q(const FamilySpec<Scalar> &spec) {
    return spec.family != Family::BellPhi;
}

template <typename Scalar> bool uses_t(const FamilySpec<Scalar> &spec) {
    return spec.family == Family::EightII || uses_three_eigenvalue_b(spec.family);
}

/// Throws DomainError when the parameter point cannot define the matrix.
template <typename Scalar> void validate(const FamilySpec<Scalar> &spec) {
    if (uses_q(spec)) {
        if (!is_finite(spec.q)) {
            throw DomainError("q must be finite");
        }
        if (spec.q == Complex<Scalar>(0)) {
            throw DomainError("q = 0: the deformation parameter must be nonzero");
        }
    }
    if (uses_t(spec) && !is_finite(spec.t)) {
        throw DomainError("t must be finite");
    }
    if (spec.family == Family::EightII && spec.t.imag() != Scalar(0)) {
        throw DomainError("eight2 requires real t (z is the positive root of t²−2t+2)");
    }
    if (!std::isfinite(spec.phi)) {
        throw DomainError("phi must be finite");
    }
}

/**
 * Violated constraint of the family's unitary parameter domain, if any.
 * Spectral-parameter constraints are checked separately in verify.hpp.
 */
template <typename Scalar>
std::optional<std::string> parameter_domain_violation(const FamilySpec<Scalar> &spec,
                                                      Scalar tol = Scalar(1e-10)) {
    const auto &q = spec.q;
    const auto &t = spec.t;
    switch (spec.family) {
    case Family::SixNonStd:
    case Family::SixStd:
        if (std::abs(q.imag()) > tol || q.real() <= 0) {
            return "six-vertex unitarity requires q = e^gamma real positive";
        }
        return std::nullopt;
    case Family::EightI:
        if (std::abs(std::abs(q) - 1) > tol) {
            return "eight1 unitarity requires |q| = 1";
        }
        return std::nullopt;
    case Family::EightII:
        if (std::abs(std::abs(q) - 1) > tol) {
            return "eight2 unitarity requires |q| = 1";
        }
        return std::nullopt;
    case Family::EightIII:
        if (std::abs(std::abs(q) - 1) > tol) {
            return "eight3 unitarity requires |q| = 1";
        }
        return std::nullopt;
    case Family::EightIV:
        if (std::abs(std::abs(q) - 1) > tol) {
            return "eight4 unitarity requires |q| = 1";
        }
        if (std::abs(t.imag()) > tol && std::abs(t.real()) > tol) {
            return "eight4 unitarity requires t real or pure imaginary";
        }
        return std::nullopt;
    case Family::BellPhi:
        return std::nullopt;
    }
    return std::nullopt;
}

/// Informational notes about a parameter point (collapsed spectra and the like).
template <typename Scalar>
std::vector<std::string> catalog_notices(const FamilySpec<Scalar> &spec) {
    std::vector<std::string> notes;
    if (auto v = parameter_domain_violation(spec)) {
        notes.push_back("outside unitary domain: " + *v);
    }
    if (spec.family == Family::EightII && std::abs(spec.t - Complex<Scalar>(1)) < Scalar(1e-12)) {
        notes.emplace_back("t = 1: b is singular (z = 1 makes 1 - z an eigenvalue)");
    }
    if (uses_three_eigenvalue_b(spec.family)) {
        const Scalar tol(1e-12);
        const auto &t = spec.t;
        if (std::abs(t - Complex<Scalar>(1)) < tol || std::abs(t + Complex<Scalar>(1)) < tol) {
            notes.emplace_back("t = ±1: b is singular and the spectrum collapses to two "
                               "eigenvalues; use the two-eigenvalue path");
        } else if (std::abs(t) < tol) {
            notes.emplace_back("t = 0: the spectrum collapses to {1, -1}");
        }
    }
    return notes;
}

template <typename Scalar> Matrix4<Scalar> build_b(const FamilySpec<Scalar> &spec) {
    using C = Complex<Scalar>;
    validate(spec);
    const C q = spec.q;
    const C s(spec.s());
    const C one(1);
    const C zero(0);
    Matrix4<Scalar> b;
    switch (spec.family) {
    case Family::SixNonStd:
        b << q, zero, zero, zero,
             zero, zero, one, zero,
             zero, one, q - one / q, zero,
             zero, zero, zero, -one / q;
        break;
    case Family::SixStd:
        b << q, zero, zero, zero,
             zero, zero, one, zero,
             zero, one, q - one / q, zero,
             zero, zero, zero, q;
        break;
    case Family::EightI:
        b << one, zero, zero, q,
             zero, one, s, zero,
             zero, -s, one, zero,
             -one / q, zero, zero, one;
        break;
    case Family::EightII: {
        const C t = spec.t;
        const C z = spec.z();
        b << C(2) - t, zero, zero, q,
             zero, one, s * z, zero,
             zero, s * z, one, zero,
             one / q, zero, zero, t;
        break;
    }
    case Family::EightIII:
    case Family::EightIV: {
        const C t = spec.t;
        b << t, zero, zero, q,
             zero, one, s * t, zero,
             zero, s * t, one, zero,
             one / q, zero, zero, t;
        break;
    }
    case Family::BellPhi: {
        const C e = std::polar(Scalar(1), -spec.phi);
        b << one, zero, zero, e,
             zero, one, s, zero,
             zero, -s, one, zero,
             -one / e, zero, zero, one;
        b /= std::sqrt(Scalar(2));
        break;
    }
    }
    return b;
}

namespace detail {

template <typename Scalar>
void push_distinct(std::vector<Complex<Scalar>> &out, Complex<Scalar> v) {
    const Scalar tol(1e-12);
    for (const auto &w : out) {
        if (std::abs(w - v) <= tol * std::max(Scalar(1), std::abs(v))) {
            return;
        }
    }
    out.push_back(v);
}

} // namespace detail

/**
 * Distinct eigenvalues of build_b(spec), in the order the families list
 * them: {q, −q⁻¹}, {1−i, 1+i}, {1+z, 1−z}, {1+t, 1−t, t−1}.
 */
template <typename Scalar>
std::vector<Complex<Scalar>> eigenvalues_of(const FamilySpec<Scalar> &spec) {
    using C = Complex<Scalar>;
    validate(spec);
    std::vector<C> out;
    switch (spec.family) {
    case Family::SixNonStd:
    case Family::SixStd:
        detail::push_distinct(out, spec.q);
        detail::push_distinct(out, -C(1) / spec.q);
        break;
    case Family::EightI:
        out = {C(1, -1), C(1, 1)};
        break;
    case Family::BellPhi: {
        const Scalar r = std::sqrt(Scalar(2));
        out = {C(1, -1) / r, C(1, 1) / r};
        break;
    }
    case Family::EightII: {
        const C z = spec.z();
        detail::push_distinct(out, C(1) + z);
        detail::push_distinct(out, C(1) - z);
        break;
    }
    case Family::EightIII:
    case Family::EightIV: {
        const C t = spec.t;
        detail::push_distinct(out, C(1) + t);
        detail::push_distinct(out, C(1) - t);
        detail::push_distinct(out, t - C(1));
        break;
    }
    }
    return out;
}

/// ∏ᵢ(b − λᵢ) for the listed eigenvalues.
template <typename Derived>
auto annihilator(const Eigen::MatrixBase<Derived> &b,
                 const std::vector<typename Derived::Scalar> &lambdas) {
    detail::PlainSquare<Derived> acc = identity_like(b);
    for (const auto &l : lambdas) {
        acc = acc * (b - l * identity_like(b));
    }
    return acc;
}

/**
 * Braid-relation residual
 * ‖(b⊗1)(1⊗b)(b⊗1) − (1⊗b)(b⊗1)(1⊗b)‖_F on the three-strand space.
 */
template <typename Derived>
detail::RealOf<Derived> braid_residual(const Eigen::MatrixBase<Derived> &b) {
    static_assert(Derived::RowsAtCompileTime == 4 && Derived::ColsAtCompileTime == 4);
    using C = typename Derived::Scalar;
    const Eigen::Matrix<C, 2, 2> id2 = Eigen::Matrix<C, 2, 2>::Identity();
    const auto first = kron(b.eval(), id2);
    const auto second = kron(id2, b.eval());
    return (first * second * first - second * first * second).norm();
}

/**
 * The eight entries of the general eight-vertex ansatz
 *
 *     [[w1, 0, 0, w7], [0, w5, w3, 0], [0, w4, w6, 0], [w8, 0, 0, w2]].
 */
template <typename Scalar> struct BoltzmannWeights {
    std::array<Complex<Scalar>, 8> w{};

    /// 1-based access, matching the usual w₁…w₈ labels.
    [[nodiscard]] const Complex<Scalar> &operator()(int i) const { return w.at(i - 1); }
    Complex<Scalar> &operator()(int i) { return w.at(i - 1); }

    template <typename Derived>
    static BoltzmannWeights from_matrix(const Eigen::MatrixBase<Derived> &b) {
        BoltzmannWeights out;
        out(1) = b(0, 0);
        out(2) = b(3, 3);
        out(3) = b(1, 2);
        out(4) = b(2, 1);
        out(5) = b(1, 1);
        out(6) = b(2, 2);
        out(7) = b(0, 3);
        out(8) = b(3, 0);
        return out;
    }

    [[nodiscard]] Matrix4<Scalar> to_matrix() const {
        Matrix4<Scalar> b = Matrix4<Scalar>::Zero();
        b(0, 0) = (*this)(1);
        b(3, 3) = (*this)(2);
        b(1, 2) = (*this)(3);
        b(2, 1) = (*this)(4);
        b(1, 1) = (*this)(5);
        b(2, 2) = (*this)(6);
        b(0, 3) = (*this)(7);
        b(3, 0) = (*this)(8);
        return b;
    }
};

enum class EightVertexBranch {
    /// w₃ = w₄, w₅ = w₆.
    SymmetricOffDiagonal,
    /// w₃ ≠ w₄, w₅ = w₁ = w₂ = w₆.
    AntisymmetricOffDiagonal,
};

template <typename Scalar> struct EightVertexResiduals {
    EightVertexBranch branch;
    /// Three branch-selection equations followed by the branch's own three.
    std::array<Complex<Scalar>, 6> values;

    [[nodiscard]] Scalar norm() const {
        Scalar acc = 0;
        for (const auto &v : values) {
            acc += std::norm(v);
        }
        return std::sqrt(acc);
    }
};

/**
 * Residuals of the braid relation for the eight-vertex ansatz, following
 * the branch analysis: (w₅−w₆)w₇w₈ = 0 and (w₃−w₄)(w₁−w₅)w₈ =
 * (w₃−w₄)(w₂−w₅)w₇ = 0 select the branch, then
 *   w₃ = w₄:  w₅² − w₇w₈, w₁² − w₃² − w₁w₅ + w₂w₅, w₂² − w₃² + w₁w₅ − w₂w₅;
 *   w₃ ≠ w₄:  w₁² − w₃², w₁² − w₄², w₃² + w₇w₈.
 */
template <typename Scalar>
EightVertexResiduals<Scalar> eight_vertex_residuals(const BoltzmannWeights<Scalar> &w,
                                                    Scalar tol = Scalar(1e-12)) {
    for (int i = 1; i <= 8; ++i) {
        if (std::abs(w(i)) == Scalar(0)) {
            throw DomainError("eight-vertex weights must all be nonzero (w" +
                              std::to_string(i) + " = 0)");
        }
    }
    EightVertexResiduals<Scalar> out{};
    out.values[0] = (w(5) - w(6)) * w(7) * w(8);
    out.values[1] = (w(3) - w(4)) * (w(1) - w(5)) * w(8);
    out.values[2] = (w(3) - w(4)) * (w(2) - w(5)) * w(7);
    const Scalar scale = std::max(std::abs(w(3)), std::abs(w(4)));
    if (std::abs(w(3) - w(4)) <= tol * std::max(Scalar(1), scale)) {
        out.branch = EightVertexBranch::SymmetricOffDiagonal;
        out.values[3] = w(5) * w(5) - w(7) * w(8);
        out.values[4] = w(1) * w(1) - w(3) * w(3) - w(1) * w(5) + w(2) * w(5);
        out.values[5] = w(2) * w(2) - w(3) * w(3) + w(1) * w(5) - w(2) * w(5);
    } else {
        out.branch = EightVertexBranch::AntisymmetricOffDiagonal;
        out.values[3] = w(1) * w(1) - w(3) * w(3);
        out.values[4] = w(1) * w(1) - w(4) * w(4);
        out.values[5] = w(3) * w(3) + w(7) * w(8);
    }
    return out;
}

} // namespace yaxter
