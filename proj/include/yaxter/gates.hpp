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
 * Fixed gates, SO(3) rotations and the two CNOT constructions from Ř.
 */
#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "catalog.hpp"
#include "dynamics.hpp"
#include "entangle.hpp"
#include "errors.hpp"
#include "linalg.hpp"

namespace yaxter {

template <typename Scalar> struct OneQubitGate {
    Matrix2<Scalar> u;
    std::string label;

    OneQubitGate(Matrix2<Scalar> m, std::string name) : u(std::move(m)), label(std::move(name)) {
        if (unitarity_defect(u) > Scalar(1e-12)) {
            throw DomainError("one-qubit gate '" + label + "' is not unitary");
        }
    }
};

template <typename Scalar> struct GateFactor {
    std::string label;
    Matrix4<Scalar> matrix;
    /// Set when the factor is a tensor product of one-qubit gates.
    std::optional<std::pair<OneQubitGate<Scalar>, OneQubitGate<Scalar>>> local;

    static GateFactor tensor(const OneQubitGate<Scalar> &a, const OneQubitGate<Scalar> &b,
                             Complex<Scalar> scale = Complex<Scalar>(1)) {
        std::string name = a.label + " (x) " + b.label;
        if (scale != Complex<Scalar>(1)) {
            name = "-(" + name + ")";
        }
        return {name, scale * kron(a.u, b.u), std::make_pair(a, b)};
    }
};

template <typename Scalar> struct GateDecomposition {
    Matrix4<Scalar> target;
    /// Applied as the product factors[0]·factors[1]·…
    std::vector<GateFactor<Scalar>> factors;
    Matrix4<Scalar> product;
    /// ‖product − target‖ with no phase freedom.
    Scalar residual = 0;
    /// The same after the best global phase.
    Scalar phase_aligned_residual = 0;
    /// Named side identities checked along the way.
    std::vector<std::pair<std::string, Scalar>> diagnostics;

    void finalize() {
        product = Matrix4<Scalar>::Identity();
        for (const auto &f : factors) {
            product = product * f.matrix;
        }
        residual = (product - target).norm();
        const Complex<Scalar> overlap = (target.adjoint() * product).trace();
        const Complex<Scalar> phase =
            std::abs(overlap) > 0 ? std::conj(overlap) / std::abs(overlap) : Complex<Scalar>(1);
        phase_aligned_residual = (phase * product - target).norm();
    }
};

template <typename Scalar> Matrix2<Scalar> projector_up() {
    Matrix2<Scalar> p = Matrix2<Scalar>::Zero();
    p(0, 0) = 1;
    return p;
}

template <typename Scalar> Matrix2<Scalar> projector_down() {
    Matrix2<Scalar> p = Matrix2<Scalar>::Zero();
    p(1, 1) = 1;
    return p;
}

/// CNOT = P↑⊗1 + P↓⊗σx, the first qubit being the control.
template <typename Scalar> Matrix4<Scalar> cnot() {
    return kron(projector_up<Scalar>(), Matrix2<Scalar>::Identity().eval()) +
           kron(projector_down<Scalar>(), pauli_x<Scalar>());
}

/// D_n(θ) = e^{−(i/2)(σ·n)θ} = cos(θ/2) − i sin(θ/2) σ·n.
template <typename Scalar>
OneQubitGate<Scalar> rotation(const std::array<Scalar, 3> &axis, Scalar theta,
                              std::string label = "D_n") {
    const Scalar len = std::sqrt(axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]);
    if (std::abs(len - 1) > Scalar(1e-12)) {
        throw DomainError("rotation axis must be a unit vector");
    }
    const Matrix2<Scalar> sn =
        axis[0] * pauli_x<Scalar>() + axis[1] * pauli_y<Scalar>() + axis[2] * pauli_z<Scalar>();
    const Matrix2<Scalar> u = std::cos(theta / 2) * Matrix2<Scalar>::Identity() -
                              Complex<Scalar>(0, std::sin(theta / 2)) * sn;
    return {u, std::move(label)};
}

template <typename Scalar> OneQubitGate<Scalar> rotation_x(Scalar theta) {
    return rotation<Scalar>({1, 0, 0}, theta, "D_x(" + std::to_string(theta) + ")");
}
template <typename Scalar> OneQubitGate<Scalar> rotation_y(Scalar theta) {
    return rotation<Scalar>({0, 1, 0}, theta, "D_y(" + std::to_string(theta) + ")");
}
template <typename Scalar> OneQubitGate<Scalar> rotation_z(Scalar theta) {
    return rotation<Scalar>({0, 0, 1}, theta, "D_z(" + std::to_string(theta) + ")");
}

/// The local gates α, β, γ ("local_gamma") and δ that turn the braiding matrix into CNOT.
template <typename Scalar> struct CnotLocals {
    OneQubitGate<Scalar> alpha, beta, local_gamma, delta;
};

template <typename Scalar> CnotLocals<Scalar> cnot_locals() {
    using C = Complex<Scalar>;
    const Scalar r = 1 / std::sqrt(Scalar(2));
    const C i(0, 1);
    Matrix2<Scalar> a, b, g, d;
    a << r, r, r, -r;
    b << -r, r, i * r, i * r;
    g << r, i * r, r, -i * r;
    d << 1, 0, 0, i;
    return {{a, "alpha"}, {b, "beta"}, {g, "local_gamma"}, {d, "delta"}};
}

/// The braiding matrix b₋(φ = 0) of the local-gate CNOT construction.
template <typename Scalar> Matrix4<Scalar> cnot_R() {
    return build_b(FamilySpec<Scalar>::bell_phi(0, Sign::Minus));
}

/// CNOT = M·Ř·N with M = α⊗β and N = −γ⊗δ.
template <typename Scalar> GateDecomposition<Scalar> theorem1_decomposition() {
    const auto l = cnot_locals<Scalar>();
    GateDecomposition<Scalar> out;
    out.target = cnot<Scalar>();
    out.factors.push_back(GateFactor<Scalar>::tensor(l.alpha, l.beta));
    out.factors.push_back({"R", cnot_R<Scalar>(), std::nullopt});
    out.factors.push_back(GateFactor<Scalar>::tensor(l.local_gamma, l.delta, Complex<Scalar>(-1)));
    out.finalize();
    return out;
}

/// b±(φ) applied to |00⟩, |01⟩, |10⟩, |11⟩.
template <typename Scalar>
std::array<TwoQubitState<Scalar>, 4> bell_basis(Scalar phi, Sign sign) {
    const Matrix4<Scalar> b = build_b(FamilySpec<Scalar>::bell_phi(phi, sign));
    std::array<TwoQubitState<Scalar>, 4> out;
    for (int k = 0; k < 4; ++k) {
        out[static_cast<std::size_t>(k)] = TwoQubitState<Scalar>(b.col(k).eval());
    }
    return out;
}

/// σ·n for a unit vector in the xy-plane at angle a.
template <typename Scalar> Matrix2<Scalar> sigma_in_plane(Scalar a) {
    return std::cos(a) * pauli_x<Scalar>() + std::sin(a) * pauli_y<Scalar>();
}

/// e^{−(i/2)(σz⊗σx)θ} − (P↑⊗e^{−(i/2)σxθ} + P↓⊗e^{(i/2)σxθ}).
template <typename Scalar> Scalar projector_identity_residual(Scalar theta) {
    const Matrix4<Scalar> zx = kron(pauli_z<Scalar>(), pauli_x<Scalar>());
    const Matrix4<Scalar> lhs = expm_hermitian(zx, theta / 2);
    const Matrix4<Scalar> rhs = kron(projector_up<Scalar>(), rotation_x(theta).u) +
                                kron(projector_down<Scalar>(), rotation_x(-theta).u);
    return (lhs - rhs).norm();
}

/**
 * (D_y(−π/2)⊗D_z(−π/2)) e^{iπ/4 σx⊗σy} (D_y(π/2)⊗D_z(π/2)) − e^{iπ/4 σz⊗σx}.
 */
template <typename Scalar> Scalar alternate_route_residual() {
    constexpr Scalar pi = std::numbers::pi_v<Scalar>;
    const Matrix4<Scalar> xy = kron(pauli_x<Scalar>(), pauli_y<Scalar>());
    const Matrix4<Scalar> zx = kron(pauli_z<Scalar>(), pauli_x<Scalar>());
    const Matrix4<Scalar> lhs = kron(rotation_y(-pi / 2).u, rotation_z(-pi / 2).u) *
                                expm_hermitian(xy, -pi / 4) *
                                kron(rotation_y(pi / 2).u, rotation_z(pi / 2).u);
    return (lhs - expm_hermitian(zx, -pi / 4)).norm();
}

/**
 * CNOT from the evolution U₊(π/2) = e^{−iH₊π/2} of b₊(φ):
 *
 *     (D_x(π/2)D_z(−φ/2) ⊗ D_z(−φ/2)) U₊(π/2) (D_z(φ/2)D_x(−π/2) ⊗ D_z(φ/2))
 *         = e^{−iπ/4 σz⊗σx},
 *     (δ' ⊗ e^{iπ/4 σx}) e^{−iπ/4 σz⊗σx} = CNOT,
 *
 * where the phase gate is δ' = P↑ − iP↓.
 */
template <typename Scalar> GateDecomposition<Scalar> cnot_via_evolution(Scalar phi) {
    using C = Complex<Scalar>;
    constexpr Scalar pi = std::numbers::pi_v<Scalar>;
    const auto spec = FamilySpec<Scalar>::bell_phi(phi, Sign::Plus);
    const Matrix4<Scalar> h = eight_one_hamiltonian(spec);
    const Matrix4<Scalar> u = evolve(h, pi / 2);

    const Matrix2<Scalar> dx = rotation_x(pi / 2).u;
    const Matrix2<Scalar> dz = rotation_z(-phi / 2).u;
    const OneQubitGate<Scalar> left_a(dx * dz, "D_x(pi/2) D_z(-phi/2)");
    const OneQubitGate<Scalar> left_b(dz, "D_z(-phi/2)");
    const OneQubitGate<Scalar> right_a(dz.adjoint() * dx.adjoint(), "D_z(phi/2) D_x(-pi/2)");
    const OneQubitGate<Scalar> right_b(dz.adjoint(), "D_z(phi/2)");

    const Matrix2<Scalar> phase = projector_up<Scalar>() - C(0, 1) * projector_down<Scalar>();
    const OneQubitGate<Scalar> delta_gate(phase, "P_up - i P_down");
    const OneQubitGate<Scalar> ex(expm_hermitian(pauli_x<Scalar>(), -pi / 4), "exp(i pi/4 sigma_x)");

    GateDecomposition<Scalar> out;
    out.target = cnot<Scalar>();
    out.factors.push_back(GateFactor<Scalar>::tensor(delta_gate, ex));
    out.factors.push_back(GateFactor<Scalar>::tensor(left_a, left_b));
    out.factors.push_back({"U+(pi/2)", u, std::nullopt});
    out.factors.push_back(GateFactor<Scalar>::tensor(right_a, right_b));
    out.finalize();

    const Matrix2<Scalar> n1 = sigma_in_plane((pi + phi) / 2);
    const Matrix2<Scalar> n2 = sigma_in_plane(phi / 2);
    const Matrix4<Scalar> zx = kron(pauli_z<Scalar>(), pauli_x<Scalar>());
    const Matrix4<Scalar> conj = out.factors[1].matrix * u * out.factors[3].matrix;
    out.diagnostics = {
        {"H+ = sigma_n1 (x) sigma_n2 / 2", (h - kron(n1, n2) / Scalar(2)).norm()},
        {"n1 conjugation to sigma_z", (left_a.u * n1 * right_a.u - pauli_z<Scalar>()).norm()},
        {"n2 conjugation to sigma_x", (left_b.u * n2 * right_b.u - pauli_x<Scalar>()).norm()},
        {"conjugated U+(pi/2) = exp(-i pi/4 sigma_z (x) sigma_x)",
         (conj - expm_hermitian(zx, pi / 4)).norm()},
        {"projector identity at pi/2", projector_identity_residual(pi / 2)},
        {"alternate route", alternate_route_residual<Scalar>()},
    };
    const Matrix2<Scalar> alt_delta = projector_up<Scalar>() + C(0, 1) * projector_down<Scalar>();
    out.diagnostics.emplace_back(
        "residual with delta = diag(1, i)",
        (kron(alt_delta, ex.u) * expm_hermitian(zx, pi / 4) - out.target).norm());
    return out;
}

} // namespace yaxter
