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
 * Hamiltonians of the unitary Ř-families, their Pauli decompositions and
 * the generated time evolutions.
 */
#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>

#include "baxterize.hpp"
#include "catalog.hpp"
#include "errors.hpp"
#include "linalg.hpp"
#include "verify.hpp"

namespace yaxter {

enum class HamiltonianSource { FiniteDifference, ClosedForm };

template <typename Scalar> struct Hamiltonian {
    Matrix4<Scalar> h;
    HamiltonianSource source = HamiltonianSource::ClosedForm;
    FamilySpec<Scalar> spec;
    /// Curve parameter: x for eight1, θ otherwise.
    Scalar param = 0;
};

/// A unitary curve p ↦ U(p).
template <typename Scalar> using UnitaryCurve = std::function<Matrix4<Scalar>(Scalar)>;

/// ρ^{−1/2}Ř with ρ = Re Tr(ŘŘ†)/4.
template <typename Scalar> Matrix4<Scalar> unit_normalized(const Matrix4<Scalar> &r) {
    const Scalar rho = (r * r.adjoint()).trace().real() / 4;
    if (!(rho > Scalar(1e-14))) {
        throw DomainError("rho = 0: the normalization degenerates at this point");
    }
    return r / std::sqrt(rho);
}

/**
 * The curve each family is differentiated along: θ with the six-vertex θ
 * gauge (x = e^{2iθ}); real x for eight1; θ with x = e^{iθ} for
 * eight2/3/4; θ with x = tanθ for bell-phi.
 */
template <typename Scalar> UnitaryCurve<Scalar> unitary_curve(const FamilySpec<Scalar> &spec) {
    using P = SpectralPoint<Scalar>;
    if (auto v = parameter_domain_violation(spec)) {
        throw DomainError(*v);
    }
    switch (spec.family) {
    case Family::SixNonStd:
    case Family::SixStd:
        return [spec](Scalar th) { return unit_normalized(six_vertex_theta_form(spec, th)); };
    case Family::EightI:
        return [spec](Scalar x) {
            return unit_normalized(build_R(spec, P::from_x(Complex<Scalar>(x, 0))));
        };
    case Family::BellPhi:
        return [spec](Scalar th) {
            return build_R(spec, P::from_theta(th, ThetaConvention::Tangent));
        };
    case Family::EightII:
    case Family::EightIII:
    case Family::EightIV:
        if (std::abs(spec.t.imag()) > Scalar(1e-12)) {
            throw DomainError("the theta curve needs real t");
        }
        return [spec](Scalar th) {
            return unit_normalized(build_R(spec, P::from_theta(th, ThetaConvention::ThetaFull)));
        };
    }
    throw DomainError("unitary_curve: unsupported family");
}

/**
 * H = i (dU/dp) U† by central differences with Richardson extrapolation
 * (4D(h/2) − D(h))/3.
 */
template <typename Scalar>
Matrix4<Scalar> hamiltonian_fd(const UnitaryCurve<Scalar> &u, Scalar p, Scalar h = Scalar(1e-5),
                               bool richardson = true) {
    if (!(h >= Scalar(1e-8))) {
        throw DomainError("finite-difference step below 1e-8 is rejected");
    }
    auto central = [&u, p](Scalar step) -> Matrix4<Scalar> {
        return (u(p + step) - u(p - step)) / (2 * step);
    };
    Matrix4<Scalar> d = central(h);
    if (richardson) {
        d = (4 * central(h / 2) - d) / 3;
    }
    return Complex<Scalar>(0, 1) * d * u(p).adjoint();
}

template <typename Scalar>
Hamiltonian<Scalar> hamiltonian_fd(const FamilySpec<Scalar> &spec, Scalar p,
                                   Scalar h = Scalar(1e-5)) {
    return {hamiltonian_fd(unitary_curve(spec), p, h), HamiltonianSource::FiniteDifference, spec,
            p};
}

namespace detail {

template <typename Scalar> Matrix4<Scalar> op2(const Matrix2<Scalar> &a, const Matrix2<Scalar> &b) {
    return kron(a, b);
}

/// qσ₊⊗σ₊ + q⁻¹σ₋⊗σ₋ ± k(σ₊⊗σ₋ + σ₋⊗σ₊).
template <typename Scalar>
Matrix4<Scalar> flip_terms(Complex<Scalar> q, Complex<Scalar> k) {
    const auto sp = sigma_plus<Scalar>();
    const auto sm = sigma_minus<Scalar>();
    return q * op2(sp, sp) + op2(sm, sm) / q + k * (op2(sp, sm) + op2(sm, sp));
}

template <typename Scalar> Matrix4<Scalar> z_sum() {
    const Matrix2<Scalar> id = Matrix2<Scalar>::Identity();
    return op2(id, pauli_z<Scalar>()) + op2(pauli_z<Scalar>(), id);
}

template <typename Scalar> Matrix4<Scalar> normalized_bell_b(const FamilySpec<Scalar> &spec) {
    Matrix4<Scalar> b = build_b(spec);
    if (spec.family == Family::EightI) {
        b /= std::sqrt(Scalar(2));
    }
    return b;
}

} // namespace detail

/**
 * The time-independent eight1 Hamiltonian H± = −(i/2)b±², with b± the
 * unit-normalized b±(φ) (q = e^{−iφ}).
 */
template <typename Scalar> Matrix4<Scalar> eight_one_hamiltonian(const FamilySpec<Scalar> &spec) {
    if (spec.family != Family::EightI && spec.family != Family::BellPhi) {
        throw DomainError("H± belongs to eight1 / bell-phi");
    }
    const Matrix4<Scalar> b = detail::normalized_bell_b(spec);
    return Complex<Scalar>(0, -0.5) * b * b;
}

/**
 * Closed-form Hamiltonians:
 *   six-vertex      (sinhγ/ρ)[[cothγ],[−sinhγ, 1],[1, sinhγ],[∓cothγ]], ρ = sin²θ + sinh²γ
 *   eight1          H±(x) = −(i/(1+x²)) b±², p = x
 *   eight2          −½ + (2/ρ)[[1−t,..,q],[±z],[±z],[q⁻¹,..,t−1]], ρ = 4 + 4(t−1)² sin²(θ/2)
 *   eight3          −½ + (2t/ρ)[[..,q],[±1],[±1],[q⁻¹,..]], ρ = 4 + 4(t²−1) sin²(θ/2)
 *   eight4          −1 + (2t/ρ)[[‖g₂‖²,..,q‖g₁‖²],[‖g₁‖², ±‖g₂‖²],…], ρ = ‖g₁‖²‖g₂‖²
 *   bell-phi        2H±, the generator along θ
 * The six-vertex forms are returned verbatim; see check_closed_form.
 */
template <typename Scalar>
Hamiltonian<Scalar> hamiltonian_closed(const FamilySpec<Scalar> &spec, Scalar p) {
    using C = Complex<Scalar>;
    validate(spec);
    const C q = spec.q;
    const C s(spec.s());
    const Matrix4<Scalar> id = Matrix4<Scalar>::Identity();
    Matrix4<Scalar> h;
    switch (spec.family) {
    case Family::SixNonStd:
    case Family::SixStd: {
        const Scalar g = spec.gamma();
        const Scalar rho = std::sin(p) * std::sin(p) + std::sinh(g) * std::sinh(g);
        if (rho < Scalar(1e-14)) {
            throw DomainError("rho = sin^2(theta) + sinh^2(gamma) = 0");
        }
        const C ct(1 / std::tanh(g));
        const C sh(std::sinh(g));
        const C last = spec.family == Family::SixNonStd ? -ct : ct;
        h = detail::eight_vertex<Scalar>(ct, last, C(1), C(1), -sh, sh, C(0), C(0)) *
            (std::sinh(g) / rho);
        break;
    }
    case Family::EightI:
        h = eight_one_hamiltonian(spec) * (Scalar(2) / (1 + p * p));
        break;
    case Family::BellPhi:
        h = Scalar(2) * eight_one_hamiltonian(spec);
        break;
    case Family::EightII: {
        const Scalar t = spec.t.real();
        const Scalar sn = std::sin(p / 2);
        const Scalar rho = 4 + 4 * (t - 1) * (t - 1) * sn * sn;
        const C z = spec.z();
        h = -id / Scalar(2) +
            (Scalar(2) / rho) *
                detail::eight_vertex<Scalar>(C(1 - t), C(t - 1), s * z, s * z, C(0), C(0), q,
                                             C(1) / q);
        break;
    }
    case Family::EightIII: {
        const Scalar t = spec.t.real();
        const Scalar sn = std::sin(p / 2);
        const Scalar rho = 4 + 4 * (t * t - 1) * sn * sn;
        if (std::abs(rho) < Scalar(1e-14)) {
            throw DomainError("rho = 0 at this theta");
        }
        h = -id / Scalar(2) +
            (2 * t / rho) *
                detail::eight_vertex<Scalar>(C(0), C(0), s, s, C(0), C(0), q, C(1) / q);
        break;
    }
    case Family::EightIV: {
        const Scalar t = spec.t.real();
        const C g1(2 * (1 + t * t) + 2 * (1 - t * t) * std::cos(p));
        const C g2(2 * (1 + t * t) - 2 * (1 - t * t) * std::cos(p));
        const Scalar rho = (g1 * g2).real();
        if (std::abs(rho) < Scalar(1e-14)) {
            throw DomainError("rho = |g1|^2 |g2|^2 = 0 at this theta");
        }
        h = -id + (2 * t / rho) *
                      detail::eight_vertex<Scalar>(g2, g2, s * g2, s * g2, g1, g1, q * g1,
                                                   g1 / q);
        break;
    }
    }
    return {h, HamiltonianSource::ClosedForm, spec, p};
}

/// Closed-form θ = 0 Hamiltonians of eight2, eight3 and eight4.
template <typename Scalar> Matrix4<Scalar> hamiltonian_theta0(const FamilySpec<Scalar> &spec) {
    using C = Complex<Scalar>;
    const Matrix4<Scalar> id = Matrix4<Scalar>::Identity();
    const C s(spec.s());
    const C t = spec.t;
    switch (spec.family) {
    case Family::EightII:
        return detail::flip_terms(spec.q, s * spec.z()) / Scalar(2) - id / Scalar(2) +
               (C(1) - t) / Scalar(4) * detail::z_sum<Scalar>();
    case Family::EightIII:
        return -id / Scalar(2) + t / Scalar(2) * detail::flip_terms(spec.q, s);
    case Family::EightIV: {
        const auto zz = detail::op2(pauli_z<Scalar>(), pauli_z<Scalar>());
        const auto sp = sigma_plus<Scalar>();
        const auto sm = sigma_minus<Scalar>();
        const Matrix4<Scalar> bracket =
            (t * t + C(1)) * id + (t * t - C(1)) * zz +
            C(2) * (spec.q * detail::op2(sp, sp) + detail::op2(sm, sm) / spec.q) +
            C(2) * s * t * t * (detail::op2(sp, sm) + detail::op2(sm, sp));
        return -id + bracket / (C(4) * t);
    }
    default:
        throw DomainError("theta = 0 Hamiltonians exist for eight2, eight3, eight4");
    }
}

/// ½[−1 + qσ₊⊗σ₊ + q⁻¹σ₋⊗σ₋ ± (σ₊⊗σ₋ + σ₋⊗σ₊)], the common t = 1 Hamiltonian.
template <typename Scalar> Matrix4<Scalar> hamiltonian_t1(const FamilySpec<Scalar> &spec) {
    const Matrix4<Scalar> id = Matrix4<Scalar>::Identity();
    return (-id + detail::flip_terms(spec.q, Complex<Scalar>(spec.s()))) / Scalar(2);
}

template <typename Scalar> struct ClosedFormReport {
    Scalar difference = 0;
    Scalar tolerance = Scalar(1e-7);
    bool agree = true;
    std::string discrepancy;
    /// Six-vertex: the corner entry of the finite-difference H times ρ/sinhγ.
    std::optional<Scalar> fitted_corner;
};

/**
 * Compares hamiltonian_closed with hamiltonian_fd at p. The finite
 * difference is authoritative; a disagreement is described rather than
 * thrown.
 */
template <typename Scalar>
ClosedFormReport<Scalar> check_closed_form(const FamilySpec<Scalar> &spec, Scalar p,
                                           Scalar h = Scalar(1e-5), Scalar tol = Scalar(1e-7)) {
    const auto closed = hamiltonian_closed(spec, p).h;
    const auto fd = hamiltonian_fd(spec, p, h).h;
    ClosedFormReport<Scalar> out;
    out.tolerance = tol;
    out.difference = (closed - fd).norm();
    out.agree = out.difference < tol;
    if (is_six_vertex(spec.family)) {
        const Scalar g = spec.gamma();
        const Scalar rho = std::sin(p) * std::sin(p) + std::sinh(g) * std::sinh(g);
        out.fitted_corner = fd(0, 0).real() * rho / std::sinh(g);
    }
    if (!out.agree) {
        std::ostringstream msg;
        msg.precision(12);
        msg << "closed form differs from finite difference by " << out.difference;
        if (out.fitted_corner) {
            msg << "; fitted corner coefficient " << *out.fitted_corner << " vs closed-form coth(gamma) = "
                << 1 / std::tanh(spec.gamma()) << ", cosh(gamma) = " << std::cosh(spec.gamma());
            const Matrix4<Scalar> rest = [&] {
                Matrix4<Scalar> m = closed - fd;
                m(0, 0) = 0;
                m(3, 3) = 0;
                return m;
            }();
            msg << "; off-corner difference " << rest.norm();
        }
        out.discrepancy = msg.str();
    }
    return out;
}

/// i dψ/dp − Hψ for ψ(p) = U(p)ψ₀, by central differences.
template <typename Scalar>
Scalar schrodinger_residual(const UnitaryCurve<Scalar> &u, Scalar p, const Vector4<Scalar> &psi0,
                            Scalar h = Scalar(1e-5)) {
    const Vector4<Scalar> dpsi = (u(p + h) * psi0 - u(p - h) * psi0) / (2 * h);
    const Matrix4<Scalar> ham = hamiltonian_fd(u, p, h);
    return (Complex<Scalar>(0, 1) * dpsi - ham * (u(p) * psi0)).norm();
}

/// Coefficients of H in the basis σμ⊗σν, μ, ν ∈ {1, x, y, z}.
template <typename Scalar> struct PauliDecomp {
    std::array<std::array<Complex<Scalar>, 4>, 4> c{};

    static constexpr std::array<char, 4> kLabels = {'i', 'x', 'y', 'z'};

    [[nodiscard]] static std::string key(int mu, int nu) {
        return {kLabels[static_cast<std::size_t>(mu)], kLabels[static_cast<std::size_t>(nu)]};
    }

    [[nodiscard]] Matrix4<Scalar> reconstruct() const {
        Matrix4<Scalar> out = Matrix4<Scalar>::Zero();
        for (int mu = 0; mu < 4; ++mu) {
            for (int nu = 0; nu < 4; ++nu) {
                out += c[mu][nu] * kron(pauli<Scalar>(mu), pauli<Scalar>(nu));
            }
        }
        return out;
    }
};

template <typename Scalar> PauliDecomp<Scalar> pauli_decompose(const Matrix4<Scalar> &h) {
    PauliDecomp<Scalar> out;
    for (int mu = 0; mu < 4; ++mu) {
        for (int nu = 0; nu < 4; ++nu) {
            out.c[mu][nu] = (h * kron(pauli<Scalar>(mu), pauli<Scalar>(nu))).trace() / Scalar(4);
        }
    }
    return out;
}

/// U(θ) = e^{−iHθ}.
template <typename Scalar> Matrix4<Scalar> evolve(const Matrix4<Scalar> &h, Scalar theta) {
    return expm_hermitian(h, theta);
}

/**
 * ‖ρ^{−1/2}Ř±(θ) − e^{i(π/2−2θ)H±}‖ for b±(φ).
 */
template <typename Scalar> Scalar braiding_evolution_check(Sign sign, Scalar theta, Scalar phi) {
    const auto spec = FamilySpec<Scalar>::bell_phi(phi, sign);
    const Matrix4<Scalar> r =
        build_R(spec, SpectralPoint<Scalar>::from_theta(theta, ThetaConvention::Tangent));
    const Matrix4<Scalar> u =
        expm_hermitian(eight_one_hamiltonian(spec), -(std::numbers::pi_v<Scalar> / 2 - 2 * theta));
    return (r - u).norm();
}

} // namespace yaxter
