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
 * Action of Ř on two-qubit states, the concurrence determinant and the
 * entangling-gate classification.
 */
#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "baxterize.hpp"
#include "catalog.hpp"
#include "errors.hpp"
#include "linalg.hpp"
#include "verify.hpp"

namespace yaxter {

/// Amplitudes a₀₀, a₀₁, a₁₀, a₁₁ in the order |00⟩, |01⟩, |10⟩, |11⟩.
template <typename Scalar> struct TwoQubitState {
    Vector4<Scalar> a = Vector4<Scalar>::Zero();

    TwoQubitState() = default;
    explicit TwoQubitState(const Vector4<Scalar> &v) : a(v) {}
    TwoQubitState(Complex<Scalar> a00, Complex<Scalar> a01, Complex<Scalar> a10,
                  Complex<Scalar> a11) {
        a << a00, a01, a10, a11;
    }

    [[nodiscard]] Complex<Scalar> a00() const { return a(0); }
    [[nodiscard]] Complex<Scalar> a01() const { return a(1); }
    [[nodiscard]] Complex<Scalar> a10() const { return a(2); }
    [[nodiscard]] Complex<Scalar> a11() const { return a(3); }

    static TwoQubitState basis(int index) {
        TwoQubitState s;
        s.a(index) = 1;
        return s;
    }
};

/// One-qubit factors (a, b) ⊗ (c, d).
template <typename Scalar> struct ProductFactors {
    Complex<Scalar> a, b, c, d;

    [[nodiscard]] TwoQubitState<Scalar> state() const {
        return {a * c, a * d, b * c, b * d};
    }
};

template <typename Derived, typename Scalar>
TwoQubitState<Scalar> apply_gate(const Eigen::MatrixBase<Derived> &r,
                            const TwoQubitState<Scalar> &psi) {
    return TwoQubitState<Scalar>((r * psi.a).eval());
}

/// Det(A) = a₀₀a₁₁ − a₀₁a₁₀.
template <typename Scalar> Complex<Scalar> concurrence_det(const TwoQubitState<Scalar> &psi) {
    return psi.a00() * psi.a11() - psi.a01() * psi.a10();
}

/**
 * Coefficients of Det(Ř·(a,b)⊗(c,d)) as a polynomial in the factors:
 * entry [i][j] multiplies a^{2−i} b^i c^{2−j} d^j. The polynomial vanishes
 * identically exactly when all nine do.
 */
template <typename Derived>
std::array<std::array<typename Derived::Scalar, 3>, 3>
product_det_coefficients(const Eigen::MatrixBase<Derived> &r) {
    std::array<std::array<typename Derived::Scalar, 3>, 3> c{};
    for (int j = 0; j < 4; ++j) {
        for (int l = 0; l < 4; ++l) {
            const int nb = (j >> 1) + (l >> 1);
            const int nd = (j & 1) + (l & 1);
            c[nb][nd] += r(0, j) * r(3, l) - r(1, j) * r(2, l);
        }
    }
    return c;
}

template <typename Scalar> struct WitnessOptions {
    int probes = 1000;
    std::uint64_t seed = 42;
    Scalar tol = Scalar(1e-8);
};

template <typename Scalar> struct Witness {
    TwoQubitState<Scalar> state;
    Complex<Scalar> det;
    /// Position in the probe sequence: fixed probes first, then random ones.
    int probe_index = 0;
};

namespace detail {

template <typename Scalar> std::vector<std::array<Complex<Scalar>, 2>> fixed_qubit_probes() {
    using C = Complex<Scalar>;
    return {{C(1), C(0)},   {C(0), C(1)},       {C(1), C(1)},
            {C(1), C(0, 1)}, {C(1), C(0.5)},    {C(1), C(0, -0.7)}};
}

template <typename Scalar> Matrix4<Scalar> gate_scaled(const Matrix4<Scalar> &r) {
    const Scalar n = r.norm();
    if (n == Scalar(0)) {
        throw DomainError("zero matrix has no gate normalization");
    }
    return r * (Scalar(2) / n);
}

} // namespace detail

/**
 * A product state that Ř maps to an entangled state, if one is found.
 *
 * Ř is rescaled to Frobenius norm 2 (unchanged for unitary Ř). The 36
 * products of {|0⟩, |1⟩, |0⟩+|1⟩, |0⟩+i|1⟩, |0⟩+½|1⟩, |0⟩−0.7i|1⟩} are
 * tried first, then `probes` seeded random products; a state witnesses
 * entanglement when |Det| exceeds `tol` for the normalized state.
 */
template <typename Scalar>
std::optional<Witness<Scalar>> brylinski_witness(const Matrix4<Scalar> &r,
                                                 const WitnessOptions<Scalar> &opt = {}) {
    using C = Complex<Scalar>;
    const Matrix4<Scalar> g = detail::gate_scaled(r);
    int index = 0;
    auto test = [&](const ProductFactors<Scalar> &f) -> std::optional<Witness<Scalar>> {
        TwoQubitState<Scalar> psi = f.state();
        psi.a.normalize();
        const C det = concurrence_det(apply_gate(g, psi));
        if (std::abs(det) > opt.tol) {
            return Witness<Scalar>{psi, det, index};
        }
        return std::nullopt;
    };
    const auto fixed = detail::fixed_qubit_probes<Scalar>();
    for (const auto &p : fixed) {
        for (const auto &q : fixed) {
            if (auto w = test({p[0], p[1], q[0], q[1]})) {
                return w;
            }
            ++index;
        }
    }
    Sampler rng(opt.seed);
    for (int i = 0; i < opt.probes; ++i, ++index) {
        std::array<C, 4> v;
        for (auto &e : v) {
            e = C(Scalar(rng.uniform(-1, 1)), Scalar(rng.uniform(-1, 1)));
        }
        if (auto w = test({v[0], v[1], v[2], v[3]})) {
            return w;
        }
    }
    return std::nullopt;
}

enum class Classification { Entangling, NotEntangling, Unknown };

constexpr std::string_view classification_name(Classification c) {
    switch (c) {
    case Classification::Entangling:
        return "Entangling";
    case Classification::NotEntangling:
        return "NotEntangling";
    case Classification::Unknown:
        return "Unknown";
    }
    return "Unknown";
}

template <typename Scalar> struct ClassificationResult {
    Classification kind = Classification::Unknown;
    std::optional<Witness<Scalar>> witness;
    /// Largest |coefficient| of Det on product states, for Ř scaled to norm 2.
    Scalar det_polynomial_norm = 0;
    Scalar unitarity_defect = 0;
    bool unitary = true;
};

/**
 * NotEntangling when Det on product states vanishes identically (all
 * polynomial coefficients below 1e−12), Entangling when a witness is
 * found, Unknown otherwise. Non-unitary input is flagged, not rejected.
 */
template <typename Scalar>
ClassificationResult<Scalar> classify(const Matrix4<Scalar> &r,
                                      const WitnessOptions<Scalar> &opt = {}) {
    ClassificationResult<Scalar> out;
    const Matrix4<Scalar> g = detail::gate_scaled(r);
    out.unitarity_defect = unitarity_defect(g);
    out.unitary = out.unitarity_defect < Scalar(1e-10);
    for (const auto &row : product_det_coefficients(g)) {
        for (const auto &c : row) {
            out.det_polynomial_norm = std::max(out.det_polynomial_norm, std::abs(c));
        }
    }
    if (out.det_polynomial_norm < Scalar(1e-12)) {
        out.kind = Classification::NotEntangling;
        return out;
    }
    out.witness = brylinski_witness(r, opt);
    out.kind = out.witness ? Classification::Entangling : Classification::Unknown;
    return out;
}

/**
 * The matrix the closed-form determinants refer to: the six-vertex θ gauge
 * and the eight-vertex u forms.
 */
template <typename Scalar>
Matrix4<Scalar> closed_form_det_matrix(const FamilySpec<Scalar> &spec,
                                       const SpectralPoint<Scalar> &p) {
    if (is_six_vertex(spec.family)) {
        const Scalar th = p.authority() == SpectralView::Theta
                              ? p.theta()
                              : SpectralPoint<Scalar>::theta_of_x(p.x(),
                                                                  ThetaConvention::ThetaHalf);
        return six_vertex_theta_form(spec, th);
    }
    if (spec.family == Family::BellPhi) {
        throw DomainError("no closed-form determinant for bell-phi");
    }
    return build_R_u(spec, p.u());
}

/**
 * Det(B) = b₀₀b₁₁ − b₀₁b₁₀ for B = Ř·(a,b)⊗(c,d), in the per-family
 * closed forms.
 */
template <typename Scalar>
Complex<Scalar> closed_form_det(const FamilySpec<Scalar> &spec, const SpectralPoint<Scalar> &p,
                                const ProductFactors<Scalar> &f) {
    using C = Complex<Scalar>;
    const auto psi = f.state();
    const C a00 = psi.a00();
    const C a01 = psi.a01();
    const C a10 = psi.a10();
    const C a11 = psi.a11();
    const C i(0, 1);
    const C q = spec.q;
    const C qi = C(1) / q;
    const C s(spec.s());
    const C t = spec.t;
    const C one(1);
    switch (spec.family) {
    case Family::SixNonStd:
    case Family::SixStd: {
        const Scalar th = p.authority() == SpectralView::Theta
                              ? p.theta()
                              : SpectralPoint<Scalar>::theta_of_x(p.x(),
                                                                  ThetaConvention::ThetaHalf);
        const Scalar g = spec.gamma();
        const C sg(std::sinh(g));
        const C st(std::sin(th));
        const C e = std::polar(Scalar(1), th);
        const C b01b10 = (sg * sg - st * st) * a01 * a10 -
                         i * st * sg * (a01 * a01 * e + a10 * a10 / e);
        if (spec.family == Family::SixNonStd) {
            return st * (C(2) * a00 * a11 * st + i * (a01 * a01 * e + a10 * a10 / e) * sg);
        }
        const C sm = std::sinh(C(g, -th));
        return sm * sm * a00 * a11 - b01b10;
    }
    case Family::EightI: {
        const C u = p.u();
        return u * (q * a11 * a11 - qi * a00 * a00 + s * a01 * a01 - s * a10 * a10);
    }
    case Family::EightII: {
        const C u = p.u();
        const C z = spec.z();
        const C b00b11 = (one + (C(2) - z * z) * u * u) * a00 * a11 +
                         u * (qi * (one + (one - t) * u) * a00 * a00 +
                              q * (one + (t - one) * u) * a11 * a11);
        const C b01b10 = (one + z * z * u * u) * a01 * a10 + s * u * z * (a01 * a01 + a10 * a10);
        return b00b11 - b01b10;
    }
    case Family::EightIII: {
        const C u = p.u();
        const C b00b11 = (one + t * t * u * u) * a00 * a11 + u * t * (q * a11 * a11 + qi * a00 * a00);
        const C b01b10 = (one + t * t * u * u) * a00 * a11 + s * u * t * (a01 * a01 + a10 * a10);
        return b00b11 - b01b10;
    }
    case Family::EightIV: {
        const C u = p.u();
        const C k = one + t * u;
        const C m = u + t;
        const C b00b11 = (t * t + u * u) * k * k * a00 * a11 +
                         u * t * k * k * (qi * a00 * a00 + q * a11 * a11);
        const C b01b10 = (one + t * t * u * u) * m * m * a00 * a11 +
                         s * u * t * m * m * (a01 * a01 + a10 * a10);
        return b00b11 - b01b10;
    }
    case Family::BellPhi:
        break;
    }
    throw DomainError("no closed-form determinant for bell-phi");
}

template <typename Scalar> struct LocusCheck {
    bool on_locus = false;
    bool det_vanishes = false;
    Complex<Scalar> det;
    Complex<Scalar> locus_value;

    [[nodiscard]] bool agree() const { return on_locus == det_vanishes; }
    /// True when the factors lie on the locus and the output is a product state.
    [[nodiscard]] bool holds() const { return on_locus && det_vanishes; }
};

/**
 * The product states that eight1 and eight3 leave unentangled:
 *   eight1:  (d² ∓ q⁻¹c²)(qb² ± a²) = 0,
 *   eight3:  (a² ∓ q b²)(q⁻¹c² ∓ d²) = 0.
 */
template <typename Scalar>
LocusCheck<Scalar> nonentangling_locus_check(const FamilySpec<Scalar> &spec,
                                             const SpectralPoint<Scalar> &p,
                                             const ProductFactors<Scalar> &f,
                                             Scalar tol = Scalar(1e-10)) {
    using C = Complex<Scalar>;
    const C q = spec.q;
    const C qi = C(1) / q;
    const C s(spec.s());
    const auto &[a, b, c, d] = f;
    LocusCheck<Scalar> out;
    switch (spec.family) {
    case Family::EightI:
        out.locus_value = (d * d - s * qi * c * c) * (q * b * b + s * a * a);
        break;
    case Family::EightIII:
        out.locus_value = (a * a - s * q * b * b) * (qi * c * c - s * d * d);
        break;
    default:
        throw DomainError("the non-entangling locus is defined for eight1 and eight3 only");
    }
    const Scalar scale = std::pow(std::max({std::abs(a), std::abs(b), Scalar(1e-300)}), 2) *
                         std::pow(std::max({std::abs(c), std::abs(d), Scalar(1e-300)}), 2) *
                         std::max(Scalar(1), std::norm(q)) * std::max(Scalar(1), std::norm(qi));
    out.on_locus = std::abs(out.locus_value) <= tol * scale;
    const Matrix4<Scalar> r = detail::gate_scaled(build_R(spec, p));
    const auto psi = f.state();
    out.det = concurrence_det(apply_gate(r, psi));
    out.det_vanishes = std::abs(out.det) <= tol * psi.a.squaredNorm();
    return out;
}

} // namespace yaxter
