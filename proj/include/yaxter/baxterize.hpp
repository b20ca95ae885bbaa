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
 * Yang–Baxterization of braid-group representations and the closed-form
 * Ř(x)-matrices of each family.
 */
#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "errors.hpp"
#include "linalg.hpp"

namespace yaxter {

enum class SpectralView { X, Theta, U };

/**
 * How θ maps to x: x = e^{2iθ} (six-vertex), x = e^{iθ} (eight-vertex
 * II/III/IV) or x = tanθ (the real-x domain of eight-vertex I and b±(φ)).
 */
enum class ThetaConvention { ThetaHalf, ThetaFull, Tangent };

constexpr ThetaConvention default_convention(Family f) {
    switch (f) {
    case Family::SixNonStd:
    case Family::SixStd:
        return ThetaConvention::ThetaHalf;
    case Family::EightI:
    case Family::BellPhi:
        return ThetaConvention::Tangent;
    default:
        return ThetaConvention::ThetaFull;
    }
}

/**
 * A spectral parameter. One of x, θ, u is stored; the other two are
 * computed on request.
 */
template <typename Scalar> class SpectralPoint {
  public:
    using C = Complex<Scalar>;

    static SpectralPoint from_x(C x, ThetaConvention conv = ThetaConvention::ThetaFull) {
        return SpectralPoint(SpectralView::X, x, conv);
    }
    static SpectralPoint from_theta(Scalar theta,
                                    ThetaConvention conv = ThetaConvention::ThetaFull) {
        return SpectralPoint(SpectralView::Theta, C(theta, 0), conv);
    }
    static SpectralPoint from_u(C u, ThetaConvention conv = ThetaConvention::ThetaFull) {
        return SpectralPoint(SpectralView::U, u, conv);
    }

    [[nodiscard]] SpectralView authority() const { return view_; }
    [[nodiscard]] ThetaConvention convention() const { return conv_; }

    [[nodiscard]] C x() const {
        switch (view_) {
        case SpectralView::X:
            return value_;
        case SpectralView::Theta:
            return x_of_theta(value_.real(), conv_);
        case SpectralView::U:
            if (value_ == C(-1)) {
                throw DomainError("u = -1 has no finite x");
            }
            return (C(1) - value_) / (C(1) + value_);
        }
        return value_;
    }

    [[nodiscard]] Scalar theta() const {
        if (view_ == SpectralView::Theta) {
            return value_.real();
        }
        return theta_of_x(x(), conv_);
    }

    [[nodiscard]] C u() const {
        if (view_ == SpectralView::U) {
            return value_;
        }
        const C xv = x();
        if (xv == C(-1)) {
            throw DomainError("x = -1: u = (1-x)/(1+x) is undefined");
        }
        return (C(1) - xv) / (C(1) + xv);
    }

    static C x_of_theta(Scalar theta, ThetaConvention conv) {
        switch (conv) {
        case ThetaConvention::ThetaHalf:
            return std::polar(Scalar(1), 2 * theta);
        case ThetaConvention::ThetaFull:
            return std::polar(Scalar(1), theta);
        case ThetaConvention::Tangent:
            if (std::abs(std::cos(theta)) < Scalar(1e-15)) {
                throw DomainError("cos(theta) = 0: x = tan(theta) is infinite");
            }
            return C(std::tan(theta), 0);
        }
        return C(0);
    }

    static Scalar theta_of_x(C x, ThetaConvention conv, Scalar tol = Scalar(1e-10)) {
        switch (conv) {
        case ThetaConvention::ThetaHalf:
        case ThetaConvention::ThetaFull:
            if (std::abs(std::abs(x) - 1) > tol) {
                throw DomainError("theta is defined only for |x| = 1");
            }
            return conv == ThetaConvention::ThetaHalf ? std::arg(x) / 2 : std::arg(x);
        case ThetaConvention::Tangent:
            if (std::abs(x.imag()) > tol) {
                throw DomainError("theta = atan(x) is defined only for real x");
            }
            return std::atan(x.real());
        }
        return 0;
    }

  private:
    SpectralPoint(SpectralView v, C value, ThetaConvention conv)
        : view_(v), value_(value), conv_(conv) {}

    SpectralView view_;
    C value_;
    ThetaConvention conv_;
};

/// The same point with a different authoritative view.
template <typename Scalar>
SpectralPoint<Scalar> reparam(const SpectralPoint<Scalar> &p, SpectralView target,
                              ThetaConvention convention) {
    using P = SpectralPoint<Scalar>;
    const P q = p.authority() == SpectralView::Theta ? P::from_theta(p.theta(), convention)
                : p.authority() == SpectralView::U   ? P::from_u(p.u(), convention)
                                                     : P::from_x(p.x(), convention);
    switch (target) {
    case SpectralView::X:
        return P::from_x(q.x(), convention);
    case SpectralView::Theta:
        return P::from_theta(q.theta(), convention);
    case SpectralView::U:
        return P::from_u(q.u(), convention);
    }
    return q;
}

/// Ř(x) = b + λ1λ2·x·b⁻¹ for a BGR with two eigenvalues.
template <typename Derived>
auto yb_two(const Eigen::MatrixBase<Derived> &b, typename Derived::Scalar lambda1,
            typename Derived::Scalar lambda2, typename Derived::Scalar x,
            Tolerance<detail::RealOf<Derived>> tol = {}) {
    spectral_projectors(b, lambda1, lambda2, tol);
    const auto inv = inverse(b, "yb_two");
    detail::PlainSquare<Derived> out = b + (lambda1 * lambda2 * x) * inv;
    return out;
}

/// Eigenvalue triple in one of its three arrangements.
enum class EigOrdering { First, Second, Third };

/// (1+t, 1−t, t−1), (1+t, t−1, 1−t) and (1−t, 1+t, t−1).
template <typename Scalar>
std::array<Complex<Scalar>, 3> ordered_eigenvalues(Complex<Scalar> t, EigOrdering o) {
    using C = Complex<Scalar>;
    const C a = C(1) + t;
    const C b = C(1) - t;
    const C c = t - C(1);
    switch (o) {
    case EigOrdering::First:
        return {a, b, c};
    case EigOrdering::Second:
        return {a, c, b};
    case EigOrdering::Third:
        return {b, a, c};
    }
    return {a, b, c};
}

/**
 * Ř(x) = λ1λ3 x(x−1) b⁻¹ + (λ1+λ2+λ3+λ1λ3/λ2) x − (x−1) b.
 *
 * The formula has no general proof; callers must check the QYBE.
 */
template <typename Derived>
auto yb_three(const Eigen::MatrixBase<Derived> &b,
              const std::array<typename Derived::Scalar, 3> &lambda,
              typename Derived::Scalar x, Tolerance<detail::RealOf<Derived>> tol = {}) {
    using C = typename Derived::Scalar;
    using Real = detail::RealOf<Derived>;
    const auto &[l1, l2, l3] = lambda;
    const Real scale = std::max({std::abs(l1), std::abs(l2), std::abs(l3)});
    if (std::abs(l2) <= tol.bound(scale)) {
        throw DomainError("yb_three: lambda2 = 0");
    }
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
            if (std::abs(lambda[i] - lambda[j]) <= tol.bound(scale)) {
                throw DegenerateSpectrumError("yb_three: eigenvalues must be distinct");
            }
        }
    }
    const auto id = identity_like(b);
    const Real bnorm = b.norm();
    const Real residual =
        ((b - l1 * id) * (b - l2 * id) * (b - l3 * id)).norm();
    if (residual > tol.bound((bnorm + scale) * (bnorm + scale) * (bnorm + scale))) {
        throw SpectrumMismatchError("yb_three: eigenvalues do not annihilate b");
    }
    const auto inv = inverse(b, "yb_three");
    const C sum = l1 + l2 + l3 + l1 * l3 / l2;
    detail::PlainSquare<Derived> out =
        (l1 * l3 * x * (x - C(1))) * inv + (sum * x) * id - (x - C(1)) * b;
    return out;
}

namespace detail {

template <typename Scalar>
Matrix4<Scalar> eight_vertex(Complex<Scalar> w1, Complex<Scalar> w2, Complex<Scalar> w3,
                             Complex<Scalar> w4, Complex<Scalar> w5, Complex<Scalar> w6,
                             Complex<Scalar> w7, Complex<Scalar> w8) {
    const Complex<Scalar> o(0);
    Matrix4<Scalar> m;
    m << w1, o, o, w7,
         o, w5, w3, o,
         o, w4, w6, o,
         w8, o, o, w2;
    return m;
}

template <typename Scalar>
void require_ordering(const FamilySpec<Scalar> &spec, std::optional<EigOrdering> ordering) {
    if (!ordering) {
        return;
    }
    if (spec.family == Family::EightIII && *ordering == EigOrdering::Third) {
        throw DomainError("the third ordering is the eight4 family");
    }
    if (spec.family == Family::EightIV && *ordering != EigOrdering::Third) {
        throw DomainError("eight4 is the third ordering; use eight3 for first/second");
    }
    if (!uses_three_eigenvalue_b(spec.family)) {
        throw DomainError("an eigenvalue ordering applies only to eight3/eight4");
    }
}

} // namespace detail

/**
 * Six-vertex Ř in the θ-gauge, x = e^{2iθ}, q = e^γ:
 *
 *     [[sinh(γ−iθ), 0, 0, 0], [0, e^{iθ} sinhγ, −i sinθ, 0],
 *      [0, −i sinθ, e^{−iθ} sinhγ, 0], [0, 0, 0, sinh(γ±iθ)]]
 *
 * which is Ř(x)/(2e^{iθ}); the last entry has + for the non-standard and
 * − for the standard representation.
 */
template <typename Scalar>
Matrix4<Scalar> six_vertex_theta_form(const FamilySpec<Scalar> &spec, Scalar theta) {
    using C = Complex<Scalar>;
    if (!is_six_vertex(spec.family)) {
        throw DomainError("six_vertex_theta_form needs a six-vertex family");
    }
    validate(spec);
    if (std::abs(spec.q.imag()) > Scalar(1e-12) || spec.q.real() <= 0) {
        throw DomainError("the theta form needs q = e^gamma real positive");
    }
    const Scalar g = std::log(spec.q.real());
    const C i(0, 1);
    const C sh(std::sinh(g), 0);
    const C mid = -i * std::sin(theta);
    const C last = spec.family == Family::SixNonStd ? std::sinh(C(g, theta))
                                                   : std::sinh(C(g, -theta));
    return detail::eight_vertex<Scalar>(std::sinh(C(g, -theta)), last, mid, mid,
                                        std::polar(Scalar(1), theta) * sh,
                                        std::polar(Scalar(1), -theta) * sh, C(0), C(0));
}

/**
 * Ř±(θ) = cosθ·b±(φ) + sinθ·b±(φ)⁻¹ for the unitary b±(φ). Off the real
 * x line the same ray is used, (b + x b⁻¹)/√(1+x²).
 */
template <typename Scalar>
Matrix4<Scalar> bell_phi_R(const FamilySpec<Scalar> &spec, const SpectralPoint<Scalar> &p) {
    using C = Complex<Scalar>;
    const Matrix4<Scalar> b = build_b(spec);
    const Matrix4<Scalar> binv = b.adjoint();
    if (p.authority() == SpectralView::Theta && p.convention() == ThetaConvention::Tangent) {
        const Scalar th = p.theta();
        return std::cos(th) * b + std::sin(th) * binv;
    }
    const C x = p.x();
    return (b + x * binv) / std::sqrt(C(1) + x * x);
}

/**
 * The displayed closed-form Ř(x) of each family.
 *
 * Eight-vertex III uses the first ordering unless `ordering` is Second;
 * eight-vertex IV is the third ordering in the g₁, g₂ form.
 */
template <typename Scalar>
Matrix4<Scalar> build_R(const FamilySpec<Scalar> &spec, const SpectralPoint<Scalar> &p,
                        std::optional<EigOrdering> ordering = std::nullopt) {
    using C = Complex<Scalar>;
    validate(spec);
    detail::require_ordering(spec, ordering);
    if (spec.family == Family::BellPhi) {
        return bell_phi_R(spec, p);
    }
    const C x = p.x();
    if (!is_finite(x)) {
        throw DomainError("spectral parameter x must be finite");
    }
    const C q = spec.q;
    const C qi = C(1) / q;
    const C s(spec.s());
    const C one(1);
    const C m = one - x;
    const C pl = one + x;
    switch (spec.family) {
    case Family::SixNonStd:
    case Family::SixStd: {
        const C last = spec.family == Family::SixNonStd ? q * x - qi : q - x * qi;
        return detail::eight_vertex<Scalar>(q - qi * x, last, m, m, (q - qi) * x, q - qi,
                                            C(0), C(0));
    }
    case Family::EightI:
        return detail::eight_vertex<Scalar>(pl, pl, s * m, -s * m, pl, pl, q * m, -qi * m);
    case Family::EightII: {
        const C t = spec.t;
        const C z = spec.z();
        return detail::eight_vertex<Scalar>(C(2) - t * m, C(2) * x + t * m, s * z * m,
                                            s * z * m, pl, pl, q * m, qi * m);
    }
    case Family::EightIII: {
        const C t = spec.t;
        if (ordering == EigOrdering::Second) {
            return detail::eight_vertex<Scalar>(t * pl, t * pl, s * t * pl, s * t * pl, m, m,
                                                q * m, qi * m);
        }
        return detail::eight_vertex<Scalar>(t * m, t * m, s * t * m, s * t * m, pl, pl,
                                            q * pl, qi * pl);
    }
    case Family::EightIV: {
        const C t = spec.t;
        const C g1 = one + t + x * (one - t);
        const C g2 = one + t - x * (one - t);
        return detail::eight_vertex<Scalar>(t * pl * g1, t * pl * g1, s * t * m * g2,
                                            s * t * m * g2, pl * g2, pl * g2, q * m * g1,
                                            qi * m * g1);
    }
    case Family::BellPhi:
        break;
    }
    throw DomainError("build_R: unsupported family");
}

/// Eight-vertex IV with the outer block free of g and the middle block times g = g₂/g₁.
template <typename Scalar>
Matrix4<Scalar> eight_four_g_view(const FamilySpec<Scalar> &spec,
                                  const SpectralPoint<Scalar> &p) {
    using C = Complex<Scalar>;
    if (spec.family != Family::EightIV) {
        throw DomainError("the g view belongs to eight4");
    }
    validate(spec);
    const C x = p.x();
    const C t = spec.t;
    const C one(1);
    const C g1 = one + t + x * (one - t);
    const C g2 = one + t - x * (one - t);
    if (std::abs(g1) < Scalar(1e-14)) {
        throw DomainError("g1 = 0: the g view is undefined at this point");
    }
    const C g = g2 / g1;
    const C s(spec.s());
    const C m = one - x;
    const C pl = one + x;
    return detail::eight_vertex<Scalar>(t * pl, t * pl, s * t * m * g, s * t * m * g, pl * g,
                                        pl * g, spec.q * m, m / spec.q);
}

/**
 * Ř in the rational variable u = (1−x)/(1+x). The eight-vertex families
 * use their displayed u-forms; the six-vertex forms are Ř(x)/(1+x).
 */
template <typename Scalar>
Matrix4<Scalar> build_R_u(const FamilySpec<Scalar> &spec, Complex<Scalar> u,
                          std::optional<EigOrdering> ordering = std::nullopt) {
    using C = Complex<Scalar>;
    validate(spec);
    detail::require_ordering(spec, ordering);
    if (!is_finite(u)) {
        throw DomainError("u must be finite");
    }
    const C q = spec.q;
    const C qi = C(1) / q;
    const C s(spec.s());
    const C one(1);
    switch (spec.family) {
    case Family::EightI:
        return detail::eight_vertex<Scalar>(one, one, s * u, -s * u, one, one, q * u, -qi * u);
    case Family::EightII: {
        const C t = spec.t;
        const C z = spec.z();
        return detail::eight_vertex<Scalar>(one + (one - t) * u, one + (t - one) * u,
                                            s * z * u, s * z * u, one, one, q * u, qi * u);
    }
    case Family::EightIII:
        if (ordering != EigOrdering::Second) {
            const C t = spec.t;
            return detail::eight_vertex<Scalar>(t * u, t * u, s * t * u, s * t * u, one, one,
                                                q, qi);
        }
        break;
    case Family::EightIV: {
        const C t = spec.t;
        const C a = one + t * u;
        const C b = u + t;
        return detail::eight_vertex<Scalar>(t * a, t * a, s * t * u * b, s * t * u * b, b, b,
                                            q * u * a, qi * u * a);
    }
    default:
        break;
    }
    if (u == C(-1)) {
        throw DomainError("u = -1 has no finite x");
    }
    const auto p = SpectralPoint<Scalar>::from_u(u);
    return build_R(spec, p, ordering) * ((one + u) / C(2));
}

/// True when Ř is a multiple of the identity (the x = 1 point of most families).
template <typename Derived> bool is_degenerate(const Eigen::MatrixBase<Derived> &r) {
    return proportionality_defect(r, identity_like(r)) < detail::RealOf<Derived>(1e-12);
}

/**
 * Ř(x) through the Yang–Baxterization formulas, from build_b and
 * eigenvalues_of: two eigenvalues use yb_two; eight3/eight4 use yb_three
 * with the given ordering (First for eight3 and Third for eight4 by default).
 */
template <typename Scalar>
Matrix4<Scalar> baxterize(const FamilySpec<Scalar> &spec, Complex<Scalar> x,
                          std::optional<EigOrdering> ordering = std::nullopt) {
    const Matrix4<Scalar> b = build_b(spec);
    if (uses_three_eigenvalue_b(spec.family)) {
        detail::require_ordering(spec, ordering);
        const EigOrdering o = ordering.value_or(
            spec.family == Family::EightIV ? EigOrdering::Third : EigOrdering::First);
        return yb_three(b, ordered_eigenvalues(spec.t, o), x);
    }
    const auto l = eigenvalues_of(spec);
    if (l.size() != 2) {
        throw DegenerateSpectrumError("baxterize: expected two distinct eigenvalues");
    }
    return yb_two(b, l[0], l[1], x);
}

} // namespace yaxter
