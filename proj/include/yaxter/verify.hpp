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
 * Residual checks for the braid relation, the QYBE in its multiplicative,
 * additive and rational forms, and the two unitarity conditions.
 */
#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "baxterize.hpp"
#include "catalog.hpp"
#include "errors.hpp"
#include "linalg.hpp"

namespace yaxter {

template <typename Scalar> using RBuilder = std::function<Matrix4<Scalar>(Complex<Scalar>)>;
template <typename Scalar> using ThetaBuilder = std::function<Matrix4<Scalar>(Scalar)>;

template <typename Scalar> struct ResidualReport {
    Scalar residual = 0;
    Scalar tolerance = Scalar(1e-10);
    bool pass = true;
    /// Named coordinates of the sample with the largest residual.
    std::vector<std::pair<std::string, Complex<Scalar>>> worst_case;

    void record(Scalar r, std::vector<std::pair<std::string, Complex<Scalar>>> where) {
        if (worst_case.empty() || !(r <= residual)) {
            residual = r;
            worst_case = std::move(where);
        }
        pass = residual < tolerance;
    }
};

namespace detail {

template <typename Scalar>
Scalar qybe_from_products(const Matrix4<Scalar> &ra, const Matrix4<Scalar> &rab,
                          const Matrix4<Scalar> &rb) {
    const Matrix2<Scalar> id = Matrix2<Scalar>::Identity();
    const Matrix8<Scalar> lhs = kron(ra, id) * kron(id, rab) * kron(rb, id);
    const Matrix8<Scalar> rhs = kron(id, rb) * kron(rab, id) * kron(id, ra);
    return (lhs - rhs).norm();
}

} // namespace detail

/// ‖Ř₁(x)Ř₂(xy)Ř₁(y) − Ř₂(y)Ř₁(xy)Ř₂(x)‖ with Ř₁ = Ř⊗1, Ř₂ = 1⊗Ř.
template <typename Scalar>
Scalar qybe_residual(const RBuilder<Scalar> &r, Complex<Scalar> x, Complex<Scalar> y) {
    return detail::qybe_from_products<Scalar>(r(x), r(x * y), r(y));
}

/// The same with additive composition θ₁ + θ₂.
template <typename Scalar>
Scalar qybe_residual_additive(const ThetaBuilder<Scalar> &r, Scalar theta1, Scalar theta2) {
    return detail::qybe_from_products<Scalar>(r(theta1), r(theta1 + theta2), r(theta2));
}

/// The same with rational composition (u+v)/(1+uv).
template <typename Scalar>
Scalar qybe_residual_rational(const RBuilder<Scalar> &r, Complex<Scalar> u, Complex<Scalar> v) {
    const Complex<Scalar> den = Complex<Scalar>(1) + u * v;
    if (std::abs(den) < Scalar(1e-14)) {
        throw DomainError("1 + uv = 0: the composed u is infinite");
    }
    return detail::qybe_from_products<Scalar>(r(u), r((u + v) / den), r(v));
}

template <typename Scalar>
RBuilder<Scalar> make_builder(FamilySpec<Scalar> spec,
                              std::optional<EigOrdering> ordering = std::nullopt) {
    const auto conv = default_convention(spec.family);
    return [spec, ordering, conv](Complex<Scalar> x) {
        return build_R(spec, SpectralPoint<Scalar>::from_x(x, conv), ordering);
    };
}

template <typename Scalar>
RBuilder<Scalar> make_u_builder(FamilySpec<Scalar> spec,
                                std::optional<EigOrdering> ordering = std::nullopt) {
    return [spec, ordering](Complex<Scalar> u) { return build_R_u(spec, u, ordering); };
}

/**
 * Ř as a function of θ for the unit-circle families: the six-vertex θ-gauge
 * with x = e^{2iθ}, and Ř(e^{iθ}) for eight-vertex II/III/IV.
 */
template <typename Scalar>
ThetaBuilder<Scalar> make_theta_builder(FamilySpec<Scalar> spec,
                                        std::optional<EigOrdering> ordering = std::nullopt) {
    if (is_six_vertex(spec.family)) {
        return [spec](Scalar th) { return six_vertex_theta_form(spec, th); };
    }
    if (spec.family == Family::EightI || spec.family == Family::BellPhi) {
        throw DomainError("eight1 and bell-phi are parametrized on the real x line; "
                          "use the rational u form");
    }
    return [spec, ordering](Scalar th) {
        return build_R(spec, SpectralPoint<Scalar>::from_theta(th, ThetaConvention::ThetaFull),
                       ordering);
    };
}

/**
 * Ř†(x̄): the family rebuilt at conjugated parameters (q̄, t̄, x̄) and
 * transposed.
 */
template <typename Scalar>
Matrix4<Scalar> conjugate_partner(const FamilySpec<Scalar> &spec,
                                  const SpectralPoint<Scalar> &p,
                                  std::optional<EigOrdering> ordering = std::nullopt) {
    FamilySpec<Scalar> c = spec;
    c.q = std::conj(spec.q);
    c.t = std::conj(spec.t);
    c.phi = -spec.phi;
    if (p.authority() == SpectralView::Theta && p.convention() == ThetaConvention::Tangent) {
        return build_R(c, p, ordering).transpose();
    }
    return build_R(c, SpectralPoint<Scalar>::from_x(std::conj(p.x()), p.convention()), ordering)
        .transpose();
}

template <typename Scalar> struct UnitarityResult {
    Scalar rho_est = 0;
    Scalar residual = 0;
};

/// ρ_est = Re Tr(Ř·Ř†(x̄))/4 and the two-sided defect from ρ_est·1.
template <typename Scalar>
UnitarityResult<Scalar> unitarity_residual(const Matrix4<Scalar> &r,
                                           const Matrix4<Scalar> &rconj) {
    const Matrix4<Scalar> id = Matrix4<Scalar>::Identity();
    const Matrix4<Scalar> left = r * rconj;
    const Matrix4<Scalar> right = rconj * r;
    UnitarityResult<Scalar> out;
    out.rho_est = left.trace().real() / 4;
    if (!(out.rho_est > Scalar(1e-300))) {
        throw DomainError("degenerate normalization: rho_est <= 0");
    }
    out.residual = (left - out.rho_est * id).norm() + (right - out.rho_est * id).norm();
    return out;
}

/// ‖(ρ^{−1/2}Ř)(ρ^{−1/2}Ř)† − 1‖.
template <typename Scalar>
Scalar normalized_unitarity_defect(const Matrix4<Scalar> &r, Scalar rho) {
    return unitarity_defect((r / std::sqrt(rho)).eval());
}

/// Violated spectral-parameter constraint of the unitary domain, if any.
template <typename Scalar>
std::optional<std::string> spectral_domain_violation(const FamilySpec<Scalar> &spec,
                                                     const SpectralPoint<Scalar> &p,
                                                     Scalar tol = Scalar(1e-10)) {
    if (p.authority() == SpectralView::Theta && p.convention() != ThetaConvention::Tangent &&
        spec.family != Family::EightIII && spec.family != Family::EightIV) {
        return std::nullopt;
    }
    const Complex<Scalar> x = p.x();
    const bool unit = std::abs(std::abs(x) - 1) <= tol;
    const bool real = std::abs(x.imag()) <= tol;
    switch (spec.family) {
    case Family::SixNonStd:
    case Family::SixStd:
        if (!unit) {
            return "six-vertex unitarity requires |x| = 1";
        }
        return std::nullopt;
    case Family::EightI:
        if (!real) {
            return "eight1 unitarity requires real x";
        }
        return std::nullopt;
    case Family::BellPhi:
        if (!real) {
            return "bell-phi unitarity requires real x = tan(theta)";
        }
        return std::nullopt;
    case Family::EightII:
        if (!unit) {
            return "eight2 unitarity requires |x| = 1";
        }
        return std::nullopt;
    case Family::EightIII: {
        const Scalar phi = std::arg(spec.t);
        if (std::abs(std::cos(phi)) < Scalar(1e-12)) {
            if (!real) {
                return "eight3 with imaginary t requires real x";
            }
            return std::nullopt;
        }
        const Scalar tn = std::tan(phi);
        const Scalar sec2 = 1 / (std::cos(phi) * std::cos(phi));
        const Scalar a = x.real();
        const Scalar b = x.imag() - tn;
        if (std::abs(a * a + b * b - sec2) > tol * std::max(Scalar(1), sec2)) {
            return "eight3 unitarity requires x on the circle a^2 + (b - tan(phi))^2 = "
                   "sec^2(phi), t = |t| e^{i phi}";
        }
        return std::nullopt;
    }
    case Family::EightIV:
        if (std::abs(spec.t.imag()) <= tol) {
            if (!unit) {
                return "eight4 with real t requires |x| = 1";
            }
            return std::nullopt;
        }
        if (!real) {
            return "eight4 with imaginary t requires real x";
        }
        return std::nullopt;
    }
    return std::nullopt;
}

template <typename Scalar>
std::optional<std::string> unitary_domain_violation(const FamilySpec<Scalar> &spec,
                                                    const SpectralPoint<Scalar> &p) {
    if (auto v = parameter_domain_violation(spec)) {
        return v;
    }
    return spectral_domain_violation(spec, p);
}

template <typename Scalar> struct NormFactor {
    /// ρ as the family's closed form states it.
    Scalar rho = 0;
    /// ρ_est of build_R equals gauge·ρ.
    Scalar gauge = 1;
    std::string domain_note;
};

/**
 * The closed-form normalization factor ρ on the family's unitary domain.
 * Throws DomainError naming the violated constraint off the domain.
 */
template <typename Scalar>
NormFactor<Scalar> rho_formula(const FamilySpec<Scalar> &spec, const SpectralPoint<Scalar> &p) {
    using C = Complex<Scalar>;
    validate(spec);
    if (auto v = unitary_domain_violation(spec, p)) {
        throw DomainError(*v);
    }
    NormFactor<Scalar> out;
    switch (spec.family) {
    case Family::SixNonStd:
    case Family::SixStd: {
        const Scalar g = spec.gamma();
        const Scalar th = p.authority() == SpectralView::Theta
                              ? p.theta()
                              : SpectralPoint<Scalar>::theta_of_x(p.x(),
                                                                  ThetaConvention::ThetaHalf);
        const Scalar sg = std::sinh(g);
        const Scalar st = std::sin(th);
        out.rho = sg * sg + st * st;
        out.gauge = 4;
        out.domain_note = "q = e^gamma real, |x| = 1, x = e^{2i theta}; build_R carries the "
                          "scalar 2e^{i theta}, gauge 4";
        return out;
    }
    case Family::EightI: {
        const Scalar x = p.x().real();
        out.rho = 2 * (1 + x * x);
        out.domain_note = "|q| = 1, real x";
        return out;
    }
    case Family::BellPhi:
        out.rho = 1;
        out.domain_note = "b(phi) is unitary; real x = tan(theta)";
        return out;
    case Family::EightII: {
        const C x = p.x();
        const Scalar tm = spec.t.real() - 1;
        out.rho = 4 + tm * tm * (2 - 2 * x.real());
        out.domain_note = "real t, |q| = 1, |x| = 1";
        return out;
    }
    case Family::EightIII: {
        const C x = p.x();
        const Scalar at2 = std::norm(spec.t);
        const Scalar phi = std::arg(spec.t);
        if (std::abs(std::cos(phi)) < Scalar(1e-12)) {
            out.rho = at2 * std::norm(C(1) - x) + std::norm(C(1) + x);
            out.domain_note = "imaginary t, |q| = 1, real x";
            return out;
        }
        out.rho = 2 * (1 + at2) + 2 * x.imag() * std::tan(phi) * (1 + at2) +
                  2 * x.real() * (1 - at2);
        out.domain_note = "t = |t| e^{i phi}, |q| = 1, x on the circle "
                          "a^2 + (b - tan(phi))^2 = sec^2(phi)";
        return out;
    }
    case Family::EightIV: {
        const C x = p.x();
        const C t = spec.t;
        const C g1 = C(1) + t + x * (C(1) - t);
        const Scalar at2 = std::norm(t);
        const bool real_t = std::abs(t.imag()) <= Scalar(1e-10);
        const bool real_x = std::abs(x.imag()) <= Scalar(1e-10);
        const Scalar rho_real_t = 2 * (1 + at2) - (1 - at2) * 2 * x.real();
        const Scalar xr = x.real();
        const Scalar rho_imag_t = (1 - xr) * (1 - xr) + at2 * (1 + xr) * (1 + xr);
        if (real_t && real_x) {
            out.rho = rho_real_t;
            if (std::abs(rho_real_t - rho_imag_t) > Scalar(1e-10) * std::max(Scalar(1), out.rho)) {
                throw StructuralError("eight4: real-t and imaginary-t rho branches disagree at "
                                      "an overlap point");
            }
            out.domain_note = "real t and real x: both rho branches agree";
        } else if (real_t) {
            out.rho = rho_real_t;
            out.domain_note = "real t, |x| = 1, rho = |g2|^2";
        } else {
            out.rho = rho_imag_t;
            out.domain_note = "imaginary t, real x, rho = |g2|^2";
        }
        out.gauge = std::norm(g1);
        out.domain_note += "; the g1,g2 form carries gauge |g1|^2";
        return out;
    }
    }
    return out;
}

/**
 * c with Ř(x)Ř(x⁻¹) = c·1. Throws StructuralError when the product is not
 * a multiple of the identity.
 */
template <typename Scalar>
Complex<Scalar> inverse_unitarity(const RBuilder<Scalar> &r, Complex<Scalar> x,
                                  Tolerance<Scalar> tol = {}) {
    if (x == Complex<Scalar>(0)) {
        throw DomainError("inverse unitarity needs x != 0");
    }
    const Matrix4<Scalar> prod = r(x) * r(Complex<Scalar>(1) / x);
    const Complex<Scalar> c = prod.trace() / Scalar(4);
    const Scalar defect = (prod - c * Matrix4<Scalar>::Identity()).norm();
    if (defect > tol.bound(prod.norm())) {
        throw StructuralError("R(x)R(1/x) is not proportional to the identity");
    }
    return c;
}

/// Closed forms of Ř(x)Ř(x⁻¹); eight4 refers to the g view.
template <typename Scalar>
Complex<Scalar> inverse_unitarity_closed(const FamilySpec<Scalar> &spec, Complex<Scalar> x) {
    using C = Complex<Scalar>;
    validate(spec);
    const C s = x + C(1) / x;
    const C t2 = spec.t * spec.t;
    switch (spec.family) {
    case Family::SixNonStd:
    case Family::SixStd:
        return spec.q * spec.q + C(1) / (spec.q * spec.q) - s;
    case Family::EightI:
        return C(2) * s;
    case Family::EightII: {
        const C z2 = spec.z() * spec.z();
        return C(2) * (C(1) + z2) + (C(1) - z2) * s;
    }
    case Family::EightIII:
        return C(2) * (C(1) + t2) + (C(1) - t2) * s;
    case Family::EightIV:
        return C(2) * (C(1) + t2) + (t2 - C(1)) * s;
    case Family::BellPhi:
        break;
    }
    throw DomainError("no closed inverse-unitarity form for bell-phi");
}

/// Seeded uniform sampling with a fixed 53-bit mapping, reproducible across platforms.
class Sampler {
  public:
    explicit Sampler(std::uint64_t seed) : engine_(seed) {}

    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double a, double b) { return a + (b - a) * uniform01(); }
    std::complex<double> unit_circle() {
        return std::polar(1.0, uniform(0, 2 * std::numbers::pi));
    }
    bool coin() { return (engine_() >> 63) != 0; }

  private:
    std::mt19937_64 engine_;
};

/**
 * A random parameter point. With `unitary` the point lies in the family's
 * unitary parameter domain; otherwise q and t range over complex values.
 * Eight2 keeps t away from 1, where b is singular; eight3/eight4 keep t
 * away from the collapsing values 0, ±1.
 */
template <typename Scalar>
FamilySpec<Scalar> sample_spec(Family f, Sampler &rng, bool unitary = true) {
    using C = Complex<Scalar>;
    FamilySpec<Scalar> s;
    s.family = f;
    s.sign = rng.coin() ? Sign::Plus : Sign::Minus;
    auto away = [&rng](double lo, double hi) {
        for (;;) {
            const double v = rng.uniform(lo, hi);
            if (std::abs(v) > 0.15 && std::abs(std::abs(v) - 1) > 0.15) {
                return v;
            }
        }
    };
    const C phase(rng.unit_circle());
    const double modulus = unitary ? 1.0 : rng.uniform(0.5, 2.0);
    switch (f) {
    case Family::SixNonStd:
    case Family::SixStd: {
        const double g = rng.uniform(0.1, 1.0) * (rng.coin() ? 1 : -1);
        s.q = unitary ? C(std::exp(g), 0) : C(std::exp(g)) * phase;
        break;
    }
    case Family::EightI:
        s.q = modulus * phase;
        break;
    case Family::EightII:
        s.q = modulus * phase;
        for (;;) {
            const double v = rng.uniform(-2, 3);
            if (std::abs(v - 1) > 0.1) {
                s.t = C(v, 0);
                break;
            }
        }
        break;
    case Family::EightIII:
        s.q = modulus * phase;
        s.t = unitary ? C(away(-2.5, 2.5), 0) : std::polar(Scalar(away(0.2, 2.5)),
                                                           Scalar(rng.uniform(0, 6.283)));
        break;
    case Family::EightIV:
        s.q = modulus * phase;
        if (unitary) {
            const double v = away(-2.5, 2.5);
            s.t = rng.coin() ? C(v, 0) : C(0, v);
        } else {
            s.t = std::polar(Scalar(away(0.2, 2.5)), Scalar(rng.uniform(0, 6.283)));
        }
        break;
    case Family::BellPhi:
        s.phi = rng.uniform(0, 2 * std::numbers::pi);
        break;
    }
    return s;
}

/// A random spectral point on the family's unitary domain, away from x = 1.
template <typename Scalar>
SpectralPoint<Scalar> sample_point(const FamilySpec<Scalar> &spec, Sampler &rng) {
    using C = Complex<Scalar>;
    using P = SpectralPoint<Scalar>;
    const auto conv = default_convention(spec.family);
    auto angle = [&rng]() { return rng.uniform(0.1, 2 * std::numbers::pi - 0.1); };
    auto real_x = [&rng]() {
        for (;;) {
            const double v = rng.uniform(-3, 3);
            if (std::abs(v - 1) > 0.05) {
                return v;
            }
        }
    };
    switch (spec.family) {
    case Family::SixNonStd:
    case Family::SixStd:
        return P::from_theta(angle() / 2, conv);
    case Family::EightI:
        return P::from_x(C(real_x(), 0), conv);
    case Family::BellPhi:
        return P::from_theta(rng.uniform(-1.4, 1.4), conv);
    case Family::EightII:
        return P::from_theta(angle(), conv);
    case Family::EightIII: {
        const Scalar phi = std::arg(spec.t);
        if (std::abs(std::cos(phi)) < Scalar(1e-12)) {
            return P::from_x(C(real_x(), 0), conv);
        }
        const Scalar r = std::abs(1 / std::cos(phi));
        return P::from_x(C(0, std::tan(phi)) + std::polar(r, Scalar(angle())), conv);
    }
    case Family::EightIV:
        if (std::abs(spec.t.imag()) <= Scalar(1e-12)) {
            return P::from_theta(angle(), conv);
        }
        return P::from_x(C(real_x(), 0), conv);
    }
    return P::from_x(C(0), conv);
}

/// Multiplicative QYBE over random pairs from the family's spectral domain.
template <typename Scalar>
ResidualReport<Scalar> scan_qybe(const FamilySpec<Scalar> &spec, int samples, Sampler &rng,
                                 Scalar tol, std::optional<EigOrdering> ordering = std::nullopt) {
    ResidualReport<Scalar> rep;
    rep.tolerance = tol;
    const auto r = make_builder(spec, ordering);
    for (int i = 0; i < samples; ++i) {
        const auto x = sample_point(spec, rng).x();
        const auto y = sample_point(spec, rng).x();
        rep.record(qybe_residual<Scalar>(r, x, y), {{"x", x}, {"y", y}});
    }
    return rep;
}

/**
 * Unitarity over random domain points: the normalized defect of
 * ρ^{−1/2}Ř and the relative mismatch between ρ_est and gauge·ρ.
 */
template <typename Scalar>
ResidualReport<Scalar> scan_unitarity(const FamilySpec<Scalar> &spec, int samples,
                                      Sampler &rng, Scalar tol) {
    ResidualReport<Scalar> rep;
    rep.tolerance = tol;
    for (int i = 0; i < samples; ++i) {
        const auto p = sample_point(spec, rng);
        const Matrix4<Scalar> r = build_R(spec, p);
        const auto u = unitarity_residual(r, conjugate_partner(spec, p));
        const auto nf = rho_formula(spec, p);
        const Scalar expected = nf.gauge * nf.rho;
        const Scalar mismatch = std::abs(u.rho_est - expected) / expected;
        const Scalar defect = normalized_unitarity_defect(r, u.rho_est);
        rep.record(std::max(mismatch, defect), {{"x", p.x()}});
    }
    return rep;
}

} // namespace yaxter
