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
#include <catch_amalgamated.hpp>

#include <numbers>

#include <yaxter/baxterize.hpp>
#include <yaxter/verify.hpp>

#include "oracles.hpp"

using namespace yaxter;
using oracle::C;
using oracle::M4;
using Spec = FamilySpec<double>;
using P = SpectralPoint<double>;

TEST_CASE("spectral parameter views", "[baxterize]") {
    CHECK(std::abs(P::from_x(C(1)).u()) == 0.0);
    const double th = 0.8;
    const P p = P::from_x(std::polar(1.0, th), ThetaConvention::ThetaFull);
    CHECK(std::abs(p.u() - C(0, -std::tan(th / 2))) < 1e-14);
    CHECK(std::abs(p.theta() - th) < 1e-14);
    const P half = P::from_theta(th, ThetaConvention::ThetaHalf);
    CHECK(std::abs(half.x() - std::polar(1.0, 2 * th)) < 1e-14);
    CHECK(std::abs(half.u() - C(0, -std::tan(th))) < 1e-14);
    CHECK(std::abs(P::from_theta(th, ThetaConvention::Tangent).x() - std::tan(th)) < 1e-14);

    const C ux = P::from_x(C(0.5)).u();
    const C uy = P::from_x(C(2.0)).u();
    CHECK(std::abs(ux - 1.0 / 3) < 1e-15);
    CHECK(std::abs((ux + uy) / (1.0 + ux * uy)) < 1e-15);
    CHECK(std::abs(P::from_x(C(1.0)).u()) == 0.0);

    const P back = reparam(reparam(p, SpectralView::U, ThetaConvention::ThetaFull),
                           SpectralView::X, ThetaConvention::ThetaFull);
    CHECK(std::abs(back.x() - p.x()) < 1e-14);
    CHECK(back.authority() == SpectralView::X);

    CHECK_THROWS_AS(P::from_x(C(-1)).u(), DomainError);
}

TEST_CASE("two-eigenvalue Yang-Baxterization", "[baxterize]") {
    const C q(0.6, 0.8);
    for (Sign sg : {Sign::Plus, Sign::Minus}) {
        const Spec s = Spec::eight_one(q, sg);
        const M4 b = build_b(s);
        const auto l = eigenvalues_of(s);
        CHECK((yb_two(b, l[0], l[1], C(0)) - b).norm() == 0.0);
        CHECK((yb_two(b, l[0], l[1], C(1)) - 2.0 * M4::Identity()).norm() < 1e-14);

        const C x(0.3, -0.2);
        const double sv = sign_value(sg);
        M4 shown;
        shown << 1.0 + x, 0, 0, q * (1.0 - x),
                 0, 1.0 + x, sv * (1.0 - x), 0,
                 0, -sv * (1.0 - x), 1.0 + x, 0,
                 -(1.0 - x) / q, 0, 0, 1.0 + x;
        CHECK((yb_two(b, l[0], l[1], x) - shown).norm() < 1e-14);
        CHECK((build_R(s, P::from_x(x)) - shown).norm() < 1e-14);

        const C x1(0.2, 0.1), x2(-0.7, 0.4);
        const M4 lhs = yb_two(b, l[0], l[1], x1) + yb_two(b, l[0], l[1], x2);
        const M4 rhs = yb_two(b, l[0], l[1], x1 + x2) + b;
        CHECK((lhs - rhs).norm() < 1e-14);
    }
}

TEST_CASE("six-vertex non-standard R(x)", "[baxterize]") {
    const C q(1.4, 0.3), x(0.5, 0.7);
    M4 shown;
    shown << q - x / q, 0, 0, 0,
             0, (q - 1.0 / q) * x, 1.0 - x, 0,
             0, 1.0 - x, q - 1.0 / q, 0,
             0, 0, 0, q * x - 1.0 / q;
    const Spec s = Spec::six_nonstd(q);
    CHECK((build_R(s, P::from_x(x)) - shown).norm() < 1e-14);
    const M4 b = build_b(s);
    CHECK((yb_two(b, q, -1.0 / q, x) - (b - x * b.inverse())).norm() < 1e-13);
}

TEST_CASE("six-vertex theta gauge", "[baxterize]") {
    const double g = 0.4, th = 0.6;
    const Spec s = Spec::six_gamma(Family::SixNonStd, g);
    const C i(0, 1);
    M4 shown;
    shown << std::sinh(C(g, -th)), 0, 0, 0,
             0, std::exp(i * th) * std::sinh(g), -i * std::sin(th), 0,
             0, -i * std::sin(th), std::exp(-i * th) * std::sinh(g), 0,
             0, 0, 0, std::sinh(C(g, th));
    CHECK((six_vertex_theta_form(s, th) - shown).norm() < 1e-14);
    const M4 r = build_R(s, P::from_theta(th, ThetaConvention::ThetaHalf));
    CHECK((r - 2.0 * std::exp(i * th) * shown).norm() < 1e-13);
}

TEST_CASE("eight2 R(x) display", "[baxterize]") {
    const double t = 0.7;
    const C q(0.6, 0.8), x(0.3, 0.4);
    const Spec s = Spec::eight_two(t, q, Sign::Minus);
    const M4 r = build_R(s, P::from_x(x));
    const C z = std::sqrt(C(t * t - 2 * t + 2));
    CHECK(std::abs(r(0, 0) - (2.0 - t * (1.0 - x))) < 1e-14);
    CHECK(std::abs(r(3, 3) - (2.0 * x + t * (1.0 - x))) < 1e-14);
    CHECK(std::abs(r(0, 3) - q * (1.0 - x)) < 1e-14);
    CHECK(std::abs(r(3, 0) - (1.0 - x) / q) < 1e-14);
    CHECK(std::abs(r(1, 1) - (1.0 + x)) < 1e-14);
    CHECK(std::abs(std::abs(r(1, 2)) - std::abs(z * (1.0 - x))) < 1e-14);
}

TEST_CASE("three-eigenvalue Yang-Baxterization", "[baxterize]") {
    const C t(0.7), q(0.6, 0.8), x(0.4, 0.3);
    const Spec s = Spec::eight_three(t, q, Sign::Plus);
    const M4 b = build_b(s);
    const M4 bi = b.inverse();
    const M4 r1 = yb_three(b, ordered_eigenvalues(t, EigOrdering::First), x);
    CHECK((r1 + (x - 1.0) * (b + x * (1.0 - t * t) * bi)).norm() < 1e-13);
    const M4 r2 = yb_three(b, ordered_eigenvalues(t, EigOrdering::Second), x);
    CHECK(oracle::proportional(r2, b - x * (1.0 - t * t) * bi) < 1e-13);

    for (EigOrdering o : {EigOrdering::Second, EigOrdering::Third}) {
        const M4 one = yb_three(b, ordered_eigenvalues(t, o), C(1));
        CHECK(oracle::proportional(one, M4::Identity()) < 1e-14);
    }

    const Spec s4 = Spec::eight_four(t, q, Sign::Plus);
    const M4 r3 = yb_three(build_b(s4), ordered_eigenvalues(t, EigOrdering::Third), x);
    const C g1 = 1.0 + t + x * (1.0 - t), g2 = 1.0 + t - x * (1.0 - t);
    const M4 r4 = build_R(s4, P::from_x(x));
    CHECK(std::abs(r4(0, 0) - t * (1.0 + x) * g1) < 1e-14);
    CHECK(std::abs(r4(1, 1) - (1.0 + x) * g2) < 1e-14);
    CHECK(std::abs(r4(0, 3) - q * (1.0 - x) * g1) < 1e-14);
    CHECK(oracle::proportional(r3, r4) < 1e-13);

    CHECK_THROWS_AS(yb_three(b, {C(1), C(1), C(2)}, x), DegenerateSpectrumError);
    CHECK_THROWS_AS(yb_three(b, {C(5), C(1), C(2)}, x), SpectrumMismatchError);
}

TEST_CASE("R(0) recovers b", "[baxterize]") {
    Sampler rng(11);
    for (Family f : kAllFamilies) {
        const Spec s = sample_spec<double>(f, rng, false);
        const M4 r0 = build_R(s, P::from_x(C(0)));
        INFO(family_name(f));
        if (f == Family::SixNonStd || f == Family::SixStd || f == Family::EightI) {
            CHECK((r0 - build_b(s)).norm() < 1e-12);
        } else {
            CHECK(oracle::proportional(r0, build_b(s)) < 1e-12);
        }
    }
}

TEST_CASE("every R(x) satisfies the QYBE", "[baxterize]") {
    Sampler rng(3);
    oracle::Rng pts;
    for (Family f : kAllFamilies) {
        const Spec s = sample_spec<double>(f, rng, false);
        for (int n = 0; n < 50; ++n) {
            const C x = pts.phase() * pts.uniform(0.5, 1.5);
            const C y = pts.phase() * pts.uniform(0.5, 1.5);
            INFO(family_name(f));
            CHECK(oracle::qybe([&](C z) { return build_R(s, P::from_x(z)); }, x, y) < 1e-9);
        }
    }
    const Spec s3 = Spec::eight_three(C(0.7), C(0.6, 0.8), Sign::Minus);
    for (EigOrdering o : {EigOrdering::First, EigOrdering::Second}) {
        for (int n = 0; n < 20; ++n) {
            const C x = pts.phase() * pts.uniform(0.5, 1.5);
            const C y = pts.phase() * pts.uniform(0.5, 1.5);
            CHECK(oracle::qybe([&](C z) { return baxterize(s3, z, o); }, x, y) < 1e-9);
        }
    }
}

TEST_CASE("rational form composes by (u+v)/(1+uv)", "[baxterize]") {
    oracle::Rng pts;
    const Spec s = Spec::eight_one(C(0, 1), Sign::Plus);
    for (int n = 0; n < 20; ++n) {
        const C u = pts.complex(0.6), v = pts.complex(0.6);
        const C w = (u + v) / (1.0 + u * v);
        using oracle::on12, oracle::on23, oracle::mul;
        const auto r = [&](C a) { return build_R_u(s, a); };
        const auto lhs = mul(mul(on12(r(u)), on23(r(w))), on12(r(v)));
        const auto rhs = mul(mul(on23(r(v)), on12(r(w))), on23(r(u)));
        CHECK((lhs - rhs).norm() < 1e-10);
    }
}

TEST_CASE("orderings are tied to their families", "[baxterize]") {
    const Spec s = Spec::eight_three(C(0.7), C(1), Sign::Plus);
    CHECK_THROWS_AS(build_R(s, P::from_x(C(0.5)), EigOrdering::Third), DomainError);
}
