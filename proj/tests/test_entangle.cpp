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

#include <yaxter/entangle.hpp>
#include <yaxter/gates.hpp>

#include "oracles.hpp"

using namespace yaxter;
using oracle::C;
using oracle::M4;
using Spec = FamilySpec<double>;
using P = SpectralPoint<double>;
using State = TwoQubitState<double>;

TEST_CASE("apply_gate", "[entangle]") {
    const State psi(C(0.1, 0.2), C(0.3), C(-0.4, 0.5), C(0.6));
    CHECK((apply_gate(M4::Identity().eval(), psi).a - psi.a).norm() == 0.0);

    const C a(0.3, 0.1), b(-0.2), c(0.5, 0.5), d(0, 1);
    M4 phase;
    phase << a, 0, 0, 0, 0, 0, d, 0, 0, c, 0, 0, 0, 0, 0, b;
    const State out = apply_gate(phase, ProductFactors<double>{1, 1, 1, 1}.state());
    CHECK(out.a00() == a);
    CHECK(out.a01() == d);
    CHECK(out.a10() == c);
    CHECK(out.a11() == b);

    const double phi = 0.9;
    for (Sign sg : {Sign::Plus, Sign::Minus}) {
        const State bell = apply_gate(build_b(Spec::bell_phi(phi, sg)), State::basis(0));
        const double r = 1 / std::sqrt(2.0);
        CHECK(std::abs(bell.a00() - r) < 1e-15);
        CHECK(std::abs(bell.a11() + r * std::polar(1.0, phi)) < 1e-15);
    }
}

TEST_CASE("concurrence determinant", "[entangle]") {
    CHECK(concurrence_det(ProductFactors<double>{1, 1, 1, 1}.state()) == C(0));
    const double r = 1 / std::sqrt(2.0);
    CHECK(std::abs(concurrence_det(State(r, 0, 0, r)) - 0.5) < 1e-15);

    oracle::Rng rng;
    for (int n = 0; n < 20; ++n) {
        const ProductFactors<double> f{rng.complex(), rng.complex(), rng.complex(), rng.complex()};
        CHECK(std::abs(concurrence_det(f.state())) < 1e-15);
        const State psi(rng.complex(), rng.complex(), rng.complex(), rng.complex());
        const C l = rng.complex();
        CHECK(std::abs(concurrence_det(State((l * psi.a).eval())) - l * l * concurrence_det(psi)) <
              1e-14);
        CHECK(std::abs(concurrence_det(psi) - oracle::det(psi.a)) == 0.0);
    }
}

TEST_CASE("six-vertex Det on product states", "[entangle]") {
    oracle::Rng rng;
    const double g = 0.5;
    const Spec s = Spec::six_gamma(Family::SixNonStd, g);
    for (int n = 0; n < 20; ++n) {
        const double th = rng.uniform(-3, 3);
        const ProductFactors<double> f{rng.complex(), rng.complex(), rng.complex(), rng.complex()};
        const State a = f.state();
        const C det = oracle::det(six_vertex_theta_form(s, th) * a.a);
        const C shown = std::sin(th) * (2.0 * a.a00() * a.a11() * std::sin(th) +
                                        C(0, 1) *
                                            (a.a01() * a.a01() * std::polar(1.0, th) +
                                             a.a10() * a.a10() * std::polar(1.0, -th)) *
                                            std::sinh(g));
        CHECK(std::abs(det - shown) < 1e-13);
        CHECK(std::abs(closed_form_det(s, P::from_theta(th, ThetaConvention::ThetaHalf), f) -
                       shown) < 1e-13);
    }
}

TEST_CASE("closed-form Det matches apply and det", "[entangle]") {
    Sampler rng(17);
    oracle::Rng pts;
    for (Family f : kAllFamilies) {
        if (f == Family::BellPhi) {
            continue;
        }
        for (int n = 0; n < 20; ++n) {
            const Spec s = sample_spec<double>(f, rng, true);
            const P p = sample_point(s, rng);
            const ProductFactors<double> pf{pts.complex(), pts.complex(), pts.complex(),
                                            pts.complex()};
            const M4 m = closed_form_det_matrix(s, p);
            const C direct = oracle::det(m * pf.state().a);
            const double scale = std::max(1.0, m.squaredNorm() * pf.state().a.squaredNorm());
            INFO(family_name(f));
            CHECK(std::abs(direct - closed_form_det(s, p, pf)) < 1e-12 * scale);
        }
    }
}

TEST_CASE("witness search", "[entangle]") {
    M4 swap = M4::Zero();
    swap(0, 0) = swap(1, 2) = swap(2, 1) = swap(3, 3) = 1;
    CHECK_FALSE(brylinski_witness(swap));
    CHECK(classify(swap).kind == Classification::NotEntangling);

    const auto w = brylinski_witness(cnot_R<double>());
    REQUIRE(w);
    CHECK(std::abs(oracle::det(cnot_R<double>() * w->state.a)) > 1e-8);

    const Spec six = Spec::six_gamma(Family::SixNonStd, 0.5);
    const State probe(0, 1, 0, C(0.3, 0.2));
    CHECK(std::abs(oracle::det(six_vertex_theta_form(six, 0.7) * probe.a)) > 1e-3);
}

TEST_CASE("non-entangling loci", "[entangle]") {
    const P x = P::from_x(C(0.4));
    const Spec e1 = Spec::eight_one(C(1), Sign::Plus);
    const auto hit = nonentangling_locus_check(e1, x, ProductFactors<double>{0.3, 0.8, 0.5, 0.5});
    CHECK(hit.on_locus);
    CHECK(hit.det_vanishes);

    const Spec e3 = Spec::eight_three(C(0.6), C(1), Sign::Plus);
    const auto hit3 = nonentangling_locus_check(e3, x, ProductFactors<double>{0.7, 0.7, 0.2, 0.9});
    CHECK(hit3.on_locus);
    CHECK(hit3.det_vanishes);

    oracle::Rng rng;
    const Spec e1q = Spec::eight_one(C(0.6, 0.8), Sign::Minus);
    for (int n = 0; n < 20; ++n) {
        const ProductFactors<double> f{rng.complex(), rng.complex(), rng.complex(), rng.complex()};
        const auto off = nonentangling_locus_check(e1q, P::from_x(C(rng.uniform(-3, 0.9))), f);
        CHECK_FALSE(off.on_locus);
        CHECK_FALSE(off.det_vanishes);
        CHECK(off.agree());
    }
    CHECK_THROWS_AS(nonentangling_locus_check(Spec::six_nonstd(C(2)), x,
                                              ProductFactors<double>{1, 0, 1, 0}),
                    DomainError);
}

TEST_CASE("universality classification", "[entangle]") {
    const P one = P::from_x(C(1));
    const P generic = P::from_x(std::polar(1.0, 0.8));
    const auto kind = [](const M4 &r) { return classify(r).kind; };

    CHECK(kind(build_R(Spec::six_gamma(Family::SixNonStd, 0.4), generic)) ==
          Classification::Entangling);
    CHECK(kind(build_R(Spec::six_gamma(Family::SixNonStd, 0.4), one)) ==
          Classification::NotEntangling);
    CHECK(kind(build_R(Spec::six_gamma(Family::SixStd, 0.4), generic)) ==
          Classification::Entangling);
    CHECK(kind(build_R(Spec::six_std(C(1)), generic)) == Classification::NotEntangling);
    CHECK(kind(build_R(Spec::six_nonstd(C(1)), generic)) == Classification::Entangling);

    const C q(0.6, 0.8);
    CHECK(kind(build_R(Spec::eight_one(q, Sign::Plus), P::from_x(C(0.5)))) ==
          Classification::Entangling);
    CHECK(kind(build_R(Spec::eight_one(q, Sign::Plus), one)) == Classification::NotEntangling);
    CHECK(kind(build_R(Spec::eight_two(0.4, q, Sign::Minus), generic)) ==
          Classification::Entangling);
    CHECK(kind(build_R(Spec::eight_three(C(0.4), q, Sign::Plus), generic)) ==
          Classification::Entangling);
    CHECK(kind(build_R(Spec::eight_three(C(0), q, Sign::Plus), generic)) ==
          Classification::NotEntangling);
    CHECK(kind(build_R(Spec::eight_three(C(0.4), q, Sign::Plus), one)) ==
          Classification::NotEntangling);
    CHECK(kind(build_R(Spec::eight_four(C(0.4), q, Sign::Minus), generic)) ==
          Classification::Entangling);
    CHECK(kind(build_R(Spec::eight_four(C(0, 0.4), q, Sign::Minus), P::from_x(C(0.3)))) ==
          Classification::Entangling);
}

TEST_CASE("classification flags non-unitary input", "[entangle]") {
    const auto res = classify(build_R(Spec::six_nonstd(C(1.3, 0.5)), P::from_x(C(0.7, 0.2))));
    CHECK_FALSE(res.unitary);
    CHECK(res.kind == Classification::Entangling);
}
