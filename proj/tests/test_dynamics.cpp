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

#include <yaxter/dynamics.hpp>

#include "oracles.hpp"

using namespace yaxter;
using oracle::C;
using oracle::M2;
using oracle::M4;
using Spec = FamilySpec<double>;
constexpr double kPi = std::numbers::pi;

namespace {

M2 in_plane(double a) { return std::cos(a) * oracle::sx() + std::sin(a) * oracle::sy(); }

} // namespace

TEST_CASE("eight1 Hamiltonian at x = 1", "[dynamics]") {
    for (double phi : {0.0, 0.7, 2.1}) {
        for (Sign sg : {Sign::Plus, Sign::Minus}) {
            const Spec s = Spec::eight_one(std::polar(1.0, -phi), sg);
            const double sv = sign_value(sg);
            M4 shown = M4::Zero();
            shown(0, 3) = -std::polar(1.0, -phi);
            shown(1, 2) = -sv;
            shown(2, 1) = sv;
            shown(3, 0) = std::polar(1.0, phi);
            shown *= C(0, 0.5);
            CHECK((hamiltonian_fd(s, 1.0).h - shown).norm() < 1e-9);
            CHECK((hamiltonian_closed(s, 1.0).h - shown).norm() < 1e-14);

            const M4 bn = build_b(s) / std::sqrt(2.0);
            for (double x : {0.5, 1.0, 2.0}) {
                const M4 expected = C(0, -1.0 / (1 + x * x)) * bn * bn;
                CHECK((hamiltonian_fd(s, x).h - expected).norm() < 1e-9);
            }
        }
    }
}

TEST_CASE("b(phi) Hamiltonian does not depend on theta", "[dynamics]") {
    const Spec s = Spec::bell_phi(0.6, Sign::Plus);
    const M4 h0 = hamiltonian_fd(s, 0.0).h;
    for (double th : {-1.2, 0.3, 1.4}) {
        CHECK((hamiltonian_fd(s, th).h - h0).norm() < 1e-9);
    }
    CHECK((hamiltonian_closed(s, 0.9).h - h0).norm() < 1e-9);

    const auto pd = pauli_decompose(hamiltonian_closed(Spec::eight_one(C(0.6, 0.8), Sign::Plus), 1.0).h);
    Eigen::Matrix2cd block;
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            const bool xy = (a == 1 || a == 2) && (b == 1 || b == 2);
            if (xy) {
                block(a - 1, b - 1) = pd.c[a][b];
            } else {
                CHECK(std::abs(pd.c[a][b]) < 1e-14);
            }
        }
    }
    // ½ σ_n1 ⊗ σ_n2 has a rank-one real coefficient block of norm ½.
    CHECK(std::abs(block.determinant()) < 1e-14);
    CHECK(std::abs(block.norm() - 0.5) < 1e-14);
    CHECK(block.imag().norm() < 1e-14);
}

TEST_CASE("six-vertex Hamiltonian", "[dynamics]") {
    const double g = 0.5, th = 0.3;
    for (Family f : {Family::SixNonStd, Family::SixStd}) {
        const Spec s = Spec::six_gamma(f, g);
        const M4 h = hamiltonian_fd(s, th).h;
        CHECK(hermiticity_defect(h) < 1e-9);
        const auto pd = pauli_decompose(h);
        for (int a = 0; a < 4; ++a) {
            for (int b = 0; b < 4; ++b) {
                const std::string k = PauliDecomp<double>::key(a, b);
                bool expected = k == "iz" || k == "zi" || k == "xx" || k == "yy";
                if (f == Family::SixStd) {
                    expected = expected || k == "ii" || k == "zz";
                }
                INFO(k);
                CHECK((std::abs(pd.c[a][b]) > 1e-6) == expected);
            }
        }
        // The closed-form corner coefficient coth(gamma) is not what the derivative gives.
        const auto rep = check_closed_form(s, th);
        CHECK_FALSE(rep.agree);
        REQUIRE(rep.fitted_corner);
        CHECK(std::abs(*rep.fitted_corner - std::cosh(g)) < 1e-8);
        M4 off = hamiltonian_closed(s, th).h - h;
        off(0, 0) = off(3, 3) = 0;
        CHECK(off.norm() < 1e-9);
    }
}

TEST_CASE("eight-vertex closed forms agree with finite differences", "[dynamics]") {
    Sampler rng(31);
    for (Family f : {Family::EightII, Family::EightIII, Family::EightIV}) {
        for (int n = 0; n < 10; ++n) {
            Spec s = sample_spec<double>(f, rng, true);
            s.t = C(s.t.real() + s.t.imag());
            INFO(family_name(f));
            CHECK(check_closed_form(s, rng.uniform(-2.5, 2.5)).agree);
            CHECK((hamiltonian_theta0(s) - hamiltonian_fd(s, 0.0).h).norm() < 1e-9);
        }
    }
}

TEST_CASE("t = 1 Hamiltonians", "[dynamics]") {
    const double phi = 0.7;
    const M2 n1 = in_plane(phi / 2);
    const M4 shown = 0.5 * (oracle::kron22(n1, n1) - M4::Identity());
    const Spec e2 = Spec::eight_two(1.0, std::polar(1.0, -phi), Sign::Plus);
    const Spec e3 = Spec::eight_three(C(1), std::polar(1.0, -phi), Sign::Plus);
    CHECK((hamiltonian_t1(e2) - shown).norm() < 1e-14);
    CHECK((hamiltonian_fd(e2, 0.4).h - shown).norm() < 1e-9);
    CHECK((hamiltonian_fd(e3, -0.8).h - shown).norm() < 1e-9);

    for (double th : {0.0, 0.5, 2.0}) {
        const M4 u = std::polar(1.0, th / 2) *
                     (std::cos(th / 2) * M4::Identity() -
                      C(0, std::sin(th / 2)) * oracle::kron22(n1, n1));
        CHECK((evolve(hamiltonian_t1(e2), th) - u).norm() < 1e-13);
    }
}

TEST_CASE("finite differences", "[dynamics]") {
    const UnitaryCurve<double> constant = [](double) {
        return oracle::expm_series(oracle::kron22(oracle::sx(), oracle::sz()), 0.4);
    };
    CHECK(hamiltonian_fd(constant, 0.3).norm() < 1e-10);
    CHECK_THROWS_AS(hamiltonian_fd(constant, 0.3, 1e-9), DomainError);

    const Spec s = Spec::eight_two(0.5, C(0.6, 0.8), Sign::Minus);
    const auto curve = unitary_curve(s);
    const M4 exact = hamiltonian_closed(s, 0.4).h;
    const double e1 = (hamiltonian_fd(curve, 0.4, 1e-2, false) - exact).norm();
    const double e2 = (hamiltonian_fd(curve, 0.4, 5e-3, false) - exact).norm();
    CHECK(e1 / e2 > 3.5);
    CHECK(e1 / e2 < 4.5);
}

TEST_CASE("Hamiltonians are Hermitian and generate the curve", "[dynamics]") {
    Sampler rng(41);
    oracle::Rng pts;
    for (Family f : kAllFamilies) {
        Spec s = sample_spec<double>(f, rng, true);
        s.t = C(s.t.real() + s.t.imag());
        const double p = f == Family::EightI ? pts.uniform(-2, 2) : pts.uniform(-1.4, 1.4);
        const M4 h = hamiltonian_fd(s, p).h;
        INFO(family_name(f));
        CHECK(hermiticity_defect(h) < 1e-9);
        const auto curve = unitary_curve(s);
        for (int n = 0; n < 10; ++n) {
            Vector4<double> psi;
            for (int i = 0; i < 4; ++i) {
                psi(i) = pts.complex();
            }
            CHECK(schrodinger_residual(curve, p, psi) < 1e-8);
        }
    }
}

TEST_CASE("Pauli decomposition", "[dynamics]") {
    const auto pd = pauli_decompose(oracle::kron22(oracle::sz(), oracle::id2()));
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            CHECK(pd.c[a][b] == C(a == 3 && b == 0 ? 1 : 0));
        }
    }
    CHECK(PauliDecomp<double>::key(3, 0) == "zi");
    oracle::Rng rng;
    for (int n = 0; n < 10; ++n) {
        const M4 m = rng.matrix();
        CHECK((pauli_decompose(m).reconstruct() - m).norm() < 1e-13);
    }
}

TEST_CASE("evolution", "[dynamics]") {
    const M4 h = hamiltonian_closed(Spec::eight_one(C(0.6, 0.8), Sign::Plus), 1.0).h;
    CHECK((evolve(h, 0.0) - M4::Identity()).norm() < 1e-15);
    // H = ½ σ⊗σ with (σ⊗σ)² = 1.
    const M4 ss = 2.0 * h;
    CHECK((ss * ss - M4::Identity()).norm() < 1e-14);
    for (double th : {0.4, 1.9}) {
        const M4 u = std::cos(th / 2) * M4::Identity() - C(0, std::sin(th / 2)) * ss;
        CHECK((evolve(h, th) - u).norm() < 1e-14);
    }
}

TEST_CASE("braiding matrices are evolutions", "[dynamics]") {
    for (Sign sg : {Sign::Plus, Sign::Minus}) {
        CHECK(braiding_evolution_check(sg, kPi / 4, 0.8) < 1e-12);
    }
    oracle::Rng rng;
    for (int n = 0; n < 50; ++n) {
        const Sign sg = n % 2 ? Sign::Plus : Sign::Minus;
        CHECK(braiding_evolution_check(sg, rng.uniform(-1.5, 1.5), rng.uniform(0, 2 * kPi)) <
              1e-10);
    }
    const M4 r = build_R(Spec::bell_phi(0, Sign::Minus),
                         SpectralPoint<double>::from_theta(0, ThetaConvention::Tangent));
    const M4 xy = oracle::kron22(oracle::sx(), oracle::sy());
    CHECK((r - oracle::expm_series(xy, -kPi / 4)).norm() < 1e-12);
}
