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

#include <yaxter/catalog.hpp>
#include <yaxter/linalg.hpp>

#include "oracles.hpp"

using namespace yaxter;
using oracle::C;
using oracle::M2;
using oracle::M4;

TEST_CASE("kron matches the index definition", "[linalg]") {
    oracle::Rng rng;
    M2 a, b;
    a << rng.complex(), rng.complex(), rng.complex(), rng.complex();
    b << rng.complex(), rng.complex(), rng.complex(), rng.complex();
    CHECK((kron(a, b) - oracle::kron22(a, b)).norm() < 1e-15);
}

TEST_CASE("kron mixed product property", "[linalg]") {
    oracle::Rng rng;
    for (int n = 0; n < 20; ++n) {
        M2 a, b, c, d;
        for (M2 *m : {&a, &b, &c, &d}) {
            *m << rng.complex(), rng.complex(), rng.complex(), rng.complex();
        }
        const M4 lhs = kron(a, b) * kron(c, d);
        const M4 rhs = kron((a * c).eval(), (b * d).eval());
        CHECK((lhs - rhs).norm() < 1e-13);
    }
}

TEST_CASE("tensor of dynamic matrices", "[linalg]") {
    CMat<double> a = pauli_x<double>();
    CMat<double> b = pauli_z<double>();
    const CMat<double> t = tensor(a, b);
    REQUIRE(t.rows() == 4);
    CHECK((M4(t) - oracle::kron22(oracle::sx(), oracle::sz())).norm() == 0.0);
}

TEST_CASE("inverse of the identity and of braid matrices", "[linalg]") {
    CHECK((inverse(M4::Identity().eval()) - M4::Identity()).norm() == 0.0);

    const M4 b = build_b(FamilySpec<double>::six_nonstd(C(2)));
    CHECK((b * inverse(b) - M4::Identity()).norm() < 1e-14);

    // b² − 2b + 2 = 0 for eigenvalues 1 ± i.
    const M4 bp = build_b(FamilySpec<double>::eight_one(C(0.6, 0.8), Sign::Plus));
    const M4 expected = (2.0 * M4::Identity() - bp) / 2.0;
    CHECK((inverse(bp) - expected).norm() < 1e-14);
}

TEST_CASE("inverse rejects singular input", "[linalg]") {
    M4 s = M4::Identity();
    s(2, 2) = 0;
    CHECK(is_singular(s));
    CHECK_THROWS_AS(inverse(s, "test point"), SingularMatrixError);
}

TEST_CASE("expm_hermitian", "[linalg]") {
    CHECK((expm_hermitian(M4::Zero().eval(), 0.7) - M4::Identity()).norm() < 1e-15);

    // e^{−iθ σ⊗σ/2} = cos(θ/2) − i sin(θ/2) σ⊗σ.
    const M4 ss = oracle::kron22(oracle::sx(), oracle::sy());
    const double th = 0.9;
    const M4 expected = std::cos(th / 2) * M4::Identity() - C(0, std::sin(th / 2)) * ss;
    CHECK((expm_hermitian((ss / 2.0).eval(), th) - expected).norm() < 1e-14);

    oracle::Rng rng;
    for (int n = 0; n < 10; ++n) {
        const M4 h = rng.hermitian();
        const M4 u = expm_hermitian(h, 0.3);
        CHECK((u - oracle::expm_series(h, 0.3)).norm() < 1e-10);
        CHECK(oracle::unitarity(u) < 1e-12);
        const M4 u12 = expm_hermitian(h, 0.5) * expm_hermitian(h, -1.2);
        CHECK((u12 - expm_hermitian(h, -0.7)).norm() < 1e-10);
    }
}

TEST_CASE("expm_hermitian rejects non-Hermitian generators", "[linalg]") {
    M4 h = M4::Zero();
    h(0, 1) = 1;
    CHECK_THROWS_AS(expm_hermitian(h, 1.0), NonHermitianError);
}

TEST_CASE("spectral projectors", "[linalg]") {
    const C q(1.7, 0);
    const M4 b = build_b(FamilySpec<double>::six_std(q));
    const C l1 = q, l2 = -1.0 / q;
    const auto p = spectral_projectors(b, l1, l2);
    CHECK((p.first * p.first - p.first).norm() < 1e-12);
    CHECK((p.second * p.second - p.second).norm() < 1e-12);
    CHECK((p.first * p.second).norm() < 1e-12);
    CHECK((l1 * p.first + l2 * p.second - b).norm() < 1e-12);

    CHECK_THROWS_AS(spectral_projectors(b, l1, l1), DegenerateSpectrumError);
    CHECK_THROWS_AS(spectral_projectors(b, l1, C(5)), SpectrumMismatchError);
}

TEST_CASE("Pauli matrices and ladder operators", "[linalg]") {
    CHECK((pauli_x<double>() - oracle::sx()).norm() == 0.0);
    CHECK((pauli_y<double>() - oracle::sy()).norm() == 0.0);
    CHECK((pauli_z<double>() - oracle::sz()).norm() == 0.0);
    CHECK((sigma_plus<double>() - (oracle::sx() + C(0, 1) * oracle::sy()) / 2.0).norm() == 0.0);
    CHECK((sigma_minus<double>() - (oracle::sx() - C(0, 1) * oracle::sy()) / 2.0).norm() == 0.0);
    CHECK(sigma_minus<double>()(1, 0) == C(1));
}

TEST_CASE("proportionality", "[linalg]") {
    oracle::Rng rng;
    const M4 a = rng.matrix();
    const C c(0.3, -2.0);
    CHECK(std::abs(proportionality(M4(c * a), a) - c) < 1e-14);
    CHECK(proportionality_defect(M4(c * a), a) < 1e-14);
    CHECK(proportionality_defect(rng.matrix(), a) > 1e-3);
}
