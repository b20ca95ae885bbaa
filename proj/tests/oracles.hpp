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
 * Reference computations for the tests, written with explicit index loops
 * so that they share no code with the library.
 */
#pragma once

#include <array>
#include <complex>
#include <functional>
#include <random>

#include <Eigen/Dense>

namespace oracle {

using C = std::complex<double>;
using M2 = Eigen::Matrix<C, 2, 2>;
using M4 = Eigen::Matrix<C, 4, 4>;
using M8 = Eigen::Matrix<C, 8, 8>;

inline M4 kron22(const M2 &a, const M2 &b) {
    M4 out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l)
                    out(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
    return out;
}

/// R acting on strands 1,2 of three qubits.
inline M8 on12(const M4 &r) {
    M8 out = M8::Zero();
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
                for (int d = 0; d < 2; ++d)
                    for (int e = 0; e < 2; ++e)
                        out(4 * a + 2 * b + c, 4 * d + 2 * e + c) = r(2 * a + b, 2 * d + e);
    return out;
}

/// R acting on strands 2,3 of three qubits.
inline M8 on23(const M4 &r) {
    M8 out = M8::Zero();
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
                for (int e = 0; e < 2; ++e)
                    for (int f = 0; f < 2; ++f)
                        out(4 * a + 2 * b + c, 4 * a + 2 * e + f) = r(2 * b + c, 2 * e + f);
    return out;
}

inline M8 mul(const M8 &a, const M8 &b) {
    M8 out = M8::Zero();
    for (int i = 0; i < 8; ++i)
        for (int k = 0; k < 8; ++k)
            for (int j = 0; j < 8; ++j)
                out(i, j) += a(i, k) * b(k, j);
    return out;
}

inline double braid(const M4 &b) {
    const M8 x = on12(b), y = on23(b);
    return (mul(mul(x, y), x) - mul(mul(y, x), y)).norm();
}

/// Ř12(x)Ř23(xy)Ř12(y) − Ř23(y)Ř12(xy)Ř23(x).
inline double qybe(const std::function<M4(C)> &r, C x, C y) {
    const M8 lhs = mul(mul(on12(r(x)), on23(r(x * y))), on12(r(y)));
    const M8 rhs = mul(mul(on23(r(y)), on12(r(x * y))), on23(r(x)));
    return (lhs - rhs).norm() / std::max(1.0, lhs.norm());
}

/// e^{−iHθ} by scaling and squaring a truncated Taylor series.
inline M4 expm_series(const M4 &h, double theta) {
    M4 a = C(0, -theta) * h;
    int squarings = 0;
    while (a.norm() > 0.5) {
        a /= 2;
        ++squarings;
    }
    M4 term = M4::Identity(), sum = M4::Identity();
    for (int k = 1; k < 30; ++k) {
        term = term * a / double(k);
        sum += term;
    }
    for (int i = 0; i < squarings; ++i) {
        sum = sum * sum;
    }
    return sum;
}

inline double unitarity(const M4 &u) { return (u * u.adjoint() - M4::Identity()).norm(); }

/// a00 a11 − a01 a10.
inline C det(const Eigen::Matrix<C, 4, 1> &a) { return a(0) * a(3) - a(1) * a(2); }

inline M2 sx() { M2 m; m << 0, 1, 1, 0; return m; }
inline M2 sy() { M2 m; m << 0, C(0, -1), C(0, 1), 0; return m; }
inline M2 sz() { M2 m; m << 1, 0, 0, -1; return m; }
inline M2 id2() { return M2::Identity(); }

inline M4 cnot() {
    M4 m = M4::Zero();
    m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1;
    return m;
}

/// Best c with a ≈ c·b, then the remaining mismatch.
inline double proportional(const M4 &a, const M4 &b) {
    const C c = (b.adjoint() * a).trace() / (b.adjoint() * b).trace();
    return (a - c * b).norm() / std::max(1e-300, a.norm());
}

struct Rng {
    std::mt19937_64 gen{12345};
    double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(gen); }
    C phase() { return std::polar(1.0, uniform(0, 6.283185307179586)); }
    C complex(double r = 1) { return {uniform(-r, r), uniform(-r, r)}; }
    M4 matrix() {
        M4 m;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) m(i, j) = complex();
        return m;
    }
    M4 hermitian() {
        const M4 m = matrix();
        return (m + m.adjoint()) / 2.0;
    }
};

} // namespace oracle
