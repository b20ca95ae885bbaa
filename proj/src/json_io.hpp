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
 * JSON wire format: matrices as {"dim": n, "entries": [[[re, im], ...], ...]}.
 */
#pragma once

#include <json.hpp>

#include <yaxter/dynamics.hpp>
#include <yaxter/entangle.hpp>
#include <yaxter/gates.hpp>
#include <yaxter/linalg.hpp>
#include <yaxter/verify.hpp>

namespace yaxter::io {

using json = nlohmann::ordered_json;
using C = std::complex<double>;

json complex_json(C z);
C complex_from_json(const json &j);

json matrix_json(const CMat<double> &m);
CMat<double> matrix_from_json(const json &j);

template <int N> json matrix_json(const SquareMatrix<double, N> &m) {
    return matrix_json(CMat<double>(m));
}

json state_json(const TwoQubitState<double> &s);
json report_json(const ResidualReport<double> &r);
json pauli_json(const PauliDecomp<double> &p);
json decomposition_json(const GateDecomposition<double> &d);

/// Serialized output; numbers use the shortest round-trip form.
std::string dump(const json &j, bool pretty);

} // namespace yaxter::io
