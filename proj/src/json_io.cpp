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
#include "json_io.hpp"

#include <cmath>

#include <yaxter/errors.hpp>

namespace yaxter::io {

json complex_json(C z) { return json::array({z.real() + 0.0, z.imag() + 0.0}); }

C complex_from_json(const json &j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw DomainError("complex entries are [re, im] pairs");
    }
    const C z(j[0].get<double>(), j[1].get<double>());
    if (!is_finite(z)) {
        throw DomainError("complex entries must be finite");
    }
    return z;
}

json matrix_json(const CMat<double> &m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            row.push_back(complex_json(m(i, j)));
        }
        rows.push_back(std::move(row));
    }
    json out;
    out["dim"] = m.rows();
    out["entries"] = std::move(rows);
    return out;
}

CMat<double> matrix_from_json(const json &j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("entries")) {
        throw DimensionError("matrix JSON needs \"dim\" and \"entries\"");
    }
    const int n = j.at("dim").get<int>();
    if (n != 2 && n != 4) {
        throw DimensionError("matrix dim must be 2 or 4");
    }
    const auto &e = j.at("entries");
    if (!e.is_array() || e.size() != static_cast<std::size_t>(n)) {
        throw DimensionError("entry rows do not match dim");
    }
    CMat<double> m(n, n);
    for (int r = 0; r < n; ++r) {
        if (!e[r].is_array() || e[r].size() != static_cast<std::size_t>(n)) {
            throw DimensionError("entry columns do not match dim");
        }
        for (int c = 0; c < n; ++c) {
            m(r, c) = complex_from_json(e[r][c]);
        }
    }
    return m;
}

json state_json(const TwoQubitState<double> &s) {
    json out;
    out["a00"] = complex_json(s.a00());
    out["a01"] = complex_json(s.a01());
    out["a10"] = complex_json(s.a10());
    out["a11"] = complex_json(s.a11());
    return out;
}

json report_json(const ResidualReport<double> &r) {
    json worst = json::object();
    for (const auto &[name, value] : r.worst_case) {
        worst[name] = complex_json(value);
    }
    json out;
    out["residual"] = r.residual;
    out["tolerance"] = r.tolerance;
    out["pass"] = r.pass;
    out["worst_case"] = std::move(worst);
    return out;
}

json pauli_json(const PauliDecomp<double> &p) {
    json coeffs = json::object();
    for (int mu = 0; mu < 4; ++mu) {
        for (int nu = 0; nu < 4; ++nu) {
            coeffs[PauliDecomp<double>::key(mu, nu)] = complex_json(p.c[mu][nu]);
        }
    }
    json out;
    out["coeffs"] = std::move(coeffs);
    return out;
}

json decomposition_json(const GateDecomposition<double> &d) {
    json factors = json::array();
    for (const auto &f : d.factors) {
        json jf;
        jf["label"] = f.label;
        jf["matrix"] = matrix_json(f.matrix);
        if (f.local) {
            jf["local"] = json::array(
                {matrix_json(f.local->first.u), matrix_json(f.local->second.u)});
        }
        factors.push_back(std::move(jf));
    }
    json diag = json::object();
    for (const auto &[name, value] : d.diagnostics) {
        diag[name] = value;
    }
    json out;
    out["target"] = matrix_json(d.target);
    out["product"] = matrix_json(d.product);
    out["factors"] = std::move(factors);
    out["residual"] = d.residual;
    out["phase_aligned_residual"] = d.phase_aligned_residual;
    out["diagnostics"] = std::move(diag);
    return out;
}

std::string dump(const json &j, bool pretty) { return j.dump(pretty ? 2 : -1); }

} // namespace yaxter::io
