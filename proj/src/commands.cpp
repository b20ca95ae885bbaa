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
#include "commands.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <yaxter/baxterize.hpp>
#include <yaxter/catalog.hpp>
#include <yaxter/dynamics.hpp>
#include <yaxter/entangle.hpp>
#include <yaxter/errors.hpp>
#include <yaxter/gates.hpp>
#include <yaxter/verify.hpp>

#include "json_io.hpp"
#include "suite.hpp"

namespace yaxter {
namespace {

using C = std::complex<double>;
using M4 = Matrix4<double>;
using P = SpectralPoint<double>;
using Spec = FamilySpec<double>;
using io::json;

/// Raised for flag combinations CLI11 cannot reject by itself.
class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string family;
    std::optional<double> q, q_re, q_im, gamma;
    std::optional<double> t, t_im;
    double phi = 0;
    std::string sign = "plus";
    std::optional<double> x, x_re, x_im, theta, u, u_im;
    std::string ordering;
    int samples = 50;
    std::uint64_t seed = 42;
    double tol = 1e-10;
    std::string output = "json";
    int probes = 1000;
    std::string method = "fd";
    double step = 1e-5;
    double time = 1;
    std::string route = "theorem1";
    std::string form = "multiplicative";
    std::vector<double> a, b, c, d;
    std::string input, input2;
    std::vector<double> lambda1, lambda2;
};

double default_tolerance() {
    if (const char *env = std::getenv("YAXTER_TOL")) {
        char *end = nullptr;
        const double v = std::strtod(env, &end);
        if (end != env && *end == '\0' && v > 0 && std::isfinite(v)) {
            return v;
        }
        throw UsageError(std::string("YAXTER_TOL is not a positive number: ") + env);
    }
    return 1e-10;
}

void add_family(CLI::App *app, Options &o, bool required = true) {
    std::vector<std::string> names;
    for (Family f : kAllFamilies) {
        names.emplace_back(family_name(f));
    }
    auto *opt = app->add_option("--family", o.family, "Family name")
                    ->check(CLI::IsMember(names));
    if (required) {
        opt->required();
    }
    app->add_option("--q", o.q, "Real deformation parameter q");
    app->add_option("--q-re", o.q_re, "Re q");
    app->add_option("--q-im", o.q_im, "Im q");
    app->add_option("--gamma", o.gamma, "Six-vertex q = e^gamma");
    app->add_option("--t", o.t, "Re t");
    app->add_option("--t-im", o.t_im, "Im t");
    app->add_option("--phi", o.phi, "Phase of b(phi)");
    app->add_option("--sign", o.sign, "plus or minus")->check(CLI::IsMember({"plus", "minus"}));
}

void add_point(CLI::App *app, Options &o) {
    app->add_option("--x", o.x, "Real spectral parameter x");
    app->add_option("--x-re", o.x_re, "Re x");
    app->add_option("--x-im", o.x_im, "Im x");
    app->add_option("--theta", o.theta, "Angle theta");
    app->add_option("--u", o.u, "Re u");
    app->add_option("--u-im", o.u_im, "Im u");
}

void add_ordering(CLI::App *app, Options &o) {
    app->add_option("--ordering", o.ordering, "Eigenvalue ordering of the three-eigenvalue b")
        ->check(CLI::IsMember({"first", "second", "third"}));
}

void add_common(CLI::App *app, Options &o) {
    app->add_option("--tol", o.tol, "Tolerance")->check(CLI::PositiveNumber);
    app->add_option("--output", o.output, "json or pretty")
        ->check(CLI::IsMember({"json", "pretty"}));
}

void add_sampling(CLI::App *app, Options &o) {
    app->add_option("--samples", o.samples, "Sample count")->check(CLI::PositiveNumber);
    app->add_option("--seed", o.seed, "Random seed");
}

Spec spec_of(const Options &o) {
    const auto f = parse_family(o.family);
    if (!f) {
        throw UsageError("unknown family: " + o.family);
    }
    if (o.q && o.q_re) {
        throw UsageError("--q and --q-re are alternatives");
    }
    if (o.gamma && (o.q || o.q_re || o.q_im)) {
        throw UsageError("--gamma and --q are alternatives");
    }
    Spec s;
    s.family = *f;
    s.q = o.gamma ? C(std::exp(*o.gamma), 0) : C(o.q_re.value_or(o.q.value_or(1)), o.q_im.value_or(0));
    s.t = C(o.t.value_or(0), o.t_im.value_or(0));
    s.phi = o.phi;
    s.sign = o.sign == "minus" ? Sign::Minus : Sign::Plus;
    validate(s);
    return s;
}

std::optional<P> point_of(const Options &o, const Spec &s) {
    const int given = (o.x || o.x_re || o.x_im ? 1 : 0) + (o.theta ? 1 : 0) + (o.u || o.u_im ? 1 : 0);
    if (given > 1) {
        throw UsageError("give exactly one of x, theta, u");
    }
    if (o.x && o.x_re) {
        throw UsageError("--x and --x-re are alternatives");
    }
    const ThetaConvention conv = default_convention(s.family);
    if (o.theta) {
        return P::from_theta(*o.theta, conv);
    }
    if (o.u || o.u_im) {
        return P::from_u(C(o.u.value_or(0), o.u_im.value_or(0)), conv);
    }
    if (o.x || o.x_re || o.x_im) {
        return P::from_x(C(o.x_re.value_or(o.x.value_or(0)), o.x_im.value_or(0)), conv);
    }
    return std::nullopt;
}

P require_point(const Options &o, const Spec &s) {
    if (auto p = point_of(o, s)) {
        return *p;
    }
    throw UsageError("a spectral parameter is required (--x, --theta or --u)");
}

std::optional<EigOrdering> ordering_of(const Options &o) {
    if (o.ordering.empty()) {
        return std::nullopt;
    }
    if (o.ordering == "first") {
        return EigOrdering::First;
    }
    return o.ordering == "second" ? EigOrdering::Second : EigOrdering::Third;
}

void notices(const Spec &s, std::ostream &err) {
    for (const auto &n : catalog_notices(s)) {
        err << "notice: " << n << '\n';
    }
}

void emit(const json &j, const Options &o, std::ostream &out) {
    out << io::dump(j, o.output == "pretty") << '\n';
}

C pair_of(const std::vector<double> &v, const char *name) {
    if (v.empty()) {
        throw UsageError(std::string("--") + name + " needs RE IM");
    }
    return {v[0], v[1]};
}

json read_json(const std::string &path) {
    if (path.empty()) {
        throw UsageError("--input is required");
    }
    if (path == "-") {
        return json::parse(std::cin);
    }
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot open " + path);
    }
    return json::parse(in);
}

int cmd_catalog(const Options &o, std::ostream &out, std::ostream &err) {
    if (o.family.empty()) {
        json list = json::array();
        for (Family f : kAllFamilies) {
            list.push_back(std::string(family_name(f)));
        }
        emit(json{{"families", list}}, o, out);
        return 0;
    }
    const Spec s = spec_of(o);
    notices(s, err);
    emit(io::matrix_json(build_b(s)), o, out);
    return 0;
}

int cmd_build(const Options &o, bool via_baxterize, std::ostream &out, std::ostream &err) {
    const Spec s = spec_of(o);
    notices(s, err);
    const P p = require_point(o, s);
    const auto ord = ordering_of(o);
    if (!via_baxterize) {
        emit(io::matrix_json(build_R(s, p, ord)), o, out);
        return 0;
    }
    const M4 r = baxterize(s, p.x(), ord);
    const RBuilder<double> builder = [&](C x) { return baxterize(s, x, ord); };
    const C y = p.x() * C(0.8, 0.6) + C(0.3, 0);
    const double res = qybe_residual<double>(builder, p.x(), y);
    json j;
    j["matrix"] = io::matrix_json(r);
    j["qybe_residual"] = res;
    j["pass"] = res < std::max(o.tol, 1e-9);
    emit(j, o, out);
    if (!j["pass"].get<bool>()) {
        err << "baxterized matrix fails the QYBE: residual " << res << '\n';
        return 1;
    }
    return 0;
}

int cmd_check(const std::string &what, const Options &o, std::ostream &out, std::ostream &err) {
    const Spec s = spec_of(o);
    notices(s, err);
    Sampler rng(o.seed);
    json j;
    bool pass = false;
    if (what == "braid") {
        const double r = braid_residual(build_b(s));
        j["residual"] = r;
        j["tolerance"] = o.tol;
        pass = r < o.tol;
        j["pass"] = pass;
    } else if (what == "qybe") {
        const auto ord = ordering_of(o);
        ResidualReport<double> rep;
        rep.tolerance = o.tol;
        if (o.form == "multiplicative") {
            rep = scan_qybe(s, o.samples, rng, o.tol, ord);
        } else if (o.form == "additive") {
            const auto b = make_theta_builder(s, ord);
            for (int i = 0; i < o.samples; ++i) {
                const double t1 = rng.uniform(-std::numbers::pi, std::numbers::pi);
                const double t2 = rng.uniform(-std::numbers::pi, std::numbers::pi);
                rep.record(qybe_residual_additive<double>(b, t1, t2),
                           {{"theta1", C(t1)}, {"theta2", C(t2)}});
            }
        } else {
            const auto b = make_u_builder(s, ord);
            for (int i = 0; i < o.samples; ++i) {
                const C u1 = std::polar(rng.uniform(0, 0.9), rng.uniform(0, 2 * std::numbers::pi));
                const C u2 = std::polar(rng.uniform(0, 0.9), rng.uniform(0, 2 * std::numbers::pi));
                rep.record(qybe_residual_rational<double>(b, u1, u2), {{"u", u1}, {"v", u2}});
            }
        }
        j = io::report_json(rep);
        pass = rep.pass;
    } else if (what == "unitarity") {
        if (auto p = point_of(o, s)) {
            if (auto v = unitary_domain_violation(s, *p)) {
                throw DomainError(*v);
            }
            const M4 r = build_R(s, *p);
            const auto u = unitarity_residual(r, conjugate_partner(s, *p));
            const auto nf = rho_formula(s, *p);
            const double rel = std::max(std::abs(u.rho_est - nf.gauge * nf.rho) / (nf.gauge * nf.rho),
                                        normalized_unitarity_defect(r, u.rho_est));
            ResidualReport<double> rep;
            rep.tolerance = o.tol;
            rep.record(rel, {{"x", p->x()}});
            j = io::report_json(rep);
            j["rho"] = nf.rho;
            j["rho_est"] = u.rho_est;
            j["gauge"] = nf.gauge;
            if (!nf.domain_note.empty()) {
                j["domain_note"] = nf.domain_note;
            }
            pass = rep.pass;
        } else {
            if (auto v = parameter_domain_violation(s)) {
                throw DomainError(*v);
            }
            const auto rep = scan_unitarity(s, o.samples, rng, o.tol);
            j = io::report_json(rep);
            const P worst = P::from_x(rep.worst_case.front().second, default_convention(s.family));
            j["rho"] = rho_formula(s, worst).rho;
            pass = rep.pass;
        }
    } else {
        const RBuilder<double> builder =
            s.family == Family::EightIV
                ? RBuilder<double>([s](C x) { return eight_four_g_view(s, P::from_x(x)); })
                : make_builder(s, ordering_of(o));
        std::vector<C> xs;
        if (auto p = point_of(o, s)) {
            xs.push_back(p->x());
        } else {
            for (int i = 0; i < o.samples; ++i) {
                xs.push_back(std::polar(rng.uniform(0.5, 1.5), rng.uniform(0, 2 * std::numbers::pi)));
            }
        }
        ResidualReport<double> rep;
        rep.tolerance = o.tol;
        C scalar{};
        try {
            for (const C x : xs) {
                const C c = inverse_unitarity(builder, x);
                const C closed = inverse_unitarity_closed(s, x);
                const double r = std::abs(c - closed) / std::max(1.0, std::abs(c));
                if (rep.worst_case.empty() || r > rep.residual) {
                    scalar = c;
                }
                rep.record(r, {{"x", x}});
            }
        } catch (const StructuralError &e) {
            err << "check failed: " << e.what() << '\n';
            rep.residual = std::numeric_limits<double>::infinity();
            rep.pass = false;
        }
        j = io::report_json(rep);
        j["scalar"] = io::complex_json(scalar);
        pass = rep.pass;
    }
    emit(j, o, out);
    return pass ? 0 : 1;
}

int cmd_classify(const Options &o, std::ostream &out, std::ostream &err) {
    const Spec s = spec_of(o);
    notices(s, err);
    const P p = require_point(o, s);
    WitnessOptions<double> wo;
    wo.probes = o.probes;
    wo.seed = o.seed;
    const auto res = classify(build_R(s, p, ordering_of(o)), wo);
    if (!res.unitary) {
        err << "notice: matrix is not unitary after rescaling (defect " << res.unitarity_defect
            << ")\n";
    }
    json j;
    j["classification"] = std::string(classification_name(res.kind));
    j["witness"] = res.witness ? io::state_json(res.witness->state) : json(nullptr);
    j["det"] = io::complex_json(res.witness ? res.witness->det : C(0));
    j["det_polynomial_norm"] = res.det_polynomial_norm;
    j["unitary"] = res.unitary;
    emit(j, o, out);
    return res.kind == Classification::Unknown ? 1 : 0;
}

int cmd_det(const Options &o, std::ostream &out, std::ostream &err) {
    const Spec s = spec_of(o);
    notices(s, err);
    const P p = require_point(o, s);
    const ProductFactors<double> f{pair_of(o.a, "a"), pair_of(o.b, "b"), pair_of(o.c, "c"),
                                   pair_of(o.d, "d")};
    const M4 m = closed_form_det_matrix(s, p);
    const C direct = concurrence_det(apply_gate(m, f.state()));
    const C closed = closed_form_det(s, p, f);
    json j;
    j["det"] = io::complex_json(direct);
    j["closed_form"] = io::complex_json(closed);
    const double scale = std::max(1.0, m.squaredNorm() * f.state().a.squaredNorm());
    bool pass = std::abs(direct - closed) / scale < o.tol;
    if (s.family == Family::EightI || s.family == Family::EightIII) {
        const auto locus = nonentangling_locus_check(s, p, f, o.tol);
        j["on_locus"] = locus.on_locus;
        j["det_vanishes"] = locus.det_vanishes;
        j["locus_value"] = io::complex_json(locus.locus_value);
        pass = pass && locus.agree();
    }
    j["pass"] = pass;
    emit(j, o, out);
    return pass ? 0 : 1;
}

double curve_parameter(const Options &o, const Spec &s) {
    if (s.family == Family::EightI) {
        if (!o.x || o.x_im || o.theta || o.u) {
            throw UsageError("eight1 Hamiltonians are parametrized by real x; pass --x");
        }
        return *o.x;
    }
    if (!o.theta || o.x || o.x_re || o.x_im || o.u || o.u_im) {
        throw UsageError("pass --theta for the Hamiltonian curve parameter");
    }
    return *o.theta;
}

int cmd_hamiltonian(const Options &o, std::ostream &out, std::ostream &err) {
    const Spec s = spec_of(o);
    notices(s, err);
    const double p = curve_parameter(o, s);
    json j;
    int code = 0;
    M4 h;
    if (o.method == "fd") {
        h = hamiltonian_fd(s, p, o.step).h;
        j["hermiticity_defect"] = hermiticity_defect(h);
    } else {
        h = hamiltonian_closed(s, p).h;
        const auto rep = check_closed_form(s, p, o.step);
        j["fd_difference"] = rep.difference;
        j["agree"] = rep.agree;
        if (!rep.agree) {
            j["discrepancy"] = rep.discrepancy;
            err << "closed form disagrees: " << rep.discrepancy << '\n';
            code = 1;
        }
    }
    j["matrix"] = io::matrix_json(h);
    j["pauli"] = io::pauli_json(pauli_decompose(h));
    emit(j, o, out);
    return code;
}

int cmd_evolve(const Options &o, std::ostream &out, std::ostream &err) {
    const Spec s = spec_of(o);
    notices(s, err);
    const double p = curve_parameter(o, s);
    const M4 h = hamiltonian_fd(s, p, o.step).h;
    const M4 u = evolve(h, o.time);
    json j;
    j["hamiltonian"] = io::matrix_json(h);
    j["unitary"] = io::matrix_json(u);
    j["unitarity_defect"] = unitarity_defect(u);
    bool pass = unitarity_defect(u) < o.tol;
    if (s.family == Family::BellPhi) {
        const double r = braiding_evolution_check(s.sign, p, s.phi);
        j["braiding_residual"] = r;
        pass = pass && r < o.tol;
    }
    j["pass"] = pass;
    emit(j, o, out);
    return pass ? 0 : 1;
}

int cmd_cnot(const Options &o, std::ostream &out) {
    const auto d =
        o.route == "theorem1" ? theorem1_decomposition<double>() : cnot_via_evolution(o.phi);
    json j = io::decomposition_json(d);
    if (o.route == "theorem1") {
        j["diagnostics"]["projector identity residual"] = projector_identity_residual(o.phi);
        j["diagnostics"]["alternate route residual"] = alternate_route_residual<double>();
    }
    const bool pass = d.residual < o.tol;
    j["pass"] = pass;
    emit(j, o, out);
    return pass ? 0 : 1;
}

int cmd_matrix(const std::string &what, const Options &o, std::ostream &out) {
    const auto a = io::matrix_from_json(read_json(o.input));
    json j;
    auto with4 = [&](auto fn) {
        if (a.rows() != 4) {
            throw DimensionError(what + " expects a 4x4 matrix");
        }
        return fn(M4(a));
    };
    if (what == "kron") {
        j = io::matrix_json(tensor(a, io::matrix_from_json(read_json(o.input2))));
    } else if (what == "inverse") {
        if (a.rows() == 2) {
            j = io::matrix_json(inverse(Matrix2<double>(a)));
        } else {
            j = with4([](const M4 &m) { return io::matrix_json(inverse(m)); });
        }
    } else if (what == "expm") {
        const double th = o.theta.value_or(1);
        if (a.rows() == 2) {
            j = io::matrix_json(expm_hermitian(Matrix2<double>(a), th));
        } else {
            j = with4([th](const M4 &m) { return io::matrix_json(expm_hermitian(m, th)); });
        }
    } else if (what == "projectors") {
        const C l1 = pair_of(o.lambda1, "lambda1");
        const C l2 = pair_of(o.lambda2, "lambda2");
        j = with4([&](const M4 &m) {
            const auto pr = spectral_projectors(m, l1, l2);
            return json{{"first", io::matrix_json(pr.first)}, {"second", io::matrix_json(pr.second)}};
        });
    } else {
        j = with4([](const M4 &m) { return io::pauli_json(pauli_decompose(m)); });
    }
    emit(j, o, out);
    return 0;
}

int cmd_suite(const Options &o, std::ostream &out, std::ostream &err) {
    const auto results = run_suite(o.seed);
    for (const auto &r : results) {
        if (!r.pass) {
            err << "criterion " << r.id << " failed: " << r.detail << '\n';
        }
    }
    const json j = suite_json(results, o.seed);
    emit(j, o, out);
    return j["pass"].get<bool>() ? 0 : 1;
}

} // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    Options o;
    try {
        o.tol = default_tolerance();
    } catch (const UsageError &e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    CLI::App app{"Braid-group representations, Yang-Baxter R-matrices and quantum gates"};
    app.name("yaxter");
    app.require_subcommand(1);

    auto *catalog = app.add_subcommand("catalog", "Emit a braid-group b-matrix, or list families");
    add_family(catalog, o, false);
    add_common(catalog, o);

    bool via_baxterize = false;
    auto *build = app.add_subcommand("build", "Emit R(x) for a family at a spectral parameter");
    add_family(build, o);
    add_point(build, o);
    add_ordering(build, o);
    add_common(build, o);
    build->add_flag("--baxterize", via_baxterize,
                    "Build through the Yang-Baxterization formula and check the QYBE");

    auto *check = app.add_subcommand("check", "Residual checks");
    check->require_subcommand(1);
    std::map<CLI::App *, std::string> checks;
    for (const char *name : {"braid", "qybe", "unitarity", "inverse-unitarity"}) {
        auto *c = check->add_subcommand(name);
        add_family(c, o);
        add_common(c, o);
        add_sampling(c, o);
        add_ordering(c, o);
        if (std::string(name) != "braid") {
            add_point(c, o);
        }
        if (std::string(name) == "qybe") {
            c->add_option("--form", o.form, "multiplicative, additive or rational")
                ->check(CLI::IsMember({"multiplicative", "additive", "rational"}));
        }
        checks[c] = name;
    }

    auto *cls = app.add_subcommand("classify", "Brylinski classification of R");
    add_family(cls, o);
    add_point(cls, o);
    add_ordering(cls, o);
    add_common(cls, o);
    cls->add_option("--probes", o.probes, "Random product probes")->check(CLI::PositiveNumber);
    cls->add_option("--seed", o.seed, "Random seed");

    auto *det = app.add_subcommand("det", "Det of R on a product state, direct and closed form");
    add_family(det, o);
    add_point(det, o);
    add_common(det, o);
    for (auto [flag, vec] : {std::pair{"--a", &o.a}, {"--b", &o.b}, {"--c", &o.c}, {"--d", &o.d}}) {
        det->add_option(flag, *vec, "Product factor RE IM")->expected(2)->required();
    }

    auto *ham = app.add_subcommand("hamiltonian", "Hamiltonian of the unitary R curve");
    add_family(ham, o);
    add_point(ham, o);
    add_common(ham, o);
    ham->add_option("--method", o.method, "fd or closed")->check(CLI::IsMember({"fd", "closed"}));
    ham->add_option("--step", o.step, "Finite-difference step");

    auto *evo = app.add_subcommand("evolve", "exp(-iHt) of the Hamiltonian at a point");
    add_family(evo, o);
    add_point(evo, o);
    add_common(evo, o);
    evo->add_option("--time", o.time, "Evolution time");
    evo->add_option("--step", o.step, "Finite-difference step");

    auto *cn = app.add_subcommand("cnot", "CNOT decompositions");
    cn->add_option("--route", o.route, "theorem1 or evolution")
        ->check(CLI::IsMember({"theorem1", "evolution"}));
    cn->add_option("--phi", o.phi, "Phase of the braiding matrix");
    add_common(cn, o);

    auto *mat = app.add_subcommand("matrix", "Linear algebra on JSON matrices");
    mat->require_subcommand(1);
    std::map<CLI::App *, std::string> mats;
    for (const char *name : {"inverse", "expm", "kron", "projectors", "pauli"}) {
        auto *m = mat->add_subcommand(name);
        m->add_option("--input", o.input, "Matrix JSON file, - for stdin")->required();
        add_common(m, o);
        if (std::string(name) == "kron") {
            m->add_option("--input2", o.input2, "Second factor")->required();
        }
        if (std::string(name) == "expm") {
            m->add_option("--theta", o.theta, "Angle in exp(-iH theta)");
        }
        if (std::string(name) == "projectors") {
            m->add_option("--lambda1", o.lambda1, "First eigenvalue RE IM")->expected(2)->required();
            m->add_option("--lambda2", o.lambda2, "Second eigenvalue RE IM")->expected(2)->required();
        }
        mats[m] = name;
    }

    auto *suite = app.add_subcommand("suite", "Run the acceptance battery");
    suite->add_option("--seed", o.seed, "Random seed");
    add_common(suite, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (catalog->parsed()) {
            return cmd_catalog(o, out, err);
        }
        if (build->parsed()) {
            return cmd_build(o, via_baxterize, out, err);
        }
        for (const auto &[c, name] : checks) {
            if (c->parsed()) {
                return cmd_check(name, o, out, err);
            }
        }
        if (cls->parsed()) {
            return cmd_classify(o, out, err);
        }
        if (det->parsed()) {
            return cmd_det(o, out, err);
        }
        if (ham->parsed()) {
            return cmd_hamiltonian(o, out, err);
        }
        if (evo->parsed()) {
            return cmd_evolve(o, out, err);
        }
        if (cn->parsed()) {
            return cmd_cnot(o, out);
        }
        for (const auto &[m, name] : mats) {
            if (m->parsed()) {
                return cmd_matrix(name, o, out);
            }
        }
        if (suite->parsed()) {
            return cmd_suite(o, out, err);
        }
    } catch (const UsageError &e) {
        err << "usage: " << e.what() << '\n';
        return 2;
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const json::exception &e) {
        err << "error: malformed JSON: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

} // namespace yaxter
