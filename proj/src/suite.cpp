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
#include "suite.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>

#include <yaxter/baxterize.hpp>
#include <yaxter/catalog.hpp>
#include <yaxter/dynamics.hpp>
#include <yaxter/entangle.hpp>
#include <yaxter/gates.hpp>
#include <yaxter/verify.hpp>

namespace yaxter {
namespace {

using C = std::complex<double>;
using M4 = Matrix4<double>;
using P = SpectralPoint<double>;
using Spec = FamilySpec<double>;
constexpr double kPi = std::numbers::pi;

/// Largest residual relative to its own tolerance, with where it occurred.
struct Worst {
    double ratio = 0;
    double value = 0;
    double tol = 1;
    std::string where;

    void take(double v, double t, const std::string &tag) {
        const double r = std::isnan(v) ? std::numeric_limits<double>::infinity() : v / t;
        if (where.empty() || r > ratio) {
            ratio = r;
            value = v;
            tol = t;
            where = tag;
        }
    }
};

std::string num(double v) {
    std::ostringstream s;
    s.precision(3);
    s << v;
    return s.str();
}

CriterionResult make(int id, std::string name, const Worst &w, bool extra = true,
                     std::string detail = {}) {
    CriterionResult r;
    r.id = id;
    r.name = std::move(name);
    r.worst = w.value;
    r.tolerance = w.tol;
    r.pass = extra && w.ratio < 1;
    r.detail = "worst " + num(w.value) + " (tolerance " + num(w.tol) + ") at " + w.where;
    if (!detail.empty()) {
        r.detail += "; " + detail;
    }
    return r;
}

C complex_in_annulus(Sampler &rng) {
    return std::polar(rng.uniform(0.5, 1.5), rng.uniform(0, 2 * kPi));
}

C complex_in_disc(Sampler &rng) {
    return std::polar(rng.uniform(0, 0.9), rng.uniform(0, 2 * kPi));
}

std::string fam(Family f) { return std::string(family_name(f)); }

CriterionResult braid(Sampler &rng) {
    Worst w;
    for (Family f : kAllFamilies) {
        for (int i = 0; i < 100; ++i) {
            const Spec s = sample_spec<double>(f, rng, false);
            w.take(braid_residual(build_b(s)), 1e-11, fam(f));
        }
    }
    return make(1, "braid relation", w);
}

CriterionResult qybe(Sampler &rng) {
    Worst w;
    for (Family f : kAllFamilies) {
        std::vector<std::optional<EigOrdering>> orderings = {std::nullopt};
        if (f == Family::EightIII) {
            orderings.emplace_back(EigOrdering::Second);
        }
        for (const auto &o : orderings) {
            const std::string tag = fam(f) + (o ? " second ordering" : "");
            for (int i = 0; i < 50; ++i) {
                const Spec s = sample_spec<double>(f, rng, false);
                w.take(qybe_residual<double>(make_builder(s, o), complex_in_annulus(rng),
                                             complex_in_annulus(rng)),
                       1e-9, tag + " multiplicative");
                w.take(qybe_residual_rational<double>(make_u_builder(s, o), complex_in_disc(rng),
                                                      complex_in_disc(rng)),
                       1e-9, tag + " rational u");
                if (f != Family::EightI && f != Family::BellPhi) {
                    const Spec su = sample_spec<double>(f, rng, true);
                    if (std::abs(su.t.imag()) == 0.0) {
                        w.take(qybe_residual_additive<double>(make_theta_builder(su, o),
                                                              rng.uniform(-kPi, kPi),
                                                              rng.uniform(-kPi, kPi)),
                               1e-9, tag + " additive theta");
                    }
                }
            }
        }
    }
    for (EigOrdering o : {EigOrdering::First, EigOrdering::Second, EigOrdering::Third}) {
        for (int i = 0; i < 50; ++i) {
            const Family f = o == EigOrdering::Third ? Family::EightIV : Family::EightIII;
            const Spec s = sample_spec<double>(f, rng, false);
            const RBuilder<double> r = [s, o](C x) { return baxterize(s, x, o); };
            w.take(qybe_residual<double>(r, complex_in_annulus(rng), complex_in_annulus(rng)),
                   1e-9, "yb_three ordering " + std::to_string(static_cast<int>(o) + 1));
        }
    }
    return make(2, "QYBE (multiplicative, additive, rational, yb_three)", w);
}

CriterionResult asymptotics(Sampler &rng) {
    Worst w;
    for (Family f : kAllFamilies) {
        for (int i = 0; i < 20; ++i) {
            const Spec s = sample_spec<double>(f, rng, false);
            const M4 b = build_b(s);
            const M4 r0 = build_R(s, P::from_x(C(0)));
            if (f == Family::SixNonStd || f == Family::SixStd || f == Family::EightI) {
                w.take((r0 - b).norm(), 1e-12, fam(f) + " R(0) = b");
            } else {
                w.take(proportionality_defect(r0, b), 1e-12, fam(f) + " R(0) ~ b");
            }
            if (!uses_three_eigenvalue_b(f)) {
                const auto l = eigenvalues_of(s);
                w.take((yb_two(b, l[0], l[1], C(0)) - b).norm(), 1e-12, fam(f) + " yb_two(0) = b");
            }
        }
    }
    for (EigOrdering o : {EigOrdering::Second, EigOrdering::Third}) {
        for (int i = 0; i < 20; ++i) {
            const Spec s = sample_spec<double>(Family::EightIII, rng, false);
            const auto l = ordered_eigenvalues(s.t, o);
            const M4 r1 = yb_three(build_b(s), l, C(1));
            w.take(proportionality_defect(r1, M4::Identity().eval()), 1e-12,
                   "yb_three(1) ordering " + std::to_string(static_cast<int>(o) + 1));
        }
    }
    return make(3, "asymptotics R(0) = b, yb_three R(1) ~ 1", w);
}

/// Relative unitarity defect at a point off the family's unitary domain.
double off_domain_defect(const Spec &s, const P &p) {
    const M4 r = build_R(s, p);
    const auto u = unitarity_residual(r, conjugate_partner(s, p));
    return u.residual / u.rho_est;
}

CriterionResult unitarity(Sampler &rng) {
    Worst w;
    for (Family f : kAllFamilies) {
        for (int i = 0; i < 100; ++i) {
            const Spec s = sample_spec<double>(f, rng, true);
            const auto rep = scan_unitarity(s, 1, rng, 1e-10);
            w.take(rep.residual, 1e-10, fam(f));
        }
    }
    for (int i = 0; i < 100; ++i) {
        Spec s = sample_spec<double>(Family::EightIII, rng, true);
        s.t = std::polar(rng.uniform(0.2, 2.5), rng.uniform(0, 2 * kPi));
        w.take(scan_unitarity(s, 1, rng, 1e-10).residual, 1e-10, "eight3 complex t");
    }
    const C q(0.6, 0.8);
    const std::vector<std::pair<Spec, P>> off = {
        {Spec::six_nonstd(std::polar(1.3, 0.4)), P::from_x(std::polar(1.0, 0.7))},
        {Spec::six_std(C(1.4)), P::from_x(C(2.0))},
        {Spec::eight_one(q, Sign::Plus), P::from_x(C(0.5, 0.8))},
        {Spec::eight_two(1.7, q, Sign::Minus), P::from_x(C(1.5))},
        {Spec::eight_three(C(1.7), q, Sign::Plus), P::from_x(C(0.4, 0.2))},
        {Spec::eight_four(C(1.7), q, Sign::Plus), P::from_x(C(2.0))},
        {Spec::bell_phi(0.6, Sign::Minus), P::from_x(C(0.5, 0.5))},
    };
    bool all_fail = true;
    double smallest = 1e300;
    std::string weakest;
    for (const auto &[s, p] : off) {
        const double d = off_domain_defect(s, p);
        if (d < smallest) {
            smallest = d;
            weakest = fam(s.family);
        }
        all_fail = all_fail && d > 1e-3;
    }
    return make(4, "unitarity and rho closed forms", w, all_fail,
                "smallest off-domain defect " + num(smallest) + " (" + weakest + ")");
}

CriterionResult compatibility(Sampler &rng) {
    Worst w;
    for (Family f : {Family::EightII, Family::EightIII, Family::EightIV}) {
        for (int i = 0; i < 50; ++i) {
            Spec s = sample_spec<double>(f, rng, true);
            s.t = C(s.t.real() + s.t.imag(), 0);
            const P p = P::from_theta(rng.uniform(0.1, 2 * kPi - 0.1), ThetaConvention::ThetaFull);
            const RBuilder<double> r =
                f == Family::EightIV
                    ? RBuilder<double>([s](C x) { return eight_four_g_view(s, P::from_x(x)); })
                    : make_builder(s);
            const C c = inverse_unitarity(r, p.x());
            const double rho = rho_formula(s, p).rho;
            w.take(std::abs(c - rho) / rho, 1e-10, fam(f) + " inverse scalar vs rho");
            w.take(std::abs(c - inverse_unitarity_closed(s, p.x())) / rho, 1e-10,
                   fam(f) + " inverse scalar closed form");
        }
    }
    for (Family f : {Family::SixNonStd, Family::SixStd, Family::EightI}) {
        const Spec s = sample_spec<double>(f, rng, true);
        const C x = std::polar(1.0, 0.9);
        const C c = inverse_unitarity(make_builder(s), x);
        w.take(std::abs(c - inverse_unitarity_closed(s, x)) / std::abs(c), 1e-10,
               fam(f) + " inverse scalar closed form");
    }
    const Spec e1 = Spec::eight_one(C(0.6, 0.8), Sign::Plus);
    const P x2 = P::from_x(C(2.0));
    const C c2 = inverse_unitarity(make_builder(e1), x2.x());
    const double rho2 = rho_formula(e1, x2).rho;
    const bool incompatible = std::abs(c2 - rho2) > 1.0;
    const C c1 = inverse_unitarity(make_builder(e1), C(1));
    const bool compatible_at_1 = std::abs(c1 - rho_formula(e1, P::from_x(C(1))).rho) < 1e-12;
    return make(5, "inverse unitarity vs rho", w, incompatible && compatible_at_1,
                "eight1 at x=2: inverse " + num(c2.real()) + " vs rho " + num(rho2));
}

CriterionResult universality(Sampler &rng) {
    Worst w;
    bool ok = true;
    std::string failures;
    auto expect = [&](const M4 &r, Classification want, const std::string &tag) {
        WitnessOptions<double> opt;
        opt.seed = static_cast<std::uint64_t>(rng.uniform01() * 9007199254740992.0);
        const auto got = classify(r, opt);
        const bool stray_witness =
            want == Classification::NotEntangling && brylinski_witness(r, opt).has_value();
        if (got.kind != want || stray_witness) {
            ok = false;
            failures += " " + tag;
        }
    };
    // The closed-form Det vanishes on every product state at excluded points.
    auto excluded = [&](const Spec &s, const P &p, const std::string &tag) {
        for (int i = 0; i < 5; ++i) {
            const ProductFactors<double> pf{complex_in_disc(rng), complex_in_disc(rng),
                                            complex_in_disc(rng), complex_in_disc(rng)};
            const double scale =
                std::max(1.0, closed_form_det_matrix(s, p).squaredNorm() * pf.state().a.squaredNorm());
            w.take(std::abs(closed_form_det(s, p, pf)) / scale, 1e-12, tag + " closed Det = 0");
        }
    };
    for (Family f : kAllFamilies) {
        for (int i = 0; i < 10; ++i) {
            const Spec s = sample_spec<double>(f, rng, true);
            const P p = sample_point(s, rng);
            expect(build_R(s, p), Classification::Entangling, fam(f));
        }
        const Spec s = sample_spec<double>(f, rng, true);
        const P one = f == Family::BellPhi ? P::from_theta(kPi / 4, ThetaConvention::Tangent)
                                           : P::from_x(C(1));
        expect(build_R(s, one), Classification::NotEntangling, fam(f) + " at x=1");
        if (f != Family::BellPhi) {
            excluded(s, one, fam(f) + " at x=1");
        }
    }
    const P generic = P::from_x(std::polar(1.0, 1.1));
    const Spec std1 = Spec::six_std(C(1));
    expect(build_R(std1, generic), Classification::NotEntangling, "six-std q=1");
    excluded(std1, generic, "six-std q=1");
    expect(build_R(Spec::six_nonstd(C(1)), generic), Classification::Entangling, "six-nonstd q=1");
    const Spec e3 = Spec::eight_three(C(0), C(0.6, 0.8), Sign::Plus);
    expect(build_R(e3, generic), Classification::NotEntangling, "eight3 t=0");
    excluded(e3, generic, "eight3 t=0");
    const Spec e4 = Spec::eight_four(C(0), C(0.6, 0.8), Sign::Minus);
    expect(build_R(e4, generic), Classification::NotEntangling, "eight4 t=0");
    excluded(e4, generic, "eight4 t=0");

    for (Family f : kAllFamilies) {
        if (f == Family::BellPhi) {
            continue;
        }
        for (int i = 0; i < 20; ++i) {
            const Spec s = sample_spec<double>(f, rng, true);
            const P p = sample_point(s, rng);
            const ProductFactors<double> pf{complex_in_disc(rng), complex_in_disc(rng),
                                            complex_in_disc(rng), complex_in_disc(rng)};
            const M4 m = closed_form_det_matrix(s, p);
            const C direct = concurrence_det(apply_gate(m, pf.state()));
            const double scale = std::max(1.0, m.squaredNorm() * pf.state().a.squaredNorm());
            w.take(std::abs(direct - closed_form_det(s, p, pf)) / scale, 1e-12, fam(f) + " closed Det");
        }
    }
    return make(6, "universality classification", w, ok,
                ok ? "all classifications as expected" : "unexpected:" + failures);
}

CriterionResult hamiltonians(Sampler &rng) {
    Worst all;
    for (Family f : kAllFamilies) {
        for (int i = 0; i < 10; ++i) {
            Spec s = sample_spec<double>(f, rng, true);
            s.t = C(s.t.real() + s.t.imag(), 0);
            const double p = f == Family::EightI ? rng.uniform(-2, 2) : rng.uniform(-1.4, 1.4);
            const auto h = hamiltonian_fd(s, p).h;
            all.take(hermiticity_defect(h), 1e-9, fam(f) + " Hermiticity");
            all.take((pauli_decompose(h).reconstruct() - h).norm(), 1e-13, "Pauli round trip");
            const auto curve = unitary_curve(s);
            for (int k = 0; k < 10; ++k) {
                Vector4<double> psi;
                for (int j = 0; j < 4; ++j) {
                    psi(j) = complex_in_disc(rng);
                }
                all.take(schrodinger_residual(curve, p, psi), 1e-6, fam(f) + " Schrodinger");
            }
        }
    }
    for (int i = 0; i < 10; ++i) {
        const double phi = rng.uniform(0, 2 * kPi);
        const Sign sg = rng.coin() ? Sign::Plus : Sign::Minus;
        const C q = std::polar(1.0, -phi);
        const Spec e1 = Spec::eight_one(q, sg);
        const double sv = sign_value(sg);
        const M4 closed = C(0, 0.5) * detail::eight_vertex<double>(
                                           C(0), C(0), C(-sv), C(sv), C(0), C(0),
                                           -std::polar(1.0, -phi), std::polar(1.0, phi));
        const M4 h1 = hamiltonian_closed(e1, 1.0).h;
        all.take((h1 - closed).norm(), 1e-12, "eight1 H vs closed form");
        all.take((h1 - eight_one_hamiltonian(e1)).norm(), 1e-12, "eight1 H vs -(i/2)b^2");
        all.take((hamiltonian_fd(e1, 1.0).h - h1).norm(), 1e-7, "eight1 FD at x=1");
        const Spec bp = Spec::bell_phi(phi, sg);
        const M4 ref = hamiltonian_fd(bp, 0.0).h;
        for (double th : {-1.0, 0.4, 1.2}) {
            all.take((hamiltonian_fd(bp, th).h - ref).norm(), 1e-7, "eight1 theta independence");
        }
    }
    for (Family f : {Family::EightII, Family::EightIII, Family::EightIV}) {
        for (int i = 0; i < 10; ++i) {
            Spec s = sample_spec<double>(f, rng, true);
            s.t = C(s.t.real() + s.t.imag(), 0);
            all.take((hamiltonian_theta0(s) - hamiltonian_fd(s, 0.0).h).norm(), 1e-7,
                        fam(f) + " theta=0 form");
            const double th = rng.uniform(-2.5, 2.5);
            all.take(check_closed_form(s, th).difference, 1e-7, fam(f) + " H(theta)");
            s.t = C(1);
            all.take((hamiltonian_t1(s) - hamiltonian_fd(s, th).h).norm(), 1e-7, fam(f) + " t=1 form");
        }
    }
    std::string six;
    bool six_ok = true;
    for (Family f : {Family::SixNonStd, Family::SixStd}) {
        const Spec s = Spec::six_gamma(f, 0.5);
        const auto rep = check_closed_form(s, 0.3);
        six_ok = six_ok && (rep.agree || !rep.discrepancy.empty());
        six += (six.empty() ? "" : "; ") + fam(f) + ": " + (rep.agree ? "agrees" : rep.discrepancy);
    }
    return make(7, "Hamiltonians", all, six_ok, six);
}

CriterionResult evolution(Sampler &rng) {
    Worst w;
    for (int i = 0; i < 50; ++i) {
        const Sign sg = rng.coin() ? Sign::Plus : Sign::Minus;
        w.take(braiding_evolution_check(sg, rng.uniform(-1.5, 1.5), rng.uniform(0, 2 * kPi)),
               1e-10, "R(theta) = exp(i(pi/2-2theta)H)");
    }
    const M4 rm = build_R(Spec::bell_phi(0, Sign::Minus), P::from_theta(0, ThetaConvention::Tangent));
    const M4 xy = kron(pauli_x<double>(), pauli_y<double>());
    const double d = (rm - expm_hermitian(xy, -kPi / 4)).norm();
    w.take(d, 1e-12, "R-(0,0) = exp(i pi/4 sigma_x sigma_y)");
    w.take((rm - cnot_R<double>()).norm(), 1e-12, "R-(0,0) = local-gate route matrix");
    return make(8, "evolution identities", w);
}

CriterionResult cnot_routes(Sampler &rng) {
    Worst w;
    const auto t1 = theorem1_decomposition<double>();
    w.take(t1.residual, 1e-12, "local-gate route raw");
    for (double phi : {0.0, rng.uniform(0, 2 * kPi), rng.uniform(0, 2 * kPi)}) {
        const auto ev = cnot_via_evolution(phi);
        w.take(ev.residual, 1e-11, "evolution route phi=" + num(phi));
        w.take((ev.product - t1.product).norm(), 1e-11, "routes agree");
        for (const auto &[name, value] : ev.diagnostics) {
            if (name.rfind("residual with", 0) != 0) {
                w.take(value, 1e-11, name);
            }
        }
    }
    const M4 split = kron(projector_up<double>(), Matrix2<double>::Identity().eval()) +
                     kron(projector_down<double>(), pauli_x<double>());
    w.take((cnot<double>() - split).norm(), 1e-12, "CNOT = P_up (x) 1 + P_down (x) sigma_x");
    return make(9, "CNOT constructions", w);
}

CriterionResult bell(Sampler &rng) {
    Worst w;
    const double r = 1 / std::sqrt(2.0);
    for (double phi : {0.0, rng.uniform(0, 2 * kPi), rng.uniform(0, 2 * kPi)}) {
        for (Sign sg : {Sign::Plus, Sign::Minus}) {
            const double s = sign_value(sg);
            const auto states = bell_basis(phi, sg);
            const std::array<TwoQubitState<double>, 4> display = {
                TwoQubitState<double>(r, 0, 0, -r * std::polar(1.0, phi)),
                TwoQubitState<double>(0, r, -s * r, 0),
                TwoQubitState<double>(0, s * r, r, 0),
                TwoQubitState<double>(r * std::polar(1.0, -phi), 0, 0, r)};
            for (int k = 0; k < 4; ++k) {
                const auto uk = static_cast<std::size_t>(k);
                w.take((states[uk].a - display[uk].a).norm(), 1e-12, "display");
                for (int l = 0; l < 4; ++l) {
                    const C g = states[uk].a.dot(states[static_cast<std::size_t>(l)].a);
                    w.take(std::abs(g - (k == l ? 1.0 : 0.0)), 1e-12, "Gram");
                }
                if (phi == 0.0) {
                    w.take(std::abs(std::abs(concurrence_det(states[uk])) - 0.5), 1e-12, "|Det| = 1/2");
                }
            }
        }
    }
    return make(10, "Bell basis", w);
}

std::vector<CriterionResult> battery(std::uint64_t seed) {
    std::vector<CriterionResult> out;
    const std::vector<std::function<CriterionResult(Sampler &)>> steps = {
        braid, qybe, asymptotics, unitarity, compatibility,
        universality, hamiltonians, evolution, cnot_routes, bell};
    for (std::size_t i = 0; i < steps.size(); ++i) {
        Sampler rng(seed + 1000 * (i + 1));
        try {
            out.push_back(steps[i](rng));
        } catch (const std::exception &e) {
            CriterionResult r;
            r.id = static_cast<int>(i) + 1;
            r.name = "criterion " + std::to_string(i + 1);
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
            out.push_back(r);
        }
    }
    return out;
}

} // namespace

io::json suite_json(const std::vector<CriterionResult> &results, std::uint64_t seed) {
    io::json list = io::json::array();
    bool all = true;
    for (const auto &r : results) {
        io::json j;
        j["id"] = r.id;
        j["name"] = r.name;
        j["pass"] = r.pass;
        j["worst"] = r.worst;
        j["tolerance"] = r.tolerance;
        j["detail"] = r.detail;
        list.push_back(std::move(j));
        all = all && r.pass;
    }
    io::json out;
    out["seed"] = seed;
    out["pass"] = all;
    out["criteria"] = std::move(list);
    return out;
}

std::vector<CriterionResult> run_suite(std::uint64_t seed) {
    auto first = battery(seed);
    const auto second = battery(seed);
    const bool same = io::dump(suite_json(first, seed), false) ==
                      io::dump(suite_json(second, seed), false);
    CriterionResult det;
    det.id = 11;
    det.name = "determinism";
    det.pass = same;
    det.tolerance = 0;
    det.detail = same ? "two runs serialize identically" : "two runs differ";
    first.push_back(det);
    return first;
}

} // namespace yaxter
