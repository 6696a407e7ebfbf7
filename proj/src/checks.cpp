#include "osc3d/checks.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <vector>

#include "osc3d/cli.hpp"
#include "osc3d/coherent.hpp"
#include "osc3d/oscillator.hpp"
#include "osc3d/parallel.hpp"
#include "osc3d/phase_space.hpp"
#include "osc3d/photon_statistics.hpp"
#include "osc3d/squeezed.hpp"

namespace osc3d {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt2 = std::numbers::sqrt2;

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2e", v);
    return buf;
}

std::vector<TripleIndex> indices_up_to(int total) {
    std::vector<TripleIndex> out;
    for (int m = 0; m <= total; ++m)
        for (int n = 0; m + n <= total; ++n)
            for (int l = 0; m + n + l <= total; ++l)
                out.push_back({m, n, l});
    return out;
}

CheckResult check_wigner_equivalence() {
    const auto params = natural_units();
    std::mt19937 gen(1001);
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    std::vector<PhasePoint> pts(20);
    for (auto& pt : pts) {
        for (std::size_t a = 0; a < 3; ++a) {
            pt.r[a] = u(gen);
            pt.p[a] = u(gen);
        }
    }
    const auto indices = indices_up_to(4);
    double worst_rel = 0.0;
    double worst_imag = 0.0;
    for (const auto idx : indices) {
        const auto sep = separable_eigenfunction(idx, params);
        for (const auto& pt : pts) {
            const double closed = wigner_fock(idx, pt, params);
            const auto num = wigner_numeric_full(sep, pt, params, 60);
            worst_imag = std::max(worst_imag, num.imag_residual);
            if (std::abs(closed) > 1e-8) {
                worst_rel =
                    std::max(worst_rel, std::abs(num.value - closed) / std::abs(closed));
            }
        }
    }
    const double ground = wigner_fock({0, 0, 0}, PhasePoint{}, params);
    const double origin_err = std::abs(ground - 1.0 / (kPi * kPi * kPi));
    const bool pass = worst_rel <= 1e-6 && origin_err <= 1e-10 && worst_imag <= 1e-9;
    return {"wigner-closed-vs-quadrature", pass,
            "max rel " + sci(worst_rel) + " over " + std::to_string(indices.size()) +
                " indices x 20 points, origin err " + sci(origin_err) +
                ", imag residual " + sci(worst_imag)};
}

CheckResult check_marginals() {
    const auto params = natural_units();
    std::mt19937 gen(1002);
    std::uniform_real_distribution<double> u(-1.2, 1.2);
    std::vector<Vec3> rs(10), ps(10);
    for (int i = 0; i < 10; ++i) {
        rs[std::size_t(i)] = {u(gen), u(gen), u(gen)};
        ps[std::size_t(i)] = {u(gen), u(gen), u(gen)};
    }
    double worst = 0.0;
    for (const auto idx : indices_up_to(3)) {
        for (int i = 0; i < 10; ++i) {
            const Vec3& r = rs[std::size_t(i)];
            const Vec3& p = ps[std::size_t(i)];
            const double pos = wigner_marginal_position(idx, r, params, 40);
            const double psi = eigenfunction(idx, r, params);
            worst = std::max(worst, std::abs(pos - psi * psi));
            const double mom = wigner_marginal_momentum(idx, p, params, 40);
            double phi2 = 1.0;
            for (int a = 0; a < 3; ++a) {
                const double q = p[std::size_t(a)] / (params.hbar * params.kappa);
                const double f = basis_1d(idx[a], q);
                phi2 *= f * f / (params.hbar * params.kappa);
            }
            worst = std::max(worst, std::abs(mom - phi2));
        }
    }
    return {"wigner-marginals", worst <= 1e-6,
            "max abs deviation " + sci(worst) + " over quanta <= 3 at 10 points"};
}

CheckResult check_overcompleteness() {
    const double residual = resolve_identity_residual(3, 40, 16);
    std::mt19937 gen(1003);
    std::uniform_real_distribution<double> u(-1.4, 1.4);
    const auto rand_label = [&] {
        CoherentLabel label;
        for (std::size_t a = 0; a < 3; ++a) label.alpha[a] = cplx(u(gen), u(gen));
        return label;
    };
    double worst_law = 0.0;
    double worst_series = 0.0;
    const Cutoff box{40, 40, 40};
    for (int i = 0; i < 50; ++i) {
        const CoherentLabel a = rand_label();
        const CoherentLabel b = rand_label();
        double dist2 = 0.0;
        for (std::size_t ax = 0; ax < 3; ++ax) dist2 += std::norm(b.alpha[ax] - a.alpha[ax]);
        const cplx overlap = coherent_overlap(b, a);
        worst_law = std::max(worst_law, std::abs(std::norm(overlap) - std::exp(-dist2)));
        if (i < 6) {
            const auto ca = coherent_coefficients(a, box);
            const auto cb = coherent_coefficients(b, box);
            worst_series = std::max(worst_series, std::abs(inner_product(cb, ca) - overlap));
        }
    }
    const bool pass = residual <= 1e-4 && worst_law <= 1e-12 && worst_series <= 1e-8;
    return {"overcompleteness-and-overlaps", pass,
            "identity residual " + sci(residual) + ", overlap law err " + sci(worst_law) +
                ", series vs closed " + sci(worst_series)};
}

CheckResult check_coherent_evolution() {
    const auto params = natural_units();
    const CoherentLabel label{{cplx(0.8, 0.2), cplx(-0.4, 0.6), cplx(0.3, -0.5)}};
    const double period = 2.0 * kPi / params.omega;
    const auto ev = evolve_coherent(label, period, params);
    double label_err = 0.0;
    for (std::size_t a = 0; a < 3; ++a) {
        label_err = std::max(label_err, std::abs(ev.label.alpha[a] - label.alpha[a]));
    }
    const double phase_err = std::abs(ev.global_phase + 3.0 * kPi);

    std::mt19937 gen(1004);
    std::uniform_real_distribution<double> ut(0.0, 2.0 * period);
    std::uniform_real_distribution<double> ur(-1.3, 1.3);
    const double h = 1e-5;
    double worst_eom = 0.0;
    for (int i = 0; i < 12; ++i) {
        const double t = ut(gen);
        const auto tp = coherent_eval_terms(label, t + h, params);
        const auto tm = coherent_eval_terms(label, t - h, params);
        const auto tc = coherent_eval_terms(label, t, params);
        for (std::size_t a = 0; a < 3; ++a) {
            const double rdot = (tp.r_bar[a] - tm.r_bar[a]) / (2.0 * h);
            const double pdot = (tp.p_bar[a] - tm.p_bar[a]) / (2.0 * h);
            worst_eom = std::max(worst_eom, std::abs(rdot - tc.p_bar[a] / params.mass));
            worst_eom = std::max(
                worst_eom,
                std::abs(pdot + params.mass * params.omega * params.omega * tc.r_bar[a]));
        }
    }

    const Cutoff box{60, 60, 60};
    const auto fc = coherent_coefficients(label, box);
    const double kap = params.kappa;
    std::vector<double> px(61), py(61), pz(61);
    double worst_amp = 0.0;
    for (int i = 0; i < 5; ++i) {
        const double t = ut(gen);
        const Vec3 r{ur(gen), ur(gen), ur(gen)};
        basis_1d_all(60, kap * r[0], px.data());
        basis_1d_all(60, kap * r[1], py.data());
        basis_1d_all(60, kap * r[2], pz.data());
        std::vector<cplx> rot(181);
        for (int j = 0; j <= 180; ++j) rot[std::size_t(j)] = std::polar(1.0, -params.omega * t * j);
        cplx series(0.0, 0.0);
        for (int m = 0; m <= 60; ++m) {
            for (int n = 0; n <= 60; ++n) {
                const double pxy = px[std::size_t(m)] * py[std::size_t(n)];
                for (int l = 0; l <= 60; ++l) {
                    series += fc.at(m, n, l) * (pxy * pz[std::size_t(l)]) *
                              rot[std::size_t(m + n + l)];
                }
            }
        }
        series *= kap * std::sqrt(kap) * std::polar(1.0, -1.5 * params.omega * t);
        const cplx closed = coherent_position_amplitude(label, t, r, params);
        worst_amp = std::max(worst_amp, std::abs(series - closed));
    }
    const bool pass =
        label_err <= 1e-12 && phase_err <= 1e-12 && worst_eom <= 1e-7 && worst_amp <= 1e-10;
    return {"coherent-evolution", pass,
            "period label err " + sci(label_err) + ", phase err " + sci(phase_err) +
                ", centroid eom residual " + sci(worst_eom) + ", amplitude identity " +
                sci(worst_amp)};
}

// residual of the operator definition: the squeezed vacuum is the state
// annihilated by cosh(r) a - e^{i theta} sinh(r) a^dag on every axis, which
// pins the complex Gaussian width; normalization cannot separate the two
// h variants because the 1/C prefactor renormalizes either of them
double annihilation_residual(const SqueezeLabel& label, SqueezeHForm form) {
    const Cutoff box{60, 60, 60};
    const auto state = squeezed_fock_coefficients(label, box, 200, form);
    double worst = 0.0;
    for (int axis = 0; axis < 3; ++axis) {
        const double r = std::abs(label.s[std::size_t(axis)]);
        const cplx shear = std::polar(std::sinh(r), std::arg(label.s[std::size_t(axis)]));
        const double ch = std::cosh(r);
        const auto low = ladder_apply(Axis(axis), Ladder::lower, state);
        const auto up = ladder_apply(Axis(axis), Ladder::raise, state);
        double res2 = 0.0;
        for (std::size_t i = 0; i < low.coeffs.size(); ++i) {
            res2 += std::norm(ch * low.coeffs[i] - shear * up.coeffs[i]);
        }
        worst = std::max(worst, std::sqrt(res2));
    }
    return worst;
}

CheckResult check_normalization() {
    const auto params = natural_units();
    const CoherentLabel coh{{cplx(0.7, 0.3), cplx(-0.2, 0.0), cplx(0.0, 0.5)}};
    Vec3 center{};
    for (std::size_t a = 0; a < 3; ++a) {
        center[a] = kSqrt2 * std::real(coh.alpha[a]) / params.kappa;
    }
    const double n_coh =
        norm_squared(separable_coherent(coh, 0.0, params), params, 80, {1, 1, 1}, center);

    SqueezeLabel sq;
    sq.s = {cplx(0.5, 0.0), cplx(0.0, -0.3), 0.8 * std::polar(1.0, kPi / 4.0)};
    sq.alpha = {cplx(0.4, 0.2), cplx(-0.3, 0.0), cplx(0.0, 0.25)};
    const auto norm_for = [&](SqueezeHForm form) {
        Vec3 scale{}, ctr{};
        for (std::size_t a = 0; a < 3; ++a) {
            const auto ap = squeeze_axis_params(sq.s[a], form);
            scale[a] = std::sqrt(1.0 / (2.0 * std::real(ap.b_half)));
            ctr[a] = kSqrt2 * std::real(sq.alpha[a]) / params.kappa;
        }
        return norm_squared(separable_squeezed(sq, params, form), params, 80, scale, ctr);
    };
    const double dev_g = std::abs(norm_for(SqueezeHForm::g_denominator) - 1.0);
    const double dev_e = std::abs(norm_for(SqueezeHForm::exp_r_denominator) - 1.0);
    const double dev_coh = std::abs(n_coh - 1.0);

    SqueezeLabel vac;
    vac.s = {std::polar(0.5, 0.9), cplx(0.0, 0.6), cplx(-0.4, 0.0)};
    const double res_g = annihilation_residual(vac, SqueezeHForm::g_denominator);
    const double res_e = annihilation_residual(vac, SqueezeHForm::exp_r_denominator);

    const bool pass = dev_coh <= 1e-7 && dev_g <= 1e-7 && dev_e <= 1e-7 && res_g <= 1e-8 &&
                      res_e > 1e-3;
    return {"normalization-and-variant", pass,
            "coherent |N-1| " + sci(dev_coh) + ", squeezed g-form " + sci(dev_g) +
                ", exp-r form " + sci(dev_e) +
                "; norm accepts both h variants, operator residual separates them: g " +
                sci(res_g) + ", exp-r " + sci(res_e) + " -> surviving variant: g denominator"};
}

CheckResult check_projection_roundtrip() {
    const auto params = natural_units();
    SqueezeLabel sq;
    sq.s = {cplx(0.5, 0.0), cplx(-0.3, 0.4), cplx(0.0, 0.7)};
    sq.alpha = {cplx(0.5, 0.0), cplx(0.2, -0.3), cplx(0.0, -0.4)};
    const Cutoff box{50, 50, 50};
    const auto fc = squeezed_fock_coefficients(sq, box, 220);

    std::mt19937 gen(1006);
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    const double kap = params.kappa;
    std::vector<double> px(51), py(51), pz(51);
    double worst = 0.0;
    for (int i = 0; i < 6; ++i) {
        const Vec3 r{u(gen), u(gen), u(gen)};
        basis_1d_all(50, kap * r[0], px.data());
        basis_1d_all(50, kap * r[1], py.data());
        basis_1d_all(50, kap * r[2], pz.data());
        cplx series(0.0, 0.0);
        for (int m = 0; m <= 50; ++m) {
            for (int n = 0; n <= 50; ++n) {
                const double pxy = px[std::size_t(m)] * py[std::size_t(n)];
                for (int l = 0; l <= 50; ++l) {
                    series += fc.at(m, n, l) * (pxy * pz[std::size_t(l)]);
                }
            }
        }
        series *= kap * std::sqrt(kap);
        const cplx closed = squeezed_position_amplitude(sq, r, params);
        worst = std::max(worst, std::abs(series - closed));
    }

    SqueezeLabel sv;
    sv.s = {cplx(0.6, 0.0), cplx(0.0, 0.35), cplx(0.0, 0.0)};
    const auto fv = squeezed_fock_coefficients(sv, box, 220);
    double worst_odd = 0.0;
    for (int m = 0; m <= 50; ++m) {
        for (int n = 0; n <= 50; ++n) {
            for (int l = 0; l <= 50; ++l) {
                if (m % 2 == 1 || n % 2 == 1) {
                    worst_odd = std::max(worst_odd, std::abs(fv.at(m, n, l)));
                }
            }
        }
    }
    const bool pass = worst <= 1e-6 && worst_odd <= 1e-10;
    return {"squeezed-projection-roundtrip", pass,
            "resynthesis err " + sci(worst) + " (tail " + sci(fc.tail_mass) +
                "), odd-coefficient max " + sci(worst_odd)};
}

CheckResult check_mandel() {
    const double rs[5] = {0.16, 0.32, 0.48, 0.64, 0.8};
    const double amps[5] = {0.3, 0.6, 0.9, 1.2, 1.5};
    const double deltas[3] = {0.4, 1.1, 1.8};
    double worst_sweep = 0.0;
    double conv_gap = 0.0;
    for (const double r : rs) {
        for (const double amp : amps) {
            for (const double delta : deltas) {
                // family on which both delta attributions coincide
                const double theta = 2.0 / 3.0 * delta;
                const double phi = -2.0 / 3.0 * delta;
                SqueezeLabel label;
                label.s[0] = std::polar(r, theta);
                label.alpha[0] = std::polar(amp, phi);
                const double closed = mandel_q(label, Axis::x);
                const double alt =
                    mandel_q(label, Axis::x, DeltaConvention::half_theta_minus_phi);
                conv_gap = std::max(conv_gap, std::abs(closed - alt));
                const double oracle = mandel_q_oracle(label, Axis::x, 60, 180);
                worst_sweep = std::max(worst_sweep, std::abs(closed - oracle));
            }
        }
    }

    double worst_flat = 0.0;
    for (const double r : rs) {
        const double expected = std::cosh(2.0 * r);
        double lo = 1e300, hi = -1e300;
        for (const double delta : {0.0, 0.7, 1.4, 2.1, 2.8}) {
            const double q = mandel_q_formula(0.0, r, delta);
            lo = std::min(lo, q);
            hi = std::max(hi, q);
            worst_flat = std::max(worst_flat, std::abs(q - expected));
        }
        worst_flat = std::max(worst_flat, hi - lo);
    }

    // off the coincidence family only one attribution tracks the oracle
    SqueezeLabel generic;
    generic.s[0] = std::polar(0.5, 1.0);
    generic.alpha[0] = std::polar(1.0, 0.7);
    const double oracle_g = mandel_q_oracle(generic, Axis::x, 60, 180);
    const double off_default =
        std::abs(mandel_q(generic, Axis::x, DeltaConvention::theta_minus_half_phi) - oracle_g);
    const double off_alt =
        std::abs(mandel_q(generic, Axis::x, DeltaConvention::half_theta_minus_phi) - oracle_g);
    const bool attribution = off_alt <= 1e-4 && off_default > 1e-3;

    const bool pass = worst_sweep <= 1e-4 && worst_flat <= 1e-12 && conv_gap <= 1e-12 &&
                      attribution;
    return {"mandel-q-closed-vs-oracle", pass,
            "sweep max |closed-oracle| " + sci(worst_sweep) + ", alpha=0 cosh(2r) err " +
                sci(worst_flat) + "; generic angle: theta/2-phi matches oracle (" +
                sci(off_alt) + "), theta-phi/2 off by " + sci(off_default)};
}

CheckResult check_quadrature_squeezing() {
    std::mt19937 gen(1008);
    std::uniform_real_distribution<double> ur(-1.2, 1.2);
    std::uniform_real_distribution<double> ua(0.0, 2.0 * kPi);
    double worst_prod = 0.0;
    double worst_swap = 0.0;
    for (int i = 0; i < 40; ++i) {
        const double r = ur(gen);
        const double a = ua(gen);
        const auto v = quadrature_variances(r, a);
        worst_prod = std::max(worst_prod, 1.0 / 16.0 - v.var1 * v.var2);
        const auto w = quadrature_variances(-r, a);
        worst_swap = std::max({worst_swap, std::abs(w.var1 - v.var2),
                               std::abs(w.var2 - v.var1)});
    }

    double worst_border = 0.0;
    bool flips = true;
    int done = 0;
    while (done < 50) {
        const double a = ua(gen);
        bool degenerate = false;
        for (const double bad : {0.0, 0.5 * kPi, kPi, 1.5 * kPi, 2.0 * kPi}) {
            if (std::abs(a - bad) < 0.15) degenerate = true;
        }
        if (degenerate) continue;
        const auto border = squeeze_border(a);
        worst_border = std::max(
            worst_border, std::abs(quadrature_variances(border.r_plus, a).var1 - 0.25));
        worst_border = std::max(
            worst_border, std::abs(quadrature_variances(border.r_minus, a).var2 - 0.25));
        for (const double rb : {border.r_plus, border.r_minus}) {
            const bool above = classify_squeezing(quadrature_variances(rb + 1e-3, a));
            const bool below = classify_squeezing(quadrature_variances(rb - 1e-3, a));
            if (above == below) flips = false;
        }
        ++done;
    }

    SqueezeLabel vac;
    vac.s[0] = cplx(0.5, 0.0);
    const auto ov = statistics_oracle_variances(vac, Axis::x, 60, 160);
    const double prod_err = std::abs(ov.var1 * ov.var2 - 1.0 / 16.0);
    const bool one_below = std::min(ov.var1, ov.var2) < 0.25;

    SqueezeLabel tilted;
    tilted.s[0] = std::polar(0.5, 0.9);
    const auto og = statistics_oracle_variances(tilted, Axis::x, 60, 160);
    const auto cg = quadrature_variances(0.5, 0.9);
    const double attr =
        std::max(std::abs(og.var1 - cg.var1), std::abs(og.var2 - cg.var2));

    const bool pass = worst_prod <= 1e-12 && worst_swap <= 1e-12 && worst_border <= 1e-12 &&
                      flips && prod_err <= 1e-6 && one_below && attr <= 1e-6;
    return {"quadrature-squeezing", pass,
            "product floor violation " + sci(worst_prod) + ", swap err " + sci(worst_swap) +
                ", border err " + sci(worst_border) +
                (flips ? ", classification flips" : ", classification DOES NOT flip") +
                ", vacuum oracle product err " + sci(prod_err) +
                ", squeeze-phase attribution err " + sci(attr)};
}

CheckResult check_liouville() {
    const auto params = natural_units();
    const CoherentLabel label{{cplx(0.6, 0.4), cplx(-0.3, 0.5), cplx(0.2, -0.6)}};
    const PhaseFn w0 = [label, params](const PhasePoint& pt) {
        return wigner_coherent(label, pt, params);
    };
    const FlowFn flow = evolve_wigner_harmonic(w0, params);
    // same transport with the time direction flipped: must violate the
    // equation by a visible margin, proving the residual is sensitive
    const FlowFn wrong = [w0, params](const PhasePoint& pt, double t) {
        return w0(backward_characteristic(pt, -t, params));
    };
    std::mt19937 gen(1009);
    std::uniform_real_distribution<double> ut(0.0, 2.0 * kPi);
    std::uniform_real_distribution<double> uo(-0.8, 0.8);
    double worst = 0.0;
    double control = 0.0;
    for (int i = 0; i < 20; ++i) {
        const double t = ut(gen);
        const auto terms = coherent_eval_terms(label, t, params);
        PhasePoint pt;
        for (std::size_t a = 0; a < 3; ++a) {
            pt.r[a] = terms.r_bar[a] + uo(gen);
            pt.p[a] = terms.p_bar[a] + uo(gen);
        }
        worst = std::max(worst, liouville_residual(flow, pt, t, params, 1e-4));
        control = std::max(control, liouville_residual(wrong, pt, t, params, 1e-4));
    }
    const bool pass = worst <= 1e-6 && control > 1e-2;
    return {"liouville-transport", pass,
            "max residual " + sci(worst) + " at 20 samples, sign-flipped control " +
                sci(control)};
}

CheckResult check_determinism() {
    const std::vector<std::string> args{
        "wigner",  "--state", "coherent",   "--alpha", "0.8+0.3i;-0.2+0i;0.1-0.4i",
        "--grid",  "x:-2:2:41", "--grid",   "px:-2:2:41", "--order", "40"};
    const RunConfig cfg = parse_cli(args);
    set_worker_override(1);
    const std::string csv_one = to_csv(run(cfg));
    set_worker_override(4);
    const std::string csv_many = to_csv(run(cfg));
    set_worker_override(0);
    const bool identical = !csv_one.empty() && csv_one == csv_many;
    bool rejects_bad_grid = false;
    try {
        parse_cli({"wigner", "--grid", "x:0:1:1"});
    } catch (const ConfigError&) {
        rejects_bad_grid = true;
    }
    const bool pass = identical && rejects_bad_grid;
    return {"deterministic-output", pass,
            std::to_string(csv_one.size()) + " csv bytes " +
                (identical ? "identical" : "DIFFER") + " for worker pools 1 and 4; " +
                (rejects_bad_grid ? "single-point grid rejected" : "bad grid accepted")};
}

}  // namespace

std::vector<CheckResult> run_acceptance_checks() {
    return {
        check_wigner_equivalence(), check_marginals(),      check_overcompleteness(),
        check_coherent_evolution(), check_normalization(),  check_projection_roundtrip(),
        check_mandel(),             check_quadrature_squeezing(), check_liouville(),
        check_determinism(),
    };
}

}  // namespace osc3d
