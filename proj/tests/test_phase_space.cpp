#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "osc3d/coherent.hpp"
#include "osc3d/oscillator.hpp"
#include "osc3d/phase_space.hpp"
#include "osc3d/reference.hpp"
#include "osc3d/types.hpp"

using namespace osc3d;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPi3 = kPi * kPi * kPi;

}  // namespace

TEST_CASE("number-state Wigner function pinned values") {
    const auto params = natural_units();
    const PhasePoint origin{};
    CHECK(wigner_fock({0, 0, 0}, origin, params) ==
          doctest::Approx(1.0 / kPi3).epsilon(1e-14));
    CHECK(wigner_fock({1, 0, 0}, origin, params) ==
          doctest::Approx(-1.0 / kPi3).epsilon(1e-14));

    // first excited along x vanishes where 2 xi^2 = 1
    PhasePoint node{};
    node.r = {1.0 / std::numbers::sqrt2, 0.0, 0.0};
    CHECK(std::abs(wigner_fock({1, 0, 0}, node, params)) <= 1e-15);

    PhasePoint unit{};
    unit.r = {1.0, 0.0, 0.0};
    CHECK(wigner_fock({0, 0, 0}, unit, params) ==
          doctest::Approx(std::exp(-1.0) / kPi3).epsilon(1e-14));

    PhasePoint mixed{};
    mixed.r = {0.0, 0.3, 0.0};
    mixed.p = {0.0, 0.4, 0.0};
    const double u = 2.0 * (0.09 + 0.16);
    CHECK(wigner_fock({0, 1, 0}, mixed, params) ==
          doctest::Approx(-(1.0 - u) * std::exp(-0.25) / kPi3).epsilon(1e-13));

    // hbar enters only through the phase-space volume and the momentum scale
    const auto wide = make_params(1.0, 1.0, 2.0);
    CHECK(wigner_fock({0, 0, 0}, origin, wide) ==
          doctest::Approx(1.0 / (8.0 * kPi3)).epsilon(1e-14));
}

TEST_CASE("quadrature Wigner transform agrees with the closed form") {
    const auto params = natural_units();
    const TripleIndex idx{1, 2, 0};
    const auto sep = separable_eigenfunction(idx, params);
    const PhasePoint pts[] = {
        {{0.2, -0.4, 0.1}, {0.3, 0.0, -0.5}},
        {{0.0, 0.0, 0.0}, {0.0, 0.0, 0.0}},
        {{-0.8, 0.6, 0.4}, {-0.2, 0.7, 0.3}},
    };
    for (const auto& pt : pts) {
        const auto res = wigner_numeric_full(sep, pt, params, 50);
        CHECK(std::abs(res.value - wigner_fock(idx, pt, params)) <= 1e-8);
        CHECK(std::abs(res.imag_residual) <= 1e-10);
    }

    // the generic 3D route matches the factorized one
    const auto generic = wigner_numeric_full(as_amplitude_fn(sep), pts[0], params, 40);
    const auto fact = wigner_numeric_full(sep, pts[0], params, 40);
    CHECK(std::abs(generic.value - fact.value) <= 1e-12);
    CHECK(std::abs(generic.imag_residual) <= 1e-10);
}

TEST_CASE("coherent Wigner function is the transported Gaussian") {
    const auto params = natural_units();
    CoherentLabel label{{cplx(0.6, -0.2), cplx(-0.3, 0.4), cplx(0.1, 0.5)}};
    const auto sep = separable_coherent(label, 0.4, params);
    const auto evolved = evolve_coherent(label, 0.4, params);
    PhasePoint pt;
    pt.r = {0.5, -0.6, 0.2};
    pt.p = {-0.1, 0.4, 0.8};
    const double numeric = wigner_numeric(sep, pt, params, 60);
    CHECK(std::abs(numeric - wigner_coherent(evolved.label, pt, params)) <= 1e-9);
}

TEST_CASE("serial reference kernels match the parallel ones") {
    const auto params = natural_units();
    const auto sep = separable_eigenfunction({2, 0, 1}, params);
    PhasePoint pt;
    pt.r = {0.4, 0.2, -0.3};
    pt.p = {0.1, -0.5, 0.2};

    const auto par_s = wigner_numeric_full(sep, pt, params, 40);
    const auto ref_s = reference::wigner_numeric_full(sep, pt, params, 40);
    CHECK(std::abs(par_s.value - ref_s.value) <= 1e-13);

    const auto fn = as_amplitude_fn(sep);
    const auto par_g = wigner_numeric_full(fn, pt, params, 30);
    const auto ref_g = reference::wigner_numeric_full(fn, pt, params, 30);
    CHECK(std::abs(par_g.value - ref_g.value) <= 1e-12);

    CHECK(std::abs(norm_squared(fn, params, 40) -
                   reference::norm_squared(fn, params, 40)) <= 1e-13);

    PhaseFn w = [&](const PhasePoint& q) { return wigner_fock({1, 0, 0}, q, params); };
    std::vector<PhasePoint> grid;
    for (int i = 0; i < 5; ++i) {
        PhasePoint g;
        g.r = {0.2 * i, -0.1 * i, 0.05 * i};
        g.p = {0.0, 0.3 * i, -0.2 * i};
        grid.push_back(g);
    }
    const auto sampled = reference::sample(w, grid);
    REQUIRE(sampled.size() == grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        CHECK(sampled[i] == doctest::Approx(w(grid[i])).epsilon(1e-15));
    }
}

TEST_CASE("Wigner marginals reproduce the densities") {
    const auto params = natural_units();
    const TripleIndex idx{0, 1, 2};
    const Vec3 pts[] = {{0.3, -0.6, 0.9}, {1.2, 0.4, -0.2}};
    for (const auto& r : pts) {
        const double d = eigenfunction(idx, r, params);
        CHECK(std::abs(wigner_marginal_position(idx, r, params, 40) - d * d) <= 1e-10);
    }

    const auto sep = separable_eigenfunction(idx, params);
    const Vec3 ps[] = {{0.5, -0.3, 0.2}, {0.0, 0.8, -0.7}};
    for (const auto& p : ps) {
        const cplx phi = momentum_wavefunction(sep, p, params, 60);
        CHECK(std::abs(wigner_marginal_momentum(idx, p, params, 40) - std::norm(phi)) <=
              1e-8);
    }
}

TEST_CASE("momentum representation carries the expected phases") {
    const auto params = natural_units();

    // ground state: real, positive, Gaussian
    const auto ground = separable_eigenfunction({0, 0, 0}, params);
    const Vec3 p0{0.6, -0.2, 0.3};
    const double q2 = dot(p0, p0);
    const cplx g = momentum_wavefunction(ground, p0, params, 50);
    CHECK(std::abs(g - cplx(std::pow(kPi, -0.75) * std::exp(-0.5 * q2), 0.0)) <= 1e-12);

    // one quantum along x: a factor (-i) against the same real profile
    const auto ex = separable_eigenfunction({1, 0, 0}, params);
    const Vec3 p1{0.6, 0.0, 0.0};
    const cplx f = momentum_wavefunction(ex, p1, params, 50);
    const double prof = basis_1d(1, 0.6) * basis_1d(0, 0.0) * basis_1d(0, 0.0);
    CHECK(std::abs(f - cplx(0.0, -1.0) * prof) <= 1e-12);

    // physical units rescale momentum by hbar kappa and normalize accordingly
    const auto wide = make_params(1.0, 1.0, 2.0);
    const auto gw = separable_eigenfunction({0, 0, 0}, wide);
    const double hk = wide.hbar * wide.kappa;
    const Vec3 pw{0.5, 0.0, 0.0};
    const double qw = 0.5 / hk;
    const cplx fw = momentum_wavefunction(gw, pw, wide, 50);
    const double expect = std::pow(kPi, -0.75) * std::exp(-0.5 * qw * qw) /
                          (hk * std::sqrt(hk));
    CHECK(std::abs(fw - cplx(expect, 0.0)) <= 1e-12);
}

TEST_CASE("norm quadrature with remapped nodes") {
    const auto params = natural_units();
    CHECK(std::abs(norm_squared(as_amplitude_fn(separable_eigenfunction({0, 0, 0}, params)),
                                params, 30) -
                   1.0) <= 1e-12);

    CoherentLabel label{{cplx(0.8, 0.3), cplx(-0.5, -0.2), cplx(0.0, 0.6)}};
    Vec3 center{};
    for (std::size_t a = 0; a < 3; ++a) {
        center[a] = std::numbers::sqrt2 * std::real(label.alpha[a]) / params.kappa;
    }
    const double n = norm_squared(separable_coherent(label, 0.0, params), params, 60,
                                  {1.0, 1.0, 1.0}, center);
    CHECK(std::abs(n - 1.0) <= 1e-9);
}

TEST_CASE("backward characteristics invert the harmonic flow") {
    const auto params = natural_units();
    PhasePoint pt;
    pt.r = {1.0, 2.0, 3.0};
    pt.p = {0.1, 0.2, 0.3};

    const auto quarter = backward_characteristic(pt, kPi / 2.0, params);
    for (std::size_t a = 0; a < 3; ++a) {
        CHECK(quarter.r[a] == doctest::Approx(-pt.p[a]).epsilon(1e-13));
        CHECK(quarter.p[a] == doctest::Approx(pt.r[a]).epsilon(1e-13));
    }

    const auto physical = make_params(2.0, 3.0, 1.0);
    const double t = 0.4;
    const auto back = backward_characteristic(pt, t, physical);
    const double c = std::cos(physical.omega * t), s = std::sin(physical.omega * t);
    for (std::size_t a = 0; a < 3; ++a) {
        CHECK(back.r[a] == doctest::Approx(pt.r[a] * c -
                                           pt.p[a] * s / (physical.mass * physical.omega))
                               .epsilon(1e-13));
        CHECK(back.p[a] == doctest::Approx(pt.p[a] * c +
                                           physical.mass * physical.omega * pt.r[a] * s)
                               .epsilon(1e-13));
    }

    const auto there = backward_characteristic(pt, 0.7, physical);
    const auto andBack = backward_characteristic(there, -0.7, physical);
    for (std::size_t a = 0; a < 3; ++a) {
        CHECK(std::abs(andBack.r[a] - pt.r[a]) <= 1e-14);
        CHECK(std::abs(andBack.p[a] - pt.p[a]) <= 1e-14);
    }
}

TEST_CASE("transported Gaussian solves the transport equation") {
    const auto params = natural_units();
    CoherentLabel label{{cplx(0.5, 0.5), cplx(-0.3, 0.0), cplx(0.0, 0.2)}};
    PhaseFn initial = [&](const PhasePoint& pt) {
        return wigner_coherent(label, pt, params);
    };
    const auto flow = evolve_wigner_harmonic(initial, params);

    // transport along characteristics equals the closed evolved Gaussian
    const double t = 0.7;
    const auto evolved = evolve_coherent(label, t, params);
    const auto terms = coherent_eval_terms(label, t, params);
    PhasePoint near;
    near.r = {terms.r_bar[0] + 0.3, terms.r_bar[1] - 0.2, terms.r_bar[2] + 0.1};
    near.p = {terms.p_bar[0] - 0.1, terms.p_bar[1] + 0.4, terms.p_bar[2] + 0.2};
    CHECK(std::abs(flow(near, t) - wigner_coherent(evolved.label, near, params)) <= 1e-12);

    CHECK(std::abs(liouville_residual(flow, near, t, params, 1e-4)) <= 1e-6);

    // reversing the characteristic direction is not a solution
    FlowFn wrong = [&](const PhasePoint& pt, double tt) {
        return initial(backward_characteristic(pt, -tt, params));
    };
    CHECK(std::abs(liouville_residual(wrong, near, t, params, 1e-4)) > 1e-3);
}

TEST_CASE("phase coordinate names round trip") {
    const PhaseCoord all[] = {PhaseCoord::x,  PhaseCoord::y,  PhaseCoord::z,
                              PhaseCoord::px, PhaseCoord::py, PhaseCoord::pz};
    for (auto c : all) {
        const auto parsed = parse_coord(coord_name(c));
        REQUIRE(parsed.has_value());
        CHECK(*parsed == c);
    }
    CHECK(std::string(coord_name(PhaseCoord::py)) == "py");
    CHECK_FALSE(parse_coord("bogus").has_value());
    CHECK_FALSE(parse_coord("").has_value());

    PhasePoint pt;
    set_coord(pt, PhaseCoord::pz, 2.5);
    set_coord(pt, PhaseCoord::y, -1.5);
    CHECK(pt.p[2] == doctest::Approx(2.5));
    CHECK(pt.r[1] == doctest::Approx(-1.5));
    CHECK(get_coord(pt, PhaseCoord::pz) == doctest::Approx(2.5));
    CHECK(get_coord(pt, PhaseCoord::y) == doctest::Approx(-1.5));
}
