#include "osc3d/phase_space.hpp"

#include <cmath>
#include <numbers>
#include <utility>
#include <vector>

#include "osc3d/parallel.hpp"
#include "osc3d/special_functions.hpp"

namespace osc3d {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt2 = std::numbers::sqrt2;

// scaled phase-space coordinates: xi = kappa r, q = p / (hbar kappa)
Vec3 scaled_position(const PhasePoint& pt, const OscillatorParams& params) {
    return {params.kappa * pt.r[0], params.kappa * pt.r[1], params.kappa * pt.r[2]};
}

Vec3 scaled_momentum(const PhasePoint& pt, const OscillatorParams& params) {
    const double s = 1.0 / (params.hbar * params.kappa);
    return {s * pt.p[0], s * pt.p[1], s * pt.p[2]};
}

// weights with the Gaussian divided back out, evaluated in log form so
// large orders stay finite
std::vector<double> flattened_weights(const QuadratureRule& rule) {
    std::vector<double> out(rule.nodes.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = std::exp(std::log(rule.weights[i]) + rule.nodes[i] * rule.nodes[i]);
    }
    return out;
}

}  // namespace

double wigner_fock(TripleIndex idx, const PhasePoint& pt, const OscillatorParams& params) {
    const Vec3 xi = scaled_position(pt, params);
    const Vec3 q = scaled_momentum(pt, params);
    const double hb = params.hbar;
    const double sign = (idx.total() % 2 == 0) ? 1.0 : -1.0;
    double out = sign / (kPi * kPi * kPi * hb * hb * hb) *
                 std::exp(-dot(xi, xi) - dot(q, q));
    for (int a = 0; a < 3; ++a) {
        out *= laguerre(idx[a], 2.0 * (xi[std::size_t(a)] * xi[std::size_t(a)] +
                                       q[std::size_t(a)] * q[std::size_t(a)]));
    }
    return out;
}

WignerNumericResult wigner_numeric_full(const AmplitudeFn& psi, const PhasePoint& pt,
                                        const OscillatorParams& params, int order) {
    const auto rule = make_quadrature(QuadKind::gauss_hermite, order);
    const auto w = flattened_weights(rule);
    const Vec3 q = scaled_momentum(pt, params);
    const double k = params.kappa;
    const std::ptrdiff_t n = std::ptrdiff_t(rule.nodes.size());
    const cplx total = blocked_sum_c(n * n * n, [&](std::ptrdiff_t flat) {
        const std::ptrdiff_t idx[3] = {flat / (n * n), (flat / n) % n, flat % n};
        cplx expo(0.0, 0.0);
        CVec3 z1, z2;
        double weight = 1.0;
        for (int a = 0; a < 3; ++a) {
            const std::size_t i = std::size_t(idx[a]);
            const double x = rule.nodes[i];
            const double qa = q[std::size_t(a)];
            const cplx u(x, -qa);
            // u^2 with the node Gaussian already in the weight: the
            // remaining exponential has modulus <= 1
            expo += cplx(-qa * qa, -2.0 * x * qa);
            z1[std::size_t(a)] = pt.r[std::size_t(a)] + u / k;
            // the conjugated factor is evaluated through its reflected
            // argument so psi itself is the only function needed
            z2[std::size_t(a)] = pt.r[std::size_t(a)] - std::conj(u) / k;
            weight *= w[i];
        }
        return weight * std::exp(expo) * std::conj(psi(z2)) * psi(z1);
    });
    const double hk = kPi * params.hbar * k;
    const double pref = std::exp(-dot(q, q)) / (hk * hk * hk);
    return {pref * std::real(total), std::abs(pref * std::imag(total))};
}

WignerNumericResult wigner_numeric_full(const SeparableAmplitude& psi, const PhasePoint& pt,
                                        const OscillatorParams& params, int order) {
    const auto rule = make_quadrature(QuadKind::gauss_hermite, order);
    const Vec3 q = scaled_momentum(pt, params);
    const double k = params.kappa;
    const std::ptrdiff_t n = std::ptrdiff_t(rule.nodes.size());
    const auto w = flattened_weights(rule);
    cplx total = std::norm(psi.prefactor);
    for (int a = 0; a < 3; ++a) {
        const auto& f = psi.axis[std::size_t(a)];
        const double qa = q[std::size_t(a)];
        const double ra = pt.r[std::size_t(a)];
        total *= blocked_sum_c(n, [&](std::ptrdiff_t i) {
            const double x = rule.nodes[std::size_t(i)];
            const cplx u(x, -qa);
            return w[std::size_t(i)] * std::exp(cplx(-qa * qa, -2.0 * x * qa)) *
                   f(ra + u / k) * std::conj(f(ra - std::conj(u) / k));
        });
    }
    const double hk = kPi * params.hbar * k;
    const double pref = std::exp(-dot(q, q)) / (hk * hk * hk);
    return {pref * std::real(total), std::abs(pref * std::imag(total))};
}

double wigner_marginal_position(TripleIndex idx, const Vec3& r,
                                const OscillatorParams& params, int order) {
    const auto rule = make_quadrature(QuadKind::gauss_hermite, order);
    const double k = params.kappa;
    double out = 1.0;
    for (int a = 0; a < 3; ++a) {
        const double xi = k * r[std::size_t(a)];
        const int kq = idx[a];
        double acc = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            const double v = rule.nodes[i];
            acc += rule.weights[i] * laguerre(kq, 2.0 * (v * v + xi * xi));
        }
        const double sign = (kq % 2 == 0) ? 1.0 : -1.0;
        out *= k / kPi * sign * std::exp(-xi * xi) * acc;
    }
    return out;
}

double wigner_marginal_momentum(TripleIndex idx, const Vec3& p,
                                const OscillatorParams& params, int order) {
    const auto rule = make_quadrature(QuadKind::gauss_hermite, order);
    const double k = params.kappa;
    double out = 1.0;
    for (int a = 0; a < 3; ++a) {
        const double q = p[std::size_t(a)] / (params.hbar * k);
        const int kq = idx[a];
        double acc = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            const double v = rule.nodes[i];
            acc += rule.weights[i] * laguerre(kq, 2.0 * (v * v + q * q));
        }
        const double sign = (kq % 2 == 0) ? 1.0 : -1.0;
        out *= sign / (kPi * params.hbar * k) * std::exp(-q * q) * acc;
    }
    return out;
}

cplx momentum_wavefunction(const AmplitudeFn& psi, const Vec3& p,
                           const OscillatorParams& params, int order) {
    const auto rule = make_quadrature(QuadKind::gauss_hermite, order);
    const auto w = flattened_weights(rule);
    const double k = params.kappa;
    Vec3 q;
    for (int a = 0; a < 3; ++a) q[std::size_t(a)] = p[std::size_t(a)] / (params.hbar * k);
    const std::ptrdiff_t n = std::ptrdiff_t(rule.nodes.size());
    const cplx total = blocked_sum_c(n * n * n, [&](std::ptrdiff_t flat) {
        const std::ptrdiff_t idx[3] = {flat / (n * n), (flat / n) % n, flat % n};
        cplx expo(0.0, 0.0);
        CVec3 z;
        double weight = 1.0;
        for (int a = 0; a < 3; ++a) {
            const std::size_t i = std::size_t(idx[a]);
            const double x = rule.nodes[i];
            const double qa = q[std::size_t(a)];
            expo += cplx(-0.5 * qa * qa, -kSqrt2 * x * qa);
            z[std::size_t(a)] = cplx(kSqrt2 * x, -qa) / k;
            weight *= w[i];
        }
        return weight * std::exp(expo) * psi(z);
    });
    const double tph = 2.0 * kPi * params.hbar;
    const double pref = 2.0 * kSqrt2 / (tph * std::sqrt(tph) * k * k * k);
    return pref * std::exp(-0.5 * dot(q, q)) * total;
}

cplx momentum_wavefunction(const SeparableAmplitude& psi, const Vec3& p,
                           const OscillatorParams& params, int order) {
    const auto rule = make_quadrature(QuadKind::gauss_hermite, order);
    const auto w = flattened_weights(rule);
    const double k = params.kappa;
    const std::ptrdiff_t n = std::ptrdiff_t(rule.nodes.size());
    cplx total = psi.prefactor;
    double q2 = 0.0;
    for (int a = 0; a < 3; ++a) {
        const double q = p[std::size_t(a)] / (params.hbar * k);
        q2 += q * q;
        const auto& f = psi.axis[std::size_t(a)];
        total *= blocked_sum_c(n, [&](std::ptrdiff_t i) {
            const double x = rule.nodes[std::size_t(i)];
            return w[std::size_t(i)] * std::exp(cplx(-0.5 * q * q, -kSqrt2 * x * q)) *
                   f(cplx(kSqrt2 * x, -q) / k);
        });
    }
    const double tph = 2.0 * kPi * params.hbar;
    const double pref = 2.0 * kSqrt2 / (tph * std::sqrt(tph) * k * k * k);
    return pref * std::exp(-0.5 * q2) * total;
}

double norm_squared(const AmplitudeFn& psi, const OscillatorParams& params, int order,
                    const Vec3& scale, const Vec3& center) {
    const auto rule = make_quadrature(QuadKind::gauss_hermite, order);
    const auto w = flattened_weights(rule);
    const double k = params.kappa;
    const std::ptrdiff_t n = std::ptrdiff_t(rule.nodes.size());
    const double total = blocked_sum(n * n * n, [&](std::ptrdiff_t flat) {
        const std::ptrdiff_t idx[3] = {flat / (n * n), (flat / n) % n, flat % n};
        CVec3 pos;
        double weight = 1.0;
        for (int a = 0; a < 3; ++a) {
            const std::size_t i = std::size_t(idx[a]);
            pos[std::size_t(a)] =
                center[std::size_t(a)] + scale[std::size_t(a)] / k * rule.nodes[i];
            weight *= w[i];
        }
        return weight * std::norm(psi(pos));
    });
    return total * scale[0] * scale[1] * scale[2] / (k * k * k);
}

double norm_squared(const SeparableAmplitude& psi, const OscillatorParams& params, int order,
                    const Vec3& scale, const Vec3& center) {
    const auto rule = make_quadrature(QuadKind::gauss_hermite, order);
    const auto w = flattened_weights(rule);
    const double k = params.kappa;
    const std::ptrdiff_t n = std::ptrdiff_t(rule.nodes.size());
    double total = std::norm(psi.prefactor);
    for (int a = 0; a < 3; ++a) {
        const auto& f = psi.axis[std::size_t(a)];
        const double sc = scale[std::size_t(a)] / k;
        const double ce = center[std::size_t(a)];
        total *= sc * blocked_sum(n, [&](std::ptrdiff_t i) {
            return w[std::size_t(i)] * std::norm(f(ce + sc * rule.nodes[std::size_t(i)]));
        });
    }
    return total;
}

PhasePoint backward_characteristic(const PhasePoint& pt, double t,
                                   const OscillatorParams& params) {
    const double c = std::cos(params.omega * t);
    const double s = std::sin(params.omega * t);
    const double mw = params.mass * params.omega;
    PhasePoint out;
    for (int a = 0; a < 3; ++a) {
        const std::size_t i = std::size_t(a);
        out.r[i] = pt.r[i] * c - pt.p[i] / mw * s;
        out.p[i] = pt.p[i] * c + mw * pt.r[i] * s;
    }
    return out;
}

FlowFn evolve_wigner_harmonic(PhaseFn initial, const OscillatorParams& params) {
    return [w0 = std::move(initial), params](const PhasePoint& pt, double t) {
        return w0(backward_characteristic(pt, t, params));
    };
}

double liouville_residual(const FlowFn& w, const PhasePoint& pt, double t,
                          const OscillatorParams& params, double step) {
    const double dwdt = (w(pt, t + step) - w(pt, t - step)) / (2.0 * step);
    double acc = dwdt;
    for (int a = 0; a < 3; ++a) {
        const std::size_t i = std::size_t(a);
        PhasePoint rp = pt, rm = pt, pp = pt, pm = pt;
        rp.r[i] += step;
        rm.r[i] -= step;
        pp.p[i] += step;
        pm.p[i] -= step;
        const double dwdr = (w(rp, t) - w(rm, t)) / (2.0 * step);
        const double dwdp = (w(pp, t) - w(pm, t)) / (2.0 * step);
        acc += pt.p[i] / params.mass * dwdr -
               params.mass * params.omega * params.omega * pt.r[i] * dwdp;
    }
    return std::abs(acc);
}

const char* coord_name(PhaseCoord c) {
    switch (c) {
        case PhaseCoord::x: return "x";
        case PhaseCoord::y: return "y";
        case PhaseCoord::z: return "z";
        case PhaseCoord::px: return "px";
        case PhaseCoord::py: return "py";
        case PhaseCoord::pz: return "pz";
    }
    return "?";
}

std::optional<PhaseCoord> parse_coord(const std::string& name) {
    for (PhaseCoord c : {PhaseCoord::x, PhaseCoord::y, PhaseCoord::z, PhaseCoord::px,
                         PhaseCoord::py, PhaseCoord::pz}) {
        if (name == coord_name(c)) return c;
    }
    return std::nullopt;
}

}  // namespace osc3d
