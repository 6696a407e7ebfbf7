#include "osc3d/reference.hpp"

#include <cmath>
#include <numbers>

#include "osc3d/special_functions.hpp"

namespace osc3d::reference {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

WignerNumericResult wigner_numeric_full(const AmplitudeFn& psi, const PhasePoint& pt,
                                        const OscillatorParams& params, int order) {
    const auto rule = make_quadrature(QuadKind::gauss_hermite, order);
    const double k = params.kappa;
    Vec3 q;
    for (int a = 0; a < 3; ++a) {
        q[std::size_t(a)] = pt.p[std::size_t(a)] / (params.hbar * k);
    }
    cplx total(0.0, 0.0);
    const std::size_t n = rule.nodes.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t m = 0; m < n; ++m) {
                const std::size_t node[3] = {i, j, m};
                cplx expo(0.0, 0.0);
                CVec3 z1, z2;
                double w = 1.0;
                for (int a = 0; a < 3; ++a) {
                    const double x = rule.nodes[node[a]];
                    const cplx u(x, -q[std::size_t(a)]);
                    expo += u * u;
                    z1[std::size_t(a)] = pt.r[std::size_t(a)] + u / k;
                    z2[std::size_t(a)] = pt.r[std::size_t(a)] - std::conj(u) / k;
                    w *= rule.weights[node[a]];
                }
                total += w * std::exp(expo) * std::conj(psi(z2)) * psi(z1);
            }
        }
    }
    const double hk = kPi * params.hbar * k;
    const double pref = std::exp(-dot(q, q)) / (hk * hk * hk);
    return {pref * std::real(total), std::abs(pref * std::imag(total))};
}

WignerNumericResult wigner_numeric_full(const SeparableAmplitude& psi, const PhasePoint& pt,
                                        const OscillatorParams& params, int order) {
    const auto rule = make_quadrature(QuadKind::gauss_hermite, order);
    const double k = params.kappa;
    cplx total = std::norm(psi.prefactor);
    double q2 = 0.0;
    for (int a = 0; a < 3; ++a) {
        const double qa = pt.p[std::size_t(a)] / (params.hbar * k);
        const double ra = pt.r[std::size_t(a)];
        q2 += qa * qa;
        const auto& f = psi.axis[std::size_t(a)];
        cplx acc(0.0, 0.0);
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            const cplx u(rule.nodes[i], -qa);
            acc += rule.weights[i] * std::exp(u * u) * f(ra + u / k) *
                   std::conj(f(ra - std::conj(u) / k));
        }
        total *= acc;
    }
    const double hk = kPi * params.hbar * k;
    const double pref = std::exp(-q2) / (hk * hk * hk);
    return {pref * std::real(total), std::abs(pref * std::imag(total))};
}

double norm_squared(const AmplitudeFn& psi, const OscillatorParams& params, int order,
                    const Vec3& scale, const Vec3& center) {
    const auto rule = make_quadrature(QuadKind::gauss_hermite, order);
    const double k = params.kappa;
    double total = 0.0;
    const std::size_t n = rule.nodes.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t m = 0; m < n; ++m) {
                const std::size_t node[3] = {i, j, m};
                CVec3 pos;
                double w = 1.0;
                for (int a = 0; a < 3; ++a) {
                    const double x = rule.nodes[node[a]];
                    pos[std::size_t(a)] = center[std::size_t(a)] +
                                          scale[std::size_t(a)] / k * x;
                    w *= rule.weights[node[a]] * std::exp(x * x);
                }
                total += w * std::norm(psi(pos));
            }
        }
    }
    return total * scale[0] * scale[1] * scale[2] / (k * k * k);
}

std::vector<double> sample(const PhaseFn& f, const std::vector<PhasePoint>& pts) {
    std::vector<double> out(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) out[i] = f(pts[i]);
    return out;
}

}  // namespace osc3d::reference
