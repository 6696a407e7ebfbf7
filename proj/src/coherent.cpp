#include "osc3d/coherent.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "osc3d/special_functions.hpp"

namespace osc3d {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr double kPiQuarterInv = 0.7511255444649425;   // pi^(-1/4)

// e^{-|a|^2/2} a^k / sqrt(k!) for k = 0..kmax, via logs of the modulus
std::vector<cplx> axis_poisson_amps(cplx a, int kmax) {
    std::vector<cplx> out(std::size_t(kmax) + 1);
    const double mod = std::abs(a);
    if (mod == 0.0) {
        out[0] = 1.0;
        return out;
    }
    const double logmod = std::log(mod);
    const double arg = std::arg(a);
    for (int k = 0; k <= kmax; ++k) {
        const double lm = -0.5 * mod * mod + k * logmod - 0.5 * log_factorial(k);
        out[std::size_t(k)] = std::polar(std::exp(lm), k * arg);
    }
    return out;
}

// Poisson upper tail P(K > kmax) for intensity lambda, summed forward from
// the first excluded term so no cancellation against 1 occurs
double axis_poisson_tail(double lambda, int kmax) {
    if (lambda == 0.0) return 0.0;
    int k = kmax + 1;
    double term = std::exp(-lambda + k * std::log(lambda) - log_factorial(k));
    double acc = 0.0;
    for (int it = 0; it < 200000; ++it) {
        acc += term;
        ++k;
        term *= lambda / k;
        if (term <= acc * 1e-18 + 1e-320) break;
    }
    return acc;
}

// per-axis packet factor in the scaled coordinate xi, for displacement z:
// pi^{-1/4} exp(-(xi - xb)^2/2 + i qb (xi - xb/2)) with xb + i qb = sqrt2 z
cplx axis_packet(cplx xi, cplx z) {
    const double xb = kSqrt2 * std::real(z);
    const double qb = kSqrt2 * std::imag(z);
    const cplx d = xi - xb;
    return kPiQuarterInv * std::exp(-0.5 * d * d + cplx(0.0, qb) * (xi - 0.5 * xb));
}

}  // namespace

FockCoefficients coherent_coefficients(const CoherentLabel& label, Cutoff cutoff) {
    FockCoefficients out(cutoff);
    const auto dx = axis_poisson_amps(label.alpha[0], cutoff.nx);
    const auto dy = axis_poisson_amps(label.alpha[1], cutoff.ny);
    const auto dz = axis_poisson_amps(label.alpha[2], cutoff.nz);
    for (int m = 0; m <= cutoff.nx; ++m) {
        for (int n = 0; n <= cutoff.ny; ++n) {
            const cplx mn = dx[std::size_t(m)] * dy[std::size_t(n)];
            for (int l = 0; l <= cutoff.nz; ++l) {
                out.at(m, n, l) = mn * dz[std::size_t(l)];
            }
        }
    }
    const double tx = axis_poisson_tail(std::norm(label.alpha[0]), cutoff.nx);
    const double ty = axis_poisson_tail(std::norm(label.alpha[1]), cutoff.ny);
    const double tz = axis_poisson_tail(std::norm(label.alpha[2]), cutoff.nz);
    out.tail_mass = tx + ty * (1.0 - tx) + tz * (1.0 - tx) * (1.0 - ty);
    return out;
}

cplx coherent_overlap(const CoherentLabel& bra, const CoherentLabel& ket) {
    double dist2 = 0.0;
    for (int a = 0; a < 3; ++a) {
        dist2 += std::norm(ket.alpha[std::size_t(a)] - bra.alpha[std::size_t(a)]);
    }
    const cplx cross = hdot(bra.alpha, ket.alpha);
    return std::exp(cplx(-0.5 * dist2, std::imag(cross)));
}

double resolve_identity_residual(int max_index, int radial_order, int angular_order) {
    if (max_index < 0 || max_index > kMaxDegree) {
        throw std::domain_error("max_index outside supported range");
    }
    const auto radial = make_quadrature(QuadKind::gauss_laguerre, radial_order);
    const auto angular = make_quadrature(QuadKind::trapezoid_periodic, angular_order);
    const int n = max_index + 1;
    std::vector<cplx> m1(std::size_t(n) * n);
    for (int m = 0; m < n; ++m) {
        for (int p = 0; p < n; ++p) {
            cplx ang(0.0, 0.0);
            for (std::size_t k = 0; k < angular.nodes.size(); ++k) {
                ang += angular.weights[k] *
                       std::polar(1.0, (m - p) * angular.nodes[k]);
            }
            double rad = 0.0;
            for (std::size_t j = 0; j < radial.nodes.size(); ++j) {
                rad += radial.weights[j] * std::pow(radial.nodes[j], 0.5 * (m + p));
            }
            const double scale =
                std::exp(-0.5 * (log_factorial(m) + log_factorial(p)));
            m1[std::size_t(m) * n + p] = (0.5 / kPi) * ang * rad * scale;
        }
    }
    double worst = 0.0;
    for (int m = 0; m < n; ++m)
        for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q)
                for (int s = 0; s < n; ++s)
                    for (int l = 0; l < n; ++l)
                        for (int u = 0; u < n; ++u) {
                            const cplx val = m1[std::size_t(m) * n + p] *
                                             m1[std::size_t(q) * n + s] *
                                             m1[std::size_t(l) * n + u];
                            const double id =
                                (m == p && q == s && l == u) ? 1.0 : 0.0;
                            worst = std::max(worst, std::abs(val - id));
                        }
    return worst;
}

EvolvedCoherent evolve_coherent(const CoherentLabel& label, double t,
                                const OscillatorParams& params) {
    const cplx rot = std::polar(1.0, -params.omega * t);
    EvolvedCoherent out;
    for (int a = 0; a < 3; ++a) out.label.alpha[std::size_t(a)] = rot * label.alpha[std::size_t(a)];
    out.global_phase = -1.5 * params.omega * t;
    return out;
}

CoherentEvalTerms coherent_eval_terms(const CoherentLabel& label, double t,
                                      const OscillatorParams& params) {
    const cplx rot = std::polar(1.0, -params.omega * t);
    CoherentEvalTerms out;
    double a2 = 0.0;
    for (int a = 0; a < 3; ++a) {
        const cplx z = rot * label.alpha[std::size_t(a)];
        out.r_bar[std::size_t(a)] = kSqrt2 / params.kappa * std::real(z);
        out.p_bar[std::size_t(a)] = kSqrt2 * params.hbar * params.kappa * std::imag(z);
        a2 += std::norm(label.alpha[std::size_t(a)]);
    }
    out.phi_zp = 1.5 * params.omega * t;
    const cplx rot2 = rot * rot;
    const cplx aa = cdot(label.alpha, label.alpha);
    out.a_delta = cplx(0.0, -0.5) * (rot2 * a2 - std::real(rot2 * aa));
    return out;
}

cplx coherent_position_amplitude(const CoherentLabel& label, double t, const CVec3& r,
                                 const OscillatorParams& params) {
    const cplx rot = std::polar(1.0, -params.omega * t);
    const double k = params.kappa;
    cplx acc = k * std::sqrt(k) * std::polar(1.0, -1.5 * params.omega * t);
    for (int a = 0; a < 3; ++a) {
        acc *= axis_packet(k * r[std::size_t(a)], rot * label.alpha[std::size_t(a)]);
    }
    return acc;
}

cplx coherent_position_amplitude(const CoherentLabel& label, double t, const Vec3& r,
                                 const OscillatorParams& params) {
    return coherent_position_amplitude(
        label, t, CVec3{cplx(r[0], 0.0), cplx(r[1], 0.0), cplx(r[2], 0.0)}, params);
}

SeparableAmplitude separable_coherent(const CoherentLabel& label, double t,
                                      const OscillatorParams& params) {
    const cplx rot = std::polar(1.0, -params.omega * t);
    const double k = params.kappa;
    SeparableAmplitude out;
    out.prefactor = k * std::sqrt(k) * std::polar(1.0, -1.5 * params.omega * t);
    for (int a = 0; a < 3; ++a) {
        out.axis[std::size_t(a)] = [k, z = rot * label.alpha[std::size_t(a)]](cplx x) {
            return axis_packet(k * x, z);
        };
    }
    return out;
}

double wigner_coherent(const CoherentLabel& label, const PhasePoint& pt,
                       const OscillatorParams& params) {
    const double k = params.kappa;
    double dist2 = 0.0;
    for (int a = 0; a < 3; ++a) {
        const double xi = k * pt.r[std::size_t(a)];
        const double q = pt.p[std::size_t(a)] / (params.hbar * k);
        const double dx = xi - kSqrt2 * std::real(label.alpha[std::size_t(a)]);
        const double dq = q - kSqrt2 * std::imag(label.alpha[std::size_t(a)]);
        dist2 += dx * dx + dq * dq;
    }
    const double h3 = params.hbar * params.hbar * params.hbar;
    return std::exp(-dist2) / (kPi * kPi * kPi * h3);
}

}  // namespace osc3d
