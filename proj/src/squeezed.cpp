#include "osc3d/squeezed.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "osc3d/special_functions.hpp"

namespace osc3d {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr double kPiQuarterInv = 0.7511255444649425;   // pi^(-1/4)

// displaced squeezed axis factor in the scaled coordinate xi
cplx axis_squeezed(cplx xi, const AxisSqueezeParams& ap, cplx alpha) {
    const double x0 = kSqrt2 * std::real(alpha);
    const double p0 = kSqrt2 * std::imag(alpha);
    const cplx d = xi - x0;
    return kPiQuarterInv / ap.c *
           std::exp(-d * d * ap.b_half + cplx(0.0, 1.0) * p0 * (xi - 0.5 * x0));
}

}  // namespace

AxisSqueezeParams squeeze_axis_params(cplx s, SqueezeHForm form) {
    AxisSqueezeParams ap;
    ap.r = std::abs(s);
    ap.theta = std::arg(s);
    // both half-angle terms are nonnegative, so g never cancels
    const double ch = std::cos(0.5 * ap.theta);
    const double sh = std::sin(0.5 * ap.theta);
    ap.g = std::exp(ap.r) * ch * ch + std::exp(-ap.r) * sh * sh;
    if (ap.r < 1e-6) {
        // sinh(r)/r expanded; the two forms differ already at first order
        ap.h = (form == SqueezeHForm::g_denominator)
                   ? 0.5 * std::imag(s) * (1.0 - std::real(s))
                   : 0.5 * std::imag(s) * (1.0 - ap.r);
    } else {
        const double denom = (form == SqueezeHForm::g_denominator) ? ap.g : std::exp(ap.r);
        ap.h = std::imag(s) * std::sinh(ap.r) / (2.0 * ap.r * denom);
    }
    const cplx csq = ap.g * cplx(1.0, 2.0 * ap.h);
    ap.c = std::sqrt(csq);   // principal branch, Re > 0 since Re(csq) > 0
    ap.b_half = 1.0 / (2.0 * ap.g * csq) - cplx(0.0, ap.h);
    return ap;
}

cplx squeezed_position_amplitude(const SqueezeLabel& label, const CVec3& r,
                                 const OscillatorParams& params, SqueezeHForm form) {
    const double k = params.kappa;
    cplx acc = k * std::sqrt(k);
    for (int a = 0; a < 3; ++a) {
        const auto ap = squeeze_axis_params(label.s[std::size_t(a)], form);
        acc *= axis_squeezed(k * r[std::size_t(a)], ap, label.alpha[std::size_t(a)]);
    }
    return acc;
}

cplx squeezed_position_amplitude(const SqueezeLabel& label, const Vec3& r,
                                 const OscillatorParams& params, SqueezeHForm form) {
    return squeezed_position_amplitude(
        label, CVec3{cplx(r[0], 0.0), cplx(r[1], 0.0), cplx(r[2], 0.0)}, params, form);
}

SeparableAmplitude separable_squeezed(const SqueezeLabel& label,
                                      const OscillatorParams& params, SqueezeHForm form) {
    const double k = params.kappa;
    SeparableAmplitude out;
    out.prefactor = k * std::sqrt(k);
    for (int a = 0; a < 3; ++a) {
        const auto ap = squeeze_axis_params(label.s[std::size_t(a)], form);
        out.axis[std::size_t(a)] = [k, ap, al = label.alpha[std::size_t(a)]](cplx x) {
            return axis_squeezed(k * x, ap, al);
        };
    }
    return out;
}

FockCoefficients squeezed_fock_coefficients(const SqueezeLabel& label, Cutoff cutoff,
                                            int order, SqueezeHForm form) {
    const auto rule = make_quadrature(QuadKind::gauss_hermite, order);
    std::array<std::vector<cplx>, 3> axis_coeffs;
    for (int a = 0; a < 3; ++a) {
        const auto ap = squeeze_axis_params(label.s[std::size_t(a)], form);
        const cplx alpha = label.alpha[std::size_t(a)];
        const int kmax = cutoff[a];
        // rescale nodes so the joint Gaussian decay of basis times state
        // matches the quadrature weight exactly
        const double sigma = std::sqrt(2.0 / (1.0 + 2.0 * std::real(ap.b_half)));
        std::vector<cplx> coeff(std::size_t(kmax) + 1, cplx(0.0, 0.0));
        std::vector<double> phi(std::size_t(kmax) + 1);
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            const double u = rule.nodes[i];
            // weight with the Gaussian divided back out, kept in log form
            // so high orders neither underflow nor overflow
            const double w = std::exp(std::log(rule.weights[i]) + u * u);
            const double x = sigma * u;
            basis_1d_all(kmax, x, phi.data());
            const cplx psi = axis_squeezed(cplx(x, 0.0), ap, alpha);
            for (int kq = 0; kq <= kmax; ++kq) {
                coeff[std::size_t(kq)] += w * phi[std::size_t(kq)] * psi;
            }
        }
        for (cplx& c : coeff) c *= sigma;
        axis_coeffs[std::size_t(a)] = std::move(coeff);
    }
    FockCoefficients out(cutoff);
    for (int m = 0; m <= cutoff.nx; ++m) {
        for (int n = 0; n <= cutoff.ny; ++n) {
            const cplx mn = axis_coeffs[0][std::size_t(m)] * axis_coeffs[1][std::size_t(n)];
            for (int l = 0; l <= cutoff.nz; ++l) {
                out.at(m, n, l) = mn * axis_coeffs[2][std::size_t(l)];
            }
        }
    }
    out.tail_mass = std::max(0.0, 1.0 - out.norm2());
    return out;
}

}  // namespace osc3d
