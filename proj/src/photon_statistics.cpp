#include "osc3d/photon_statistics.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace osc3d {

namespace {

// marginal occupation distribution along one axis, unnormalized
std::vector<double> axis_occupation(const FockCoefficients& state, Axis axis) {
    const Cutoff& c = state.cutoff;
    std::vector<double> p(std::size_t(c[int(axis)]) + 1, 0.0);
    for (int m = 0; m <= c.nx; ++m) {
        for (int n = 0; n <= c.ny; ++n) {
            for (int l = 0; l <= c.nz; ++l) {
                const int k[3] = {m, n, l};
                p[std::size_t(k[int(axis)])] += std::norm(state.at(m, n, l));
            }
        }
    }
    return p;
}

FockCoefficients expanded_state(const SqueezeLabel& label, int cutoff, int order) {
    const Cutoff box{cutoff, cutoff, cutoff};
    return squeezed_fock_coefficients(label, box, order);
}

}  // namespace

AxisAngles axis_angles(cplx s, cplx alpha, DeltaConvention conv) {
    AxisAngles out;
    out.alpha_sq = std::norm(alpha);
    out.phi = std::arg(alpha);
    const double theta = std::arg(s);
    out.delta = (conv == DeltaConvention::theta_minus_half_phi) ? theta - 0.5 * out.phi
                                                                : 0.5 * theta - out.phi;
    return out;
}

double mandel_q_formula(double alpha_sq, double r, double delta) {
    if (alpha_sq < 1e-14 && r < 1e-14) return 0.0;   // vacuum: no photons at all
    const double cd = std::cos(delta);
    const double sd = std::sin(delta);
    const double sh = std::sinh(r);
    const double ch = std::cosh(r);
    const double num = alpha_sq * (std::exp(2.0 * r) * cd * cd + std::exp(-2.0 * r) * sd * sd) +
                       2.0 * sh * sh * ch * ch;
    return num / (alpha_sq + sh * sh) - 1.0;
}

double mandel_q(const SqueezeLabel& label, Axis axis, DeltaConvention conv) {
    const std::size_t a = std::size_t(int(axis));
    const AxisAngles ang = axis_angles(label.s[a], label.alpha[a], conv);
    return mandel_q_formula(ang.alpha_sq, std::abs(label.s[a]), ang.delta);
}

double mandel_q_oracle(const SqueezeLabel& label, Axis axis, int cutoff, int order) {
    return mandel_q_oracle(expanded_state(label, cutoff, order), axis);
}

double mandel_q_oracle(const FockCoefficients& state, Axis axis) {
    if (state.tail_mass > 1e-6) {
        throw std::runtime_error("statistics oracle: cutoff box too small for state");
    }
    const auto p = axis_occupation(state, axis);
    double total = 0.0, n1 = 0.0, n2 = 0.0;
    for (std::size_t k = 0; k < p.size(); ++k) {
        total += p[k];
        n1 += double(k) * p[k];
        n2 += double(k) * double(k) * p[k];
    }
    n1 /= total;
    n2 /= total;
    if (n1 < 1e-14) return 0.0;
    return (n2 - n1 * n1 - n1) / n1;
}

AxisVariances quadrature_variances(double r, double angle) {
    const double ch = std::cos(0.5 * angle);
    const double sh = std::sin(0.5 * angle);
    const double wide = std::exp(2.0 * r);
    const double narrow = std::exp(-2.0 * r);
    return {0.25 * (wide * ch * ch + narrow * sh * sh),
            0.25 * (wide * sh * sh + narrow * ch * ch)};
}

bool classify_squeezing(const AxisVariances& v) {
    return std::min(v.var1, v.var2) < 0.25;
}

SqueezeBorder squeeze_border(double angle) {
    const double t = std::abs(std::tan(0.5 * angle));
    const double r = std::log(t);
    return {r, -r};
}

AxisVariances statistics_oracle_variances(const SqueezeLabel& label, Axis axis, int cutoff,
                                          int order) {
    const FockCoefficients state = expanded_state(label, cutoff, order);
    if (state.tail_mass > 1e-6) {
        throw std::runtime_error("statistics oracle: cutoff box too small for state");
    }
    const double total = state.norm2();
    const FockCoefficients low = ladder_apply(axis, Ladder::lower, state);
    const FockCoefficients low2 = ladder_apply(axis, Ladder::lower, low);
    const cplx a1 = inner_product(state, low) / total;
    const cplx a2 = inner_product(state, low2) / total;
    const double nbar = std::real(inner_product(low, low)) / total;
    const double re_a2 = std::real(a2);
    const double var1 =
        0.25 * (2.0 * re_a2 + 2.0 * nbar + 1.0) - std::real(a1) * std::real(a1);
    const double var2 =
        0.25 * (1.0 + 2.0 * nbar - 2.0 * re_a2) - std::imag(a1) * std::imag(a1);
    return {var1, var2};
}

}  // namespace osc3d
