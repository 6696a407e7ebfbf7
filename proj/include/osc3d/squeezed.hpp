#pragma once

#include "osc3d/oscillator.hpp"
#include "osc3d/types.hpp"

namespace osc3d {

// two published forms of the cross parameter h disagree in their
// denominator; both yield unit-norm states (the 1/C prefactor absorbs h),
// but only the first reproduces the Bogoliubov width of the operator-built
// squeezed state for complex squeeze parameters, so it is the default
enum class SqueezeHForm {
    g_denominator,       // h = Im(s) sinh(r) / (2 r g)
    exp_r_denominator,   // h = Im(s) sinh(r) / (2 r e^r)
};

// derived per-axis quantities for squeeze parameter s = r e^{i theta}:
// g is the width factor, h the phase-space shear, c the complex
// normalization root with Re c > 0, b_half the quadratic exponent
// coefficient of the position amplitude
struct AxisSqueezeParams {
    double r;
    double theta;
    double g;
    double h;
    cplx c;
    cplx b_half;
};

AxisSqueezeParams squeeze_axis_params(cplx s,
                                      SqueezeHForm form = SqueezeHForm::g_denominator);

// squeeze then displace, per axis
struct SqueezeLabel {
    CVec3 s{cplx(0, 0), cplx(0, 0), cplx(0, 0)};
    CVec3 alpha{cplx(0, 0), cplx(0, 0), cplx(0, 0)};
};

cplx squeezed_position_amplitude(const SqueezeLabel& label, const Vec3& r,
                                 const OscillatorParams& params,
                                 SqueezeHForm form = SqueezeHForm::g_denominator);
cplx squeezed_position_amplitude(const SqueezeLabel& label, const CVec3& r,
                                 const OscillatorParams& params,
                                 SqueezeHForm form = SqueezeHForm::g_denominator);

SeparableAmplitude separable_squeezed(const SqueezeLabel& label,
                                      const OscillatorParams& params,
                                      SqueezeHForm form = SqueezeHForm::g_denominator);

// number-basis expansion by per-axis quadrature projection onto the
// oscillator basis; order is the quadrature order per axis; tail_mass is
// the probability not captured inside the cutoff box
FockCoefficients squeezed_fock_coefficients(const SqueezeLabel& label, Cutoff cutoff,
                                            int order,
                                            SqueezeHForm form = SqueezeHForm::g_denominator);

}  // namespace osc3d
