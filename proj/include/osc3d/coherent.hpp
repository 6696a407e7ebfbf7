#pragma once

#include "osc3d/oscillator.hpp"
#include "osc3d/types.hpp"

namespace osc3d {

// one complex displacement per axis
struct CoherentLabel {
    CVec3 alpha{cplx(0, 0), cplx(0, 0), cplx(0, 0)};
};

// number-basis expansion over the cutoff box; coefficients are evaluated in
// log space so large |alpha| and high indices cannot overflow, and tail_mass
// is the exact Poisson mass outside the box
FockCoefficients coherent_coefficients(const CoherentLabel& label, Cutoff cutoff);

// <bra|ket>, closed form
cplx coherent_overlap(const CoherentLabel& bra, const CoherentLabel& ket);

// max |M - I| over number-basis matrix elements of the coherent-state
// resolution of identity, discretized with a trapezoid rule in each phase
// angle and a Gauss-Laguerre rule in each radial direction
double resolve_identity_residual(int max_index, int radial_order, int angular_order);

struct EvolvedCoherent {
    CoherentLabel label;
    double global_phase;   // accumulated, not wrapped
};

// alpha -> alpha e^{-i omega t}, phase -(3/2) omega t
EvolvedCoherent evolve_coherent(const CoherentLabel& label, double t,
                                const OscillatorParams& params);

// packet centroid, mean momentum, zero-point phase, and the residual
// phase-like term at time t; a_delta is genuinely complex off the
// real-label family
struct CoherentEvalTerms {
    Vec3 r_bar;
    Vec3 p_bar;
    double phi_zp;
    cplx a_delta;
};

CoherentEvalTerms coherent_eval_terms(const CoherentLabel& label, double t,
                                      const OscillatorParams& params);

// position amplitude of the evolved packet (exact resummation of the
// number-basis series)
cplx coherent_position_amplitude(const CoherentLabel& label, double t, const Vec3& r,
                                 const OscillatorParams& params);
cplx coherent_position_amplitude(const CoherentLabel& label, double t, const CVec3& r,
                                 const OscillatorParams& params);

// same amplitude as per-axis factors, for the separable quadrature paths
SeparableAmplitude separable_coherent(const CoherentLabel& label, double t,
                                      const OscillatorParams& params);

// closed-form Wigner function: a Gaussian of unit total integral centered at
// the packet's phase-space point
double wigner_coherent(const CoherentLabel& label, const PhasePoint& pt,
                       const OscillatorParams& params);

}  // namespace osc3d
