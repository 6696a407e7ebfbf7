#pragma once

#include "osc3d/oscillator.hpp"
#include "osc3d/squeezed.hpp"
#include "osc3d/types.hpp"

namespace osc3d {

// per-axis angle bookkeeping for the number statistics of a displaced
// squeezed state: alpha_sq is the coherent intensity, phi the displacement
// phase, delta the relative angle entering the variance formula
struct AxisAngles {
    double alpha_sq;
    double phi;
    double delta;
};

// the two circulating attributions of delta; they agree on the family
// theta = -phi scaled by 2/3 that the sweeps use, and disagree elsewhere,
// where only the second matches the number-basis statistics
enum class DeltaConvention {
    theta_minus_half_phi,   // delta = theta - phi/2, default
    half_theta_minus_phi,   // delta = theta/2 - phi
};

AxisAngles axis_angles(cplx s, cplx alpha,
                       DeltaConvention conv = DeltaConvention::theta_minus_half_phi);

// closed-form Mandel Q of one axis in terms of intensity, squeeze magnitude
// and relative angle
double mandel_q_formula(double alpha_sq, double r, double delta);

double mandel_q(const SqueezeLabel& label, Axis axis,
                DeltaConvention conv = DeltaConvention::theta_minus_half_phi);

// independent route: expand in the number basis, reduce to the marginal
// occupation along the axis, and form Q from the normalized moments;
// throws if more than 1e-6 of the state escapes the cutoff box
double mandel_q_oracle(const SqueezeLabel& label, Axis axis, int cutoff, int order);

// same reduction applied to an arbitrary expansion
double mandel_q_oracle(const FockCoefficients& state, Axis axis);

struct AxisVariances {
    double var1;   // (a + a^dag)/2 quadrature
    double var2;   // (a - a^dag)/2i quadrature
};

// closed-form quadrature variances for squeeze magnitude r at the given
// phase angle
AxisVariances quadrature_variances(double r, double angle);

// a state counts as squeezed only when one variance is strictly below the
// symmetric value 1/4
bool classify_squeezing(const AxisVariances& v);

// squeeze magnitudes at which var1 resp. var2 cross 1/4 for a fixed angle;
// degenerate angles push a border to +-infinity, which is returned as such
struct SqueezeBorder {
    double r_plus;
    double r_minus;
};

SqueezeBorder squeeze_border(double angle);

// ladder-operator route to the same variances, normalized by the captured
// norm; throws if more than 1e-6 of the state escapes the cutoff box
AxisVariances statistics_oracle_variances(const SqueezeLabel& label, Axis axis, int cutoff,
                                          int order);

}  // namespace osc3d
