#pragma once

#include <functional>
#include <optional>
#include <string>

#include "osc3d/oscillator.hpp"
#include "osc3d/types.hpp"

namespace osc3d {

// closed-form Wigner function of a number state
double wigner_fock(TripleIndex idx, const PhasePoint& pt, const OscillatorParams& params);

// real part of the discretized Wigner transform plus the size of the
// imaginary part that should vanish; imag_residual doubles as a quadrature
// health indicator
struct WignerNumericResult {
    double value;
    double imag_residual;
};

// Wigner transform by Gauss-Hermite quadrature along a contour shifted off
// the real axis, so the oscillatory factor is absorbed into the weight;
// psi must therefore be evaluable at complex positions
WignerNumericResult wigner_numeric_full(const AmplitudeFn& psi, const PhasePoint& pt,
                                        const OscillatorParams& params, int order);
// factorized path for product states: three 1D sums instead of one 3D sum
WignerNumericResult wigner_numeric_full(const SeparableAmplitude& psi, const PhasePoint& pt,
                                        const OscillatorParams& params, int order);

inline double wigner_numeric(const AmplitudeFn& psi, const PhasePoint& pt,
                             const OscillatorParams& params, int order) {
    return wigner_numeric_full(psi, pt, params, order).value;
}
inline double wigner_numeric(const SeparableAmplitude& psi, const PhasePoint& pt,
                             const OscillatorParams& params, int order) {
    return wigner_numeric_full(psi, pt, params, order).value;
}

// momentum integral of the number-state Wigner function; per axis the
// integrand is a polynomial against a Gaussian, so moderate orders are exact
double wigner_marginal_position(TripleIndex idx, const Vec3& r,
                                const OscillatorParams& params, int order);
// position integral, same structure
double wigner_marginal_momentum(TripleIndex idx, const Vec3& p,
                                const OscillatorParams& params, int order);

// Fourier transform to the momentum representation, same contour-shift
// technique as the Wigner quadrature
cplx momentum_wavefunction(const AmplitudeFn& psi, const Vec3& p,
                           const OscillatorParams& params, int order);
cplx momentum_wavefunction(const SeparableAmplitude& psi, const Vec3& p,
                           const OscillatorParams& params, int order);

// squared norm by quadrature; scale and center remap the nodes per axis as
// x_a = center_a + (scale_a / kappa) t_a so wide or displaced states keep
// their mass under the rule
double norm_squared(const AmplitudeFn& psi, const OscillatorParams& params, int order,
                    const Vec3& scale = {1.0, 1.0, 1.0},
                    const Vec3& center = {0.0, 0.0, 0.0});
double norm_squared(const SeparableAmplitude& psi, const OscillatorParams& params, int order,
                    const Vec3& scale = {1.0, 1.0, 1.0},
                    const Vec3& center = {0.0, 0.0, 0.0});

using PhaseFn = std::function<double(const PhasePoint&)>;
using FlowFn = std::function<double(const PhasePoint&, double)>;

// phase-space point that flows to pt after time t under the harmonic flow
PhasePoint backward_characteristic(const PhasePoint& pt, double t,
                                   const OscillatorParams& params);

// exact transport solution: the evolved function is the initial one read off
// along backward characteristics
FlowFn evolve_wigner_harmonic(PhaseFn initial, const OscillatorParams& params);

// |d/dt + (p/M) d/dr - M w^2 r d/dp| applied to w at (pt, t), all derivatives
// by central differences with the given step
double liouville_residual(const FlowFn& w, const PhasePoint& pt, double t,
                          const OscillatorParams& params, double step);

enum class PhaseCoord { x, y, z, px, py, pz };

inline void set_coord(PhasePoint& pt, PhaseCoord c, double v) {
    const int i = int(c);
    if (i < 3) {
        pt.r[std::size_t(i)] = v;
    } else {
        pt.p[std::size_t(i - 3)] = v;
    }
}

inline double get_coord(const PhasePoint& pt, PhaseCoord c) {
    const int i = int(c);
    return i < 3 ? pt.r[std::size_t(i)] : pt.p[std::size_t(i - 3)];
}

const char* coord_name(PhaseCoord c);
std::optional<PhaseCoord> parse_coord(const std::string& name);

// one swept coordinate of a phase-space grid
struct GridAxis {
    PhaseCoord coord = PhaseCoord::x;
    double lo = 0.0;
    double hi = 0.0;
    int count = 1;
};

}  // namespace osc3d
