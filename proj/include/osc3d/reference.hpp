#pragma once

#include <vector>

#include "osc3d/phase_space.hpp"
#include "osc3d/types.hpp"

// plain serial twins of the parallel kernels; same quadrature mathematics,
// naive loops and accumulation, kept as an independent route for tests and
// as the baseline in the benchmarks
namespace osc3d::reference {

WignerNumericResult wigner_numeric_full(const AmplitudeFn& psi, const PhasePoint& pt,
                                        const OscillatorParams& params, int order);
WignerNumericResult wigner_numeric_full(const SeparableAmplitude& psi, const PhasePoint& pt,
                                        const OscillatorParams& params, int order);

double norm_squared(const AmplitudeFn& psi, const OscillatorParams& params, int order,
                    const Vec3& scale = {1.0, 1.0, 1.0},
                    const Vec3& center = {0.0, 0.0, 0.0});

std::vector<double> sample(const PhaseFn& f, const std::vector<PhasePoint>& pts);

}  // namespace osc3d::reference
