#pragma once

#include <array>
#include <complex>
#include <functional>

namespace osc3d {

using cplx = std::complex<double>;
using Vec3 = std::array<double, 3>;
using CVec3 = std::array<cplx, 3>;

inline double dot(const Vec3& a, const Vec3& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

// sum_i a_i b_i, no conjugation
inline cplx cdot(const CVec3& a, const CVec3& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

// sum_i conj(a_i) b_i
inline cplx hdot(const CVec3& a, const CVec3& b) {
    return std::conj(a[0]) * b[0] + std::conj(a[1]) * b[1] + std::conj(a[2]) * b[2];
}

struct PhasePoint {
    Vec3 r{0.0, 0.0, 0.0};
    Vec3 p{0.0, 0.0, 0.0};
};

// position amplitude evaluated at a complex-shifted point; quadratures below
// move the integration contour off the real axis, so amplitudes must be
// analytic continuations
using AmplitudeFn = std::function<cplx(const CVec3&)>;

// product state psi(r) = prefactor * f_x(x) f_y(y) f_z(z); each factor
// analytic in its argument
struct SeparableAmplitude {
    cplx prefactor{1.0, 0.0};
    std::array<std::function<cplx(cplx)>, 3> axis;
};

inline cplx eval(const SeparableAmplitude& psi, const CVec3& r) {
    return psi.prefactor * psi.axis[0](r[0]) * psi.axis[1](r[1]) * psi.axis[2](r[2]);
}

inline AmplitudeFn as_amplitude_fn(SeparableAmplitude psi) {
    return [psi = std::move(psi)](const CVec3& r) { return eval(psi, r); };
}

}  // namespace osc3d
