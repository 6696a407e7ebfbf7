#pragma once

#include <cstddef>
#include <vector>

#include "osc3d/types.hpp"

namespace osc3d {

struct OscillatorParams {
    double mass;
    double omega;
    double hbar;
    double kappa;   // sqrt(mass * omega / hbar), cached at construction
};

// validates positivity and caches kappa
OscillatorParams make_params(double mass, double omega, double hbar);

// mass = omega = hbar = 1
OscillatorParams natural_units();

// quanta per axis: m on x, n on y, l on z
struct TripleIndex {
    int m = 0, n = 0, l = 0;
    int total() const { return m + n + l; }
    int operator[](int axis) const { return axis == 0 ? m : (axis == 1 ? n : l); }
};

// highest retained quantum number per axis, all components >= 1
struct Cutoff {
    int nx = 1, ny = 1, nz = 1;
    int operator[](int axis) const { return axis == 0 ? nx : (axis == 1 ? ny : nz); }
    std::ptrdiff_t size() const {
        return std::ptrdiff_t(nx + 1) * (ny + 1) * (nz + 1);
    }
    bool operator==(const Cutoff&) const = default;
};

// dense coefficient tensor over the cutoff box plus the probability mass
// known to live outside it
struct FockCoefficients {
    Cutoff cutoff;
    std::vector<cplx> coeffs;   // row-major (m, n, l)
    double tail_mass = 0.0;

    explicit FockCoefficients(Cutoff c);

    std::ptrdiff_t offset(int m, int n, int l) const {
        return (std::ptrdiff_t(m) * (cutoff.ny + 1) + n) * (cutoff.nz + 1) + l;
    }
    cplx& at(int m, int n, int l) { return coeffs[std::size_t(offset(m, n, l))]; }
    const cplx& at(int m, int n, int l) const { return coeffs[std::size_t(offset(m, n, l))]; }

    double norm2() const;   // sum |c|^2 over the box

    static FockCoefficients basis_state(TripleIndex idx, Cutoff c);
};

enum class Axis { x = 0, y = 1, z = 2 };
enum class Ladder { lower, raise };

// lowering shifts coefficients down one slot with sqrt(k) weights; raising
// shifts up with sqrt(k+1) weights, and amplitude pushed past the cutoff is
// dropped with its squared magnitude added to tail_mass
FockCoefficients ladder_apply(Axis axis, Ladder op, const FockCoefficients& state);

// hbar omega (m + n + l + 3/2)
double energy(TripleIndex idx, const OscillatorParams& params);

// normalized 1D oscillator basis function phi_k(xi), Gaussian included;
// the recurrence keeps every intermediate O(1) so degrees near kMaxDegree
// stay finite where the raw polynomial would overflow
double basis_1d(int k, double xi);
cplx basis_1d(int k, cplx xi);

// fills out[0..kmax] with phi_0(xi) .. phi_kmax(xi)
void basis_1d_all(int kmax, double xi, double* out);

// orthonormal energy eigenfunction at a real position
double eigenfunction(TripleIndex idx, const Vec3& r, const OscillatorParams& params);
// analytic continuation to complex positions (used by the phase-space
// quadratures, which shift their integration contours)
cplx eigenfunction(TripleIndex idx, const CVec3& r, const OscillatorParams& params);

// eigenfunction as a product of per-axis factors
SeparableAmplitude separable_eigenfunction(TripleIndex idx, const OscillatorParams& params);

// sum conj(a) * b over the common cutoff box; throws on cutoff mismatch
cplx inner_product(const FockCoefficients& a, const FockCoefficients& b);

}  // namespace osc3d
