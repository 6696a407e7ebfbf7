#include "osc3d/oscillator.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "osc3d/special_functions.hpp"

namespace osc3d {

namespace {

void check_positive(double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        throw std::domain_error(std::string(name) + " must be positive and finite");
    }
}

void check_quantum(int k) {
    if (k < 0 || k > kMaxDegree) {
        throw std::domain_error("quantum number " + std::to_string(k) +
                                " outside [0, " + std::to_string(kMaxDegree) + "]");
    }
}

constexpr double kPiQuarterInv = 0.7511255444649425;   // pi^(-1/4)

}  // namespace

OscillatorParams make_params(double mass, double omega, double hbar) {
    check_positive(mass, "mass");
    check_positive(omega, "omega");
    check_positive(hbar, "hbar");
    return {mass, omega, hbar, std::sqrt(mass * omega / hbar)};
}

OscillatorParams natural_units() { return make_params(1.0, 1.0, 1.0); }

FockCoefficients::FockCoefficients(Cutoff c) : cutoff(c) {
    if (c.nx < 1 || c.ny < 1 || c.nz < 1) {
        throw std::domain_error("cutoff components must be >= 1");
    }
    if (c.nx > kMaxDegree || c.ny > kMaxDegree || c.nz > kMaxDegree) {
        throw std::domain_error("cutoff exceeds maximum supported degree");
    }
    coeffs.assign(std::size_t(c.size()), cplx(0.0, 0.0));
}

double FockCoefficients::norm2() const {
    double acc = 0.0;
    for (const cplx& c : coeffs) acc += std::norm(c);
    return acc;
}

FockCoefficients FockCoefficients::basis_state(TripleIndex idx, Cutoff c) {
    FockCoefficients out(c);
    if (idx.m < 0 || idx.n < 0 || idx.l < 0 ||
        idx.m > c.nx || idx.n > c.ny || idx.l > c.nz) {
        throw std::domain_error("basis index outside cutoff box");
    }
    out.at(idx.m, idx.n, idx.l) = 1.0;
    return out;
}

FockCoefficients ladder_apply(Axis axis, Ladder op, const FockCoefficients& state) {
    FockCoefficients out(state.cutoff);
    out.tail_mass = state.tail_mass;
    const Cutoff& c = state.cutoff;
    const int cap = c[int(axis)];
    for (int m = 0; m <= c.nx; ++m) {
        for (int n = 0; n <= c.ny; ++n) {
            for (int l = 0; l <= c.nz; ++l) {
                const cplx v = state.at(m, n, l);
                if (v == cplx(0.0, 0.0)) continue;
                int k[3] = {m, n, l};
                const int q = k[int(axis)];
                if (op == Ladder::lower) {
                    if (q == 0) continue;
                    k[int(axis)] = q - 1;
                    out.at(k[0], k[1], k[2]) += std::sqrt(double(q)) * v;
                } else {
                    if (q == cap) {
                        // raised amplitude leaves the box
                        out.tail_mass += double(q + 1) * std::norm(v);
                        continue;
                    }
                    k[int(axis)] = q + 1;
                    out.at(k[0], k[1], k[2]) += std::sqrt(double(q + 1)) * v;
                }
            }
        }
    }
    return out;
}

double energy(TripleIndex idx, const OscillatorParams& params) {
    return params.hbar * params.omega * (idx.total() + 1.5);
}

double basis_1d(int k, double xi) {
    check_quantum(k);
    double prev = 0.0;
    double cur = kPiQuarterInv * std::exp(-0.5 * xi * xi);
    for (int j = 0; j < k; ++j) {
        const double next =
            xi * std::sqrt(2.0 / (j + 1)) * cur - std::sqrt(double(j) / (j + 1)) * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

cplx basis_1d(int k, cplx xi) {
    check_quantum(k);
    cplx prev(0.0, 0.0);
    cplx cur = kPiQuarterInv * std::exp(-0.5 * xi * xi);
    for (int j = 0; j < k; ++j) {
        const cplx next =
            xi * std::sqrt(2.0 / (j + 1)) * cur - std::sqrt(double(j) / (j + 1)) * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

void basis_1d_all(int kmax, double xi, double* out) {
    check_quantum(kmax);
    out[0] = kPiQuarterInv * std::exp(-0.5 * xi * xi);
    if (kmax == 0) return;
    out[1] = xi * std::sqrt(2.0) * out[0];
    for (int j = 1; j < kmax; ++j) {
        out[j + 1] =
            xi * std::sqrt(2.0 / (j + 1)) * out[j] - std::sqrt(double(j) / (j + 1)) * out[j - 1];
    }
}

double eigenfunction(TripleIndex idx, const Vec3& r, const OscillatorParams& params) {
    const double k = params.kappa;
    return k * std::sqrt(k) * basis_1d(idx.m, k * r[0]) * basis_1d(idx.n, k * r[1]) *
           basis_1d(idx.l, k * r[2]);
}

cplx eigenfunction(TripleIndex idx, const CVec3& r, const OscillatorParams& params) {
    const double k = params.kappa;
    return k * std::sqrt(k) * basis_1d(idx.m, k * r[0]) * basis_1d(idx.n, k * r[1]) *
           basis_1d(idx.l, k * r[2]);
}

SeparableAmplitude separable_eigenfunction(TripleIndex idx, const OscillatorParams& params) {
    SeparableAmplitude out;
    const double k = params.kappa;
    out.prefactor = k * std::sqrt(k);
    const int quanta[3] = {idx.m, idx.n, idx.l};
    for (int a = 0; a < 3; ++a) {
        check_quantum(quanta[a]);
        out.axis[std::size_t(a)] = [q = quanta[a], k](cplx x) { return basis_1d(q, k * x); };
    }
    return out;
}

cplx inner_product(const FockCoefficients& a, const FockCoefficients& b) {
    if (!(a.cutoff == b.cutoff)) {
        throw std::invalid_argument("inner_product: cutoff mismatch");
    }
    cplx acc(0.0, 0.0);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
        acc += std::conj(a.coeffs[i]) * b.coeffs[i];
    }
    return acc;
}

}  // namespace osc3d
