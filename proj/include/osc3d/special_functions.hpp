#pragma once

#include <vector>

namespace osc3d {

// hard ceiling for polynomial degrees and quadrature orders
inline constexpr int kMaxDegree = 512;

// physicists' Hermite polynomial H_n(x), three-term recurrence
double hermite(int n, double x);

// Laguerre polynomial L_n(x), three-term recurrence
double laguerre(int n, double x);

// ln(n!) by memoized cumulative summation
double log_factorial(int n);

enum class QuadKind { gauss_hermite, gauss_laguerre, trapezoid_periodic };

struct QuadratureRule {
    QuadKind kind;
    std::vector<double> nodes;
    std::vector<double> weights;
};

// gauss_hermite integrates f against e^{-x^2} on the real line,
// gauss_laguerre against e^{-x} on [0, inf), trapezoid_periodic is the
// equispaced rule on [0, 2pi). order must lie in [1, kMaxDegree].
QuadratureRule make_quadrature(QuadKind kind, int order);

}  // namespace osc3d
