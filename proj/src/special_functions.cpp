#include "osc3d/special_functions.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace osc3d {

namespace {

void check_degree(const char* who, int n) {
    if (n < 0 || n > kMaxDegree)
        throw std::domain_error(std::string(who) + ": degree " + std::to_string(n) +
                                " outside [0, " + std::to_string(kMaxDegree) + "]");
}

}  // namespace

double hermite(int n, double x) {
    check_degree("hermite", n);
    if (n == 0) return 1.0;
    double hm = 1.0;        // H_{k-1}
    double hk = 2.0 * x;    // H_k
    for (int k = 1; k < n; ++k) {
        double hn = 2.0 * x * hk - 2.0 * k * hm;
        hm = hk;
        hk = hn;
    }
    return hk;
}

double laguerre(int n, double x) {
    check_degree("laguerre", n);
    if (n == 0) return 1.0;
    double lm = 1.0;        // L_{k-1}
    double lk = 1.0 - x;    // L_k
    for (int k = 1; k < n; ++k) {
        double ln = ((2.0 * k + 1.0 - x) * lk - k * lm) / (k + 1.0);
        lm = lk;
        lk = ln;
    }
    return lk;
}

double log_factorial(int n) {
    if (n < 0) throw std::domain_error("log_factorial: negative argument");
    static const std::vector<double> table = [] {
        std::vector<double> t(2048);
        t[0] = 0.0;
        for (std::size_t k = 1; k < t.size(); ++k) t[k] = t[k - 1] + std::log(double(k));
        return t;
    }();
    if (std::size_t(n) < table.size()) return table[std::size_t(n)];
    double v = table.back();
    for (std::size_t k = table.size(); k <= std::size_t(n); ++k) v += std::log(double(k));
    return v;
}

namespace {

// Weights come from the Christoffel form 1 / sum_k p_k(x_i)^2 over the
// orthonormal polynomials instead of the squared first eigenvector
// component: the eigenvector only carries absolute precision, so far-out
// weights below ~1e-32 would otherwise be pure noise, which explodes any
// consumer that divides the Gaussian back out of the weight.

// Hermite sum evaluated through the bounded functions phi_k (Gaussian
// included); the reciprocal is the flattened weight w_i e^{x^2} and the raw
// weight follows by attaching the Gaussian, underflowing to an honest zero
double hermite_weight(int order, double x) {
    constexpr double kPiQuarterInv = 0.7511255444649425;   // pi^(-1/4)
    double prev = 0.0;
    double cur = kPiQuarterInv * std::exp(-0.5 * x * x);
    double sumsq = cur * cur;
    for (int k = 0; k + 1 < order; ++k) {
        const double next =
            x * std::sqrt(2.0 / (k + 1)) * cur - std::sqrt(double(k) / (k + 1)) * prev;
        prev = cur;
        cur = next;
        sumsq += cur * cur;
    }
    return std::exp(-x * x) / sumsq;
}

// Laguerre polynomials overflow near the last nodes, so the sum of squares
// carries a tracked rescale and the weight returns through one exp
double laguerre_weight(int order, double x) {
    double prev = 0.0;
    double cur = 1.0;   // L_0
    double sumsq = 1.0;
    double logscale = 0.0;
    for (int k = 0; k + 1 < order; ++k) {
        const double next = ((2.0 * k + 1.0 - x) * cur - double(k) * prev) / (k + 1.0);
        prev = cur;
        cur = next;
        sumsq += cur * cur;
        if (sumsq > 1e240) {
            constexpr double kDown = 1e-120;
            prev *= kDown;
            cur *= kDown;
            sumsq *= kDown * kDown;
            logscale += 2.0 * std::log(1e120);
        }
    }
    return std::exp(-(std::log(sumsq) + logscale));
}

// nodes are the eigenvalues of the symmetric tridiagonal Jacobi matrix
QuadratureRule gauss_rule(QuadKind kind, const Eigen::VectorXd& diag,
                          const Eigen::VectorXd& sub) {
    const int n = int(diag.size());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
    QuadratureRule rule{kind, std::vector<double>(std::size_t(n)),
                        std::vector<double>(std::size_t(n))};
    for (int i = 0; i < n; ++i) {
        const double x = es.eigenvalues()(i);
        rule.nodes[std::size_t(i)] = x;
        rule.weights[std::size_t(i)] =
            kind == QuadKind::gauss_hermite ? hermite_weight(n, x) : laguerre_weight(n, x);
    }
    return rule;
}

}  // namespace

QuadratureRule make_quadrature(QuadKind kind, int order) {
    if (order < 1 || order > kMaxDegree)
        throw std::domain_error("make_quadrature: unsupported order " + std::to_string(order));
    switch (kind) {
        case QuadKind::gauss_hermite: {
            Eigen::VectorXd diag = Eigen::VectorXd::Zero(order);
            Eigen::VectorXd sub(std::max(order - 1, 0));
            for (int k = 1; k < order; ++k) sub(k - 1) = std::sqrt(0.5 * k);
            return gauss_rule(kind, diag, sub);
        }
        case QuadKind::gauss_laguerre: {
            Eigen::VectorXd diag(order);
            Eigen::VectorXd sub(std::max(order - 1, 0));
            for (int k = 0; k < order; ++k) diag(k) = 2.0 * k + 1.0;
            for (int k = 1; k < order; ++k) sub(k - 1) = double(k);
            return gauss_rule(kind, diag, sub);
        }
        case QuadKind::trapezoid_periodic: {
            QuadratureRule rule{kind, {}, {}};
            const double h = 2.0 * M_PI / order;
            for (int k = 0; k < order; ++k) {
                rule.nodes.push_back(k * h);
                rule.weights.push_back(h);
            }
            return rule;
        }
    }
    throw std::domain_error("make_quadrature: unknown kind");
}

}  // namespace osc3d
