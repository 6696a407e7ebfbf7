#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "osc3d/types.hpp"

namespace osc3d {

// worker pool size: explicit override, else OSC3D_THREADS capped at the
// machine parallelism, else the OpenMP default
int worker_count();

// n > 0 forces the pool size (tests use this); n <= 0 restores the default
void set_worker_override(int n);

namespace detail {

// reduction block size; fixed so the summation tree never depends on the
// pool size
inline constexpr std::ptrdiff_t kSumBlock = 1024;

// Neumaier compensated accumulator
struct CompensatedSum {
    double sum = 0.0;
    double comp = 0.0;
    void add(double v) {
        const double t = sum + v;
        if (std::abs(sum) >= std::abs(v))
            comp += (sum - t) + v;
        else
            comp += (v - t) + sum;
        sum = t;
    }
    double value() const { return sum + comp; }
};

}  // namespace detail

// run fn(i) for i in [0, n); iterations must be independent
template <class F>
void parallel_for(std::ptrdiff_t n, F&& fn) {
#pragma omp parallel for schedule(static) num_threads(worker_count())
    for (std::ptrdiff_t i = 0; i < n; ++i) fn(i);
}

// deterministic parallel reduction of fn(i) over [0, n): fixed-size blocks
// are accumulated serially (compensated), block results combine in block
// order, so the value is bitwise independent of the pool size
template <class F>
double blocked_sum(std::ptrdiff_t n, F&& fn) {
    const std::ptrdiff_t nblocks = (n + detail::kSumBlock - 1) / detail::kSumBlock;
    std::vector<double> partial(std::size_t(std::max<std::ptrdiff_t>(nblocks, 0)), 0.0);
#pragma omp parallel for schedule(static) num_threads(worker_count())
    for (std::ptrdiff_t b = 0; b < nblocks; ++b) {
        detail::CompensatedSum acc;
        const std::ptrdiff_t lo = b * detail::kSumBlock;
        const std::ptrdiff_t hi = std::min(n, lo + detail::kSumBlock);
        for (std::ptrdiff_t i = lo; i < hi; ++i) acc.add(fn(i));
        partial[std::size_t(b)] = acc.value();
    }
    detail::CompensatedSum acc;
    for (double v : partial) acc.add(v);
    return acc.value();
}

// complex variant, compensated per component
template <class F>
cplx blocked_sum_c(std::ptrdiff_t n, F&& fn) {
    const std::ptrdiff_t nblocks = (n + detail::kSumBlock - 1) / detail::kSumBlock;
    std::vector<cplx> partial(std::size_t(std::max<std::ptrdiff_t>(nblocks, 0)), cplx(0.0));
#pragma omp parallel for schedule(static) num_threads(worker_count())
    for (std::ptrdiff_t b = 0; b < nblocks; ++b) {
        detail::CompensatedSum re, im;
        const std::ptrdiff_t lo = b * detail::kSumBlock;
        const std::ptrdiff_t hi = std::min(n, lo + detail::kSumBlock);
        for (std::ptrdiff_t i = lo; i < hi; ++i) {
            const cplx v = fn(i);
            re.add(v.real());
            im.add(v.imag());
        }
        partial[std::size_t(b)] = cplx(re.value(), im.value());
    }
    detail::CompensatedSum re, im;
    for (const cplx& v : partial) {
        re.add(v.real());
        im.add(v.imag());
    }
    return cplx(re.value(), im.value());
}

}  // namespace osc3d
