#include <benchmark/benchmark.h>

#include <vector>

#include "osc3d/coherent.hpp"
#include "osc3d/oscillator.hpp"
#include "osc3d/parallel.hpp"
#include "osc3d/phase_space.hpp"
#include "osc3d/reference.hpp"

using namespace osc3d;

namespace {

SeparableAmplitude packet() {
    CoherentLabel label{{cplx(0.8, 0.3), cplx(-0.4, 0.6), cplx(0.3, -0.5)}};
    return separable_coherent(label, 0.0, natural_units());
}

PhasePoint probe() {
    PhasePoint pt;
    pt.r = {0.5, -0.3, 0.2};
    pt.p = {0.2, 0.4, -0.6};
    return pt;
}

std::vector<PhasePoint> grid_points(int n) {
    std::vector<PhasePoint> pts;
    pts.reserve(std::size_t(n) * std::size_t(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            PhasePoint pt;
            pt.r = {-2.0 + 4.0 * i / (n - 1), 0.0, 0.0};
            pt.p = {-2.0 + 4.0 * j / (n - 1), 0.0, 0.0};
            pts.push_back(pt);
        }
    }
    return pts;
}

}  // namespace

static void bm_wigner_separable(benchmark::State& state) {
    const auto params = natural_units();
    const auto psi = packet();
    const auto pt = probe();
    const int order = int(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(wigner_numeric_full(psi, pt, params, order));
    }
}
BENCHMARK(bm_wigner_separable)->Arg(40)->Arg(80);

static void bm_wigner_separable_reference(benchmark::State& state) {
    const auto params = natural_units();
    const auto psi = packet();
    const auto pt = probe();
    const int order = int(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(reference::wigner_numeric_full(psi, pt, params, order));
    }
}
BENCHMARK(bm_wigner_separable_reference)->Arg(40)->Arg(80);

static void bm_wigner_generic(benchmark::State& state) {
    const auto params = natural_units();
    const auto psi = as_amplitude_fn(packet());
    const auto pt = probe();
    const int order = int(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(wigner_numeric_full(psi, pt, params, order));
    }
}
BENCHMARK(bm_wigner_generic)->Arg(16)->Arg(24);

static void bm_wigner_generic_reference(benchmark::State& state) {
    const auto params = natural_units();
    const auto psi = as_amplitude_fn(packet());
    const auto pt = probe();
    const int order = int(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(reference::wigner_numeric_full(psi, pt, params, order));
    }
}
BENCHMARK(bm_wigner_generic_reference)->Arg(16)->Arg(24);

static void bm_norm_squared(benchmark::State& state) {
    const auto params = natural_units();
    const auto psi = as_amplitude_fn(packet());
    const int order = int(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(norm_squared(psi, params, order));
    }
}
BENCHMARK(bm_norm_squared)->Arg(40)->Arg(60);

static void bm_norm_squared_reference(benchmark::State& state) {
    const auto params = natural_units();
    const auto psi = as_amplitude_fn(packet());
    const int order = int(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(reference::norm_squared(psi, params, order));
    }
}
BENCHMARK(bm_norm_squared_reference)->Arg(40)->Arg(60);

static void bm_wigner_grid(benchmark::State& state) {
    const auto params = natural_units();
    const auto psi = packet();
    const auto pts = grid_points(int(state.range(0)));
    std::vector<double> out(pts.size());
    for (auto _ : state) {
        parallel_for(std::ptrdiff_t(pts.size()), [&](std::ptrdiff_t k) {
            out[std::size_t(k)] = wigner_numeric(psi, pts[std::size_t(k)], params, 40);
        });
        benchmark::DoNotOptimize(out.data());
    }
}
BENCHMARK(bm_wigner_grid)->Arg(16);

static void bm_wigner_grid_reference(benchmark::State& state) {
    const auto params = natural_units();
    const auto psi = packet();
    const auto pts = grid_points(int(state.range(0)));
    PhaseFn f = [&](const PhasePoint& pt) {
        return reference::wigner_numeric_full(psi, pt, params, 40).value;
    };
    for (auto _ : state) {
        benchmark::DoNotOptimize(reference::sample(f, pts));
    }
}
BENCHMARK(bm_wigner_grid_reference)->Arg(16);

BENCHMARK_MAIN();
