#include "osc3d/parallel.hpp"

#include <atomic>
#include <cstdlib>

#include <omp.h>

namespace osc3d {

namespace {

std::atomic<int> g_override{0};

int env_cap() {
    const char* s = std::getenv("OSC3D_THREADS");
    if (!s) return 0;
    const int v = std::atoi(s);
    return v > 0 ? v : 0;
}

}  // namespace

void set_worker_override(int n) { g_override.store(n > 0 ? n : 0); }

int worker_count() {
    const int forced = g_override.load();
    if (forced > 0) return forced;
    const int hw = omp_get_max_threads();
    const int cap = env_cap();
    if (cap > 0 && cap < hw) return cap;
    return hw;
}

}  // namespace osc3d
