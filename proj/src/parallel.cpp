#include "tropws/parallel.hpp"

#include <atomic>

namespace trop {

namespace {
std::atomic<bool> g_parallel{true};
}

bool parallel_enabled() { return g_parallel.load(); }
void set_parallel(bool on) { g_parallel.store(on); }

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
    if (!parallel_enabled() || n < 2) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < (long long)n; ++i) fn((std::size_t)i);
}

}  // namespace trop
