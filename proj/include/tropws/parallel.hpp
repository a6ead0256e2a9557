#pragma once

#include <cstddef>
#include <functional>

namespace trop {

// Runtime switch for the OpenMP kernels. Every kernel has the same
// observable behavior in both modes: parallel loops write one preallocated
// slot per index and all reductions run serially in index order afterwards,
// so outputs are identical bit for bit. The serial path is the reference
// implementation the tests compare against.
bool parallel_enabled();
void set_parallel(bool on);

// Runs fn(0), ..., fn(n-1); in parallel when enabled, else the plain loop.
// fn must only touch state owned by its index.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace trop
