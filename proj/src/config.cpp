#include "ramsey/errors.hpp"
#include "ramsey/exec.hpp"

#include <atomic>

#include <omp.h>

namespace ramsey {

namespace {

std::atomic<std::size_t> g_max_leaves{std::size_t{1} << 20};
std::atomic<std::size_t> g_max_copies{std::size_t{1} << 24};

} // namespace

std::size_t max_leaves() noexcept { return g_max_leaves.load(std::memory_order_relaxed); }
void set_max_leaves(std::size_t n) noexcept { g_max_leaves.store(n, std::memory_order_relaxed); }

std::size_t max_copies() noexcept { return g_max_copies.load(std::memory_order_relaxed); }
void set_max_copies(std::size_t n) noexcept { g_max_copies.store(n, std::memory_order_relaxed); }

void check_leaf_budget(std::size_t n, const char* what)
{
    if (n > max_leaves())
        throw ResourceError(std::string(what) + ": result would have " + std::to_string(n) +
                            " leaves, limit is " + std::to_string(max_leaves()));
}

bool use_parallel(Exec exec) noexcept
{
    switch (exec) {
    case Exec::serial: return false;
    case Exec::parallel: return true;
    case Exec::automatic: return omp_get_max_threads() > 1;
    }
    return false;
}

} // namespace ramsey
