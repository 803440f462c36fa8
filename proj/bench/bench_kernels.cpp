#include "ramsey/arrow.hpp"
#include "ramsey/reference.hpp"

#include <benchmark/benchmark.h>
#include <omp.h>

#include <random>

using namespace ramsey;

namespace {

const PlaneTree point = PlaneTree::leaf();

Exec exec_of(const benchmark::State& state) { return state.range(0) == 0 ? Exec::serial : Exec::parallel; }

void set_threads(const benchmark::State& state)
{
    if (state.range(0) > 0)
        omp_set_num_threads(static_cast<int>(state.range(0)));
}

// Arg 0 is the serial kernel; a positive arg is the OpenMP kernel with that many threads.
void thread_args(benchmark::internal::Benchmark* b)
{
    b->Arg(0);
    for (int t = 1; t <= std::max(1, omp_get_num_procs()); t *= 2)
        b->Arg(t);
}

// A refutation: T(4) -> (T(2))^{T(0)}_3 holds, so the whole search tree is visited.
void BM_CheckArrowHolds(benchmark::State& state)
{
    set_threads(state);
    const ArrowQuery q{perfect_tree(4), perfect_tree(2), point, 3, {}, exec_of(state)};
    for (auto _ : state) {
        const ArrowVerdict v = check_arrow(q);
        benchmark::DoNotOptimize(v.nodes);
        state.counters["nodes"] = static_cast<double>(v.nodes);
    }
}
BENCHMARK(BM_CheckArrowHolds)->Apply(thread_args)->Unit(benchmark::kMillisecond);

// A witness search: T(4) -> (T(3))^{T(0)}_2 fails.
void BM_CheckArrowFails(benchmark::State& state)
{
    set_threads(state);
    const ArrowQuery q{perfect_tree(4), perfect_tree(3), point, 2, {}, exec_of(state)};
    for (auto _ : state)
        benchmark::DoNotOptimize(check_arrow(q).nodes);
}
BENCHMARK(BM_CheckArrowFails)->Apply(thread_args)->Unit(benchmark::kMillisecond);

// 2^16 leaf colorings of T(4) against target T(2).
void BM_ExhaustiveArrow(benchmark::State& state)
{
    set_threads(state);
    const PlaneTree host = perfect_tree(4);
    const PlaneTree target = perfect_tree(2);
    for (auto _ : state)
        benchmark::DoNotOptimize(reference::exhaustive_arrow(host, target, point, 2, exec_of(state)).holds);
}
BENCHMARK(BM_ExhaustiveArrow)->Apply(thread_args)->Unit(benchmark::kMillisecond);

// Scanning every copy of T(2) in T(5) under a random 3-coloring of leaf pairs.
void BM_FindMonoCopy(benchmark::State& state)
{
    set_threads(state);
    const auto set = make_copy_set(perfect_tree(5), perfect_tree(1));
    std::mt19937 rng(1);
    std::uniform_int_distribution<Color> pick(0, 2);
    std::vector<Color> colors(set->size());
    for (auto& c : colors)
        c = pick(rng);
    const Coloring chi(set, 3, colors);
    const PlaneTree h = perfect_tree(2);
    for (auto _ : state)
        benchmark::DoNotOptimize(find_mono_copy(chi, h, exec_of(state)));
}
BENCHMARK(BM_FindMonoCopy)->Apply(thread_args)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
