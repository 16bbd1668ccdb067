#include <deque>
#include <random>
#include <vector>

#include "benchmark/benchmark.h"
#include "polyarea/geometry.hpp"
#include "polyarea/greedy.hpp"
#include "polyarea/io.hpp"
#include "polyarea/local_search.hpp"
#include "polyarea/merge.hpp"
#include "polyarea/solver.hpp"

using namespace polyarea;

namespace {

const Instance& cached_uniform(int32_t n) {
    static std::deque<Instance> cache;
    for (const Instance& inst : cache)
        if (inst.size() == n) return inst;
    cache.push_back(generate_uniform(n, 7));
    return cache.back();
}

std::vector<Point> random_points(size_t count, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Point> ps(count);
    for (Point& p : ps) p = {static_cast<int64_t>(rng() % 1000001),
                             static_cast<int64_t>(rng() % 1000001), -1};
    return ps;
}

}  // namespace

static void BM_SignedArea2(benchmark::State& state) {
    const std::vector<Point> ps = random_points(3 * 1024, 1);
    size_t i = 0;
    for (auto _ : state) {
        const size_t k = (i++ % 1024) * 3;
        benchmark::DoNotOptimize(signed_area2(ps[k], ps[k + 1], ps[k + 2]));
    }
}
BENCHMARK(BM_SignedArea2);

static void BM_SegmentsInteract(benchmark::State& state) {
    std::vector<Point> ps = random_points(4 * 1024, 2);
    for (size_t k = 0; k < ps.size(); ++k) ps[k].id = static_cast<int32_t>(k);
    size_t i = 0;
    for (auto _ : state) {
        const size_t k = (i++ % 1024) * 4;
        const Segment s{ps[k], ps[k + 1]};
        const Segment t{ps[k + 2], ps[k + 3]};
        benchmark::DoNotOptimize(segments_properly_interact(s, t));
    }
}
BENCHMARK(BM_SegmentsInteract);

static void BM_ConvexHull(benchmark::State& state) {
    const Instance& inst = cached_uniform(static_cast<int32_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(convex_hull(inst.points));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ConvexHull)->Arg(1000)->Arg(10000)->Complexity();

static void BM_GridAnyInteraction(benchmark::State& state) {
    const Instance& inst = cached_uniform(static_cast<int32_t>(state.range(0)));
    const GreedyResult greedy = run_greedy(inst, SolveParams{});
    EdgeGrid grid(inst);
    const Polygon& poly = greedy.polygon;
    for (int32_t i = 0; i < poly.size(); ++i)
        grid.add_edge(poly.vertex(i), poly.vertex((i + 1) % poly.size()));
    std::mt19937_64 rng(3);
    for (auto _ : state) {
        const auto a = static_cast<int32_t>(rng() % inst.size());
        const auto b = static_cast<int32_t>((a + 1 + rng() % (inst.size() - 1)) % inst.size());
        const Segment s{inst.point(a), inst.point(b)};
        benchmark::DoNotOptimize(grid.any_interaction(s));
    }
}
BENCHMARK(BM_GridAnyInteraction)->Arg(1000)->Arg(10000);

static void BM_GridCandidatePoints(benchmark::State& state) {
    const Instance& inst = cached_uniform(2000);
    const EdgeGrid grid(inst);
    std::mt19937_64 rng(4);
    for (auto _ : state) {
        const auto a = static_cast<int32_t>(rng() % inst.size());
        const auto b = static_cast<int32_t>((a + 1 + rng() % (inst.size() - 1)) % inst.size());
        const Segment s{inst.point(a), inst.point(b)};
        benchmark::DoNotOptimize(grid.candidate_points(s, static_cast<int32_t>(state.range(0))));
    }
}
BENCHMARK(BM_GridCandidatePoints)->Arg(1)->Arg(2)->Arg(4);

static void BM_GreedyMax(benchmark::State& state) {
    const Instance& inst = cached_uniform(static_cast<int32_t>(state.range(0)));
    for (auto _ : state) {
        const GreedyResult res = run_greedy(inst, SolveParams{});
        benchmark::DoNotOptimize(res.success);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_GreedyMax)->Arg(500)->Arg(1000)->Arg(2000)->Complexity()
    ->Unit(benchmark::kMillisecond);

static void BM_GreedyMin(benchmark::State& state) {
    const Instance& inst = cached_uniform(static_cast<int32_t>(state.range(0)));
    SolveParams params;
    params.objective = Objective::kMin;
    for (auto _ : state) {
        const GreedyResult res = run_greedy(inst, params);
        benchmark::DoNotOptimize(res.success);
    }
}
BENCHMARK(BM_GreedyMin)->Arg(500)->Arg(1000)->Unit(benchmark::kMillisecond);

static void BM_LocalSearchMax(benchmark::State& state) {
    const Instance& inst = cached_uniform(static_cast<int32_t>(state.range(0)));
    const SolveParams params;
    const GreedyResult greedy = run_greedy(inst, params);
    for (auto _ : state) {
        Polygon poly = run_local_search(greedy.polygon, inst, params);
        benchmark::DoNotOptimize(poly.doubled_area());
    }
}
BENCHMARK(BM_LocalSearchMax)->Arg(500)->Arg(1000)->Unit(benchmark::kMillisecond);

static void BM_SolveMax(benchmark::State& state) {
    const Instance& inst = cached_uniform(static_cast<int32_t>(state.range(0)));
    for (auto _ : state) {
        const SolveResult res = solve(inst, SolveParams{});
        benchmark::DoNotOptimize(res.report.score);
    }
}
BENCHMARK(BM_SolveMax)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

static void BM_DivideAndConquer(benchmark::State& state) {
    const Instance& inst = cached_uniform(4000);
    for (auto _ : state) {
        const DncResult res = solve_divide_and_conquer(inst, SolveParams{},
                                                       static_cast<int32_t>(state.range(0)));
        benchmark::DoNotOptimize(res.solve.report.score);
    }
}
BENCHMARK(BM_DivideAndConquer)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
