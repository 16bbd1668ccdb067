#pragma once

#include "polyarea/greedy.hpp"
#include "polyarea/local_search.hpp"
#include "polyarea/verify.hpp"

namespace polyarea {

struct PhaseTimings {
    double greedy_seconds = 0.0;
    double local_search_seconds = 0.0;
    double merge_seconds = 0.0;
};

struct SolveResult {
    bool success = false;
    Polygon polygon;
    ScoreReport report;
    double greedy_score = 0.0;   // score before local search
    std::string failure_reason;
    PhaseTimings timings;
    GreedyStats greedy_stats;
    LocalSearchStats ls_stats;
};

// One greedy-plus-local-search pass (ignores restarts and partitioning).
SolveResult solve_single(const Instance& inst, const SolveParams& params);

// Full pipeline: divide-and-conquer when requested or past the size
// threshold, otherwise restarts of solve_single keeping the best result.
SolveResult solve(const Instance& inst, const SolveParams& params);

}  // namespace polyarea
