#pragma once

#include "polyarea/params.hpp"
#include "polyarea/verify.hpp"

namespace polyarea {

// Exhaustive enumeration of simple polygonalizations (cycles fixed at vertex
// 0, mirror pairs visited once). Practical for n <= 10; larger inputs throw.
struct BruteForceResult {
    bool any = false;         // at least one simple polygonalization exists
    Area2 min_area2 = 0;      // absolute doubled area extremes over all of them
    Area2 max_area2 = 0;
    Polygon best_min;         // witnesses, canonical rotation
    Polygon best_max;
    int64_t count = 0;        // number of simple polygonalizations examined
};

BruteForceResult brute_force_extremes(const Instance& inst);

// Report for the witness polygon of the requested objective.
ScoreReport brute_force_score(const Instance& inst, Objective objective);

}  // namespace polyarea
