#pragma once

#include <optional>

#include "polyarea/solver.hpp"

namespace polyarea {

// One divide-and-conquer unit: grid boxes, the points inside them, and the
// polygon solved over those points (instance-global ids, solver orientation).
struct MergeUnit {
    std::vector<int32_t> cells;
    std::vector<int32_t> point_ids;
    Polygon polygon;
};

struct Partition {
    int32_t dim = 1;                    // boxes per axis
    std::vector<int32_t> unit_of_cell;  // box index -> unit index, -1 unused
    std::vector<MergeUnit> units;
    double greedy_seconds = 0.0;        // summed over unit solves
    double local_search_seconds = 0.0;
};

// Bins points into dim x dim half-open boxes, folds degenerate boxes (fewer
// than 3 points or all collinear) into neighboring units, and solves every
// unit independently with restarts forced to 1. Throws std::runtime_error
// when some unit cannot be solved.
Partition partition_solve(const Instance& inst, const SolveParams& params, int32_t dim);

// A bridge removes the directed edge (a1,b1) from one cycle and (a2,b2)
// from another and adds the connectors (a1,b2) and (a2,b1), fusing the two
// cycles; the doubled signed area changes by exactly q2.
struct Bridge {
    int32_t unit_a = -1, unit_b = -1;
    int32_t a1 = -1, b1 = -1;
    int32_t a2 = -1, b2 = -1;
    Area2 q2 = 0;
};

// Best bridge between two standalone polygons: maximal q2, ties to lower
// edge indices; connectors must clear both polygons and each other.
std::optional<Bridge> best_bridge(const Polygon& pa, const Polygon& pb, const Instance& inst);

struct MergeOutcome {
    bool success = false;
    std::string failure_reason;
    Polygon polygon;               // fused cycle over all points
    std::vector<Bridge> graph;     // best bridge per adjacent unit pair
    std::vector<Bridge> accepted;  // bridges spliced, in order, with applied q2
    Area2 units_area2_sum = 0;     // signed sum over unit polygons
    Area2 tree_weight = 0;         // sum of -q2 over the spanning tree
};

// Bridge graph over orthogonally adjacent units, minimum spanning tree by
// Prim (weight -q2) from unit 0, splice in acceptance order. A tree bridge
// whose edge was consumed by an earlier splice is recomputed between the
// two current cycles.
MergeOutcome merge_units(const Partition& partition, const Instance& inst,
                         const SolveParams& params);

struct DncResult {
    SolveResult solve;
    Partition partition;
    MergeOutcome merge;
};

DncResult solve_divide_and_conquer(const Instance& inst, const SolveParams& params,
                                   int32_t dim);

}  // namespace polyarea
