#pragma once

#include "polyarea/grid.hpp"
#include "polyarea/params.hpp"
#include "polyarea/polygon.hpp"

namespace polyarea {

// A candidate rewiring: the contiguous path v1..vk is cut out, its former
// neighbors close the gap directly, and the path re-enters reversed inside
// the directed edge (u1,u2), which must lie outside the path.
struct Move {
    std::vector<int32_t> path;  // v1..vk in traversal order at collection time
    int32_t u1 = -1;
    int32_t u2 = -1;
    Area2 gain2 = 0;            // doubled signed-area change; positive improves
};

// Doubled-area change of the move given by snapshot positions: the path
// occupies positions path_start..path_start+k-1, the target edge starts at
// position edge_start. No validity checks beyond index legality.
Area2 move_gain(const Polygon& poly, const Instance& inst, int32_t path_start, int32_t k,
                int32_t edge_start);

// The rewired id cycle produced by the same move (for oracles).
std::vector<int32_t> apply_move_ids(const Polygon& poly, int32_t path_start, int32_t k,
                                    int32_t edge_start);

// All strictly improving, orientation-preserving, geometrically valid moves,
// ordered best first (gain desc, then lower v1 id, lower u1 id).
std::vector<Move> collect_moves(const Polygon& poly, const Instance& inst,
                                const SolveParams& params);

struct LocalSearchStats {
    int64_t rounds = 0;
    int64_t collected = 0;
    int64_t applied = 0;
    Area2 total_gain2 = 0;
};

// Collect-then-apply rounds until a round's total gain falls below
// ls_epsilon of the hull area. Each move is revalidated against the evolving
// polygon immediately before application.
Polygon run_local_search(Polygon poly, const Instance& inst, const SolveParams& params,
                         LocalSearchStats* stats = nullptr);

}  // namespace polyarea
