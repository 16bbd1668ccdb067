#pragma once

#include "polyarea/grid.hpp"
#include "polyarea/polygon.hpp"

namespace polyarea {

struct ScoreReport {
    double score = 0.0;        // |polygon area| / hull area
    Area2 polygon_area2 = 0;   // absolute doubled area
    Area2 hull_area2 = 0;      // absolute doubled area of the strict hull
    bool simple = false;
    bool uses_all_points = false;
};

// True iff no two edges properly interact. Checks every pair; trusted path.
bool is_simple_naive(const Polygon& poly, const Instance& inst);

// Same predicate through the edge grid.
bool is_simple_grid(const Polygon& poly, const Instance& inst);

// True iff the polygon visits every instance point exactly once.
bool uses_all_points(const Polygon& poly, const Instance& inst);

// Full report. naive_check selects the all-pairs simplicity path. Throws
// std::out_of_range when the polygon references an id outside the instance.
ScoreReport score_polygon(const Polygon& poly, const Instance& inst, bool naive_check = false);

}  // namespace polyarea
