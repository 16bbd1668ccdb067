#include "polyarea/brute_force.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace polyarea {

BruteForceResult brute_force_extremes(const Instance& inst) {
    const int32_t n = inst.size();
    if (n > 10) throw std::invalid_argument("brute force limited to 10 points");

    std::vector<int32_t> ids(static_cast<size_t>(n));
    std::iota(ids.begin(), ids.end(), 0);

    BruteForceResult result;
    do {
        // Fixing ids[0] == 0 kills rotations; ids[1] < ids.back() kills mirrors.
        if (ids[1] > ids.back()) continue;
        Polygon poly = Polygon::from_ids(inst, ids);
        if (!is_simple_naive(poly, inst)) continue;
        Area2 a2 = poly.doubled_area();
        if (a2 < 0) a2 = -a2;
        ++result.count;
        if (!result.any || a2 < result.min_area2) {
            result.min_area2 = a2;
            result.best_min = poly;
        }
        if (!result.any || a2 > result.max_area2) {
            result.max_area2 = a2;
            result.best_max = poly;
        }
        result.any = true;
    } while (std::next_permutation(ids.begin() + 1, ids.end()));

    result.best_min.rotate_lowest_first();
    result.best_max.rotate_lowest_first();
    return result;
}

ScoreReport brute_force_score(const Instance& inst, Objective objective) {
    const BruteForceResult result = brute_force_extremes(inst);
    if (!result.any) throw std::runtime_error("no simple polygonalization exists");
    const Polygon& best = objective == Objective::kMax ? result.best_max : result.best_min;
    return score_polygon(best, inst, /*naive_check=*/true);
}

}  // namespace polyarea
