#pragma once

#include <cstdint>
#include <limits>

namespace polyarea {

enum class Objective { kMax, kMin };

// Perimeter penalty shape: MINUS subtracts the base edge length, PLUS does not.
enum class WeightVariant { kMinus, kPlus };

inline constexpr int32_t kHoodInfinite = std::numeric_limits<int32_t>::max();

struct SolveParams {
    Objective objective = Objective::kMax;
    double alpha = 1.0 / 90.0;   // perimeter penalty factor, >= 0
    int32_t hops = 10;           // local-search path length cap
    int32_t hood = 2;            // grid neighborhood radius; kHoodInfinite scans all points
    bool hood_set = false;       // explicit choice disables the small-instance widening
    double sigma = 0.0;          // multiplicative weight noise, 0 disables
    uint64_t seed = 1;
    WeightVariant weight_variant = WeightVariant::kMinus;
    double ls_epsilon = 0.001;   // stop when a round's relative gain falls below this
    int32_t start_triangles = 8; // candidate seed triangles for the min objective
    int32_t restarts = 1;        // independent attempts, best kept
    int32_t dnc_grid = 0;        // partition boxes per axis; 0 defers to the threshold
    int64_t dnc_threshold = 200000;  // instances at least this large partition automatically
};

// Instances of at most 100 points are searched exhaustively unless the
// caller pinned the neighborhood explicitly.
inline int32_t effective_hood(const SolveParams& params, int32_t n) {
    if (!params.hood_set && n <= 100) return kHoodInfinite;
    return params.hood;
}

inline const char* objective_name(Objective o) {
    return o == Objective::kMax ? "max" : "min";
}

inline const char* variant_name(WeightVariant v) {
    return v == WeightVariant::kMinus ? "minus" : "plus";
}

}  // namespace polyarea
