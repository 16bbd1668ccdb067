#pragma once

#include <array>
#include <string>

#include "polyarea/grid.hpp"
#include "polyarea/params.hpp"
#include "polyarea/polygon.hpp"
#include "polyarea/rng.hpp"

namespace polyarea {

// Candidate insertion weight for point q on the directed polygon edge
// (p1,p2): signed triangle area plus the perimeter penalty. Negative
// orientation of (p1,p2,q) rewards area gain in the edge's own frame, so the
// same formula serves both objectives.
double insertion_weight(const Point& p1, const Point& p2, const Point& q, double alpha,
                        WeightVariant variant);

// Seed triangles for the min objective: for every anchor, its nearest
// neighbor (ties to the lower id) plus the third point minimizing the
// triangle perimeter (ties likewise), degenerate triples dropped,
// deduplicated, ordered by perimeter then ids.
std::vector<std::array<int32_t, 3>> init_min_triangles(const Instance& inst);

// Nearest neighbor of point id by Euclidean distance, ties to the lower id.
int32_t nearest_neighbor(const Instance& inst, const EdgeGrid& grid, int32_t id);

struct GreedyStats {
    int64_t insertions = 0;
    int64_t pops = 0;       // heap entries examined, live or stale
    int64_t consumed = 0;   // candidates permanently rejected
    int32_t attempts = 0;   // retry-ladder attempts used
    double alpha_used = 0.0;
    double sigma_used = 0.0;
};

struct GreedyResult {
    bool success = false;
    Polygon polygon;              // completed polygon, canonical rotation
    std::string failure_reason;   // set when success is false
    GreedyStats stats;
};

// One greedy pass: two-level heap over (edge, candidate) pairs, lazy
// invalidation, candidates rejected once are never retried on that edge.
// Exposed stepwise for tests; run_greedy drives it with the retry ladder.
class GreedySolver {
public:
    GreedySolver(const Instance& inst, const SolveParams& params, uint64_t seed);

    // Max objective: start from the strict hull, counterclockwise.
    // Throws std::invalid_argument when the hull is degenerate.
    void start_from_hull();

    // Min objective: start from a triangle, oriented clockwise.
    void start_from_triangle(std::array<int32_t, 3> tri);

    struct StepResult {
        bool inserted = false;
        int32_t q = -1;
        int32_t edge_origin = -1;
        double weight = 0.0;
    };

    // Performs the next valid insertion; inserted == false means exhaustion.
    StepResult step();

    // Runs steps until completion or exhaustion; true iff complete.
    bool run();

    bool complete() const { return remaining_ == 0; }
    int32_t remaining() const { return remaining_; }
    Area2 area2() const { return area2_; }
    Polygon polygon() const;
    const GreedyStats& stats() const { return stats_; }

private:
    struct Triple {
        double w;
        int32_t q;
    };
    struct EdgeHeap {
        std::vector<Triple> heap;  // min-heap by (w, q)
        uint32_t gen = 0;
    };
    struct TopEntry {
        double w;
        int32_t q;
        int32_t origin;
        uint32_t gen;
    };
    friend bool operator>(const TopEntry& a, const TopEntry& b);

    void init_cycle(const std::vector<int32_t>& ids);
    void build_edge_heap(int32_t origin);
    void consume_top(int32_t origin);
    bool insertion_valid(int32_t p1, int32_t p2, int32_t q) const;

    const Instance* inst_;
    SolveParams params_;
    int32_t hood_;
    Rng rng_;
    EdgeGrid grid_;
    std::vector<int32_t> next_, prev_;
    std::vector<char> in_poly_;
    std::vector<EdgeHeap> edges_;
    std::vector<TopEntry> top_;  // min-heap
    Area2 area2_ = 0;
    int32_t remaining_ = 0;
    int32_t anchor_ = -1;  // some polygon vertex, for traversal
    GreedyStats stats_;
};

// Greedy with the retry ladder: scaled alpha, then mild noise with derived
// seeds; the min objective additionally tries several seed triangles and
// keeps the best completed polygon.
GreedyResult run_greedy(const Instance& inst, const SolveParams& params);

}  // namespace polyarea
