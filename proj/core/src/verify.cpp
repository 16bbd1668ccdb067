#include "polyarea/verify.hpp"

#include <stdexcept>
#include <vector>

namespace polyarea {

namespace {

Segment edge_segment(const Polygon& poly, const Instance& inst, int32_t i) {
    const auto [a, b] = poly.edge(i);
    return {inst.point(a), inst.point(b)};
}

void check_ids(const Polygon& poly, const Instance& inst) {
    for (int32_t id : poly.vertices())
        if (id < 0 || id >= inst.size()) throw std::out_of_range("vertex id out of range");
}

}  // namespace

bool is_simple_naive(const Polygon& poly, const Instance& inst) {
    check_ids(poly, inst);
    const int32_t m = poly.size();
    if (m < 3) return false;
    std::vector<char> used(static_cast<size_t>(inst.size()), 0);
    for (int32_t id : poly.vertices()) {
        if (used[static_cast<size_t>(id)]) return false;  // repeated vertex
        used[static_cast<size_t>(id)] = 1;
    }
    for (int32_t i = 0; i < m; ++i) {
        const Segment si = edge_segment(poly, inst, i);
        for (int32_t j = i + 1; j < m; ++j)
            if (segments_properly_interact(si, edge_segment(poly, inst, j))) return false;
    }
    return true;
}

bool is_simple_grid(const Polygon& poly, const Instance& inst) {
    check_ids(poly, inst);
    const int32_t m = poly.size();
    if (m < 3) return false;
    std::vector<char> used(static_cast<size_t>(inst.size()), 0);
    for (int32_t id : poly.vertices()) {
        if (used[static_cast<size_t>(id)]) return false;
        used[static_cast<size_t>(id)] = 1;
    }
    // Insert edges one by one; each may interact only with edges added before.
    EdgeGrid grid(inst);
    for (int32_t i = 0; i < m; ++i) {
        const Segment s = edge_segment(poly, inst, i);
        if (grid.any_interaction(s)) return false;
        const auto [a, b] = poly.edge(i);
        grid.add_edge(a, b);
    }
    return true;
}

bool uses_all_points(const Polygon& poly, const Instance& inst) {
    check_ids(poly, inst);
    if (poly.size() != inst.size()) return false;
    std::vector<char> used(static_cast<size_t>(inst.size()), 0);
    for (int32_t id : poly.vertices()) {
        if (used[static_cast<size_t>(id)]) return false;
        used[static_cast<size_t>(id)] = 1;
    }
    return true;
}

ScoreReport score_polygon(const Polygon& poly, const Instance& inst, bool naive_check) {
    check_ids(poly, inst);
    ScoreReport report;
    const std::vector<int32_t> hull = convex_hull(inst.points);
    report.hull_area2 = Polygon::shoelace(inst, hull);
    if (report.hull_area2 < 0) report.hull_area2 = -report.hull_area2;

    Area2 a2 = poly.doubled_area();
    if (a2 < 0) a2 = -a2;
    report.polygon_area2 = a2;
    report.simple = naive_check ? is_simple_naive(poly, inst) : is_simple_grid(poly, inst);
    report.uses_all_points = uses_all_points(poly, inst);
    report.score = static_cast<double>(report.polygon_area2) /
                   static_cast<double>(report.hull_area2);
    return report;
}

}  // namespace polyarea
