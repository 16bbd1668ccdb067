#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "polyarea/instance.hpp"
#include "polyarea/params.hpp"

namespace polyarea {

// Uniform bucket grid over the instance bounding box. Cells are closed
// square boxes with integer corners, so membership tests are exact and a
// segment on a cell boundary registers in both adjacent cells. Edges
// overlapping more than long_threshold cells live in a separate long-edge
// list that every query always scans. Points are binned into exactly one
// cell. The defaults give roughly sqrt(n) points per cell; callers that
// mostly run interaction queries may ask for a finer resolution.
class EdgeGrid {
public:
    explicit EdgeGrid(const Instance& inst, int32_t cols_override = 0,
                      int64_t long_threshold = 4);

    int32_t columns() const { return cols_; }
    int64_t cell_size() const { return cell_size_; }
    int32_t cell_count() const { return cols_ * cols_; }

    static uint64_t edge_key(int32_t a, int32_t b);

    void add_edge(int32_t a, int32_t b);
    void remove_edge(int32_t a, int32_t b);
    size_t edge_count() const { return edge_count_; }

    // True iff some stored edge (key not in skip) properly interacts with s.
    bool any_interaction(const Segment& s, std::span<const uint64_t> skip = {}) const;

    // Ids of points whose cells lie within Chebyshev distance hood of any
    // cell overlapped by s, ascending. hood == kHoodInfinite returns all ids.
    std::vector<int32_t> candidate_points(const Segment& s, int32_t hood) const;

    // Ascending indices of the cells the closed segment overlaps.
    std::vector<int32_t> cells_of(const Segment& s) const;

    bool segment_overlaps_cell(const Segment& s, int32_t cell) const;
    int32_t point_cell(const Point& p) const;

    const std::vector<uint64_t>& long_edges() const { return long_edges_; }
    const std::vector<uint64_t>& cell_edges(int32_t cell) const {
        return cell_edges_[static_cast<size_t>(cell)];
    }
    const std::vector<int32_t>& cell_points(int32_t cell) const {
        return cell_points_[static_cast<size_t>(cell)];
    }

private:
    Segment segment_of(uint64_t key) const;
    void cell_box(int32_t cell, int64_t& x0, int64_t& y0, int64_t& x1, int64_t& y1) const;
    bool interacts_in_list(const Segment& s, const std::vector<uint64_t>& list,
                           std::span<const uint64_t> skip) const;

    const Instance* inst_;
    int32_t cols_ = 1;
    int64_t cell_size_ = 1;
    int64_t long_threshold_ = 4;
    int64_t min_x_ = 0;
    int64_t min_y_ = 0;
    size_t edge_count_ = 0;
    std::vector<std::vector<uint64_t>> cell_edges_;
    std::vector<std::vector<int32_t>> cell_points_;
    std::vector<uint64_t> long_edges_;
};

}  // namespace polyarea
