#pragma once

#include <span>
#include <utility>
#include <vector>

#include "polyarea/instance.hpp"

namespace polyarea {

// A cyclic sequence of point ids with a cached doubled signed area. Positive
// area means counterclockwise. The cache is updated incrementally by
// insert_vertex and must always equal the shoelace recomputation.
class Polygon {
public:
    Polygon() = default;

    // Builds from an id cycle (no simplicity check) and computes the area.
    static Polygon from_ids(const Instance& inst, std::vector<int32_t> ids);

    int32_t size() const { return static_cast<int32_t>(verts_.size()); }
    int32_t vertex(int32_t i) const { return verts_[static_cast<size_t>(i)]; }
    const std::vector<int32_t>& vertices() const { return verts_; }

    // Directed edge i: (verts[i], verts[(i+1) mod m]).
    std::pair<int32_t, int32_t> edge(int32_t i) const;

    Area2 doubled_area() const { return area2_; }

    // Splices q into edge i, replacing (p1,p2) by (p1,q),(q,p2). The doubled
    // area changes by signed_area2(p1, q, p2). Throws std::invalid_argument
    // if q is already a vertex.
    void insert_vertex(const Instance& inst, int32_t edge_index, int32_t q);

    // Canonical rotation: lowest id first. Area is unchanged.
    void rotate_lowest_first();

    // Reverses traversal order; the signed area negates.
    void reverse();

    // Doubled signed shoelace area of an id cycle.
    static Area2 shoelace(const Instance& inst, std::span<const int32_t> ids);

private:
    std::vector<int32_t> verts_;
    Area2 area2_ = 0;
};

}  // namespace polyarea
