#include "polyarea/polygon.hpp"

#include <algorithm>
#include <stdexcept>

namespace polyarea {

Polygon Polygon::from_ids(const Instance& inst, std::vector<int32_t> ids) {
    if (ids.size() < 3) throw std::invalid_argument("polygon needs at least 3 vertices");
    for (int32_t id : ids)
        if (id < 0 || id >= inst.size()) throw std::out_of_range("vertex id out of range");
    Polygon p;
    p.verts_ = std::move(ids);
    p.area2_ = shoelace(inst, p.verts_);
    return p;
}

std::pair<int32_t, int32_t> Polygon::edge(int32_t i) const {
    const int32_t m = size();
    return {verts_[static_cast<size_t>(i)], verts_[static_cast<size_t>((i + 1) % m)]};
}

void Polygon::insert_vertex(const Instance& inst, int32_t edge_index, int32_t q) {
    if (q < 0 || q >= inst.size()) throw std::out_of_range("vertex id out of range");
    if (std::find(verts_.begin(), verts_.end(), q) != verts_.end())
        throw std::invalid_argument("vertex already in polygon");
    const auto [p1, p2] = edge(edge_index);
    area2_ += signed_area2(inst.point(p1), inst.point(q), inst.point(p2));
    verts_.insert(verts_.begin() + edge_index + 1, q);
}

void Polygon::rotate_lowest_first() {
    const auto lowest = std::min_element(verts_.begin(), verts_.end());
    std::rotate(verts_.begin(), lowest, verts_.end());
}

void Polygon::reverse() {
    std::reverse(verts_.begin(), verts_.end());
    area2_ = -area2_;
}

Area2 Polygon::shoelace(const Instance& inst, std::span<const int32_t> ids) {
    Area2 sum = 0;
    const size_t m = ids.size();
    for (size_t i = 0; i < m; ++i) {
        const Point& a = inst.point(ids[i]);
        const Point& b = inst.point(ids[(i + 1) % m]);
        sum += static_cast<Area2>(a.x) * b.y - static_cast<Area2>(a.y) * b.x;
    }
    return sum;
}

}  // namespace polyarea
