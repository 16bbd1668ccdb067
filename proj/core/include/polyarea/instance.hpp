#pragma once

#include <string>
#include <vector>

#include "polyarea/geometry.hpp"

namespace polyarea {

// A named planar point set. Point ids equal their index in points.
struct Instance {
    std::string name;
    std::vector<Point> points;

    int32_t size() const { return static_cast<int32_t>(points.size()); }
    const Point& point(int32_t id) const { return points[static_cast<size_t>(id)]; }
};

// Validates and assembles an instance: at least 3 points, ids 0..n-1 in
// order (assigned if negative), coordinates within kCoordLimit, no duplicate
// locations. Throws std::invalid_argument on violation.
Instance make_instance(std::string name, std::vector<Point> points);

}  // namespace polyarea
