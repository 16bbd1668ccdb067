#include "polyarea/instance.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace polyarea {

Instance make_instance(std::string name, std::vector<Point> points) {
    if (points.size() < 3) throw std::invalid_argument("instance needs at least 3 points");
    if (points.size() > size_t{1} << 31)
        throw std::invalid_argument("instance too large");

    for (size_t i = 0; i < points.size(); ++i) {
        Point& p = points[i];
        if (p.id < 0) p.id = static_cast<int32_t>(i);
        if (p.id != static_cast<int32_t>(i))
            throw std::invalid_argument("point ids must be 0..n-1 in order");
        if (std::llabs(p.x) > kCoordLimit || std::llabs(p.y) > kCoordLimit)
            throw std::invalid_argument("coordinate magnitude exceeds 2^30");
    }

    std::vector<Point> sorted = points;
    std::sort(sorted.begin(), sorted.end(), [](const Point& a, const Point& b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    });
    for (size_t i = 1; i < sorted.size(); ++i)
        if (same_coords(sorted[i - 1], sorted[i]))
            throw std::invalid_argument("duplicate point locations");

    Instance inst;
    inst.name = std::move(name);
    inst.points = std::move(points);
    return inst;
}

}  // namespace polyarea
