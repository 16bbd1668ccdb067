#include "polyarea/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace polyarea {

int64_t signed_area2(const Point& a, const Point& b, const Point& c) {
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

int orientation(const Point& a, const Point& b, const Point& c) {
    const int64_t v = signed_area2(a, b, c);
    return (v > 0) - (v < 0);
}

double dist(const Point& a, const Point& b) {
    const double dx = static_cast<double>(a.x - b.x);
    const double dy = static_cast<double>(a.y - b.y);
    return std::sqrt(dx * dx + dy * dy);
}

bool on_segment(const Point& a, const Point& b, const Point& q) {
    if (orientation(a, b, q) != 0) return false;
    return std::min(a.x, b.x) <= q.x && q.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= q.y && q.y <= std::max(a.y, b.y);
}

namespace {

// With one endpoint shared, simplicity is violated only when the two free
// endpoints leave the joint along the same ray: collinear with positive dot.
bool shared_endpoint_overlap(const Point& joint, const Point& p, const Point& q) {
    if (orientation(joint, p, q) != 0) return false;
    const int64_t dot = (p.x - joint.x) * (q.x - joint.x) + (p.y - joint.y) * (q.y - joint.y);
    return dot > 0;
}

}  // namespace

bool segments_properly_interact(const Segment& s, const Segment& t) {
    const Point& a = s.a;
    const Point& b = s.b;
    const Point& c = t.a;
    const Point& d = t.b;

    const bool ac = a.id == c.id;
    const bool ad = a.id == d.id;
    const bool bc = b.id == c.id;
    const bool bd = b.id == d.id;
    const int shared = int(ac) + int(ad) + int(bc) + int(bd);

    if (shared >= 2) return true;  // same edge
    if (shared == 1) {
        if (ac) return shared_endpoint_overlap(a, b, d);
        if (ad) return shared_endpoint_overlap(a, b, c);
        if (bc) return shared_endpoint_overlap(b, a, d);
        return shared_endpoint_overlap(b, a, c);
    }

    const int d1 = orientation(c, d, a);
    const int d2 = orientation(c, d, b);
    const int d3 = orientation(a, b, c);
    const int d4 = orientation(a, b, d);

    if (d1 * d2 < 0 && d3 * d4 < 0) return true;  // proper crossing
    if (d1 == 0 && on_segment(c, d, a)) return true;
    if (d2 == 0 && on_segment(c, d, b)) return true;
    if (d3 == 0 && on_segment(a, b, c)) return true;
    if (d4 == 0 && on_segment(a, b, d)) return true;
    return false;
}

std::vector<int32_t> convex_hull(std::span<const Point> points) {
    if (points.size() < 3) throw std::invalid_argument("convex hull needs at least 3 points");

    std::vector<Point> pts(points.begin(), points.end());
    std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    });

    // Monotone chain with strict turns: collinear boundary points are dropped.
    auto build = [&](auto begin, auto end, std::vector<Point>& out) {
        for (auto it = begin; it != end; ++it) {
            while (out.size() >= 2 && orientation(out[out.size() - 2], out.back(), *it) <= 0)
                out.pop_back();
            out.push_back(*it);
        }
    };
    std::vector<Point> lower, upper;
    build(pts.begin(), pts.end(), lower);
    build(pts.rbegin(), pts.rend(), upper);

    lower.pop_back();
    upper.pop_back();
    lower.insert(lower.end(), upper.begin(), upper.end());
    if (lower.size() < 3) throw std::invalid_argument("all points are collinear");

    std::vector<int32_t> ids;
    ids.reserve(lower.size());
    for (const Point& p : lower) ids.push_back(p.id);

    const auto lowest = std::min_element(ids.begin(), ids.end());
    std::rotate(ids.begin(), lowest, ids.end());
    return ids;
}

std::string area2_to_string(Area2 v) {
    if (v == 0) return "0";
    const bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    std::string digits;
    while (u > 0) {
        digits.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    if (neg) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

}  // namespace polyarea
