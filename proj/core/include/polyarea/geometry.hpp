#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace polyarea {

// Doubled signed areas and shoelace accumulators. 64 bits are one short at
// the coordinate cap (a full-extent square has |2A| = 2^63), so all doubled
// areas travel as 128-bit integers.
using Area2 = __int128;

// Cap chosen so any cross product of coordinate differences fits in int64.
inline constexpr int64_t kCoordLimit = int64_t{1} << 30;

struct Point {
    int64_t x = 0;
    int64_t y = 0;
    int32_t id = -1;
};

inline bool same_coords(const Point& a, const Point& b) {
    return a.x == b.x && a.y == b.y;
}

struct Segment {
    Point a;
    Point b;
};

// Twice the signed area of triangle abc. Positive iff abc is counterclockwise.
int64_t signed_area2(const Point& a, const Point& b, const Point& c);

// Sign of signed_area2 in {-1, 0, +1}.
int orientation(const Point& a, const Point& b, const Point& c);

// Euclidean distance.
double dist(const Point& a, const Point& b);

// True iff the closed segments meet in a way that breaks polygon simplicity.
// Endpoints shared by id are legitimate polygon adjacencies: two shared ids
// mean the same edge (true), one shared id is an interaction only when the
// remaining endpoints lie on the same ray from the joint (positive-length
// overlap). Without shared ids any touching of the closed segments counts.
bool segments_properly_interact(const Segment& s, const Segment& t);

// True iff q lies strictly inside or on the closed segment ab (collinear and
// within the bounding box).
bool on_segment(const Point& a, const Point& b, const Point& q);

// Ids of the strict convex hull in counterclockwise order, lowest id first.
// Points interior to hull edges are excluded. Throws std::invalid_argument
// if all points are collinear or fewer than 3 are given.
std::vector<int32_t> convex_hull(std::span<const Point> points);

// Decimal rendering of a 128-bit value (iostreams lack one).
std::string area2_to_string(Area2 v);

}  // namespace polyarea
