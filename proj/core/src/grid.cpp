#include "polyarea/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace polyarea {

namespace {

int64_t clamp_div(int64_t offset, int64_t cell_size, int32_t cols) {
    const int64_t c = offset / cell_size;
    return std::min<int64_t>(std::max<int64_t>(c, 0), cols - 1);
}

}  // namespace

EdgeGrid::EdgeGrid(const Instance& inst, int32_t cols_override, int64_t long_threshold)
    : inst_(&inst), long_threshold_(std::max<int64_t>(long_threshold, 1)) {
    int64_t max_x = inst.points[0].x, max_y = inst.points[0].y;
    min_x_ = max_x;
    min_y_ = max_y;
    for (const Point& p : inst.points) {
        min_x_ = std::min(min_x_, p.x);
        max_x = std::max(max_x, p.x);
        min_y_ = std::min(min_y_, p.y);
        max_y = std::max(max_y, p.y);
    }
    cols_ = cols_override > 0
                ? cols_override
                : static_cast<int32_t>(
                      std::max<int64_t>(1, std::llround(std::pow(4.0 * inst.size(), 0.25))));
    const int64_t extent = std::max({max_x - min_x_, max_y - min_y_, int64_t{1}});
    cell_size_ = (extent + cols_ - 1) / cols_;

    cell_edges_.resize(static_cast<size_t>(cell_count()));
    cell_points_.resize(static_cast<size_t>(cell_count()));
    for (const Point& p : inst.points)
        cell_points_[static_cast<size_t>(point_cell(p))].push_back(p.id);
}

uint64_t EdgeGrid::edge_key(int32_t a, int32_t b) {
    if (a > b) std::swap(a, b);
    return (static_cast<uint64_t>(static_cast<uint32_t>(a)) << 32) |
           static_cast<uint32_t>(b);
}

Segment EdgeGrid::segment_of(uint64_t key) const {
    const auto a = static_cast<int32_t>(key >> 32);
    const auto b = static_cast<int32_t>(key & 0xffffffffu);
    return {inst_->point(a), inst_->point(b)};
}

int32_t EdgeGrid::point_cell(const Point& p) const {
    const int64_t col = clamp_div(p.x - min_x_, cell_size_, cols_);
    const int64_t row = clamp_div(p.y - min_y_, cell_size_, cols_);
    return static_cast<int32_t>(row * cols_ + col);
}

void EdgeGrid::cell_box(int32_t cell, int64_t& x0, int64_t& y0, int64_t& x1, int64_t& y1) const {
    const int64_t col = cell % cols_;
    const int64_t row = cell / cols_;
    x0 = min_x_ + col * cell_size_;
    y0 = min_y_ + row * cell_size_;
    x1 = x0 + cell_size_;
    y1 = y0 + cell_size_;
}

bool EdgeGrid::segment_overlaps_cell(const Segment& s, int32_t cell) const {
    int64_t x0, y0, x1, y1;
    cell_box(cell, x0, y0, x1, y1);

    if (std::max(s.a.x, s.b.x) < x0 || std::min(s.a.x, s.b.x) > x1 ||
        std::max(s.a.y, s.b.y) < y0 || std::min(s.a.y, s.b.y) > y1)
        return false;

    // Separating-axis remainder: the box misses the segment's line iff all
    // four corners sit strictly on one side of it.
    const Area2 dx = s.b.x - s.a.x;
    const Area2 dy = s.b.y - s.a.y;
    auto side = [&](int64_t cx, int64_t cy) {
        const Area2 v = dx * (cy - s.a.y) - dy * (cx - s.a.x);
        return (v > 0) - (v < 0);
    };
    const int s1 = side(x0, y0);
    const int s2 = side(x1, y0);
    const int s3 = side(x1, y1);
    const int s4 = side(x0, y1);
    const int lo = std::min({s1, s2, s3, s4});
    const int hi = std::max({s1, s2, s3, s4});
    return !(lo > 0 || hi < 0);
}

std::vector<int32_t> EdgeGrid::cells_of(const Segment& s) const {
    const int64_t col_lo =
        std::max<int64_t>(0, clamp_div(std::min(s.a.x, s.b.x) - min_x_, cell_size_, cols_) - 1);
    const int64_t col_hi =
        std::min<int64_t>(cols_ - 1, clamp_div(std::max(s.a.x, s.b.x) - min_x_, cell_size_, cols_) + 1);
    const int64_t row_lo =
        std::max<int64_t>(0, clamp_div(std::min(s.a.y, s.b.y) - min_y_, cell_size_, cols_) - 1);
    const int64_t row_hi =
        std::min<int64_t>(cols_ - 1, clamp_div(std::max(s.a.y, s.b.y) - min_y_, cell_size_, cols_) + 1);

    std::vector<int32_t> out;
    for (int64_t row = row_lo; row <= row_hi; ++row)
        for (int64_t col = col_lo; col <= col_hi; ++col) {
            const auto cell = static_cast<int32_t>(row * cols_ + col);
            if (segment_overlaps_cell(s, cell)) out.push_back(cell);
        }
    return out;
}

void EdgeGrid::add_edge(int32_t a, int32_t b) {
    const uint64_t key = edge_key(a, b);
    const Segment s{inst_->point(a), inst_->point(b)};
    const std::vector<int32_t> cells = cells_of(s);
    if (static_cast<int64_t>(cells.size()) > long_threshold_) {
        long_edges_.push_back(key);
    } else {
        for (int32_t cell : cells) cell_edges_[static_cast<size_t>(cell)].push_back(key);
    }
    ++edge_count_;
}

void EdgeGrid::remove_edge(int32_t a, int32_t b) {
    const uint64_t key = edge_key(a, b);
    const Segment s{inst_->point(a), inst_->point(b)};
    const std::vector<int32_t> cells = cells_of(s);
    auto drop = [&](std::vector<uint64_t>& list) {
        const auto it = std::find(list.begin(), list.end(), key);
        if (it == list.end()) throw std::logic_error("edge not present in grid");
        *it = list.back();
        list.pop_back();
    };
    if (static_cast<int64_t>(cells.size()) > long_threshold_) {
        drop(long_edges_);
    } else {
        for (int32_t cell : cells) drop(cell_edges_[static_cast<size_t>(cell)]);
    }
    --edge_count_;
}

bool EdgeGrid::interacts_in_list(const Segment& s, const std::vector<uint64_t>& list,
                                 std::span<const uint64_t> skip) const {
    for (uint64_t key : list) {
        if (std::find(skip.begin(), skip.end(), key) != skip.end()) continue;
        if (segments_properly_interact(s, segment_of(key))) return true;
    }
    return false;
}

// Existence query, so visiting a superset of the segment's true cells is
// sound: extra cells can only surface genuine interactions of stored edges.
// Cell lists go first: most negative queries die there, keeping the always
// scanned long list off the common path.
bool EdgeGrid::any_interaction(const Segment& s, std::span<const uint64_t> skip) const {
    const int64_t row_lo =
        std::max<int64_t>(0, clamp_div(std::min(s.a.y, s.b.y) - min_y_, cell_size_, cols_) - 1);
    const int64_t row_hi =
        std::min<int64_t>(cols_ - 1, clamp_div(std::max(s.a.y, s.b.y) - min_y_, cell_size_, cols_) + 1);
    const int64_t col_lo =
        std::max<int64_t>(0, clamp_div(std::min(s.a.x, s.b.x) - min_x_, cell_size_, cols_) - 1);
    const int64_t col_hi =
        std::min<int64_t>(cols_ - 1, clamp_div(std::max(s.a.x, s.b.x) - min_x_, cell_size_, cols_) + 1);

    if ((row_hi - row_lo + 1) * (col_hi - col_lo + 1) <= 16 || s.a.y == s.b.y) {
        for (int64_t r = row_lo; r <= row_hi; ++r)
            for (int64_t c = col_lo; c <= col_hi; ++c)
                if (interacts_in_list(s, cell_edges_[static_cast<size_t>(r * cols_ + c)], skip))
                    return true;
        return interacts_in_list(s, long_edges_, skip);
    }

    // Large boxes: restrict each row to the columns the segment can reach
    // there. The interpolation is double-based but padded by a full cell on
    // every side, which swallows the rounding error by orders of magnitude.
    const double ax = static_cast<double>(s.a.x), ay = static_cast<double>(s.a.y);
    const double bx = static_cast<double>(s.b.x), by = static_cast<double>(s.b.y);
    const double inv_dy = 1.0 / (by - ay);
    for (int64_t r = row_lo; r <= row_hi; ++r) {
        const double band0 =
            static_cast<double>(min_y_ + r * cell_size_) - static_cast<double>(cell_size_);
        const double band1 = band0 + 3.0 * static_cast<double>(cell_size_);
        double t0 = (band0 - ay) * inv_dy;
        double t1 = (band1 - ay) * inv_dy;
        if (t0 > t1) std::swap(t0, t1);
        t0 = std::max(t0, 0.0);
        t1 = std::min(t1, 1.0);
        if (t0 > t1) continue;
        const double x0 = ax + t0 * (bx - ax);
        const double x1 = ax + t1 * (bx - ax);
        const auto xlo = static_cast<int64_t>(std::floor(std::min(x0, x1)));
        const auto xhi = static_cast<int64_t>(std::ceil(std::max(x0, x1)));
        const int64_t clo = std::max(col_lo, clamp_div(xlo - min_x_, cell_size_, cols_) - 1);
        const int64_t chi = std::min(col_hi, clamp_div(xhi - min_x_, cell_size_, cols_) + 1);
        for (int64_t c = clo; c <= chi; ++c)
            if (interacts_in_list(s, cell_edges_[static_cast<size_t>(r * cols_ + c)], skip))
                return true;
    }
    return interacts_in_list(s, long_edges_, skip);
}

std::vector<int32_t> EdgeGrid::candidate_points(const Segment& s, int32_t hood) const {
    std::vector<int32_t> out;
    if (hood == kHoodInfinite) {
        out.resize(static_cast<size_t>(inst_->size()));
        for (int32_t i = 0; i < inst_->size(); ++i) out[static_cast<size_t>(i)] = i;
        return out;
    }

    std::vector<char> seen(static_cast<size_t>(cell_count()), 0);
    for (int32_t cell : cells_of(s)) {
        const int64_t col = cell % cols_;
        const int64_t row = cell / cols_;
        const int64_t clo = std::max<int64_t>(0, col - hood);
        const int64_t chi = std::min<int64_t>(cols_ - 1, col + hood);
        const int64_t rlo = std::max<int64_t>(0, row - hood);
        const int64_t rhi = std::min<int64_t>(cols_ - 1, row + hood);
        for (int64_t r = rlo; r <= rhi; ++r)
            for (int64_t c = clo; c <= chi; ++c) {
                const auto idx = static_cast<size_t>(r * cols_ + c);
                if (seen[idx]) continue;
                seen[idx] = 1;
                const auto& bin = cell_points_[idx];
                out.insert(out.end(), bin.begin(), bin.end());
            }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace polyarea
