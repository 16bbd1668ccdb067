#include "polyarea/greedy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

namespace polyarea {

double insertion_weight(const Point& p1, const Point& p2, const Point& q, double alpha,
                        WeightVariant variant) {
    const double area_term = 0.5 * static_cast<double>(signed_area2(p1, p2, q));
    double penalty = dist(q, p1) + dist(q, p2);
    if (variant == WeightVariant::kMinus) penalty -= dist(p1, p2);
    return area_term + alpha * penalty;
}

namespace {

using Dist2 = __int128;

Dist2 dist2(const Point& a, const Point& b) {
    const Dist2 dx = a.x - b.x;
    const Dist2 dy = a.y - b.y;
    return dx * dx + dy * dy;
}

// Visits the clipped Chebyshev ring of cell-radius r around (c0, r0).
template <typename Fn>
void for_each_ring_cell(int32_t cols, int32_t c0, int32_t r0, int32_t r, Fn&& fn) {
    const int32_t clo = std::max(0, c0 - r), chi = std::min(cols - 1, c0 + r);
    const int32_t rlo = std::max(0, r0 - r), rhi = std::min(cols - 1, r0 + r);
    for (int32_t row = rlo; row <= rhi; ++row) {
        const bool edge_row = row == r0 - r || row == r0 + r;
        for (int32_t col = clo; col <= chi; ++col) {
            if (!edge_row && col != c0 - r && col != c0 + r) continue;
            fn(row * cols + col);
        }
    }
}

int32_t max_ring(int32_t cols, int32_t c0, int32_t r0) {
    return std::max({c0, cols - 1 - c0, r0, cols - 1 - r0});
}

}  // namespace

int32_t nearest_neighbor(const Instance& inst, const EdgeGrid& grid, int32_t id) {
    const Point& p = inst.point(id);
    const int32_t cols = grid.columns();
    const int64_t cs = grid.cell_size();
    const int32_t cell = grid.point_cell(p);
    const int32_t c0 = cell % cols, r0 = cell / cols;

    int32_t best = -1;
    Dist2 best_d2 = 0;
    const int32_t rings = max_ring(cols, c0, r0);
    for (int32_t r = 0; r <= rings; ++r) {
        if (best >= 0 && r >= 2) {
            // Points in ring r are at least (r-1) cell widths away.
            const Dist2 lo = static_cast<Dist2>(r - 1) * cs;
            if (lo * lo > best_d2) break;
        }
        for_each_ring_cell(cols, c0, r0, r, [&](int32_t c) {
            for (int32_t q : grid.cell_points(c)) {
                if (q == id) continue;
                const Dist2 d2 = dist2(p, inst.point(q));
                if (best < 0 || d2 < best_d2 || (d2 == best_d2 && q < best)) {
                    best_d2 = d2;
                    best = q;
                }
            }
        });
    }
    return best;
}

namespace {

// Third seed vertex: minimizes dist(p1,q) + dist(p2,q) over non-collinear q.
int32_t third_point(const Instance& inst, const EdgeGrid& grid, int32_t p1, int32_t p2) {
    const Point& a = inst.point(p1);
    const Point& b = inst.point(p2);
    const Point mid{(a.x + b.x) / 2, (a.y + b.y) / 2, -1};
    const int32_t cols = grid.columns();
    const int64_t cs = grid.cell_size();
    const int32_t cell = grid.point_cell(mid);
    const int32_t c0 = cell % cols, r0 = cell / cols;

    int32_t best = -1;
    double best_s = std::numeric_limits<double>::infinity();
    const int32_t rings = max_ring(cols, c0, r0);
    for (int32_t r = 0; r <= rings; ++r) {
        // d(q, mid) >= (r-1)*cs - 2 (integer midpoint slack), d1 + d2 >= 2 d(q, mid).
        if (best >= 0 && r >= 2 && 2.0 * (static_cast<double>(r - 1) * static_cast<double>(cs) - 2.0) > best_s)
            break;
        for_each_ring_cell(cols, c0, r0, r, [&](int32_t c) {
            for (int32_t q : grid.cell_points(c)) {
                if (q == p1 || q == p2) continue;
                const Point& pq = inst.point(q);
                if (orientation(a, b, pq) == 0) continue;
                const double s = dist(a, pq) + dist(b, pq);
                if (s < best_s || (s == best_s && q < best)) {
                    best_s = s;
                    best = q;
                }
            }
        });
    }
    return best;
}

}  // namespace

std::vector<std::array<int32_t, 3>> init_min_triangles(const Instance& inst) {
    const EdgeGrid grid(inst);
    std::set<std::array<int32_t, 3>> seen;
    std::vector<std::pair<double, std::array<int32_t, 3>>> scored;
    for (int32_t p1 = 0; p1 < inst.size(); ++p1) {
        const int32_t p2 = nearest_neighbor(inst, grid, p1);
        if (p2 < 0) continue;
        const int32_t p3 = third_point(inst, grid, p1, p2);
        if (p3 < 0) continue;
        std::array<int32_t, 3> key{p1, p2, p3};
        std::sort(key.begin(), key.end());
        if (!seen.insert(key).second) continue;
        const Point& a = inst.point(p1);
        const Point& b = inst.point(p2);
        const Point& c = inst.point(p3);
        scored.emplace_back(dist(a, b) + dist(b, c) + dist(c, a), key);
    }
    std::sort(scored.begin(), scored.end());
    std::vector<std::array<int32_t, 3>> out;
    out.reserve(scored.size());
    for (const auto& [per, key] : scored) out.push_back(key);
    return out;
}

namespace {

struct TripleGreater {
    bool operator()(const auto& a, const auto& b) const {
        if (a.w != b.w) return a.w > b.w;
        return a.q > b.q;
    }
};

}  // namespace

bool operator>(const GreedySolver::TopEntry& a, const GreedySolver::TopEntry& b) {
    if (a.w != b.w) return a.w > b.w;
    if (a.q != b.q) return a.q > b.q;
    return a.origin > b.origin;
}

GreedySolver::GreedySolver(const Instance& inst, const SolveParams& params, uint64_t seed)
    : inst_(&inst),
      params_(params),
      hood_(effective_hood(params, inst.size())),
      rng_(seed),
      grid_(inst),
      next_(static_cast<size_t>(inst.size()), -1),
      prev_(static_cast<size_t>(inst.size()), -1),
      in_poly_(static_cast<size_t>(inst.size()), 0),
      edges_(static_cast<size_t>(inst.size())) {}

void GreedySolver::start_from_hull() {
    init_cycle(convex_hull(inst_->points));
}

void GreedySolver::start_from_triangle(std::array<int32_t, 3> tri) {
    const Point& a = inst_->point(tri[0]);
    const Point& b = inst_->point(tri[1]);
    const Point& c = inst_->point(tri[2]);
    const int64_t a2 = signed_area2(a, b, c);
    if (a2 == 0) throw std::invalid_argument("degenerate seed triangle");
    if (a2 > 0) std::swap(tri[1], tri[2]);  // clockwise start for the min objective
    init_cycle({tri[0], tri[1], tri[2]});
}

void GreedySolver::init_cycle(const std::vector<int32_t>& ids) {
    anchor_ = ids[0];
    for (size_t i = 0; i < ids.size(); ++i) {
        const int32_t a = ids[i];
        const int32_t b = ids[(i + 1) % ids.size()];
        next_[static_cast<size_t>(a)] = b;
        prev_[static_cast<size_t>(b)] = a;
        in_poly_[static_cast<size_t>(a)] = 1;
    }
    area2_ = Polygon::shoelace(*inst_, ids);
    remaining_ = inst_->size() - static_cast<int32_t>(ids.size());
    for (int32_t a : ids) grid_.add_edge(a, next_[static_cast<size_t>(a)]);
    for (int32_t a : ids) build_edge_heap(a);
}

void GreedySolver::build_edge_heap(int32_t origin) {
    EdgeHeap& eh = edges_[static_cast<size_t>(origin)];
    eh.heap.clear();
    ++eh.gen;
    const int32_t p2 = next_[static_cast<size_t>(origin)];
    const Point& a = inst_->point(origin);
    const Point& b = inst_->point(p2);
    const bool min_mode = params_.objective == Objective::kMin;
    for (int32_t q : grid_.candidate_points({a, b}, hood_)) {
        if (in_poly_[static_cast<size_t>(q)]) continue;
        const Point& pq = inst_->point(q);
        // Min objective accepts only insertions that grow the enclosed area.
        if (min_mode && signed_area2(a, pq, b) >= 0) continue;
        double w = insertion_weight(a, b, pq, params_.alpha, params_.weight_variant);
        if (params_.sigma > 0) w *= 1.0 + std::abs(rng_.next_gaussian(params_.sigma));
        eh.heap.push_back({w, q});
    }
    std::make_heap(eh.heap.begin(), eh.heap.end(), TripleGreater{});
    if (!eh.heap.empty()) {
        top_.push_back({eh.heap.front().w, eh.heap.front().q, origin, eh.gen});
        std::push_heap(top_.begin(), top_.end(), std::greater<>{});
    }
}

void GreedySolver::consume_top(int32_t origin) {
    EdgeHeap& eh = edges_[static_cast<size_t>(origin)];
    std::pop_heap(eh.heap.begin(), eh.heap.end(), TripleGreater{});
    eh.heap.pop_back();
    ++stats_.consumed;
    if (!eh.heap.empty()) {
        top_.push_back({eh.heap.front().w, eh.heap.front().q, origin, eh.gen});
        std::push_heap(top_.begin(), top_.end(), std::greater<>{});
    }
}

bool GreedySolver::insertion_valid(int32_t p1, int32_t p2, int32_t q) const {
    const Segment e1{inst_->point(p1), inst_->point(q)};
    const Segment e2{inst_->point(q), inst_->point(p2)};
    if (segments_properly_interact(e1, e2)) return false;
    const uint64_t skip[1] = {EdgeGrid::edge_key(p1, p2)};
    return !grid_.any_interaction(e1, skip) && !grid_.any_interaction(e2, skip);
}

GreedySolver::StepResult GreedySolver::step() {
    while (!top_.empty()) {
        std::pop_heap(top_.begin(), top_.end(), std::greater<>{});
        const TopEntry e = top_.back();
        top_.pop_back();
        ++stats_.pops;
        const EdgeHeap& eh = edges_[static_cast<size_t>(e.origin)];
        if (e.gen != eh.gen || eh.heap.empty()) continue;           // edge replaced
        if (eh.heap.front().w != e.w || eh.heap.front().q != e.q) continue;  // superseded

        const int32_t p1 = e.origin;
        const int32_t p2 = next_[static_cast<size_t>(p1)];
        const int32_t q = e.q;
        if (in_poly_[static_cast<size_t>(q)] || !insertion_valid(p1, p2, q)) {
            consume_top(p1);
            continue;
        }

        grid_.remove_edge(p1, p2);
        grid_.add_edge(p1, q);
        grid_.add_edge(q, p2);
        next_[static_cast<size_t>(p1)] = q;
        prev_[static_cast<size_t>(q)] = p1;
        next_[static_cast<size_t>(q)] = p2;
        prev_[static_cast<size_t>(p2)] = q;
        in_poly_[static_cast<size_t>(q)] = 1;
        area2_ += signed_area2(inst_->point(p1), inst_->point(q), inst_->point(p2));
        --remaining_;
        ++stats_.insertions;
        build_edge_heap(p1);
        build_edge_heap(q);
        return {true, q, p1, e.w};
    }
    return {};
}

bool GreedySolver::run() {
    while (!complete())
        if (!step().inserted) return false;
    return true;
}

Polygon GreedySolver::polygon() const {
    std::vector<int32_t> ids;
    ids.reserve(static_cast<size_t>(inst_->size() - remaining_));
    int32_t v = anchor_;
    do {
        ids.push_back(v);
        v = next_[static_cast<size_t>(v)];
    } while (v != anchor_);
    Polygon p = Polygon::from_ids(*inst_, std::move(ids));
    p.rotate_lowest_first();
    return p;
}

GreedyResult run_greedy(const Instance& inst, const SolveParams& params) {
    GreedyResult result;
    try {
        convex_hull(inst.points);
    } catch (const std::invalid_argument& e) {
        result.failure_reason = e.what();
        return result;
    }

    std::vector<std::array<int32_t, 3>> triangles;
    if (params.objective == Objective::kMin) {
        triangles = init_min_triangles(inst);
        if (triangles.size() > static_cast<size_t>(params.start_triangles))
            triangles.resize(static_cast<size_t>(params.start_triangles));
        if (triangles.empty()) {
            result.failure_reason = "no non-degenerate seed triangle";
            return result;
        }
    }

    struct Attempt {
        double alpha;
        double sigma;
        uint64_t seed;
    };
    std::vector<Attempt> ladder;
    ladder.push_back({params.alpha, params.sigma, params.seed});
    for (double f : {1.0 / 3.0, 3.0, 1.0 / 9.0, 9.0})
        ladder.push_back({params.alpha * f, params.sigma, params.seed});
    for (int k = 0; k < 5; ++k)
        ladder.push_back({params.alpha, 0.3,
                          derive_seed(params.seed, 1000 + static_cast<uint64_t>(k))});

    int32_t attempts = 0;
    for (const Attempt& att : ladder) {
        ++attempts;
        SolveParams p = params;
        p.alpha = att.alpha;
        p.sigma = att.sigma;
        bool found = false;
        if (params.objective == Objective::kMax) {
            GreedySolver solver(inst, p, att.seed);
            solver.start_from_hull();
            if (solver.run()) {
                result.polygon = solver.polygon();
                result.stats = solver.stats();
                found = true;
            }
        } else {
            Area2 best_a2 = 0;
            for (size_t ti = 0; ti < triangles.size(); ++ti) {
                GreedySolver solver(inst, p, derive_seed(att.seed, ti));
                solver.start_from_triangle(triangles[ti]);
                if (!solver.run()) continue;
                if (!found || solver.area2() > best_a2) {
                    best_a2 = solver.area2();
                    result.polygon = solver.polygon();
                    result.stats = solver.stats();
                    found = true;
                }
            }
        }
        if (found) {
            result.success = true;
            result.stats.attempts = attempts;
            result.stats.alpha_used = att.alpha;
            result.stats.sigma_used = att.sigma;
            return result;
        }
    }
    result.stats.attempts = attempts;
    result.failure_reason = "greedy insertion exhausted all retry attempts";
    return result;
}

}  // namespace polyarea
