#include "polyarea/merge.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace polyarea {

namespace {

Area2 cross_term(const Point& a, const Point& b) {
    return static_cast<Area2>(a.x) * b.y - static_cast<Area2>(a.y) * b.x;
}

bool box_degenerate(const Instance& inst, const std::vector<int32_t>& ids) {
    if (ids.size() < 3) return true;
    const Point& a = inst.point(ids[0]);
    const Point& b = inst.point(ids[1]);
    for (size_t i = 2; i < ids.size(); ++i)
        if (orientation(a, b, inst.point(ids[i])) != 0) return false;
    return true;
}

struct PairCand {
    Area2 q2;
    int32_t ei, ej;
};

// Heap "less": worse candidates sink; best = max q2, then min ei, min ej.
struct CandWorse {
    bool operator()(const PairCand& a, const PairCand& b) const {
        if (a.q2 != b.q2) return a.q2 < b.q2;
        if (a.ei != b.ei) return a.ei > b.ei;
        return a.ej > b.ej;
    }
};

using EdgeList = std::vector<std::pair<int32_t, int32_t>>;

// Best bridge between two directed edge lists, validated against the given
// grid. The replaced pair is skipped; everything else blocks.
std::optional<Bridge> best_bridge_between(const EdgeList& ea, const EdgeList& eb,
                                          const Instance& inst, const EdgeGrid& grid) {
    std::vector<PairCand> cands;
    cands.reserve(ea.size() * eb.size());
    std::vector<Area2> cb(eb.size());
    for (size_t j = 0; j < eb.size(); ++j)
        cb[j] = cross_term(inst.point(eb[j].first), inst.point(eb[j].second));
    for (size_t i = 0; i < ea.size(); ++i) {
        const Point& a1 = inst.point(ea[i].first);
        const Point& b1 = inst.point(ea[i].second);
        const Area2 ca = cross_term(a1, b1);
        for (size_t j = 0; j < eb.size(); ++j) {
            const Point& a2 = inst.point(eb[j].first);
            const Point& b2 = inst.point(eb[j].second);
            const Area2 q2 = cross_term(a1, b2) + cross_term(a2, b1) - ca - cb[j];
            cands.push_back({q2, static_cast<int32_t>(i), static_cast<int32_t>(j)});
        }
    }
    std::make_heap(cands.begin(), cands.end(), CandWorse{});
    while (!cands.empty()) {
        std::pop_heap(cands.begin(), cands.end(), CandWorse{});
        const PairCand c = cands.back();
        cands.pop_back();
        const auto [a1, b1] = ea[static_cast<size_t>(c.ei)];
        const auto [a2, b2] = eb[static_cast<size_t>(c.ej)];
        const Segment c1{inst.point(a1), inst.point(b2)};
        const Segment c2{inst.point(a2), inst.point(b1)};
        if (segments_properly_interact(c1, c2)) continue;
        const uint64_t skip[2] = {EdgeGrid::edge_key(a1, b1), EdgeGrid::edge_key(a2, b2)};
        if (grid.any_interaction(c1, skip) || grid.any_interaction(c2, skip)) continue;
        Bridge out;
        out.a1 = a1;
        out.b1 = b1;
        out.a2 = a2;
        out.b2 = b2;
        out.q2 = c.q2;
        return out;
    }
    return std::nullopt;
}

EdgeList polygon_edges(const Polygon& poly) {
    EdgeList edges;
    edges.reserve(static_cast<size_t>(poly.size()));
    for (int32_t i = 0; i < poly.size(); ++i) edges.push_back(poly.edge(i));
    return edges;
}

struct Dsu {
    std::vector<int32_t> parent;
    explicit Dsu(int32_t n) : parent(static_cast<size_t>(n)) {
        for (int32_t i = 0; i < n; ++i) parent[static_cast<size_t>(i)] = i;
    }
    int32_t find(int32_t x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    }
    void unite(int32_t a, int32_t b) { parent[static_cast<size_t>(find(a))] = find(b); }
};

}  // namespace

Partition partition_solve(const Instance& inst, const SolveParams& params, int32_t dim) {
    if (dim < 1) throw std::invalid_argument("partition dimension must be positive");
    Partition part;
    part.dim = dim;

    int64_t min_x = inst.points[0].x, max_x = min_x;
    int64_t min_y = inst.points[0].y, max_y = min_y;
    for (const Point& p : inst.points) {
        min_x = std::min(min_x, p.x);
        max_x = std::max(max_x, p.x);
        min_y = std::min(min_y, p.y);
        max_y = std::max(max_y, p.y);
    }
    const int64_t wx = max_x - min_x + 1;
    const int64_t wy = max_y - min_y + 1;
    const int64_t csx = (wx + dim - 1) / dim;
    const int64_t csy = (wy + dim - 1) / dim;

    const int32_t boxes = dim * dim;
    std::vector<std::vector<int32_t>> box_points(static_cast<size_t>(boxes));
    for (const Point& p : inst.points) {
        const int64_t col = (p.x - min_x) / csx;
        const int64_t row = (p.y - min_y) / csy;
        box_points[static_cast<size_t>(row * dim + col)].push_back(p.id);
    }

    part.unit_of_cell.assign(static_cast<size_t>(boxes), -1);
    std::vector<int32_t> pending;  // occupied boxes without a host unit yet
    for (int32_t b = 0; b < boxes; ++b) {
        if (box_points[static_cast<size_t>(b)].empty()) continue;
        if (box_degenerate(inst, box_points[static_cast<size_t>(b)])) {
            pending.push_back(b);
            continue;
        }
        part.unit_of_cell[static_cast<size_t>(b)] = static_cast<int32_t>(part.units.size());
        MergeUnit unit;
        unit.cells.push_back(b);
        unit.point_ids = box_points[static_cast<size_t>(b)];
        part.units.push_back(std::move(unit));
    }

    if (part.units.empty()) {
        // Nothing partitions cleanly; treat the whole instance as one unit.
        part.unit_of_cell.assign(static_cast<size_t>(boxes), 0);
        MergeUnit unit;
        for (int32_t b = 0; b < boxes; ++b) unit.cells.push_back(b);
        unit.point_ids.resize(inst.points.size());
        for (int32_t i = 0; i < inst.size(); ++i) unit.point_ids[static_cast<size_t>(i)] = i;
        part.units.clear();
        part.units.push_back(std::move(unit));
        pending.clear();
    }

    // Fold degenerate boxes into orthogonally adjacent units; anything still
    // stranded goes to the unit with the nearest centroid.
    auto absorb = [&](int32_t box, int32_t unit) {
        part.unit_of_cell[static_cast<size_t>(box)] = unit;
        MergeUnit& u = part.units[static_cast<size_t>(unit)];
        u.cells.push_back(box);
        const auto& pts = box_points[static_cast<size_t>(box)];
        u.point_ids.insert(u.point_ids.end(), pts.begin(), pts.end());
    };
    bool changed = true;
    while (changed && !pending.empty()) {
        changed = false;
        std::vector<int32_t> still;
        for (int32_t b : pending) {
            const int32_t col = b % dim, row = b / dim;
            int32_t host = -1;
            auto consider = [&](int32_t nb) {
                const int32_t u = part.unit_of_cell[static_cast<size_t>(nb)];
                if (u >= 0 && (host < 0 || u < host)) host = u;
            };
            if (col > 0) consider(b - 1);
            if (col + 1 < dim) consider(b + 1);
            if (row > 0) consider(b - dim);
            if (row + 1 < dim) consider(b + dim);
            if (host >= 0) {
                absorb(b, host);
                changed = true;
            } else {
                still.push_back(b);
            }
        }
        pending = std::move(still);
    }
    for (int32_t b : pending) {
        double bx = 0, by = 0;
        for (int32_t id : box_points[static_cast<size_t>(b)]) {
            bx += static_cast<double>(inst.point(id).x);
            by += static_cast<double>(inst.point(id).y);
        }
        bx /= static_cast<double>(box_points[static_cast<size_t>(b)].size());
        by /= static_cast<double>(box_points[static_cast<size_t>(b)].size());
        int32_t host = -1;
        double host_d = 0;
        for (size_t u = 0; u < part.units.size(); ++u) {
            double ux = 0, uy = 0;
            for (int32_t id : part.units[u].point_ids) {
                ux += static_cast<double>(inst.point(id).x);
                uy += static_cast<double>(inst.point(id).y);
            }
            ux /= static_cast<double>(part.units[u].point_ids.size());
            uy /= static_cast<double>(part.units[u].point_ids.size());
            const double d = (ux - bx) * (ux - bx) + (uy - by) * (uy - by);
            if (host < 0 || d < host_d) {
                host = static_cast<int32_t>(u);
                host_d = d;
            }
        }
        absorb(b, host);
    }

    // Solve each unit over its own sub-instance, then map ids back.
    for (size_t u = 0; u < part.units.size(); ++u) {
        MergeUnit& unit = part.units[u];
        std::sort(unit.point_ids.begin(), unit.point_ids.end());
        std::sort(unit.cells.begin(), unit.cells.end());
        std::vector<Point> pts;
        pts.reserve(unit.point_ids.size());
        for (size_t i = 0; i < unit.point_ids.size(); ++i) {
            Point p = inst.point(unit.point_ids[i]);
            p.id = static_cast<int32_t>(i);
            pts.push_back(p);
        }
        const Instance sub =
            make_instance(inst.name + "#u" + std::to_string(u), std::move(pts));
        SolveParams p = params;
        p.restarts = 1;
        p.dnc_grid = 0;
        p.dnc_threshold = std::numeric_limits<int64_t>::max();
        p.seed = derive_seed(params.seed, 0xD17Cull + u);
        const SolveResult res = solve_single(sub, p);
        part.greedy_seconds += res.timings.greedy_seconds;
        part.local_search_seconds += res.timings.local_search_seconds;
        if (!res.success)
            throw std::runtime_error("partition unit " + std::to_string(u) +
                                     " failed: " + res.failure_reason);
        std::vector<int32_t> ids;
        ids.reserve(static_cast<size_t>(res.polygon.size()));
        for (int32_t v : res.polygon.vertices())
            ids.push_back(unit.point_ids[static_cast<size_t>(v)]);
        unit.polygon = Polygon::from_ids(inst, std::move(ids));
        unit.polygon.rotate_lowest_first();
    }
    return part;
}

std::optional<Bridge> best_bridge(const Polygon& pa, const Polygon& pb, const Instance& inst) {
    EdgeGrid grid(inst);
    for (int32_t i = 0; i < pa.size(); ++i) {
        const auto [a, b] = pa.edge(i);
        grid.add_edge(a, b);
    }
    for (int32_t i = 0; i < pb.size(); ++i) {
        const auto [a, b] = pb.edge(i);
        grid.add_edge(a, b);
    }
    return best_bridge_between(polygon_edges(pa), polygon_edges(pb), inst, grid);
}

MergeOutcome merge_units(const Partition& part, const Instance& inst,
                         const SolveParams& params) {
    (void)params;
    MergeOutcome out;
    const int32_t nu = static_cast<int32_t>(part.units.size());
    for (const MergeUnit& u : part.units) out.units_area2_sum += u.polygon.doubled_area();

    if (nu == 1) {
        out.polygon = part.units[0].polygon;
        out.success = is_simple_grid(out.polygon, inst) && uses_all_points(out.polygon, inst);
        if (!out.success) out.failure_reason = "single unit failed verification";
        return out;
    }

    EdgeGrid grid(inst);
    for (const MergeUnit& u : part.units)
        for (int32_t i = 0; i < u.polygon.size(); ++i) {
            const auto [a, b] = u.polygon.edge(i);
            grid.add_edge(a, b);
        }

    // Adjacent unit pairs in row-major box order, right then down.
    std::vector<std::pair<int32_t, int32_t>> pairs;
    std::vector<char> pair_seen(static_cast<size_t>(nu) * static_cast<size_t>(nu), 0);
    const int32_t dim = part.dim;
    for (int32_t b = 0; b < dim * dim; ++b) {
        const int32_t u = part.unit_of_cell[static_cast<size_t>(b)];
        if (u < 0) continue;
        const int32_t col = b % dim, row = b / dim;
        for (int32_t nb : {col + 1 < dim ? b + 1 : -1, row + 1 < dim ? b + dim : -1}) {
            if (nb < 0) continue;
            const int32_t v = part.unit_of_cell[static_cast<size_t>(nb)];
            if (v < 0 || v == u) continue;
            const int32_t lo = std::min(u, v), hi = std::max(u, v);
            const size_t key = static_cast<size_t>(lo) * static_cast<size_t>(nu) +
                               static_cast<size_t>(hi);
            if (pair_seen[key]) continue;
            pair_seen[key] = 1;
            pairs.emplace_back(lo, hi);
        }
    }

    std::vector<EdgeList> unit_edges(static_cast<size_t>(nu));
    for (int32_t u = 0; u < nu; ++u)
        unit_edges[static_cast<size_t>(u)] = polygon_edges(part.units[static_cast<size_t>(u)].polygon);

    for (const auto& [ua, ub] : pairs) {
        std::optional<Bridge> b = best_bridge_between(unit_edges[static_cast<size_t>(ua)],
                                                      unit_edges[static_cast<size_t>(ub)],
                                                      inst, grid);
        if (!b) continue;
        b->unit_a = ua;
        b->unit_b = ub;
        // Later bridges must steer clear of this one's connectors.
        grid.add_edge(b->a1, b->b2);
        grid.add_edge(b->a2, b->b1);
        out.graph.push_back(*b);
    }

    // Prim from unit 0; ties resolved by graph order.
    std::vector<char> in_tree(static_cast<size_t>(nu), 0);
    in_tree[0] = 1;
    std::vector<int32_t> tree_idx;
    for (int32_t step = 1; step < nu; ++step) {
        int32_t pick = -1;
        for (size_t g = 0; g < out.graph.size(); ++g) {
            const Bridge& br = out.graph[g];
            if (in_tree[static_cast<size_t>(br.unit_a)] ==
                in_tree[static_cast<size_t>(br.unit_b)])
                continue;
            if (pick < 0 || -br.q2 < -out.graph[static_cast<size_t>(pick)].q2)
                pick = static_cast<int32_t>(g);
        }
        if (pick < 0) {
            out.failure_reason = "bridge graph is disconnected";
            return out;
        }
        const Bridge& br = out.graph[static_cast<size_t>(pick)];
        in_tree[static_cast<size_t>(br.unit_a)] = 1;
        in_tree[static_cast<size_t>(br.unit_b)] = 1;
        out.tree_weight += -br.q2;
        tree_idx.push_back(pick);
    }

    // Non-tree bridges release their connectors before splicing begins.
    {
        std::vector<char> chosen(out.graph.size(), 0);
        for (int32_t g : tree_idx) chosen[static_cast<size_t>(g)] = 1;
        for (size_t g = 0; g < out.graph.size(); ++g) {
            if (chosen[g]) continue;
            grid.remove_edge(out.graph[g].a1, out.graph[g].b2);
            grid.remove_edge(out.graph[g].a2, out.graph[g].b1);
        }
    }

    // Cycles as one big successor map; splice tree bridges in order.
    std::vector<int32_t> next(inst.points.size(), -1), prev(inst.points.size(), -1);
    for (const MergeUnit& u : part.units)
        for (int32_t i = 0; i < u.polygon.size(); ++i) {
            const auto [a, b] = u.polygon.edge(i);
            next[static_cast<size_t>(a)] = b;
            prev[static_cast<size_t>(b)] = a;
        }
    Dsu dsu(nu);
    std::vector<int32_t> cycle_anchor(static_cast<size_t>(nu));
    for (int32_t u = 0; u < nu; ++u)
        cycle_anchor[static_cast<size_t>(u)] = part.units[static_cast<size_t>(u)].polygon.vertex(0);

    auto edges_of_cycle = [&](int32_t anchor) {
        EdgeList edges;
        int32_t v = anchor;
        do {
            edges.emplace_back(v, next[static_cast<size_t>(v)]);
            v = next[static_cast<size_t>(v)];
        } while (v != anchor);
        return edges;
    };

    for (int32_t g : tree_idx) {
        Bridge br = out.graph[static_cast<size_t>(g)];
        const bool intact = next[static_cast<size_t>(br.a1)] == br.b1 &&
                            next[static_cast<size_t>(br.a2)] == br.b2;
        if (!intact) {
            // An earlier splice consumed an endpoint edge; rebuild this
            // bridge between the two cycles as they are now.
            grid.remove_edge(br.a1, br.b2);
            grid.remove_edge(br.a2, br.b1);
            const int32_t ra = dsu.find(br.unit_a);
            const int32_t rb = dsu.find(br.unit_b);
            const EdgeList ea = edges_of_cycle(cycle_anchor[static_cast<size_t>(ra)]);
            const EdgeList eb = edges_of_cycle(cycle_anchor[static_cast<size_t>(rb)]);
            std::optional<Bridge> nb = best_bridge_between(ea, eb, inst, grid);
            if (!nb) {
                out.failure_reason = "bridge repair found no valid replacement";
                return out;
            }
            nb->unit_a = br.unit_a;
            nb->unit_b = br.unit_b;
            br = *nb;
            grid.add_edge(br.a1, br.b2);
            grid.add_edge(br.a2, br.b1);
        }
        next[static_cast<size_t>(br.a1)] = br.b2;
        prev[static_cast<size_t>(br.b2)] = br.a1;
        next[static_cast<size_t>(br.a2)] = br.b1;
        prev[static_cast<size_t>(br.b1)] = br.a2;
        const int32_t ra = dsu.find(br.unit_a);
        const int32_t rb = dsu.find(br.unit_b);
        dsu.unite(ra, rb);
        cycle_anchor[static_cast<size_t>(dsu.find(rb))] = br.a1;
        out.accepted.push_back(br);
    }

    std::vector<int32_t> ids;
    ids.reserve(inst.points.size());
    int32_t v = 0;
    do {
        ids.push_back(v);
        v = next[static_cast<size_t>(v)];
        if (ids.size() > inst.points.size()) break;
    } while (v != 0);
    if (ids.size() != inst.points.size()) {
        out.failure_reason = "merged cycle does not cover all points";
        return out;
    }
    out.polygon = Polygon::from_ids(inst, std::move(ids));
    out.polygon.rotate_lowest_first();
    out.success = is_simple_grid(out.polygon, inst) && uses_all_points(out.polygon, inst);
    if (!out.success) out.failure_reason = "merged polygon failed verification";
    return out;
}

DncResult solve_divide_and_conquer(const Instance& inst, const SolveParams& params,
                                   int32_t dim) {
    using Clock = std::chrono::steady_clock;
    DncResult out;
    try {
        out.partition = partition_solve(inst, params, dim);
    } catch (const std::exception& e) {
        out.solve.failure_reason = e.what();
        return out;
    }
    out.solve.timings.greedy_seconds = out.partition.greedy_seconds;
    out.solve.timings.local_search_seconds = out.partition.local_search_seconds;

    const auto t0 = Clock::now();
    out.merge = merge_units(out.partition, inst, params);
    out.solve.timings.merge_seconds =
        std::chrono::duration<double>(Clock::now() - t0).count();
    if (!out.merge.success) {
        out.solve.failure_reason = "merge failed: " + out.merge.failure_reason;
        return out;
    }
    out.solve.polygon = out.merge.polygon;
    out.solve.report = score_polygon(out.solve.polygon, inst);
    out.solve.greedy_score = out.solve.report.score;
    out.solve.success = out.solve.report.simple && out.solve.report.uses_all_points;
    if (!out.solve.success) out.solve.failure_reason = "result failed verification";
    return out;
}

}  // namespace polyarea
