#include "polyarea/local_search.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "polyarea/verify.hpp"

namespace polyarea {

namespace {

Area2 cross_term(const Point& a, const Point& b) {
    return static_cast<Area2>(a.x) * b.y - static_cast<Area2>(a.y) * b.x;
}

// Gain of rewiring with explicit endpoint ids; p_int is the shoelace sum
// over the path's internal edges in forward order.
Area2 gain_from_ids(const Instance& inst, int32_t w1, int32_t v1, int32_t vk, int32_t w2,
                    int32_t u1, int32_t u2, Area2 p_int) {
    const Point& pw1 = inst.point(w1);
    const Point& pv1 = inst.point(v1);
    const Point& pvk = inst.point(vk);
    const Point& pw2 = inst.point(w2);
    const Point& pu1 = inst.point(u1);
    const Point& pu2 = inst.point(u2);
    return cross_term(pw1, pw2) - cross_term(pw1, pv1) - cross_term(pvk, pw2) - 2 * p_int +
           cross_term(pu1, pvk) + cross_term(pv1, pu2) - cross_term(pu1, pu2);
}

Area2 path_internal_sum(const Instance& inst, std::span<const int32_t> path) {
    Area2 sum = 0;
    for (size_t t = 0; t + 1 < path.size(); ++t)
        sum += cross_term(inst.point(path[t]), inst.point(path[t + 1]));
    return sum;
}

void check_move_indices(int32_t m, int32_t path_start, int32_t k, int32_t edge_start) {
    if (path_start < 0 || path_start >= m || edge_start < 0 || edge_start >= m)
        throw std::out_of_range("move position out of range");
    if (k < 1 || k > m - 3) throw std::invalid_argument("path length out of range");
    const int32_t off = (edge_start - path_start + m) % m;
    if (off < k || off > m - 2)
        throw std::invalid_argument("target edge touches the path or its neighbors");
}

// Interaction queries dominate here, so the searcher's grid is much finer
// than the default and keeps diagonal edges bucketed instead of long-listed.
int32_t ls_grid_cols(int32_t n) {
    const auto want = static_cast<int32_t>(std::ceil(std::sqrt(2.0 * n)));
    return std::clamp(want, 1, 512);
}

// Rounds driver: linked cycle plus an edge grid kept in sync with it.
class Searcher {
public:
    Searcher(const Instance& inst, const Polygon& poly, const SolveParams& params)
        : inst_(&inst),
          params_(params),
          grid_(inst, ls_grid_cols(inst.size()), ls_grid_cols(inst.size())),
          next_(inst.points.size(), -1),
          prev_(inst.points.size(), -1) {
        m_ = poly.size();
        anchor_ = poly.vertex(0);
        for (int32_t i = 0; i < m_; ++i) {
            const auto [a, b] = poly.edge(i);
            next_[static_cast<size_t>(a)] = b;
            prev_[static_cast<size_t>(b)] = a;
            grid_.add_edge(a, b);
        }
        area2_ = poly.doubled_area();

        int64_t min_x = inst.points[0].x, max_x = min_x;
        int64_t min_y = inst.points[0].y, max_y = min_y;
        for (const Point& p : inst.points) {
            min_x = std::min(min_x, p.x);
            max_x = std::max(max_x, p.x);
            min_y = std::min(min_y, p.y);
            max_y = std::max(max_y, p.y);
        }
        tx_ = min_x / 2 + max_x / 2;
        ty_ = min_y / 2 + max_y / 2;
        max_c_ = 1;
        for (const Point& p : inst.points)
            max_c_ = std::max({max_c_, std::abs(p.x - tx_), std::abs(p.y - ty_)});

        hull2_ = Polygon::shoelace(inst, convex_hull(inst.points));
        if (hull2_ < 0) hull2_ = -hull2_;
    }

    std::vector<Move> collect();
    bool revalidate_and_apply(const Move& mv, Area2& gain_out);

    Area2 area2() const { return area2_; }

    Polygon polygon() const {
        std::vector<int32_t> ids;
        ids.reserve(static_cast<size_t>(m_));
        int32_t v = anchor_;
        do {
            ids.push_back(v);
            v = next_[static_cast<size_t>(v)];
        } while (v != anchor_);
        Polygon p = Polygon::from_ids(*inst_, std::move(ids));
        p.rotate_lowest_first();
        return p;
    }

private:
    template <typename G>
    void enumerate(std::vector<Move>& out);
    template <typename G>
    void finish(int32_t i, int32_t k, int32_t t, Area2 gain, bool interior,
                std::vector<Move>& out);
    template <typename G>
    int strict_pair(int32_t a, int32_t b, int32_t c, int32_t d) const;
    template <int Mode, typename G>
    bool blocked(int32_t cell, int64_t cxa, int64_t cya, int64_t cxb, int64_t cyb, int32_t ia,
                 int32_t ib, int32_t ibase, int32_t klim, int32_t kx) const;
    bool edges_valid(int32_t w1, int32_t v1, int32_t vk, int32_t w2, int32_t u1,
                     int32_t u2) const;
    bool grid_clear(int32_t w1, int32_t v1, int32_t vk, int32_t w2, int32_t u1,
                    int32_t u2) const;

    const Instance* inst_;
    SolveParams params_;
    EdgeGrid grid_;
    std::vector<int32_t> next_, prev_;
    int32_t m_ = 0;
    int32_t anchor_ = 0;
    Area2 area2_ = 0;
    Area2 hull2_ = 0;
    int64_t tx_ = 0, ty_ = 0, max_c_ = 1;

    // Round snapshot, doubled for wrap-free indexing.
    std::vector<int32_t> ids_;
    std::vector<int64_t> px_, py_, cuu_;

    // Flattened per-cell edge copies (translated coordinates) plus each
    // vertex position's cell, rebuilt per round for the local screens.
    // Translated coordinates fit int32 because inputs are capped at 2^30
    // and the translation is to the bounding-box midpoint. q is the
    // snapshot position of the edge's earlier endpoint, so screens can
    // recognize path-vicinity edges by position alone.
    struct BlockSeg {
        int32_t ax, ay, bx, by;
        int32_t a, b, q;
    };
    std::vector<int32_t> blk_off_;
    std::vector<BlockSeg> blk_;
    std::vector<int32_t> vcell_;
};

bool Searcher::grid_clear(int32_t w1, int32_t v1, int32_t vk, int32_t w2, int32_t u1,
                          int32_t u2) const {
    const Segment e1{inst_->point(w1), inst_->point(w2)};
    const Segment e2{inst_->point(u1), inst_->point(vk)};
    const Segment e3{inst_->point(v1), inst_->point(u2)};
    const uint64_t skip[3] = {EdgeGrid::edge_key(w1, v1), EdgeGrid::edge_key(vk, w2),
                              EdgeGrid::edge_key(u1, u2)};
    return !grid_.any_interaction(e2, skip) && !grid_.any_interaction(e3, skip) &&
           !grid_.any_interaction(e1, skip);
}

// Screens the connector (cxa,cya)-(cxb,cyb) against the edges bucketed in
// one cell. Only an unambiguous proper crossing with a surviving edge
// rejects; shared endpoints and zero orientations are left for the exact
// stages. The modes differ in how they treat edges near the path, keyed by
// the edge position relative to ibase (the position before the path head):
// mode 0 skips only the reconnected predecessor edge, mode 1 skips the
// whole possible path vicinity (a rejection then holds for every path
// length), mode 2 revisits exactly that vicinity for one concrete length
// kx, whose own successor edge is the one being removed.
template <int Mode, typename G>
bool Searcher::blocked(int32_t cell, int64_t cxa, int64_t cya, int64_t cxb, int64_t cyb,
                       int32_t ia, int32_t ib, int32_t ibase, int32_t klim, int32_t kx) const {
    const int32_t lo = blk_off_[static_cast<size_t>(cell)];
    const int32_t hi = blk_off_[static_cast<size_t>(cell) + 1];
    const G abx = static_cast<G>(cxb - cxa);
    const G aby = static_cast<G>(cyb - cya);
    for (int32_t e = lo; e < hi; ++e) {
        const BlockSeg& s = blk_[static_cast<size_t>(e)];
        if (s.a == ia || s.b == ia || s.a == ib || s.b == ib) continue;
        int32_t rel = s.q - ibase;
        if (rel < 0) rel += m_;
        if (Mode == 0) {
            if (rel == 0) continue;
        } else if (Mode == 1) {
            if (rel <= klim) continue;
        } else {
            if (rel > klim || rel == kx) continue;
        }
        const G d1 = abx * static_cast<G>(s.ay - cya) - aby * static_cast<G>(s.ax - cxa);
        const G d2 = abx * static_cast<G>(s.by - cya) - aby * static_cast<G>(s.bx - cxa);
        if (d1 == 0 || d2 == 0 || (d1 > 0) == (d2 > 0)) continue;
        const G cdx = static_cast<G>(s.bx) - static_cast<G>(s.ax);
        const G cdy = static_cast<G>(s.by) - static_cast<G>(s.ay);
        const G d3 = cdx * static_cast<G>(cya - s.ay) - cdy * static_cast<G>(cxa - s.ax);
        const G d4 = cdx * static_cast<G>(cyb - s.ay) - cdy * static_cast<G>(cxb - s.ax);
        if (d3 == 0 || d4 == 0) continue;
        if ((d3 > 0) != (d4 > 0)) return true;
    }
    return false;
}

bool Searcher::edges_valid(int32_t w1, int32_t v1, int32_t vk, int32_t w2, int32_t u1,
                           int32_t u2) const {
    const Segment e1{inst_->point(w1), inst_->point(w2)};
    const Segment e2{inst_->point(u1), inst_->point(vk)};
    const Segment e3{inst_->point(v1), inst_->point(u2)};
    if (segments_properly_interact(e1, e2) || segments_properly_interact(e1, e3) ||
        segments_properly_interact(e2, e3))
        return false;
    return grid_clear(w1, v1, vk, w2, u1, u2);
}

// Proper-crossing screen on snapshot positions: 0 = provably disjoint,
// 1 = provably crossing, 2 = a zero orientation showed up, so the exact
// shared-endpoint/touching rules must decide.
template <typename G>
int Searcher::strict_pair(int32_t a, int32_t b, int32_t c, int32_t d) const {
    const int64_t* px = px_.data();
    const int64_t* py = py_.data();
    const G abx = static_cast<G>(px[b] - px[a]);
    const G aby = static_cast<G>(py[b] - py[a]);
    const G d1 = abx * static_cast<G>(py[c] - py[a]) - aby * static_cast<G>(px[c] - px[a]);
    const G d2 = abx * static_cast<G>(py[d] - py[a]) - aby * static_cast<G>(px[d] - px[a]);
    if (d1 == 0 || d2 == 0) return 2;
    if ((d1 > 0) == (d2 > 0)) return 0;
    const G cdx = static_cast<G>(px[d] - px[c]);
    const G cdy = static_cast<G>(py[d] - py[c]);
    const G d3 = cdx * static_cast<G>(py[a] - py[c]) - cdy * static_cast<G>(px[a] - px[c]);
    const G d4 = cdx * static_cast<G>(py[b] - py[c]) - cdy * static_cast<G>(px[b] - px[c]);
    if (d3 == 0 || d4 == 0) return 2;
    return (d3 > 0) != (d4 > 0) ? 1 : 0;
}

template <typename G>
void Searcher::finish(int32_t i, int32_t k, int32_t t, Area2 gain, bool interior,
                      std::vector<Move>& out) {
    const int32_t m = m_;
    const int32_t v1 = i, vk = i + k - 1, w1 = i + m - 1, w2 = i + k;

    const int32_t iv1 = ids_[static_cast<size_t>(i)];
    const int32_t ivk = ids_[static_cast<size_t>(vk % m)];
    const int32_t iw1 = ids_[static_cast<size_t>(w1 % m)];
    const int32_t iw2 = ids_[static_cast<size_t>(w2 % m)];
    const int32_t iu1 = ids_[static_cast<size_t>(t % m)];
    const int32_t iu2 = ids_[static_cast<size_t>((t + 1) % m)];

    if (interior) {
        // All six endpoints are distinct points, so the cheap screens
        // apply; any ambiguity falls back to the exact test.
        int r = strict_pair<G>(t, vk, v1, t + 1);
        if (r == 1) return;
        if (r == 0) {
            r = strict_pair<G>(w1, w2, t, vk);
            if (r == 1) return;
        }
        if (r == 0) {
            r = strict_pair<G>(w1, w2, v1, t + 1);
            if (r == 1) return;
        }
        if (r == 0) {
            if (!grid_clear(iw1, iv1, ivk, iw2, iu1, iu2)) return;
        } else if (!edges_valid(iw1, iv1, ivk, iw2, iu1, iu2)) {
            return;
        }
    } else if (!edges_valid(iw1, iv1, ivk, iw2, iu1, iu2)) {
        // Boundary targets share an endpoint with the shortcut edge.
        return;
    }

    Move mv;
    mv.path.reserve(static_cast<size_t>(k));
    for (int32_t s = i; s < i + k; ++s) mv.path.push_back(ids_[static_cast<size_t>(s % m)]);
    mv.u1 = iu1;
    mv.u2 = iu2;
    mv.gain2 = gain;
    out.push_back(std::move(mv));
}

template <typename G>
void Searcher::enumerate(std::vector<Move>& out) {
    const int32_t m = m_;
    const int32_t kmax = std::min<int32_t>(params_.hops, m - 3);

    // Simple polygons never exceed the hull area and never reach zero, so
    // gains outside (0, slack] are rejected before any geometry runs. This
    // also subsumes the orientation-preservation rule.
    const Area2 slack2 = area2_ > 0 ? hull2_ - area2_ : -area2_ - 1;
    if (slack2 <= 0) return;
    const G slack = static_cast<G>(slack2);

    const int64_t* px = px_.data();
    const int64_t* py = py_.data();
    const int64_t* cuu = cuu_.data();

    auto crossu = [&](int32_t s, int32_t t) {
        return static_cast<Area2>(px[s]) * py[t] - static_cast<Area2>(py[s]) * px[t];
    };

    // The coordinate envelope bounds the best achievable target-edge term,
    // so path lengths whose removal deficit beats it are dropped up front.
    int64_t xmax = px[0], xmin = px[0], ymax = py[0], ymin = py[0], cmin = cuu[0];
    for (int32_t s = 1; s < 2 * m; ++s) {
        xmax = std::max(xmax, px[s]);
        xmin = std::min(xmin, px[s]);
        ymax = std::max(ymax, py[s]);
        ymin = std::min(ymin, py[s]);
        cmin = std::min(cmin, cuu[s]);
    }
    const auto ub = [](G c, int64_t mx, int64_t mn) {
        return c > 0 ? c * static_cast<G>(mx) : c * static_cast<G>(mn);
    };

    // Candidates are grouped by (path head, target edge): every length k
    // shares the head-to-target connector, so its screening cost is paid
    // once per group instead of once per candidate.
    struct Row {
        G base, ax, ay;
        int32_t k;
    };
    std::vector<Row> rows;
    rows.reserve(static_cast<size_t>(kmax));
    std::vector<G> pg(static_cast<size_t>(kmax));
    std::vector<int32_t> pj(static_cast<size_t>(kmax));

    for (int32_t i = 0; i < m; ++i) {
        const G cx = px[i], cy = py[i];
        rows.clear();
        Area2 pint = 0;
        for (int32_t k = 1; k <= kmax; ++k) {
            if (k >= 2) pint += crossu(i + k - 2, i + k - 1);
            const int32_t vk = i + k - 1, w1 = i + m - 1, w2 = i + k;
            const Area2 base2 = crossu(w1, w2) - crossu(w1, i) - crossu(vk, w2) - 2 * pint;
            const G base = static_cast<G>(base2);
            const G ax = px[vk], ay = py[vk];
            if (base + ub(ay, xmax, xmin) + ub(-ax, ymax, ymin) + ub(cx, ymax, ymin) +
                    ub(-cy, xmax, xmin) - static_cast<G>(cmin) <=
                0)
                continue;
            rows.push_back({base, ax, ay, k});
        }
        if (rows.empty()) continue;
        const int32_t nrows = static_cast<int32_t>(rows.size());

        const int32_t iv1 = ids_[static_cast<size_t>(i)];
        const int32_t cv1 = vcell_[static_cast<size_t>(i)];
        const int32_t ibase = (i - 1 + m) % m;
        const int32_t thi = i + m - 2;
        int32_t nelig = 0;
        for (int32_t t = i + 1; t <= thi; ++t) {
            while (nelig < nrows && rows[static_cast<size_t>(nelig)].k <= t - i) ++nelig;
            if (nelig == 0) continue;
            const G st = cx * static_cast<G>(py[t + 1]) - cy * static_cast<G>(px[t + 1]) -
                         static_cast<G>(cuu[t]);
            const G ptx = px[t], pty = py[t];
            // Branch-free compaction of the profitable lengths.
            int32_t np = 0;
            for (int32_t j = 0; j < nelig; ++j) {
                const Row& r = rows[static_cast<size_t>(j)];
                const G g = r.base + ptx * r.ay - pty * r.ax + st;
                pj[static_cast<size_t>(np)] = j;
                pg[static_cast<size_t>(np)] = g;
                np += static_cast<int32_t>(g > 0 && g <= slack);
            }
            if (np == 0) continue;

            if (t == thi) {
                // The shortcut edge ends at the reconnected gap, so every
                // length is a shared-endpoint case for the exact validator.
                for (int32_t a = 0; a < np; ++a)
                    finish<G>(i, rows[static_cast<size_t>(pj[a])].k, t,
                              static_cast<Area2>(pg[a]), false, out);
                continue;
            }

            // A path length equal to t - i abuts the target edge; it skips
            // the screens built around six distinct endpoints.
            int32_t npi = np;
            if (pj[np - 1] == nelig - 1 && rows[static_cast<size_t>(nelig - 1)].k == t - i) {
                finish<G>(i, t - i, t, static_cast<Area2>(pg[np - 1]), false, out);
                npi = np - 1;
            }
            if (npi == 0) continue;

            const int32_t iu1 = ids_[static_cast<size_t>(t % m)];
            const int32_t iu2 = ids_[static_cast<size_t>((t + 1) % m)];
            const int32_t cu2 = vcell_[static_cast<size_t>(t + 1)];
            if (blocked<1, G>(cv1, px[i], py[i], px[t + 1], py[t + 1], iv1, iu2, ibase, kmax,
                              0))
                continue;
            if (cu2 != cv1 && blocked<1, G>(cu2, px[i], py[i], px[t + 1], py[t + 1], iv1, iu2,
                                            ibase, kmax, 0))
                continue;

            const int32_t cu1 = vcell_[static_cast<size_t>(t)];
            for (int32_t a = 0; a < npi; ++a) {
                const Row& r = rows[static_cast<size_t>(pj[a])];
                const int32_t k = r.k, vk = i + k - 1;
                const int32_t ivk = ids_[static_cast<size_t>(vk % m)];
                const int32_t cvk = vcell_[static_cast<size_t>(vk)];
                if (blocked<0, G>(cu1, px[t], py[t], px[vk], py[vk], iu1, ivk, ibase, 0, 0))
                    continue;
                if (cvk != cu1 && blocked<0, G>(cvk, px[t], py[t], px[vk], py[vk], iu1, ivk,
                                                ibase, 0, 0))
                    continue;
                if (blocked<2, G>(cv1, px[i], py[i], px[t + 1], py[t + 1], iv1, iu2, ibase,
                                  kmax, k))
                    continue;
                if (cu2 != cv1 && blocked<2, G>(cu2, px[i], py[i], px[t + 1], py[t + 1], iv1,
                                                iu2, ibase, kmax, k))
                    continue;
                finish<G>(i, k, t, static_cast<Area2>(pg[a]), true, out);
            }
        }
    }
}

std::vector<Move> Searcher::collect() {
    const int32_t m = m_;
    ids_.resize(static_cast<size_t>(m));
    px_.resize(static_cast<size_t>(2 * m));
    py_.resize(static_cast<size_t>(2 * m));
    cuu_.resize(static_cast<size_t>(2 * m));
    int32_t v = anchor_;
    for (int32_t i = 0; i < m; ++i) {
        ids_[static_cast<size_t>(i)] = v;
        const Point& p = inst_->point(v);
        px_[static_cast<size_t>(i)] = px_[static_cast<size_t>(i + m)] = p.x - tx_;
        py_[static_cast<size_t>(i)] = py_[static_cast<size_t>(i + m)] = p.y - ty_;
        v = next_[static_cast<size_t>(v)];
    }
    for (int32_t i = 0; i < m; ++i) {
        const size_t a = static_cast<size_t>(i);
        cuu_[a] = px_[a] * py_[a + 1] - py_[a] * px_[a + 1];
        cuu_[a + static_cast<size_t>(m)] = cuu_[a];
    }

    std::vector<Move> out;
    if (m >= 4 && params_.hops >= 1) {
        const int32_t ncells = grid_.cell_count();
        blk_off_.assign(static_cast<size_t>(ncells) + 1, 0);
        for (int32_t c = 0; c < ncells; ++c)
            blk_off_[static_cast<size_t>(c) + 1] =
                blk_off_[static_cast<size_t>(c)] +
                static_cast<int32_t>(grid_.cell_edges(c).size());
        blk_.resize(static_cast<size_t>(blk_off_[static_cast<size_t>(ncells)]));
        std::vector<int32_t> ipos(static_cast<size_t>(m));
        for (int32_t i = 0; i < m; ++i) ipos[static_cast<size_t>(ids_[static_cast<size_t>(i)])] = i;
        size_t w = 0;
        for (int32_t c = 0; c < ncells; ++c) {
            for (const uint64_t key : grid_.cell_edges(c)) {
                BlockSeg& s = blk_[w++];
                s.a = static_cast<int32_t>(key >> 32);
                s.b = static_cast<int32_t>(key & 0xffffffffu);
                const Point& pa = inst_->point(s.a);
                const Point& pb = inst_->point(s.b);
                s.ax = static_cast<int32_t>(pa.x - tx_);
                s.ay = static_cast<int32_t>(pa.y - ty_);
                s.bx = static_cast<int32_t>(pb.x - tx_);
                s.by = static_cast<int32_t>(pb.y - ty_);
                const int32_t qa = ipos[static_cast<size_t>(s.a)];
                const int32_t qb = ipos[static_cast<size_t>(s.b)];
                s.q = (qa + 1) % m == qb ? qa : qb;
            }
        }
        vcell_.resize(static_cast<size_t>(2 * m));
        for (int32_t i = 0; i < m; ++i)
            vcell_[static_cast<size_t>(i)] = vcell_[static_cast<size_t>(i + m)] =
                grid_.point_cell(inst_->point(ids_[static_cast<size_t>(i)]));

        // 64-bit gain accumulation is exact while every possible term sum
        // stays inside the range; otherwise fall back to 128-bit.
        const int32_t kmax = std::min<int32_t>(params_.hops, m - 3);
        const double bound = (4.0 * kmax + 14.0) * static_cast<double>(max_c_) *
                             static_cast<double>(max_c_);
        if (bound < 9.0e18)
            enumerate<int64_t>(out);
        else
            enumerate<Area2>(out);
    }

    std::sort(out.begin(), out.end(), [](const Move& a, const Move& b) {
        if (a.gain2 != b.gain2) return a.gain2 > b.gain2;
        if (a.path[0] != b.path[0]) return a.path[0] < b.path[0];
        if (a.u1 != b.u1) return a.u1 < b.u1;
        if (a.path.size() != b.path.size()) return a.path.size() < b.path.size();
        return a.u2 < b.u2;
    });
    return out;
}

bool Searcher::revalidate_and_apply(const Move& mv, Area2& gain_out) {
    const int32_t k = static_cast<int32_t>(mv.path.size());
    for (int32_t t = 0; t + 1 < k; ++t)
        if (next_[static_cast<size_t>(mv.path[static_cast<size_t>(t)])] !=
            mv.path[static_cast<size_t>(t + 1)])
            return false;
    if (next_[static_cast<size_t>(mv.u1)] != mv.u2) return false;
    for (int32_t id : mv.path)
        if (id == mv.u1 || id == mv.u2) return false;

    const int32_t v1 = mv.path.front();
    const int32_t vk = mv.path.back();
    const int32_t w1 = prev_[static_cast<size_t>(v1)];
    const int32_t w2 = next_[static_cast<size_t>(vk)];
    if (w1 == vk) return false;  // path covers all but the target edge

    const Area2 p_int = path_internal_sum(*inst_, mv.path);
    const Area2 gain = gain_from_ids(*inst_, w1, v1, vk, w2, mv.u1, mv.u2, p_int);
    if (gain <= 0) return false;
    const Area2 next_a2 = area2_ + gain;
    if ((area2_ > 0) != (next_a2 > 0) || next_a2 == 0) return false;
    if (!edges_valid(w1, v1, vk, w2, mv.u1, mv.u2)) return false;

    grid_.remove_edge(w1, v1);
    grid_.remove_edge(vk, w2);
    grid_.remove_edge(mv.u1, mv.u2);
    grid_.add_edge(w1, w2);
    grid_.add_edge(mv.u1, vk);
    grid_.add_edge(v1, mv.u2);

    next_[static_cast<size_t>(w1)] = w2;
    prev_[static_cast<size_t>(w2)] = w1;
    for (int32_t t = 0; t + 1 < k; ++t) {
        const int32_t a = mv.path[static_cast<size_t>(t)];
        const int32_t b = mv.path[static_cast<size_t>(t + 1)];
        next_[static_cast<size_t>(b)] = a;
        prev_[static_cast<size_t>(a)] = b;
    }
    next_[static_cast<size_t>(mv.u1)] = vk;
    prev_[static_cast<size_t>(vk)] = mv.u1;
    next_[static_cast<size_t>(v1)] = mv.u2;
    prev_[static_cast<size_t>(mv.u2)] = v1;
    anchor_ = w1;
    area2_ = next_a2;
    gain_out = gain;
    return true;
}

}  // namespace

Area2 move_gain(const Polygon& poly, const Instance& inst, int32_t path_start, int32_t k,
                int32_t edge_start) {
    const int32_t m = poly.size();
    check_move_indices(m, path_start, k, edge_start);
    std::vector<int32_t> path;
    path.reserve(static_cast<size_t>(k));
    for (int32_t t = 0; t < k; ++t) path.push_back(poly.vertex((path_start + t) % m));
    const int32_t w1 = poly.vertex((path_start + m - 1) % m);
    const int32_t w2 = poly.vertex((path_start + k) % m);
    const int32_t u1 = poly.vertex(edge_start);
    const int32_t u2 = poly.vertex((edge_start + 1) % m);
    return gain_from_ids(inst, w1, path.front(), path.back(), w2, u1, u2,
                         path_internal_sum(inst, path));
}

std::vector<int32_t> apply_move_ids(const Polygon& poly, int32_t path_start, int32_t k,
                                    int32_t edge_start) {
    const int32_t m = poly.size();
    check_move_indices(m, path_start, k, edge_start);
    // New cycle: w2..u1 forward, the path reversed, then u2..w1 forward.
    std::vector<int32_t> out;
    out.reserve(static_cast<size_t>(m));
    for (int32_t t = (path_start + k) % m;; t = (t + 1) % m) {
        out.push_back(poly.vertex(t));
        if (t == edge_start) break;
    }
    for (int32_t t = k - 1; t >= 0; --t) out.push_back(poly.vertex((path_start + t) % m));
    for (int32_t t = (edge_start + 1) % m;; t = (t + 1) % m) {
        out.push_back(poly.vertex(t));
        if (t == (path_start + m - 1) % m) break;
    }
    return out;
}

std::vector<Move> collect_moves(const Polygon& poly, const Instance& inst,
                                const SolveParams& params) {
    Searcher s(inst, poly, params);
    return s.collect();
}

Polygon run_local_search(Polygon poly, const Instance& inst, const SolveParams& params,
                         LocalSearchStats* stats_out) {
    LocalSearchStats stats;
    if (params.hops >= 1 && poly.size() >= 4) {
        const std::vector<int32_t> hull = convex_hull(inst.points);
        Area2 hull2 = Polygon::shoelace(inst, hull);
        if (hull2 < 0) hull2 = -hull2;
        const double hull2d = static_cast<double>(hull2);

        Searcher s(inst, poly, params);
        while (true) {
            const std::vector<Move> moves = s.collect();
            ++stats.rounds;
            stats.collected += static_cast<int64_t>(moves.size());
            Area2 round_gain = 0;
            for (const Move& mv : moves) {
                Area2 g = 0;
                if (s.revalidate_and_apply(mv, g)) {
                    ++stats.applied;
                    round_gain += g;
                }
            }
            stats.total_gain2 += round_gain;
            if (round_gain == 0 ||
                static_cast<double>(round_gain) < params.ls_epsilon * hull2d)
                break;
        }
        poly = s.polygon();
    }
    if (stats_out) *stats_out = stats;
    return poly;
}

}  // namespace polyarea
