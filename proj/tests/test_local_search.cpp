#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "polyarea/greedy.hpp"
#include "polyarea/local_search.hpp"
#include "polyarea/verify.hpp"
#include "support/oracles.hpp"

using namespace polyarea;

namespace {

Instance random_instance(std::mt19937_64& rng, int n, int64_t range) {
    std::vector<Point> ps;
    std::set<std::pair<int64_t, int64_t>> seen;
    while (static_cast<int>(ps.size()) < n) {
        const int64_t x = static_cast<int64_t>(rng() % (range + 1));
        const int64_t y = static_cast<int64_t>(rng() % (range + 1));
        if (seen.insert({x, y}).second) ps.push_back({x, y, -1});
    }
    return make_instance("rnd", std::move(ps));
}

Polygon greedy_polygon(const Instance& inst, Objective obj, uint64_t seed) {
    SolveParams params;
    params.objective = obj;
    params.seed = seed;
    const GreedyResult res = run_greedy(inst, params);
    REQUIRE(res.success);
    return res.polygon;
}

std::vector<oracle::BruteMove> canon(const std::vector<Move>& moves) {
    std::vector<oracle::BruteMove> out;
    out.reserve(moves.size());
    for (const Move& m : moves) out.push_back({m.path, m.u1, m.u2, m.gain2});
    std::sort(out.begin(), out.end());
    return out;
}

bool library_order(const Move& a, const Move& b) {
    if (a.gain2 != b.gain2) return a.gain2 > b.gain2;
    if (a.path[0] != b.path[0]) return a.path[0] < b.path[0];
    if (a.u1 != b.u1) return a.u1 < b.u1;
    if (a.path.size() != b.path.size()) return a.path.size() < b.path.size();
    return a.u2 < b.u2;
}

}  // namespace

TEST_CASE("move_gain and apply_move_ids match the shoelace oracle") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 40; ++trial) {
        const Instance inst = random_instance(rng, 8 + static_cast<int>(rng() % 33), 500);
        const Objective obj = trial % 2 == 0 ? Objective::kMax : Objective::kMin;
        const Polygon poly = greedy_polygon(inst, obj, 1 + trial);
        const std::vector<int32_t>& ids = poly.vertices();
        const int32_t m = poly.size();
        const Area2 old_area = oracle::shoelace(inst, ids);
        REQUIRE(poly.doubled_area() == old_area);

        for (int probe = 0; probe < 30; ++probe) {
            const int32_t i = static_cast<int32_t>(rng() % static_cast<uint64_t>(m));
            const int32_t k =
                1 + static_cast<int32_t>(rng() % static_cast<uint64_t>(m - 3));
            const int32_t off =
                k + static_cast<int32_t>(rng() % static_cast<uint64_t>(m - 1 - k));
            const int32_t t = (i + off) % m;

            const std::vector<int32_t> rewired = oracle::rewire(ids, i, k, t);
            REQUIRE(apply_move_ids(poly, i, k, t) == rewired);
            const Area2 gain = move_gain(poly, inst, i, k, t);
            REQUIRE(gain == oracle::shoelace(inst, rewired) - old_area);

            // The inverse move restores the cycle and negates the gain.
            const Polygon moved = Polygon::from_ids(inst, rewired);
            REQUIRE(moved.doubled_area() == old_area + gain);
            const int32_t u1 = ids[static_cast<size_t>(t)];
            const auto it = std::find(rewired.begin(), rewired.end(), u1);
            const int32_t back =
                static_cast<int32_t>(it - rewired.begin()) + 1;  // position of vk
            REQUIRE(move_gain(moved, inst, back, k, m - 1) == -gain);
            Polygon round = Polygon::from_ids(inst, apply_move_ids(moved, back, k, m - 1));
            round.rotate_lowest_first();
            REQUIRE(round.vertices() == ids);
        }
    }
}

TEST_CASE("move index validation") {
    const Instance inst = make_instance(
        "hex", {{0, 0, -1}, {40, 3, -1}, {100, 0, -1}, {100, 100, -1}, {70, 90, -1}, {0, 100, -1}});
    const Polygon poly = Polygon::from_ids(inst, {0, 1, 2, 3, 4, 5});
    CHECK_THROWS_AS(move_gain(poly, inst, 6, 1, 3), std::out_of_range);
    CHECK_THROWS_AS(move_gain(poly, inst, -1, 1, 3), std::out_of_range);
    CHECK_THROWS_AS(move_gain(poly, inst, 0, 0, 3), std::invalid_argument);
    CHECK_THROWS_AS(move_gain(poly, inst, 0, 4, 3), std::invalid_argument);
    CHECK_THROWS_AS(move_gain(poly, inst, 0, 2, 1), std::invalid_argument);  // inside the path
    CHECK_THROWS_AS(move_gain(poly, inst, 0, 1, 5), std::invalid_argument);  // edge into v1
    CHECK_THROWS_AS(apply_move_ids(poly, 0, 2, 1), std::invalid_argument);
    CHECK_NOTHROW(move_gain(poly, inst, 0, 1, 1));
    CHECK_NOTHROW(move_gain(poly, inst, 0, 3, 3));
}

TEST_CASE("convex polygons admit no improving move") {
    std::vector<Point> ps;
    for (int i = 0; i < 12; ++i) {
        const double ang = 2.0 * 3.14159265358979323846 * i / 12;
        ps.push_back({static_cast<int64_t>(1000000 + 900000 * std::cos(ang)),
                      static_cast<int64_t>(1000000 + 900000 * std::sin(ang)), -1});
    }
    const Instance inst = make_instance("circle", ps);
    const Polygon poly = Polygon::from_ids(inst, convex_hull(inst.points));
    CHECK(collect_moves(poly, inst, SolveParams{}).empty());
}

TEST_CASE("frozen single-move instance") {
    const Instance inst = make_instance(
        "one", {{0, 0, -1}, {4, 3, -1}, {10, 0, -1}, {10, 10, -1}, {7, 9, -1}, {0, 10, -1}});
    const Polygon poly = Polygon::from_ids(inst, {0, 1, 2, 3, 4, 5});
    REQUIRE(poly.doubled_area() == 160);

    SolveParams params;
    params.hops = 1;
    const std::vector<Move> moves = collect_moves(poly, inst, params);
    REQUIRE(moves.size() == 1);
    CHECK(moves[0].path == std::vector<int32_t>{1});
    CHECK(moves[0].u1 == 3);
    CHECK(moves[0].u2 == 4);
    CHECK(moves[0].gain2 == 15);
    CHECK(canon(moves) == oracle::brute_moves(poly, inst, 1));

    // Applying it yields the rewired cycle and the predicted area.
    const std::vector<int32_t> rewired = apply_move_ids(poly, 1, 1, 3);
    CHECK(Polygon::from_ids(inst, rewired).doubled_area() == 175);
    CHECK(score_polygon(Polygon::from_ids(inst, rewired), inst, true).simple);
}

TEST_CASE("collect_moves equals brute enumeration on small polygons") {
    std::mt19937_64 rng(42);
    long with_moves = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const Instance inst = random_instance(rng, 7 + static_cast<int>(rng() % 6), 60);
        const Objective obj = trial % 2 == 0 ? Objective::kMax : Objective::kMin;
        GreedyResult res;
        {
            SolveParams params;
            params.objective = obj;
            params.seed = 1 + trial;
            res = run_greedy(inst, params);
        }
        if (!res.success) continue;
        const Polygon& poly = res.polygon;

        for (const int32_t hops : {1, 3, 10}) {
            SolveParams params;
            params.objective = obj;
            params.hops = hops;
            const std::vector<Move> moves = collect_moves(poly, inst, params);
            REQUIRE(std::is_sorted(moves.begin(), moves.end(), library_order));
            REQUIRE(canon(moves) == oracle::brute_moves(poly, inst, hops));
            with_moves += !moves.empty();

            // Window rules: positive gain, no hull overflow, no sign flip.
            const Area2 a2 = poly.doubled_area();
            Area2 hull2 = Polygon::shoelace(inst, convex_hull(inst.points));
            if (hull2 < 0) hull2 = -hull2;
            for (const Move& mv : moves) {
                CHECK(mv.gain2 > 0);
                if (a2 > 0)
                    CHECK(mv.gain2 <= hull2 - a2);
                else
                    CHECK(mv.gain2 <= -a2 - 1);
            }
        }
    }
    CHECK(with_moves > 20);
}

TEST_CASE("longer paths only add moves") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 10; ++trial) {
        const Instance inst = random_instance(rng, 30, 300);
        const Polygon poly =
            greedy_polygon(inst, trial % 2 == 0 ? Objective::kMax : Objective::kMin, 3);
        SolveParams p1;
        p1.hops = 1;
        SolveParams p3;
        p3.hops = 3;
        const auto m1 = canon(collect_moves(poly, inst, p1));
        const auto m3 = canon(collect_moves(poly, inst, p3));
        REQUIRE(std::includes(m3.begin(), m3.end(), m1.begin(), m1.end()));
        for (const auto& mv : m1) REQUIRE(mv.path.size() == 1);
    }
}

TEST_CASE("run_local_search improves monotonically to a stable polygon") {
    std::mt19937_64 rng(44);
    for (int trial = 0; trial < 8; ++trial) {
        const Instance inst = random_instance(rng, 40, 2000);
        const Objective obj = trial % 2 == 0 ? Objective::kMax : Objective::kMin;
        const Polygon start = greedy_polygon(inst, obj, 5 + trial);

        SolveParams params;
        params.objective = obj;
        params.ls_epsilon = 0.0;  // run to exhaustion
        LocalSearchStats stats;
        const Polygon out = run_local_search(start, inst, params, &stats);

        CHECK(out.doubled_area() - start.doubled_area() == stats.total_gain2);
        CHECK(stats.total_gain2 >= 0);
        CHECK(stats.applied <= stats.collected);
        if (obj == Objective::kMax) {
            CHECK(out.doubled_area() >= start.doubled_area());
            CHECK(out.doubled_area() > 0);
        } else {
            CHECK(out.doubled_area() < 0);
            CHECK(-out.doubled_area() <= -start.doubled_area());
        }

        const ScoreReport rep = score_polygon(out, inst, true);
        CHECK(rep.simple);
        CHECK(rep.uses_all_points);

        // Exhaustion means no move survives on the result.
        CHECK(collect_moves(out, inst, params).empty());

        // A second run is a no-op.
        LocalSearchStats again;
        const Polygon out2 = run_local_search(out, inst, params, &again);
        CHECK(out2.vertices() == out.vertices());
        CHECK(again.total_gain2 == 0);
    }
}
