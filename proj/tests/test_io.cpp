#include <cstdio>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "polyarea/bench.hpp"
#include "polyarea/io.hpp"
#include "polyarea/svg.hpp"
#include "polyarea/verify.hpp"
#include "support/oracles.hpp"

using namespace polyarea;

namespace {

Instance square_center() {
    return make_instance("sq",
                         {{0, 0, -1}, {10, 0, -1}, {10, 10, -1}, {0, 10, -1}, {5, 5, -1}});
}

size_t count_of(const std::string& hay, const std::string& needle) {
    size_t n = 0;
    for (size_t at = hay.find(needle); at != std::string::npos;
         at = hay.find(needle, at + needle.size()))
        ++n;
    return n;
}

struct TmpFile {
    std::string path;
    explicit TmpFile(std::string p) : path(std::move(p)) {}
    ~TmpFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("format_score renders nine fixed decimals") {
    CHECK(format_score(0.75) == "0.750000000");
    CHECK(format_score(1.0) == "1.000000000");
    CHECK(format_score(0.0) == "0.000000000");
    CHECK(format_score(2.0 / 3.0) == "0.666666667");
    CHECK(format_score(0.8232945418) == "0.823294542");
}

TEST_CASE("instance serialization round trip with exact bytes") {
    const Instance inst = square_center();
    const std::string text = serialize_instance(inst);
    CHECK(text ==
          "polyarea-instance 1\n"
          "name sq\n"
          "count 5\n"
          "0 0 0\n"
          "1 10 0\n"
          "2 10 10\n"
          "3 0 10\n"
          "4 5 5\n");

    const Instance back = parse_instance_text(text, "ignored");
    CHECK(back.name == "sq");
    REQUIRE(back.size() == inst.size());
    for (int32_t i = 0; i < inst.size(); ++i) {
        CHECK(back.point(i).x == inst.point(i).x);
        CHECK(back.point(i).y == inst.point(i).y);
        CHECK(back.point(i).id == i);
    }

    // Names may contain spaces.
    const Instance spaced = make_instance("two words", {{0, 0, -1}, {4, 0, -1}, {0, 4, -1}});
    CHECK(parse_instance_text(serialize_instance(spaced), "x").name == "two words");
}

TEST_CASE("plain point lists parse as a fallback") {
    const Instance a = parse_instance_text("# corners\n\n1 2\n30 4\n5 60\n7 8\n", "plain");
    CHECK(a.name == "plain");
    REQUIRE(a.size() == 4);
    CHECK(a.point(0).x == 1);
    CHECK(a.point(3).y == 8);

    const Instance b = parse_instance_text("0 1 2\n1 30 4\n2 5 60\n", "withids");
    REQUIRE(b.size() == 3);
    CHECK(b.point(1).x == 30);

    CHECK_THROWS_AS(parse_instance_text("", "x"), std::runtime_error);
    CHECK_THROWS_AS(parse_instance_text("1 2 3 4\n", "x"), std::runtime_error);
    CHECK_THROWS_AS(parse_instance_text("a b\n", "x"), std::runtime_error);
    // Too few points fails instance validation.
    CHECK_THROWS_AS(parse_instance_text("1 2\n3 4\n", "x"), std::invalid_argument);
}

TEST_CASE("versioned instance parsing rejects malformed input") {
    CHECK_THROWS_AS(parse_instance_text("polyarea-instance 1\nname x\n", "x"),
                    std::runtime_error);
    CHECK_THROWS_AS(
        parse_instance_text("polyarea-instance 1\nname x\ncount 2\n0 0 0\n1 1 1\n", "x"),
        std::runtime_error);
    CHECK_THROWS_AS(
        parse_instance_text("polyarea-instance 1\nname x\ncount 4\n0 0 0\n1 1 1\n2 2 0\n",
                            "x"),
        std::runtime_error);
    CHECK_THROWS_AS(
        parse_instance_text(
            "polyarea-instance 1\nname x\ncount 3\n0 0 0\n1 1 1\n2 2 0\njunk\n", "x"),
        std::runtime_error);
    CHECK_THROWS_AS(
        parse_instance_text("polyarea-instance 1\nname x\ncount 3\n0 0 0\n1 1 1\n2 2 z\n",
                            "x"),
        std::runtime_error);
    // Ids must be 0..n-1 in order.
    CHECK_THROWS_AS(
        parse_instance_text("polyarea-instance 1\nname x\ncount 3\n1 0 0\n0 1 1\n2 2 0\n",
                            "x"),
        std::invalid_argument);
}

TEST_CASE("instance files round trip and plain files take the stem name") {
    const TmpFile f1("tmp_io_inst.txt");
    write_instance(square_center(), f1.path);
    const Instance back = read_instance(f1.path);
    CHECK(back.name == "sq");
    CHECK(back.size() == 5);

    const TmpFile f2("tmp_io_plainpts.txt");
    write_text_file(f2.path, "0 0\n9 0\n0 9\n");
    CHECK(read_instance(f2.path).name == "tmp_io_plainpts");

    CHECK_THROWS_AS(read_instance("tmp_io_does_not_exist.txt"), std::runtime_error);
}

TEST_CASE("solution serialization round trip with exact bytes") {
    const Instance inst = square_center();
    const Polygon poly = Polygon::from_ids(inst, {0, 1, 4, 2, 3});
    const ScoreReport rep = score_polygon(poly, inst, true);
    REQUIRE(rep.simple);
    REQUIRE(rep.score == 0.75);

    const Solution sol = make_solution(inst, poly, Objective::kMin, rep.score);
    const std::string text = serialize_solution(sol);
    CHECK(text ==
          "polyarea-solution 1\n"
          "instance sq\n"
          "objective min\n"
          "count 5\n"
          "0\n"
          "1\n"
          "4\n"
          "2\n"
          "3\n"
          "score 0.750000000\n");

    const Solution back = parse_solution_text(text);
    CHECK(back.instance_name == "sq");
    CHECK(back.objective == Objective::kMin);
    CHECK(back.vertices == std::vector<int32_t>{0, 1, 4, 2, 3});
    CHECK(back.stored_score == 0.75);

    const TmpFile f("tmp_io_sol.txt");
    write_solution(sol, f.path);
    CHECK(read_text_file(f.path) == text);
    CHECK(read_solution(f.path).vertices == sol.vertices);

    CHECK_THROWS_AS(parse_solution_text("nonsense\n"), std::runtime_error);
    CHECK_THROWS_AS(
        parse_solution_text("polyarea-solution 1\ninstance x\nobjective up\ncount 3\n"),
        std::runtime_error);
    CHECK_THROWS_AS(parse_solution_text("polyarea-solution 1\ninstance x\nobjective max\n"
                                        "count 3\n0\n1\n2\nscore abc\n"),
                    std::runtime_error);
    CHECK_THROWS_AS(parse_solution_text("polyarea-solution 1\ninstance x\nobjective max\n"
                                        "count 3\n0\n1\n"),
                    std::runtime_error);
}

TEST_CASE("generators are seeded, bounded, and distinct") {
    const Instance a = generate_uniform(100, 9);
    const Instance b = generate_uniform(100, 9);
    const Instance c = generate_uniform(100, 10);
    CHECK(a.name == "uniform-100-s9");
    CHECK(serialize_instance(a) == serialize_instance(b));
    CHECK(serialize_instance(a) != serialize_instance(c));

    const Instance k = generate_clustered(100, 9);
    CHECK(k.name == "clustered-100-s9");
    CHECK(serialize_instance(k) == serialize_instance(generate_clustered(100, 9)));

    for (const Instance* inst : {&a, &c, &k}) {
        REQUIRE(inst->size() == 100);
        std::set<std::pair<int64_t, int64_t>> seen;
        for (const Point& p : inst->points) {
            CHECK(p.x >= 0);
            CHECK(p.x <= 1000000);
            CHECK(p.y >= 0);
            CHECK(p.y <= 1000000);
            CHECK(seen.insert({p.x, p.y}).second);
        }
    }
    CHECK_THROWS_AS(generate_uniform(2, 1), std::invalid_argument);
    CHECK_THROWS_AS(generate_clustered(2, 1), std::invalid_argument);
}

TEST_CASE("svg rendering is deterministic and structured") {
    const Instance inst = square_center();
    const Polygon poly = Polygon::from_ids(inst, {0, 1, 4, 2, 3});

    const std::string svg = render_svg(inst, &poly, "sq min 0.750000000");
    CHECK(svg == render_svg(inst, &poly, "sq min 0.750000000"));
    CHECK(svg.find("<?xml version=\"1.0\"") == 0);
    CHECK(svg.find("<svg xmlns=\"http://www.w3.org/2000/svg\"") != std::string::npos);
    CHECK(count_of(svg, "<path d=\"M") == 1);
    CHECK(count_of(svg, "<circle") == 5);
    CHECK(svg.find("sq min 0.750000000") != std::string::npos);
    CHECK(svg.rfind("</svg>\n") == svg.size() - 7);

    const std::string dots = render_svg(inst, nullptr, "points only");
    CHECK(count_of(dots, "<path") == 0);
    CHECK(count_of(dots, "<circle") == 5);
}

TEST_CASE("bench config grammar") {
    const BenchConfig cfg = parse_bench_config(
        "# demo\n"
        "uniform 60 5\n"
        "objective max min\n"
        "pen 0 90\n"
        "pen 270\n"
        "hops 1 10\n"
        "hood 1 inf\n"
        "sigma 0 0.5\n"
        "variant minus plus\n"
        "seed 1 2\n"
        "restarts 3\n");
    REQUIRE(cfg.sources.size() == 1);
    CHECK(cfg.sources[0].kind == "uniform");
    CHECK(cfg.sources[0].n == 60);
    CHECK(cfg.sources[0].seed == 5);
    CHECK(cfg.objectives == std::vector<Objective>{Objective::kMax, Objective::kMin});
    CHECK(cfg.pens == std::vector<double>{0.0, 90.0, 270.0});
    CHECK(cfg.hops == std::vector<int32_t>{1, 10});
    CHECK(cfg.hoods == std::vector<int32_t>{1, kHoodInfinite});
    CHECK(cfg.sigmas == std::vector<double>{0.0, 0.5});
    CHECK(cfg.variants ==
          std::vector<WeightVariant>{WeightVariant::kMinus, WeightVariant::kPlus});
    CHECK(cfg.seeds == std::vector<uint64_t>{1, 2});
    CHECK(cfg.restarts == 3);

    const BenchConfig defaults = parse_bench_config("clustered 40 1\n");
    CHECK(defaults.objectives == std::vector<Objective>{Objective::kMax});
    CHECK(defaults.pens == std::vector<double>{90.0});
    CHECK(defaults.hops == std::vector<int32_t>{10});
    CHECK(defaults.hoods == std::vector<int32_t>{2});
    CHECK(defaults.sigmas == std::vector<double>{0.0});
    CHECK(defaults.variants == std::vector<WeightVariant>{WeightVariant::kMinus});
    CHECK(defaults.seeds == std::vector<uint64_t>{1});
    CHECK(defaults.restarts == 1);

    CHECK_THROWS_AS(parse_bench_config("objective max\n"), std::runtime_error);
    CHECK_THROWS_AS(parse_bench_config("uniform 40 1\nfoo bar\n"), std::runtime_error);
    CHECK_THROWS_AS(parse_bench_config("uniform 40 1\nobjective sideways\n"),
                    std::runtime_error);
    CHECK_THROWS_AS(parse_bench_config("instance\n"), std::runtime_error);

    CHECK(alpha_from_pen(90.0) == 1.0 / 90.0);
    CHECK(alpha_from_pen(0.0) == 0.0);
    CHECK_THROWS_AS(alpha_from_pen(-1.0), std::invalid_argument);
}

TEST_CASE("bench presets") {
    const BenchConfig alpha = bench_preset("alpha-sweep");
    REQUIRE(alpha.sources.size() == 1);
    CHECK(alpha.sources[0].kind == "uniform");
    CHECK(alpha.sources[0].n == 500);
    CHECK(alpha.sources[0].seed == 42);
    CHECK(alpha.objectives.size() == 2);
    CHECK(alpha.pens == std::vector<double>{10.0, 30.0, 90.0, 270.0});
    CHECK(alpha.variants.size() == 2);
    CHECK(alpha.seeds == std::vector<uint64_t>{1, 2, 3});
    CHECK(alpha.hops == std::vector<int32_t>{10});

    const BenchConfig sigma = bench_preset("sigma-sweep");
    REQUIRE(sigma.sources.size() == 2);
    CHECK(sigma.sources[0].n == 100);
    CHECK(sigma.sources[1].n == 500);
    CHECK(sigma.hops == std::vector<int32_t>{1});
    CHECK(sigma.sigmas == std::vector<double>{0.0, 0.2, 0.5, 0.8});
    CHECK(sigma.seeds.size() == 3);

    CHECK_THROWS_AS(bench_preset("nope"), std::invalid_argument);
}

TEST_CASE("bench tsv rows are exact") {
    const std::string header = bench_tsv_header();
    CHECK(count_of(header, "\t") == 16);
    CHECK(header.back() == '\n');

    BenchRecord r;
    r.instance = "x";
    r.n = 5;
    r.objective = Objective::kMin;
    r.pen = 90.0;
    r.hops = 10;
    r.hood = kHoodInfinite;
    r.sigma = 0.5;
    r.variant = WeightVariant::kPlus;
    r.seed = 7;
    r.restarts = 2;
    r.ok = true;
    r.greedy_score = 0.5;
    r.final_score = 0.75;
    r.greedy_seconds = 1.5;
    r.ls_seconds = 0.25;
    r.total_seconds = 2.0;
    CHECK(bench_tsv_row(r) ==
          "x\t5\tmin\t90.000000\t10\tinf\t0.500000\tplus\t7\t2\t1\t"
          "0.500000000\t0.750000000\t1.500000\t0.250000\t2.000000\t\n");
}

TEST_CASE("run_bench runs the task grid in order") {
    const BenchConfig cfg = parse_bench_config("uniform 40 5\nobjective max min\n");
    const std::vector<BenchRecord> recs = run_bench(cfg, 1);
    REQUIRE(recs.size() == 2);
    CHECK(recs[0].objective == Objective::kMax);
    CHECK(recs[1].objective == Objective::kMin);
    for (const BenchRecord& r : recs) {
        CHECK(r.instance == "uniform-40-s5");
        CHECK(r.n == 40);
        REQUIRE(r.ok);
        CHECK(r.error.empty());
        CHECK(r.final_score > 0.0);
        CHECK(r.final_score <= 1.0);
        if (r.objective == Objective::kMax)
            CHECK(r.final_score >= r.greedy_score);
        else
            CHECK(r.final_score <= r.greedy_score);
        CHECK(r.total_seconds >= 0.0);
    }

    // Scheduling must not change results or ordering.
    const std::vector<BenchRecord> par = run_bench(cfg, 4);
    REQUIRE(par.size() == recs.size());
    for (size_t i = 0; i < recs.size(); ++i) {
        CHECK(par[i].objective == recs[i].objective);
        CHECK(par[i].ok == recs[i].ok);
        CHECK(par[i].greedy_score == recs[i].greedy_score);
        CHECK(par[i].final_score == recs[i].final_score);
    }
}

TEST_CASE("text file helpers") {
    const TmpFile f("tmp_io_text.bin");
    const std::string payload = "line one\nline two\nbinary \x01 byte\n";
    write_text_file(f.path, payload);
    CHECK(read_text_file(f.path) == payload);
    CHECK_THROWS_AS(read_text_file("tmp_io_missing.bin"), std::runtime_error);
}
