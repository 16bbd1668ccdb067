#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "polyarea/bench.hpp"
#include "polyarea/io.hpp"
#include "polyarea/merge.hpp"
#include "polyarea/solver.hpp"
#include "polyarea/svg.hpp"
#include "polyarea/verify.hpp"

namespace {

using namespace polyarea;

struct SolveOptions {
    std::string instance_path;
    std::string objective = "max";
    double pen = 90.0;
    int32_t hops = 10;
    std::string hood = "2";
    double sigma = 0.0;
    uint64_t seed = 1;
    int32_t restarts = 1;
    std::string variant = "minus";
    int32_t dnc_grid = 0;
    int64_t dnc_threshold = 200000;
    std::string out_path;
    std::string svg_path;
    bool hood_given = false;
};

SolveParams to_params(const SolveOptions& opt) {
    SolveParams p;
    p.objective = opt.objective == "min" ? Objective::kMin : Objective::kMax;
    p.alpha = alpha_from_pen(opt.pen);
    p.hops = opt.hops;
    if (opt.hood == "inf")
        p.hood = kHoodInfinite;
    else
        p.hood = static_cast<int32_t>(std::stol(opt.hood));
    p.hood_set = opt.hood_given;
    p.sigma = opt.sigma;
    p.seed = opt.seed;
    p.restarts = opt.restarts;
    p.weight_variant = opt.variant == "plus" ? WeightVariant::kPlus : WeightVariant::kMinus;
    p.dnc_grid = opt.dnc_grid;
    p.dnc_threshold = opt.dnc_threshold;
    return p;
}

int cmd_solve(const SolveOptions& opt) {
    const Instance inst = read_instance(opt.instance_path);
    const SolveParams params = to_params(opt);
    const SolveResult res = solve(inst, params);
    if (!res.success) {
        std::cerr << "solve failed: " << res.failure_reason << "\n";
        return 1;
    }
    const Solution sol = make_solution(inst, res.polygon, params.objective, res.report.score);
    const std::string text = serialize_solution(sol);
    if (opt.out_path.empty()) {
        std::cout << text;
    } else {
        write_text_file(opt.out_path, text);
        std::cout << inst.name << " " << objective_name(params.objective)
                  << " n=" << inst.size() << " score=" << format_score(res.report.score)
                  << " greedy=" << format_score(res.greedy_score)
                  << " t_greedy=" << format_score(res.timings.greedy_seconds)
                  << "s t_ls=" << format_score(res.timings.local_search_seconds)
                  << "s t_merge=" << format_score(res.timings.merge_seconds) << "s\n";
    }
    if (!opt.svg_path.empty()) {
        const std::string caption = inst.name + " " + objective_name(params.objective) +
                                    " score=" + format_score(res.report.score);
        write_text_file(opt.svg_path, render_svg(inst, &res.polygon, caption));
    }
    return 0;
}

int cmd_verify(const std::string& instance_path, const std::string& solution_path) {
    const Instance inst = read_instance(instance_path);
    const Solution sol = read_solution(solution_path);
    if (sol.instance_name != inst.name) {
        std::cout << "FAIL instance name mismatch: solution is for '" << sol.instance_name
                  << "'\n";
        return 1;
    }
    for (int32_t id : sol.vertices)
        if (id < 0 || id >= inst.size()) {
            std::cout << "FAIL vertex id " << id << " out of range\n";
            return 1;
        }
    const Polygon poly = Polygon::from_ids(inst, sol.vertices);
    const ScoreReport report = score_polygon(poly, inst, /*naive_check=*/true);
    if (!report.uses_all_points) {
        std::cout << "FAIL polygon does not visit every point exactly once\n";
        return 1;
    }
    if (!report.simple) {
        std::cout << "FAIL polygon is not simple\n";
        return 1;
    }
    if (std::abs(report.score - sol.stored_score) > 1e-9) {
        std::cout << "FAIL stored score " << format_score(sol.stored_score)
                  << " != recomputed " << format_score(report.score) << "\n";
        return 1;
    }
    std::cout << "OK " << inst.name << " " << objective_name(sol.objective)
              << " score=" << format_score(report.score) << "\n";
    return 0;
}

int cmd_score(const std::string& instance_path, const std::string& solution_path) {
    const Instance inst = read_instance(instance_path);
    const Solution sol = read_solution(solution_path);
    const Polygon poly = Polygon::from_ids(inst, sol.vertices);
    const ScoreReport report = score_polygon(poly, inst, /*naive_check=*/true);
    std::cout << format_score(report.score) << "\n";
    return report.simple && report.uses_all_points ? 0 : 1;
}

int cmd_generate(const std::string& type, int32_t n, uint64_t seed, const std::string& name,
                 const std::string& out_path) {
    Instance inst = type == "clustered" ? generate_clustered(n, seed, name)
                                        : generate_uniform(n, seed, name);
    if (out_path.empty())
        std::cout << serialize_instance(inst);
    else
        write_instance(inst, out_path);
    return 0;
}

int cmd_plot(const std::string& instance_path, const std::string& solution_path,
             const std::string& out_path) {
    const Instance inst = read_instance(instance_path);
    std::string caption = inst.name;
    Polygon poly;
    const Polygon* poly_ptr = nullptr;
    if (!solution_path.empty()) {
        const Solution sol = read_solution(solution_path);
        poly = Polygon::from_ids(inst, sol.vertices);
        poly_ptr = &poly;
        caption += std::string(" ") + objective_name(sol.objective) +
                   " score=" + format_score(sol.stored_score);
    }
    write_text_file(out_path, render_svg(inst, poly_ptr, caption));
    return 0;
}

int cmd_bench(const std::string& config_path, const std::string& preset,
              const std::string& out_path) {
    BenchConfig cfg;
    if (!preset.empty())
        cfg = bench_preset(preset);
    else
        cfg = parse_bench_config(read_text_file(config_path));
    int32_t threads = 1;
    if (const char* env = std::getenv("POLYG_THREADS")) {
        threads = std::max(1, std::atoi(env));
    }
    const std::vector<BenchRecord> records = run_bench(cfg, threads);
    std::string text = bench_tsv_header();
    for (const BenchRecord& r : records) text += bench_tsv_row(r);
    if (out_path.empty())
        std::cout << text;
    else
        write_text_file(out_path, text);
    int failures = 0;
    for (const BenchRecord& r : records)
        if (!r.ok) ++failures;
    if (failures > 0) {
        std::cerr << failures << " of " << records.size() << " runs failed\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"maximum/minimum area polygonalization of planar point sets"};
    app.require_subcommand(1);

    SolveOptions s;
    CLI::App* solve_cmd = app.add_subcommand("solve", "compute a polygonalization");
    solve_cmd->add_option("instance", s.instance_path, "instance file")->required();
    solve_cmd->add_option("--obj", s.objective, "objective: max or min")
        ->check(CLI::IsMember({"max", "min"}));
    solve_cmd->add_option("--pen", s.pen, "perimeter penalty divisor 1/alpha, 0 disables");
    solve_cmd->add_option("--hops", s.hops, "local search path length cap");
    CLI::Option* hood_opt =
        solve_cmd->add_option("--hood", s.hood, "candidate neighborhood radius or 'inf'");
    solve_cmd->add_option("--sigma", s.sigma, "weight noise level");
    solve_cmd->add_option("--seed", s.seed, "random seed");
    solve_cmd->add_option("--restarts", s.restarts, "independent attempts, best kept");
    solve_cmd->add_option("--weight-variant", s.variant, "penalty shape: minus or plus")
        ->check(CLI::IsMember({"minus", "plus"}));
    solve_cmd->add_option("--dnc-grid", s.dnc_grid, "partition boxes per axis (0 = auto)");
    solve_cmd->add_option("--dnc-threshold", s.dnc_threshold,
                          "instance size that triggers automatic partitioning");
    solve_cmd->add_option("--out", s.out_path, "solution output path (default stdout)");
    solve_cmd->add_option("--svg", s.svg_path, "also render the result as SVG");

    std::string v_inst, v_sol;
    CLI::App* verify_cmd = app.add_subcommand("verify", "check a solution file");
    verify_cmd->add_option("instance", v_inst, "instance file")->required();
    verify_cmd->add_option("solution", v_sol, "solution file")->required();

    std::string sc_inst, sc_sol;
    CLI::App* score_cmd = app.add_subcommand("score", "recompute a solution's score");
    score_cmd->add_option("instance", sc_inst, "instance file")->required();
    score_cmd->add_option("solution", sc_sol, "solution file")->required();

    std::string g_type = "uniform", g_name, g_out;
    int32_t g_n = 100;
    uint64_t g_seed = 1;
    CLI::App* gen_cmd = app.add_subcommand("generate", "generate a random instance");
    gen_cmd->add_option("--type", g_type, "uniform or clustered")
        ->check(CLI::IsMember({"uniform", "clustered"}));
    gen_cmd->add_option("--n", g_n, "point count")->required();
    gen_cmd->add_option("--seed", g_seed, "random seed");
    gen_cmd->add_option("--name", g_name, "instance name (default derived)");
    gen_cmd->add_option("--out", g_out, "output path (default stdout)");

    std::string p_inst, p_sol, p_out;
    CLI::App* plot_cmd = app.add_subcommand("plot", "render an instance or solution as SVG");
    plot_cmd->add_option("instance", p_inst, "instance file")->required();
    plot_cmd->add_option("solution", p_sol, "solution file (optional)");
    plot_cmd->add_option("--out", p_out, "output SVG path")->required();

    std::string b_config, b_preset, b_out;
    CLI::App* bench_cmd = app.add_subcommand("bench", "run a parameter sweep");
    CLI::Option* cfg_opt = bench_cmd->add_option("--config", b_config, "config file");
    CLI::Option* preset_opt =
        bench_cmd->add_option("--preset", b_preset, "alpha-sweep or sigma-sweep");
    cfg_opt->excludes(preset_opt);
    bench_cmd->add_option("--out", b_out, "TSV output path (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve_cmd->parsed()) {
            s.hood_given = hood_opt->count() > 0;
            return cmd_solve(s);
        }
        if (verify_cmd->parsed()) return cmd_verify(v_inst, v_sol);
        if (score_cmd->parsed()) return cmd_score(sc_inst, sc_sol);
        if (gen_cmd->parsed()) return cmd_generate(g_type, g_n, g_seed, g_name, g_out);
        if (plot_cmd->parsed()) return cmd_plot(p_inst, p_sol, p_out);
        if (bench_cmd->parsed()) {
            if (b_config.empty() && b_preset.empty())
                throw CLI::RequiredError("--config or --preset");
            return cmd_bench(b_config, b_preset, b_out);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
