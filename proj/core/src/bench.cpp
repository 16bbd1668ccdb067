#include "polyarea/bench.hpp"

#include <atomic>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace polyarea {

double alpha_from_pen(double pen) {
    if (pen < 0) throw std::invalid_argument("pen must be >= 0");
    return pen == 0 ? 0.0 : 1.0 / pen;
}

namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

std::string hood_str(int32_t hood) {
    return hood == kHoodInfinite ? "inf" : std::to_string(hood);
}

}  // namespace

std::string bench_tsv_header() {
    return "instance\tn\tobjective\tpen\thops\thood\tsigma\tvariant\tseed\trestarts\tok\t"
           "greedy_score\tfinal_score\tgreedy_s\tls_s\ttotal_s\terror\n";
}

std::string bench_tsv_row(const BenchRecord& r) {
    std::string out;
    out += r.instance + "\t" + std::to_string(r.n) + "\t" + objective_name(r.objective) +
           "\t" + fmt(r.pen) + "\t" + std::to_string(r.hops) + "\t" + hood_str(r.hood) +
           "\t" + fmt(r.sigma) + "\t" + variant_name(r.variant) + "\t" +
           std::to_string(r.seed) + "\t" + std::to_string(r.restarts) + "\t" +
           (r.ok ? "1" : "0") + "\t" + format_score(r.greedy_score) + "\t" +
           format_score(r.final_score) + "\t" + fmt(r.greedy_seconds) + "\t" +
           fmt(r.ls_seconds) + "\t" + fmt(r.total_seconds) + "\t" + r.error + "\n";
    return out;
}

BenchConfig parse_bench_config(const std::string& text) {
    BenchConfig cfg;
    bool saw_objective = false, saw_pen = false, saw_hops = false, saw_hood = false;
    bool saw_sigma = false, saw_variant = false, saw_seed = false;
    std::istringstream in(text);
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string key;
        ls >> key;
        auto fail = [&](const std::string& why) {
            throw std::runtime_error("bench config line " + std::to_string(line_no) + ": " +
                                     why);
        };
        if (key == "instance") {
            BenchSource s;
            s.kind = "file";
            ls >> s.path;
            if (s.path.empty()) fail("missing path");
            cfg.sources.push_back(s);
        } else if (key == "uniform" || key == "clustered") {
            BenchSource s;
            s.kind = key;
            if (!(ls >> s.n >> s.seed)) fail("expected '<n> <seed>'");
            cfg.sources.push_back(s);
        } else if (key == "objective") {
            if (!saw_objective) cfg.objectives.clear();
            saw_objective = true;
            std::string v;
            while (ls >> v) {
                if (v == "max")
                    cfg.objectives.push_back(Objective::kMax);
                else if (v == "min")
                    cfg.objectives.push_back(Objective::kMin);
                else
                    fail("unknown objective '" + v + "'");
            }
        } else if (key == "pen") {
            if (!saw_pen) cfg.pens.clear();
            saw_pen = true;
            double v;
            while (ls >> v) cfg.pens.push_back(v);
        } else if (key == "hops") {
            if (!saw_hops) cfg.hops.clear();
            saw_hops = true;
            int32_t v;
            while (ls >> v) cfg.hops.push_back(v);
        } else if (key == "hood") {
            if (!saw_hood) cfg.hoods.clear();
            saw_hood = true;
            std::string v;
            while (ls >> v) {
                if (v == "inf")
                    cfg.hoods.push_back(kHoodInfinite);
                else
                    cfg.hoods.push_back(static_cast<int32_t>(std::stol(v)));
            }
        } else if (key == "sigma") {
            if (!saw_sigma) cfg.sigmas.clear();
            saw_sigma = true;
            double v;
            while (ls >> v) cfg.sigmas.push_back(v);
        } else if (key == "variant") {
            if (!saw_variant) cfg.variants.clear();
            saw_variant = true;
            std::string v;
            while (ls >> v) {
                if (v == "minus")
                    cfg.variants.push_back(WeightVariant::kMinus);
                else if (v == "plus")
                    cfg.variants.push_back(WeightVariant::kPlus);
                else
                    fail("unknown variant '" + v + "'");
            }
        } else if (key == "seed") {
            if (!saw_seed) cfg.seeds.clear();
            saw_seed = true;
            uint64_t v;
            while (ls >> v) cfg.seeds.push_back(v);
        } else if (key == "restarts") {
            if (!(ls >> cfg.restarts)) fail("expected '<k>'");
        } else {
            fail("unknown key '" + key + "'");
        }
    }
    if (cfg.sources.empty()) throw std::runtime_error("bench config lists no instances");
    return cfg;
}

BenchConfig bench_preset(const std::string& name) {
    if (name == "alpha-sweep") {
        return parse_bench_config(
            "uniform 500 42\n"
            "objective max min\n"
            "pen 10 30 90 270\n"
            "variant minus plus\n"
            "seed 1 2 3\n");
    }
    if (name == "sigma-sweep") {
        return parse_bench_config(
            "uniform 100 42\n"
            "uniform 500 42\n"
            "objective max min\n"
            "hops 1\n"
            "sigma 0 0.2 0.5 0.8\n"
            "seed 1 2 3\n");
    }
    throw std::invalid_argument("unknown bench preset '" + name + "'");
}

std::vector<BenchRecord> run_bench(const BenchConfig& cfg, int32_t threads) {
    std::vector<Instance> instances;
    instances.reserve(cfg.sources.size());
    for (const BenchSource& s : cfg.sources) {
        if (s.kind == "file")
            instances.push_back(read_instance(s.path));
        else if (s.kind == "uniform")
            instances.push_back(generate_uniform(s.n, s.seed));
        else
            instances.push_back(generate_clustered(s.n, s.seed));
    }

    struct Task {
        size_t source;
        Objective objective;
        double pen;
        int32_t hops;
        int32_t hood;
        double sigma;
        WeightVariant variant;
        uint64_t seed;
    };
    std::vector<Task> tasks;
    for (size_t s = 0; s < cfg.sources.size(); ++s)
        for (Objective obj : cfg.objectives)
            for (double pen : cfg.pens)
                for (int32_t hops : cfg.hops)
                    for (int32_t hood : cfg.hoods)
                        for (double sigma : cfg.sigmas)
                            for (WeightVariant variant : cfg.variants)
                                for (uint64_t seed : cfg.seeds)
                                    tasks.push_back(
                                        {s, obj, pen, hops, hood, sigma, variant, seed});

    std::vector<BenchRecord> records(tasks.size());
    std::atomic<size_t> cursor{0};
    auto worker = [&]() {
        for (;;) {
            const size_t t = cursor.fetch_add(1);
            if (t >= tasks.size()) return;
            const Task& task = tasks[t];
            const Instance& inst = instances[task.source];
            BenchRecord rec;
            rec.instance = inst.name;
            rec.n = inst.size();
            rec.objective = task.objective;
            rec.pen = task.pen;
            rec.hops = task.hops;
            rec.hood = task.hood;
            rec.sigma = task.sigma;
            rec.variant = task.variant;
            rec.seed = task.seed;
            rec.restarts = cfg.restarts;
            SolveParams params;
            params.objective = task.objective;
            params.alpha = alpha_from_pen(task.pen);
            params.hops = task.hops;
            params.hood = task.hood;
            params.hood_set = true;
            params.sigma = task.sigma;
            params.seed = task.seed;
            params.weight_variant = task.variant;
            params.restarts = cfg.restarts;
            try {
                const SolveResult res = solve(inst, params);
                rec.ok = res.success;
                rec.greedy_score = res.greedy_score;
                rec.final_score = res.report.score;
                rec.greedy_seconds = res.timings.greedy_seconds;
                rec.ls_seconds = res.timings.local_search_seconds;
                rec.total_seconds = res.timings.greedy_seconds +
                                    res.timings.local_search_seconds +
                                    res.timings.merge_seconds;
                if (!res.success) rec.error = res.failure_reason;
            } catch (const std::exception& e) {
                rec.ok = false;
                rec.error = e.what();
            }
            records[t] = std::move(rec);
        }
    };

    const int32_t n_threads =
        std::max<int32_t>(1, std::min<int32_t>(threads, static_cast<int32_t>(tasks.size())));
    if (n_threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(n_threads));
        for (int32_t i = 0; i < n_threads; ++i) pool.emplace_back(worker);
        for (std::thread& th : pool) th.join();
    }
    return records;
}

}  // namespace polyarea
