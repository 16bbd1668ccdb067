#pragma once

#include <string>
#include <vector>

#include "polyarea/io.hpp"
#include "polyarea/solver.hpp"

namespace polyarea {

struct BenchRecord {
    std::string instance;
    int32_t n = 0;
    Objective objective = Objective::kMax;
    double pen = 90.0;  // 1/alpha; 0 means no penalty
    int32_t hops = 10;
    int32_t hood = 2;   // kHoodInfinite rendered as "inf"
    double sigma = 0.0;
    WeightVariant variant = WeightVariant::kMinus;
    uint64_t seed = 1;
    int32_t restarts = 1;
    bool ok = false;
    double greedy_score = 0.0;
    double final_score = 0.0;
    double greedy_seconds = 0.0;
    double ls_seconds = 0.0;
    double total_seconds = 0.0;
    std::string error;
};

std::string bench_tsv_header();
std::string bench_tsv_row(const BenchRecord& r);

struct BenchSource {
    std::string kind;  // "file", "uniform", "clustered"
    std::string path;
    int32_t n = 0;
    uint64_t seed = 0;
};

// A config is the cross product of every list below over all sources.
// Text form is line oriented: `instance <path>`, `uniform <n> <seed>`,
// `clustered <n> <seed>`, `objective ...`, `pen ...`, `hops ...`,
// `hood ...` (ints or `inf`), `sigma ...`, `variant ...`, `seed ...`,
// `restarts <k>`; blank lines and #-comments ignored.
struct BenchConfig {
    std::vector<BenchSource> sources;
    std::vector<Objective> objectives{Objective::kMax};
    std::vector<double> pens{90.0};
    std::vector<int32_t> hops{10};
    std::vector<int32_t> hoods{2};
    std::vector<double> sigmas{0.0};
    std::vector<WeightVariant> variants{WeightVariant::kMinus};
    std::vector<uint64_t> seeds{1};
    int32_t restarts = 1;
};

BenchConfig parse_bench_config(const std::string& text);

// Built-in grids: "alpha-sweep" (penalty and variant grid) and
// "sigma-sweep" (noise grid at single-hop local search).
BenchConfig bench_preset(const std::string& name);

// Runs every task, at most `threads` in parallel; records are returned in
// task order regardless of scheduling.
std::vector<BenchRecord> run_bench(const BenchConfig& config, int32_t threads);

double alpha_from_pen(double pen);

}  // namespace polyarea
