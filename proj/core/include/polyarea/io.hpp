#pragma once

#include <string>
#include <string_view>

#include "polyarea/instance.hpp"
#include "polyarea/params.hpp"
#include "polyarea/polygon.hpp"

namespace polyarea {

// Canonical score rendering: fixed 9 decimals, used everywhere a score is
// written so identical runs produce identical bytes.
std::string format_score(double score);

// Versioned line format:
//   polyarea-instance 1
//   name <name>
//   count <n>
//   <id> <x> <y>            (n lines, ids 0..n-1 in order)
// A file not starting with the magic line is read as a plain point list:
// blank lines and #-comments skipped, rows of "x y" or "id x y".
Instance parse_instance_text(std::string_view text, std::string_view fallback_name);
Instance read_instance(const std::string& path);
std::string serialize_instance(const Instance& inst);
void write_instance(const Instance& inst, const std::string& path);

// Versioned line format:
//   polyarea-solution 1
//   instance <name>
//   objective <max|min>
//   count <m>
//   <id>                    (m lines)
//   score <fixed 9 decimals>
struct Solution {
    std::string instance_name;
    Objective objective = Objective::kMax;
    std::vector<int32_t> vertices;
    double stored_score = 0.0;
};

Solution make_solution(const Instance& inst, const Polygon& poly, Objective objective,
                       double score);
Solution parse_solution_text(std::string_view text);
Solution read_solution(const std::string& path);
std::string serialize_solution(const Solution& sol);
void write_solution(const Solution& sol, const std::string& path);

// Seeded generators over the [0, 10^6] square, all points distinct.
Instance generate_uniform(int32_t n, uint64_t seed, std::string name = "");
Instance generate_clustered(int32_t n, uint64_t seed, std::string name = "");

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

}  // namespace polyarea
