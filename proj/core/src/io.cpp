#include "polyarea/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "polyarea/rng.hpp"

namespace polyarea {

namespace {

std::vector<std::string> split_lines(std::string_view text) {
    std::vector<std::string> lines;
    size_t start = 0;
    while (start <= text.size()) {
        size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            if (start < text.size()) lines.emplace_back(text.substr(start));
            break;
        }
        lines.emplace_back(text.substr(start, end - start));
        start = end + 1;
    }
    for (std::string& l : lines)
        if (!l.empty() && l.back() == '\r') l.pop_back();
    return lines;
}

int64_t parse_int(const std::string& tok, const char* what, size_t line_no) {
    size_t pos = 0;
    int64_t v = 0;
    try {
        v = std::stoll(tok, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != tok.size() || tok.empty())
        throw std::runtime_error("line " + std::to_string(line_no) + ": bad " + what + " '" +
                                 tok + "'");
    return v;
}

std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> toks;
    std::string t;
    while (in >> t) toks.push_back(t);
    return toks;
}

Instance parse_plain(const std::vector<std::string>& lines, std::string_view fallback_name) {
    std::vector<Point> pts;
    for (size_t i = 0; i < lines.size(); ++i) {
        const std::string& line = lines[i];
        if (line.empty() || line[0] == '#') continue;
        const auto toks = tokens_of(line);
        if (toks.empty()) continue;
        Point p;
        if (toks.size() == 2) {
            p.x = parse_int(toks[0], "x coordinate", i + 1);
            p.y = parse_int(toks[1], "y coordinate", i + 1);
        } else if (toks.size() == 3) {
            p.id = static_cast<int32_t>(parse_int(toks[0], "point id", i + 1));
            p.x = parse_int(toks[1], "x coordinate", i + 1);
            p.y = parse_int(toks[2], "y coordinate", i + 1);
        } else {
            throw std::runtime_error("line " + std::to_string(i + 1) +
                                     ": expected 'x y' or 'id x y'");
        }
        pts.push_back(p);
    }
    return make_instance(std::string(fallback_name), std::move(pts));
}

const std::string& expect_prefix(const std::vector<std::string>& lines, size_t idx,
                                 std::string_view prefix) {
    if (idx >= lines.size())
        throw std::runtime_error("truncated file: missing '" + std::string(prefix) + "' line");
    if (lines[idx].substr(0, prefix.size()) != prefix)
        throw std::runtime_error("line " + std::to_string(idx + 1) + ": expected '" +
                                 std::string(prefix) + "'");
    return lines[idx];
}

}  // namespace

std::string format_score(double score) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9f", score);
    return buf;
}

Instance parse_instance_text(std::string_view text, std::string_view fallback_name) {
    const auto lines = split_lines(text);
    if (lines.empty()) throw std::runtime_error("empty instance file");
    if (lines[0] != "polyarea-instance 1") return parse_plain(lines, fallback_name);

    const std::string& name_line = expect_prefix(lines, 1, "name ");
    const std::string name = name_line.substr(5);
    const std::string& count_line = expect_prefix(lines, 2, "count ");
    const int64_t n = parse_int(count_line.substr(6), "count", 3);
    if (n < 3 || static_cast<size_t>(n) > lines.size())
        throw std::runtime_error("bad point count " + std::to_string(n));

    std::vector<Point> pts;
    pts.reserve(static_cast<size_t>(n));
    for (int64_t i = 0; i < n; ++i) {
        const size_t row = static_cast<size_t>(3 + i);
        if (row >= lines.size()) throw std::runtime_error("truncated file: missing points");
        const auto toks = tokens_of(lines[row]);
        if (toks.size() != 3)
            throw std::runtime_error("line " + std::to_string(row + 1) + ": expected 'id x y'");
        Point p;
        p.id = static_cast<int32_t>(parse_int(toks[0], "point id", row + 1));
        p.x = parse_int(toks[1], "x coordinate", row + 1);
        p.y = parse_int(toks[2], "y coordinate", row + 1);
        pts.push_back(p);
    }
    for (size_t row = static_cast<size_t>(3 + n); row < lines.size(); ++row)
        if (!lines[row].empty())
            throw std::runtime_error("line " + std::to_string(row + 1) + ": trailing content");
    return make_instance(name, std::move(pts));
}

std::string serialize_instance(const Instance& inst) {
    std::string out = "polyarea-instance 1\n";
    out += "name " + inst.name + "\n";
    out += "count " + std::to_string(inst.size()) + "\n";
    for (const Point& p : inst.points)
        out += std::to_string(p.id) + " " + std::to_string(p.x) + " " + std::to_string(p.y) +
               "\n";
    return out;
}

Solution make_solution(const Instance& inst, const Polygon& poly, Objective objective,
                       double score) {
    Solution sol;
    sol.instance_name = inst.name;
    sol.objective = objective;
    sol.vertices = poly.vertices();
    sol.stored_score = score;
    return sol;
}

Solution parse_solution_text(std::string_view text) {
    const auto lines = split_lines(text);
    if (lines.empty() || lines[0] != "polyarea-solution 1")
        throw std::runtime_error("not a polyarea-solution file");
    Solution sol;
    sol.instance_name = expect_prefix(lines, 1, "instance ").substr(9);
    const std::string obj = expect_prefix(lines, 2, "objective ").substr(10);
    if (obj == "max")
        sol.objective = Objective::kMax;
    else if (obj == "min")
        sol.objective = Objective::kMin;
    else
        throw std::runtime_error("line 3: unknown objective '" + obj + "'");
    const int64_t m = parse_int(expect_prefix(lines, 3, "count ").substr(6), "count", 4);
    if (m < 3 || static_cast<size_t>(m) > lines.size())
        throw std::runtime_error("bad vertex count " + std::to_string(m));
    sol.vertices.reserve(static_cast<size_t>(m));
    for (int64_t i = 0; i < m; ++i) {
        const size_t row = static_cast<size_t>(4 + i);
        if (row >= lines.size()) throw std::runtime_error("truncated file: missing vertices");
        sol.vertices.push_back(
            static_cast<int32_t>(parse_int(lines[row], "vertex id", row + 1)));
    }
    const std::string& score_line = expect_prefix(lines, static_cast<size_t>(4 + m), "score ");
    try {
        sol.stored_score = std::stod(score_line.substr(6));
    } catch (const std::exception&) {
        throw std::runtime_error("bad score '" + score_line.substr(6) + "'");
    }
    return sol;
}

std::string serialize_solution(const Solution& sol) {
    std::string out = "polyarea-solution 1\n";
    out += "instance " + sol.instance_name + "\n";
    out += std::string("objective ") + objective_name(sol.objective) + "\n";
    out += "count " + std::to_string(sol.vertices.size()) + "\n";
    for (int32_t id : sol.vertices) out += std::to_string(id) + "\n";
    out += "score " + format_score(sol.stored_score) + "\n";
    return out;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::string& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) throw std::runtime_error("write failed for " + path);
}

namespace {

std::string stem_of(const std::string& path) {
    const size_t slash = path.find_last_of("/\\");
    std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
    const size_t dot = base.find_last_of('.');
    if (dot != std::string::npos && dot > 0) base = base.substr(0, dot);
    return base.empty() ? "instance" : base;
}

}  // namespace

Instance read_instance(const std::string& path) {
    return parse_instance_text(read_text_file(path), stem_of(path));
}

void write_instance(const Instance& inst, const std::string& path) {
    write_text_file(path, serialize_instance(inst));
}

Solution read_solution(const std::string& path) {
    return parse_solution_text(read_text_file(path));
}

void write_solution(const Solution& sol, const std::string& path) {
    write_text_file(path, serialize_solution(sol));
}

namespace {

constexpr int64_t kGenSpan = 1'000'000;

}  // namespace

Instance generate_uniform(int32_t n, uint64_t seed, std::string name) {
    if (n < 3) throw std::invalid_argument("generator needs n >= 3");
    if (name.empty()) name = "uniform-" + std::to_string(n) + "-s" + std::to_string(seed);
    Rng rng(splitmix64(seed));
    std::set<std::pair<int64_t, int64_t>> used;
    std::vector<Point> pts;
    pts.reserve(static_cast<size_t>(n));
    while (pts.size() < static_cast<size_t>(n)) {
        const int64_t x = static_cast<int64_t>(rng.next_below(kGenSpan + 1));
        const int64_t y = static_cast<int64_t>(rng.next_below(kGenSpan + 1));
        if (!used.emplace(x, y).second) continue;
        pts.push_back({x, y, static_cast<int32_t>(pts.size())});
    }
    return make_instance(std::move(name), std::move(pts));
}

Instance generate_clustered(int32_t n, uint64_t seed, std::string name) {
    if (n < 3) throw std::invalid_argument("generator needs n >= 3");
    if (name.empty()) name = "clustered-" + std::to_string(n) + "-s" + std::to_string(seed);
    Rng rng(splitmix64(seed ^ 0xc105ead5ull));
    const int32_t clusters =
        std::max<int32_t>(2, static_cast<int32_t>(std::llround(std::sqrt(static_cast<double>(n)) / 2.0)));
    std::vector<std::pair<double, double>> centers;
    centers.reserve(static_cast<size_t>(clusters));
    for (int32_t c = 0; c < clusters; ++c)
        centers.emplace_back(static_cast<double>(rng.next_below(kGenSpan + 1)),
                             static_cast<double>(rng.next_below(kGenSpan + 1)));
    const double spread = static_cast<double>(kGenSpan) / (3.0 * std::sqrt(static_cast<double>(clusters)));

    std::set<std::pair<int64_t, int64_t>> used;
    std::vector<Point> pts;
    pts.reserve(static_cast<size_t>(n));
    while (pts.size() < static_cast<size_t>(n)) {
        const auto& [cx, cy] = centers[static_cast<size_t>(rng.next_below(static_cast<uint64_t>(clusters)))];
        const double gx = cx + rng.next_gaussian(spread);
        const double gy = cy + rng.next_gaussian(spread);
        const int64_t x = std::clamp<int64_t>(static_cast<int64_t>(std::llround(gx)), 0, kGenSpan);
        const int64_t y = std::clamp<int64_t>(static_cast<int64_t>(std::llround(gy)), 0, kGenSpan);
        if (!used.emplace(x, y).second) continue;
        pts.push_back({x, y, static_cast<int32_t>(pts.size())});
    }
    return make_instance(std::move(name), std::move(pts));
}

}  // namespace polyarea
