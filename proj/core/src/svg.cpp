#include "polyarea/svg.hpp"

#include <algorithm>
#include <cstdio>

namespace polyarea {

namespace {

std::string fmt2(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

}  // namespace

std::string render_svg(const Instance& inst, const Polygon* poly, std::string_view caption) {
    int64_t min_x = inst.points[0].x, max_x = min_x;
    int64_t min_y = inst.points[0].y, max_y = min_y;
    for (const Point& p : inst.points) {
        min_x = std::min(min_x, p.x);
        max_x = std::max(max_x, p.x);
        min_y = std::min(min_y, p.y);
        max_y = std::max(max_y, p.y);
    }
    const double extent =
        static_cast<double>(std::max({max_x - min_x, max_y - min_y, int64_t{1}}));
    const double scale = 960.0 / extent;
    auto sx = [&](int64_t x) { return 20.0 + static_cast<double>(x - min_x) * scale; };
    auto sy = [&](int64_t y) { return 20.0 + static_cast<double>(max_y - y) * scale; };

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"1000\" height=\"1040\" "
           "viewBox=\"0 0 1000 1040\">\n";
    out += "<rect width=\"1000\" height=\"1040\" fill=\"white\"/>\n";

    if (poly) {
        out += "<path d=\"";
        for (int32_t i = 0; i < poly->size(); ++i) {
            const Point& p = inst.point(poly->vertex(i));
            out += (i == 0 ? "M" : " L");
            out += fmt2(sx(p.x)) + "," + fmt2(sy(p.y));
        }
        out += " Z\" fill=\"#7aa6d2\" fill-opacity=\"0.45\" stroke=\"#1f4e79\" "
               "stroke-width=\"1\"/>\n";
    }
    for (const Point& p : inst.points)
        out += "<circle cx=\"" + fmt2(sx(p.x)) + "\" cy=\"" + fmt2(sy(p.y)) +
               "\" r=\"1.5\" fill=\"#202020\"/>\n";
    out += "<text x=\"20\" y=\"1030\" font-family=\"monospace\" font-size=\"16\">" +
           std::string(caption) + "</text>\n";
    out += "</svg>\n";
    return out;
}

}  // namespace polyarea
