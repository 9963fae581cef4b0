#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace tda {

namespace {

const char* dim_color(int d) {
    switch (d) {
    case 0: return "black";
    case 1: return "red";
    case 2: return "blue";
    default: return "green";
    }
}

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", x);
    return buf;
}

double plot_limit(const Barcode& bc) {
    double limit = bc.epsilon_max;
    for (const auto& f : bc.features) {
        limit = std::max(limit, f.birth);
        if (!f.essential()) limit = std::max(limit, f.death);
    }
    return limit > 0 ? limit : 1.0;
}

} // namespace

std::string barcode_to_svg(const Barcode& bc) {
    const double limit = plot_limit(bc);
    const double inf_x = 1.05 * limit;
    const int width = 640, bar_gap = 6, margin = 40;
    const int height = margin * 2 + bar_gap * std::max<int>(1, static_cast<int>(bc.features.size()));
    const double scale = (width - 2.0 * margin) / inf_x;

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
        << "\">\n";
    out << "<line x1=\"" << margin << "\" y1=\"" << height - margin << "\" x2=\"" << width - margin
        << "\" y2=\"" << height - margin << "\" stroke=\"gray\"/>\n";

    // bars sorted by (dimension, birth) from the barcode order
    int row = 0;
    for (const auto& f : bc.features) {
        const double x1 = margin + f.birth * scale;
        const double x2 = margin + (f.essential() ? inf_x : f.death) * scale;
        const double y = margin + row * bar_gap;
        out << "<line class=\"bar\" x1=\"" << fmt(x1) << "\" y1=\"" << fmt(y) << "\" x2=\"" << fmt(x2)
            << "\" y2=\"" << fmt(y) << "\" stroke=\"" << dim_color(f.dimension)
            << "\" stroke-width=\"2\"/>\n";
        if (f.essential())
            out << "<path d=\"M" << fmt(x2) << " " << fmt(y - 3) << " L" << fmt(x2 + 5) << " " << fmt(y)
                << " L" << fmt(x2) << " " << fmt(y + 3) << " Z\" fill=\"" << dim_color(f.dimension)
                << "\"/>\n";
        ++row;
    }
    out << "</svg>\n";
    return out.str();
}

std::string diagram_to_svg(const Barcode& bc) {
    const double limit = plot_limit(bc);
    const double inf_y = 1.05 * limit;
    const int size = 480, margin = 40;
    const double scale = (size - 2.0 * margin) / inf_y;
    auto px = [&](double v) { return margin + v * scale; };
    auto py = [&](double v) { return size - margin - v * scale; };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
        << "\">\n";
    out << "<line x1=\"" << fmt(px(0)) << "\" y1=\"" << fmt(py(0)) << "\" x2=\"" << fmt(px(inf_y))
        << "\" y2=\"" << fmt(py(inf_y)) << "\" stroke=\"gray\" stroke-dasharray=\"4\"/>\n";
    for (const auto& f : bc.features) {
        if (f.essential()) {
            const double x = px(f.birth), y = py(inf_y);
            out << "<path class=\"pt\" d=\"M" << fmt(x) << " " << fmt(y - 4) << " L" << fmt(x - 4)
                << " " << fmt(y + 4) << " L" << fmt(x + 4) << " " << fmt(y + 4) << " Z\" fill=\""
                << dim_color(f.dimension) << "\"/>\n";
        } else {
            out << "<circle class=\"pt\" cx=\"" << fmt(px(f.birth)) << "\" cy=\"" << fmt(py(f.death))
                << "\" r=\"3\" fill=\"" << dim_color(f.dimension) << "\"/>\n";
        }
    }
    out << "</svg>\n";
    return out.str();
}

} // namespace tda
