#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace uavbs::svg {

struct Series {
    std::string label;
    std::string color;  // any SVG colour; empty picks from a fixed palette
    std::vector<double> values;  // normalized, plotted against sample index
};

/// Static line chart with a [0,1] y-axis, one polyline per series.
std::string render_line_chart(std::span<const Series> series, const std::string& title,
                              const std::string& x_label);

void emit_svg(std::span<const Series> series, const std::string& title, const std::string& x_label,
              const std::filesystem::path& path);

}  // namespace uavbs::svg
