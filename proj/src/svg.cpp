#include "uavbs/svg.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <sstream>

#include "uavbs/io.hpp"

namespace uavbs::svg {
namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 420.0;
constexpr double kLeft = 60.0;
constexpr double kRight = 150.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 50.0;

constexpr std::array<const char*, 6> kPalette{"#1f77b4", "#e6b800", "#2ca02c",
                                              "#d62728", "#9467bd", "#8c564b"};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string escape(const std::string& text) {
    std::string out;
    for (char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

std::string render_line_chart(std::span<const Series> series, const std::string& title,
                              const std::string& x_label) {
    const double plot_w = kWidth - kLeft - kRight;
    const double plot_h = kHeight - kTop - kBottom;
    std::size_t max_len = 1;
    for (const auto& s : series) max_len = std::max(max_len, s.values.size());
    const double x_span = max_len > 1 ? static_cast<double>(max_len - 1) : 1.0;

    auto px = [&](std::size_t i) { return kLeft + plot_w * static_cast<double>(i) / x_span; };
    auto py = [&](double v) { return kTop + plot_h * (1.0 - std::clamp(v, 0.0, 1.0)); };

    std::ostringstream o;
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n";
    o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    o << "<text x=\"" << fmt(kLeft) << "\" y=\"24\" font-family=\"sans-serif\" font-size=\"15\">"
      << escape(title) << "</text>\n";

    for (int tick = 0; tick <= 4; ++tick) {
        const double v = tick / 4.0;
        o << "<line x1=\"" << fmt(kLeft) << "\" y1=\"" << fmt(py(v)) << "\" x2=\""
          << fmt(kLeft + plot_w) << "\" y2=\"" << fmt(py(v))
          << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
        o << "<text x=\"" << fmt(kLeft - 8) << "\" y=\"" << fmt(py(v) + 4)
          << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"end\">" << fmt(v)
          << "</text>\n";
    }
    const std::size_t x_step = std::max<std::size_t>(1, max_len / 8);
    for (std::size_t i = 0; i < max_len; i += x_step) {
        o << "<text x=\"" << fmt(px(i)) << "\" y=\"" << fmt(kTop + plot_h + 16)
          << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">" << i
          << "</text>\n";
    }
    o << "<rect x=\"" << fmt(kLeft) << "\" y=\"" << fmt(kTop) << "\" width=\"" << fmt(plot_w)
      << "\" height=\"" << fmt(plot_h) << "\" fill=\"none\" stroke=\"black\"/>\n";
    o << "<text x=\"" << fmt(kLeft + plot_w / 2) << "\" y=\"" << fmt(kHeight - 12)
      << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">" << escape(x_label)
      << "</text>\n";

    for (std::size_t k = 0; k < series.size(); ++k) {
        const auto& s = series[k];
        const std::string color = s.color.empty() ? kPalette[k % kPalette.size()] : s.color;
        o << "<polyline fill=\"none\" stroke=\"" << escape(color) << "\" stroke-width=\"2\" points=\"";
        for (std::size_t i = 0; i < s.values.size(); ++i) {
            if (i) o << ' ';
            o << fmt(px(i)) << ',' << fmt(py(s.values[i]));
        }
        o << "\"/>\n";
        const double ly = kTop + 16.0 + 18.0 * static_cast<double>(k);
        const double lx = kLeft + plot_w + 12.0;
        o << "<line x1=\"" << fmt(lx) << "\" y1=\"" << fmt(ly) << "\" x2=\"" << fmt(lx + 18)
          << "\" y2=\"" << fmt(ly) << "\" stroke=\"" << escape(color) << "\" stroke-width=\"2\"/>\n";
        o << "<text x=\"" << fmt(lx + 24) << "\" y=\"" << fmt(ly + 4)
          << "\" font-family=\"sans-serif\" font-size=\"11\">" << escape(s.label) << "</text>\n";
    }
    o << "</svg>\n";
    return o.str();
}

void emit_svg(std::span<const Series> series, const std::string& title, const std::string& x_label,
              const std::filesystem::path& path) {
    io::write_file(path, render_line_chart(series, title, x_label));
}

}  // namespace uavbs::svg
