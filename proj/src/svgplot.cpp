#include "mobifem/svgplot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace mobifem {

namespace {

constexpr int kWidth = 720;
constexpr int kHeight = 440;
constexpr int kMarginLeft = 70;
constexpr int kMarginRight = 20;
constexpr int kMarginTop = 40;
constexpr int kMarginBottom = 50;

const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4g", v);
    return buf;
}

struct Range {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();

    void include(double v) {
        if (!std::isfinite(v)) {
            return;
        }
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }

    void finalize() {
        if (!(lo <= hi)) {
            lo = 0.0;
            hi = 1.0;
        }
        if (lo == hi) {
            lo -= 0.5;
            hi += 0.5;
        }
    }
};

} // namespace

std::string render_line_chart(const std::string& title, const std::string& x_label,
                              const std::string& y_label,
                              const std::vector<PlotSeries>& series) {
    Range xr;
    Range yr;
    for (const auto& s : series) {
        for (double v : s.x) {
            xr.include(v);
        }
        for (double v : s.y) {
            yr.include(v);
        }
    }
    xr.finalize();
    yr.finalize();

    const double plot_w = kWidth - kMarginLeft - kMarginRight;
    const double plot_h = kHeight - kMarginTop - kMarginBottom;
    auto to_px = [&](double x) {
        return kMarginLeft + (x - xr.lo) / (xr.hi - xr.lo) * plot_w;
    };
    auto to_py = [&](double y) {
        return kMarginTop + plot_h - (y - yr.lo) / (yr.hi - yr.lo) * plot_h;
    };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(kWidth) +
           "\" height=\"" + std::to_string(kHeight) + "\" font-family=\"sans-serif\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg += "<text x=\"" + std::to_string(kWidth / 2) +
           "\" y=\"22\" text-anchor=\"middle\" font-size=\"16\">" + title + "</text>\n";

    // axes
    svg += "<line x1=\"" + fmt(kMarginLeft) + "\" y1=\"" + fmt(kMarginTop) + "\" x2=\"" +
           fmt(kMarginLeft) + "\" y2=\"" + fmt(kMarginTop + plot_h) +
           "\" stroke=\"black\"/>\n";
    svg += "<line x1=\"" + fmt(kMarginLeft) + "\" y1=\"" + fmt(kMarginTop + plot_h) +
           "\" x2=\"" + fmt(kMarginLeft + plot_w) + "\" y2=\"" + fmt(kMarginTop + plot_h) +
           "\" stroke=\"black\"/>\n";

    constexpr int kTicks = 5;
    for (int i = 0; i <= kTicks; ++i) {
        const double fx = xr.lo + (xr.hi - xr.lo) * i / kTicks;
        const double px = to_px(fx);
        svg += "<line x1=\"" + fmt(px) + "\" y1=\"" + fmt(kMarginTop + plot_h) + "\" x2=\"" +
               fmt(px) + "\" y2=\"" + fmt(kMarginTop + plot_h + 5) + "\" stroke=\"black\"/>\n";
        svg += "<text x=\"" + fmt(px) + "\" y=\"" + fmt(kMarginTop + plot_h + 18) +
               "\" text-anchor=\"middle\" font-size=\"11\">" + fmt(fx) + "</text>\n";

        const double fy = yr.lo + (yr.hi - yr.lo) * i / kTicks;
        const double py = to_py(fy);
        svg += "<line x1=\"" + fmt(kMarginLeft - 5) + "\" y1=\"" + fmt(py) + "\" x2=\"" +
               fmt(kMarginLeft) + "\" y2=\"" + fmt(py) + "\" stroke=\"black\"/>\n";
        svg += "<text x=\"" + fmt(kMarginLeft - 8) + "\" y=\"" + fmt(py + 4) +
               "\" text-anchor=\"end\" font-size=\"11\">" + fmt(fy) + "</text>\n";
        svg += "<line x1=\"" + fmt(kMarginLeft) + "\" y1=\"" + fmt(py) + "\" x2=\"" +
               fmt(kMarginLeft + plot_w) + "\" y2=\"" + fmt(py) +
               "\" stroke=\"#dddddd\"/>\n";
    }

    svg += "<text x=\"" + std::to_string(kMarginLeft + static_cast<int>(plot_w) / 2) +
           "\" y=\"" + std::to_string(kHeight - 12) +
           "\" text-anchor=\"middle\" font-size=\"13\">" + x_label + "</text>\n";
    svg += "<text x=\"16\" y=\"" + std::to_string(kMarginTop + static_cast<int>(plot_h) / 2) +
           "\" text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(-90 16 " +
           std::to_string(kMarginTop + static_cast<int>(plot_h) / 2) + ")\">" + y_label +
           "</text>\n";

    for (std::size_t si = 0; si < series.size(); ++si) {
        const auto& s = series[si];
        const char* color = kColors[si % (sizeof(kColors) / sizeof(kColors[0]))];
        std::string points;
        for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
            if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) {
                continue;
            }
            points += fmt(to_px(s.x[i])) + "," + fmt(to_py(s.y[i])) + " ";
        }
        svg += "<polyline fill=\"none\" stroke=\"" + std::string(color) +
               "\" stroke-width=\"2\" points=\"" + points + "\"/>\n";

        const double ly = kMarginTop + 14.0 + 16.0 * static_cast<double>(si);
        svg += "<line x1=\"" + fmt(kMarginLeft + plot_w - 150) + "\" y1=\"" + fmt(ly - 4) +
               "\" x2=\"" + fmt(kMarginLeft + plot_w - 125) + "\" y2=\"" + fmt(ly - 4) +
               "\" stroke=\"" + color + "\" stroke-width=\"2\"/>\n";
        svg += "<text x=\"" + fmt(kMarginLeft + plot_w - 120) + "\" y=\"" + fmt(ly) +
               "\" font-size=\"12\">" + s.label + "</text>\n";
    }

    svg += "</svg>\n";
    return svg;
}

} // namespace mobifem
