#pragma once

#include <string>
#include <vector>

namespace mobifem {

struct PlotSeries {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
};

/// Renders a simple SVG line chart with axes, tick labels, and a legend.
/// Output is deterministic text. Non-finite samples are skipped.
std::string render_line_chart(const std::string& title, const std::string& x_label,
                              const std::string& y_label,
                              const std::vector<PlotSeries>& series);

} // namespace mobifem
