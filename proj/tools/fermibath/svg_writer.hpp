// svg_writer.hpp — Minimal polyline renderer for quick looks at the CSVs

#pragma once

#include <string>
#include <vector>

namespace fermibath::cli {

struct SvgSeries {
    std::string label;
    std::vector<double> values;
};

// One polyline per series over a shared abscissa; writes a standalone SVG.
void write_svg(const std::string& path, const std::string& title,
               const std::vector<double>& x, const std::vector<SvgSeries>& series);

} // namespace fermibath::cli
