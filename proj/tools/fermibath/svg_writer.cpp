#include "svg_writer.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include "csv_writer.hpp"

namespace fermibath::cli {

namespace {

constexpr int kWidth = 840;
constexpr int kHeight = 520;
constexpr int kMargin = 60;

const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

} // namespace

void write_svg(const std::string& path, const std::string& title,
               const std::vector<double>& x, const std::vector<SvgSeries>& series)
{
    if (x.size() < 2 || series.empty()) {
        throw std::invalid_argument("write_svg: need at least two points and one series");
    }
    double xmin = x.front(), xmax = x.back();
    double ymin = series[0].values[0], ymax = ymin;
    for (const auto& s : series) {
        if (s.values.size() != x.size()) {
            throw std::invalid_argument("write_svg: series length mismatch");
        }
        for (double v : s.values) {
            ymin = std::min(ymin, v);
            ymax = std::max(ymax, v);
        }
    }
    if (ymax == ymin) {
        ymax = ymin + 1.0;
    }
    if (xmax == xmin) {
        xmax = xmin + 1.0;
    }

    const auto sx = [&](double v) {
        return kMargin + (v - xmin) / (xmax - xmin) * (kWidth - 2 * kMargin);
    };
    const auto sy = [&](double v) {
        return kHeight - kMargin - (v - ymin) / (ymax - ymin) * (kHeight - 2 * kMargin);
    };

    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot open SVG output: " + path);
    }
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
        << kHeight << "\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
        << "<text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">"
        << title << "</text>\n"
        << "<rect x=\"" << kMargin << "\" y=\"" << kMargin << "\" width=\""
        << kWidth - 2 * kMargin << "\" height=\"" << kHeight - 2 * kMargin
        << "\" fill=\"none\" stroke=\"#444\"/>\n";

    for (std::size_t s = 0; s < series.size(); ++s) {
        out << "<polyline fill=\"none\" stroke=\"" << kColors[s % 6]
            << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t k = 0; k < x.size(); ++k) {
            out << sx(x[k]) << "," << sy(series[s].values[k]) << " ";
        }
        out << "\"/>\n";
        out << "<text x=\"" << kWidth - kMargin + 4 << "\" y=\"" << kMargin + 16 * (s + 1)
            << "\" font-size=\"11\" fill=\"" << kColors[s % 6] << "\">" << series[s].label
            << "</text>\n";
    }

    out << "<text x=\"" << kMargin << "\" y=\"" << kHeight - kMargin + 16
        << "\" font-size=\"11\">" << format_number(xmin) << "</text>\n"
        << "<text x=\"" << kWidth - kMargin << "\" y=\"" << kHeight - kMargin + 16
        << "\" text-anchor=\"end\" font-size=\"11\">" << format_number(xmax) << "</text>\n"
        << "<text x=\"" << kMargin - 4 << "\" y=\"" << kHeight - kMargin
        << "\" text-anchor=\"end\" font-size=\"11\">" << format_number(ymin) << "</text>\n"
        << "<text x=\"" << kMargin - 4 << "\" y=\"" << kMargin + 4
        << "\" text-anchor=\"end\" font-size=\"11\">" << format_number(ymax) << "</text>\n"
        << "</svg>\n";
}

} // namespace fermibath::cli
