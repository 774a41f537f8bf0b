#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace pzcli {

/// Serialize a double with 17 significant digits (round-trip exact).
inline std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return std::string(buf);
}

/// One in-memory CSV: a mandatory header line and pre-rendered data lines.
struct CsvTable {
    std::string header;
    std::vector<std::string> rows;
};

/// Write the table under dir/name; creates dir if missing. Returns the path.
inline std::filesystem::path write_csv(const std::filesystem::path& dir,
                                       const std::string& name,
                                       const CsvTable& table) {
    std::filesystem::create_directories(dir);
    const std::filesystem::path path = dir / name;
    std::ofstream out(path, std::ios::binary); // binary: byte-stable newlines
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << table.header << "\n";
    for (const auto& row : table.rows) out << row << "\n";
    return path;
}

/// A named y-series for the SVG plotter; paired index-wise with the x values.
struct Series {
    std::string label;
    std::vector<double> y;
};

/// Minimal static line plot: fixed 800x480 canvas, light frame, one polyline
/// per series, min/max tick labels. Non-finite samples break the polyline.
inline std::filesystem::path write_svg(const std::filesystem::path& dir,
                                       const std::string& name,
                                       const std::string& title,
                                       const std::vector<double>& x,
                                       const std::vector<Series>& series) {
    std::filesystem::create_directories(dir);
    const std::filesystem::path path = dir / name;

    double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
    bool any = false;
    for (const double v : x) {
        if (!std::isfinite(v)) continue;
        if (!any || v < xmin) xmin = v;
        if (!any || v > xmax) xmax = v;
        any = true;
    }
    bool any_y = false;
    for (const auto& s : series)
        for (const double v : s.y) {
            if (!std::isfinite(v)) continue;
            if (!any_y || v < ymin) ymin = v;
            if (!any_y || v > ymax) ymax = v;
            any_y = true;
        }
    if (!any || !any_y) { xmin = ymin = 0; xmax = ymax = 1; }
    if (xmax == xmin) xmax = xmin + 1;
    if (ymax == ymin) ymax = ymin + 1;

    const double W = 800, H = 480, L = 70, R = 20, T = 40, B = 50;
    const auto px = [&](double v) { return L + (v - xmin) / (xmax - xmin) * (W - L - R); };
    const auto py = [&](double v) { return H - B - (v - ymin) / (ymax - ymin) * (H - T - B); };
    static const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd"};

    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << "<svg xmlns='http://www.w3.org/2000/svg' width='" << W << "' height='" << H
        << "' viewBox='0 0 " << W << " " << H << "'>\n"
        << "<rect width='" << W << "' height='" << H << "' fill='white'/>\n"
        << "<text x='" << W / 2 << "' y='24' text-anchor='middle' font-family='sans-serif'"
        << " font-size='16'>" << title << "</text>\n"
        << "<rect x='" << L << "' y='" << T << "' width='" << W - L - R << "' height='"
        << H - T - B << "' fill='none' stroke='#888'/>\n";
    out << "<text x='" << L << "' y='" << H - B + 18
        << "' font-family='sans-serif' font-size='11'>" << fmt17(xmin) << "</text>\n"
        << "<text x='" << W - R << "' y='" << H - B + 18
        << "' text-anchor='end' font-family='sans-serif' font-size='11'>" << fmt17(xmax)
        << "</text>\n"
        << "<text x='" << L - 6 << "' y='" << H - B
        << "' text-anchor='end' font-family='sans-serif' font-size='11'>" << fmt17(ymin)
        << "</text>\n"
        << "<text x='" << L - 6 << "' y='" << T + 10
        << "' text-anchor='end' font-family='sans-serif' font-size='11'>" << fmt17(ymax)
        << "</text>\n";
    for (size_t si = 0; si < series.size(); ++si) {
        const auto& s = series[si];
        const char* color = kColors[si % 4];
        std::string points;
        bool open = false;
        const size_t n = std::min(x.size(), s.y.size());
        for (size_t i = 0; i < n; ++i) {
            if (!std::isfinite(x[i]) || !std::isfinite(s.y[i])) {
                if (open && !points.empty())
                    out << "<polyline fill='none' stroke='" << color
                        << "' stroke-width='1.5' points='" << points << "'/>\n";
                points.clear();
                open = false;
                continue;
            }
            char buf[64];
            std::snprintf(buf, sizeof(buf), "%.2f,%.2f ", px(x[i]), py(s.y[i]));
            points += buf;
            open = true;
        }
        if (open && !points.empty())
            out << "<polyline fill='none' stroke='" << color
                << "' stroke-width='1.5' points='" << points << "'/>\n";
        out << "<text x='" << L + 10 << "' y='" << T + 16 + 14 * static_cast<double>(si)
            << "' font-family='sans-serif' font-size='11' fill='" << color << "'>"
            << s.label << "</text>\n";
    }
    out << "</svg>\n";
    return path;
}

} // namespace pzcli
