// Copyright 2026 The srlab Authors.
// SPDX-License-Identifier: Apache-2.0
#include "srlab/experiments/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace srlab::experiments {

namespace {

constexpr double kWidth = 800;
constexpr double kHeight = 500;
constexpr double kLeft = 80;
constexpr double kRight = 200;
constexpr double kTop = 40;
constexpr double kBottom = 60;

constexpr std::array<const char*, 8> kPalette = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                                 "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};

struct Axis {
    bool log = false;
    double lo = 0;
    double hi = 1;

    double map(double v) const { return log ? std::log10(v) : v; }
    double frac(double v) const { return hi > lo ? (map(v) - lo) / (hi - lo) : 0.5; }
};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f", v);
    return buf;
}

std::string tick_label(double v, bool log) {
    char buf[32];
    if (log) {
        std::snprintf(buf, sizeof buf, "1e%d", static_cast<int>(std::lround(v)));
    } else {
        std::snprintf(buf, sizeof buf, "%.3g", v);
    }
    return buf;
}

std::string escape(const std::string& s) {
    std::string out;
    for (const char c : s) {
        switch (c) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            default: out += c;
        }
    }
    return out;
}

bool usable(double v, bool log) { return std::isfinite(v) && (!log || v > 0); }

}  // namespace

std::string render_svg(const Plot& plot) {
    Axis ax{plot.log_x, std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
    Axis ay{plot.log_y, ax.lo, ax.hi};
    for (const Series& s : plot.series) {
        for (const auto& [x, y] : s.points) {
            if (usable(x, ax.log) && usable(y, ay.log)) {
                ax.lo = std::min(ax.lo, ax.map(x));
                ax.hi = std::max(ax.hi, ax.map(x));
                ay.lo = std::min(ay.lo, ay.map(y));
                ay.hi = std::max(ay.hi, ay.map(y));
            }
        }
    }
    if (!(ax.lo <= ax.hi)) {
        ax.lo = 0;
        ax.hi = 1;
    }
    if (!(ay.lo <= ay.hi)) {
        ay.lo = 0;
        ay.hi = 1;
    }
    if (ay.log) {
        ay.lo = std::floor(ay.lo);
        ay.hi = std::ceil(ay.hi);
    }

    const double pw = kWidth - kLeft - kRight;
    const double ph = kHeight - kTop - kBottom;
    auto px = [&](double x) { return kLeft + ax.frac(x) * pw; };
    auto py = [&](double y) { return kTop + (1 - ay.frac(y)) * ph; };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
       << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<text x=\"" << kLeft << "\" y=\"24\" font-size=\"15\">" << escape(plot.title) << "</text>\n";
    os << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << pw << "\" height=\"" << ph
       << "\" fill=\"none\" stroke=\"black\"/>\n";

    for (int i = 0; i <= 5; ++i) {
        const double fx = ax.lo + (ax.hi - ax.lo) * i / 5;
        const double x = kLeft + pw * i / 5;
        os << "<text x=\"" << num(x) << "\" y=\"" << num(kTop + ph + 18) << "\" text-anchor=\"middle\">"
           << tick_label(fx, ax.log) << "</text>\n";
    }
    const int ysteps = ay.log ? std::max(1, static_cast<int>(ay.hi - ay.lo)) : 5;
    const int ystride = std::max(1, ysteps / 10);
    for (int i = 0; i <= ysteps; i += ystride) {
        const double fy = ay.lo + (ay.hi - ay.lo) * i / ysteps;
        const double y = kTop + ph - ph * i / ysteps;
        os << "<line x1=\"" << kLeft << "\" x2=\"" << kLeft + pw << "\" y1=\"" << num(y) << "\" y2=\"" << num(y)
           << "\" stroke=\"#ddd\"/>\n";
        os << "<text x=\"" << kLeft - 6 << "\" y=\"" << num(y + 4) << "\" text-anchor=\"end\">"
           << tick_label(fy, ay.log) << "</text>\n";
    }
    os << "<text x=\"" << num(kLeft + pw / 2) << "\" y=\"" << kHeight - 16 << "\" text-anchor=\"middle\">"
       << escape(plot.x_label) << "</text>\n";
    os << "<text transform=\"translate(18," << num(kTop + ph / 2) << ") rotate(-90)\" text-anchor=\"middle\">"
       << escape(plot.y_label) << "</text>\n";

    for (std::size_t si = 0; si < plot.series.size(); ++si) {
        const Series& s = plot.series[si];
        const char* color = kPalette[si % kPalette.size()];
        if (s.line) {
            os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
            for (const auto& [x, y] : s.points) {
                if (usable(x, ax.log) && usable(y, ay.log)) {
                    os << num(px(x)) << ',' << num(py(y)) << ' ';
                }
            }
            os << "\"/>\n";
        } else {
            for (const auto& [x, y] : s.points) {
                if (usable(x, ax.log) && usable(y, ay.log)) {
                    os << "<circle cx=\"" << num(px(x)) << "\" cy=\"" << num(py(y)) << "\" r=\"2\" fill=\"" << color
                       << "\" fill-opacity=\"0.6\"/>\n";
                }
            }
        }
        const double ly = kTop + 14 + 18 * static_cast<double>(si);
        os << "<rect x=\"" << kWidth - kRight + 14 << "\" y=\"" << num(ly - 9) << "\" width=\"10\" height=\"10\" fill=\""
           << color << "\"/>\n";
        os << "<text x=\"" << kWidth - kRight + 30 << "\" y=\"" << num(ly) << "\">" << escape(s.name) << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace srlab::experiments
