#include "mopo/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>

#include "mopo/errors.hpp"

namespace mopo {

namespace {

constexpr double canvas_w = 860.0, canvas_h = 560.0;
constexpr double ml = 80.0, mr = 30.0, mt = 48.0, mb = 64.0;
constexpr double plot_w = canvas_w - ml - mr;
constexpr double plot_h = canvas_h - mt - mb;

const char* const palette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                               "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};
constexpr int palette_size = 8;

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string fmt_tick(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        switch (ch) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            default: out += ch;
        }
    }
    return out;
}

// Tick step from the 1-2-5 ladder giving roughly target_count intervals.
double nice_step(double range, int target_count) {
    const double raw = range / target_count;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    const double r = raw / mag;
    double s = 10.0;
    if (r <= 1.0) s = 1.0;
    else if (r <= 2.0) s = 2.0;
    else if (r <= 5.0) s = 5.0;
    return s * mag;
}

} // namespace

void write_svg_plot(const PlotSpec& spec, const std::filesystem::path& file) {
    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    for (const auto& c : spec.curves) {
        if (c.x.size() != c.y.size())
            throw ConfigError("curve '" + c.label + "': x/y size mismatch");
        for (std::size_t i = 0; i < c.x.size(); ++i) {
            const double x = c.x[i];
            double y = c.y[i];
            if (!std::isfinite(x) || !std::isfinite(y)) continue;
            if (spec.log_y) {
                if (!(y > 0.0)) continue;
                y = std::log10(y);
            }
            xmin = std::min(xmin, x); xmax = std::max(xmax, x);
            ymin = std::min(ymin, y); ymax = std::max(ymax, y);
        }
    }
    if (!(xmin < xmax)) { xmin -= 1.0; xmax += 1.0; }
    if (!std::isfinite(xmin)) { xmin = 0.0; xmax = 1.0; }
    if (!(ymin < ymax)) { ymin -= 1.0; ymax += 1.0; }
    if (!std::isfinite(ymin)) { ymin = 0.0; ymax = 1.0; }
    const double ypad = 0.05 * (ymax - ymin);
    ymin -= ypad;
    ymax += ypad;

    auto px = [&](double x) { return ml + (x - xmin) / (xmax - xmin) * plot_w; };
    auto py = [&](double y) {
        if (spec.log_y) y = std::log10(y);
        return mt + (1.0 - (y - ymin) / (ymax - ymin)) * plot_h;
    };

    std::ofstream out(file, std::ios::binary);
    if (!out)
        throw Error("cannot open " + file.string() + " for writing");
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << canvas_w
        << "\" height=\"" << canvas_h << "\" viewBox=\"0 0 " << canvas_w << " "
        << canvas_h << "\">\n"
        << "<rect width=\"" << canvas_w << "\" height=\"" << canvas_h
        << "\" fill=\"white\"/>\n";

    // Axes frame.
    out << "<rect x=\"" << fmt(ml) << "\" y=\"" << fmt(mt) << "\" width=\""
        << fmt(plot_w) << "\" height=\"" << fmt(plot_h)
        << "\" fill=\"none\" stroke=\"black\"/>\n";

    // Horizontal ticks.
    const double xstep = nice_step(xmax - xmin, 6);
    for (double x = std::ceil(xmin / xstep) * xstep; x <= xmax + 1e-9 * xstep;
         x += xstep) {
        const double p = px(x);
        out << "<line x1=\"" << fmt(p) << "\" y1=\"" << fmt(mt + plot_h)
            << "\" x2=\"" << fmt(p) << "\" y2=\"" << fmt(mt + plot_h + 6)
            << "\" stroke=\"black\"/>\n"
            << "<text x=\"" << fmt(p) << "\" y=\"" << fmt(mt + plot_h + 22)
            << "\" font-size=\"13\" text-anchor=\"middle\">"
            << fmt_tick(std::abs(x) < 1e-12 * xstep ? 0.0 : x) << "</text>\n";
    }

    // Vertical ticks: decades when logarithmic, 1-2-5 ladder otherwise.
    if (spec.log_y) {
        const int d0 = int(std::ceil(ymin));
        const int d1 = int(std::floor(ymax));
        for (int d = d0; d <= d1; ++d) {
            const double p = mt + (1.0 - (d - ymin) / (ymax - ymin)) * plot_h;
            out << "<line x1=\"" << fmt(ml - 6) << "\" y1=\"" << fmt(p)
                << "\" x2=\"" << fmt(ml) << "\" y2=\"" << fmt(p)
                << "\" stroke=\"black\"/>\n"
                << "<text x=\"" << fmt(ml - 10) << "\" y=\"" << fmt(p + 4)
                << "\" font-size=\"13\" text-anchor=\"end\">1e" << d
                << "</text>\n";
        }
    } else {
        const double ystep = nice_step(ymax - ymin, 6);
        for (double y = std::ceil(ymin / ystep) * ystep; y <= ymax + 1e-9 * ystep;
             y += ystep) {
            const double p = mt + (1.0 - (y - ymin) / (ymax - ymin)) * plot_h;
            out << "<line x1=\"" << fmt(ml - 6) << "\" y1=\"" << fmt(p)
                << "\" x2=\"" << fmt(ml) << "\" y2=\"" << fmt(p)
                << "\" stroke=\"black\"/>\n"
                << "<text x=\"" << fmt(ml - 10) << "\" y=\"" << fmt(p + 4)
                << "\" font-size=\"13\" text-anchor=\"end\">"
                << fmt_tick(std::abs(y) < 1e-12 * ystep ? 0.0 : y) << "</text>\n";
        }
    }

    // Curves. Non-finite or non-plottable points split the polyline.
    for (std::size_t ci = 0; ci < spec.curves.size(); ++ci) {
        const auto& c = spec.curves[ci];
        const char* color = palette[ci % palette_size];
        std::string points;
        auto flush = [&]() {
            if (!points.empty()) {
                out << "<polyline fill=\"none\" stroke=\"" << color
                    << "\" stroke-width=\"1.6\" points=\"" << points << "\"/>\n";
                points.clear();
            }
        };
        for (std::size_t i = 0; i < c.x.size(); ++i) {
            const double x = c.x[i], y = c.y[i];
            const bool ok = std::isfinite(x) && std::isfinite(y) &&
                            (!spec.log_y || y > 0.0);
            if (!ok) { flush(); continue; }
            if (!points.empty()) points += " ";
            points += fmt(px(x)) + "," + fmt(py(y));
        }
        flush();
    }

    // Legend, top right inside the frame.
    double ly = mt + 16.0;
    for (std::size_t ci = 0; ci < spec.curves.size(); ++ci) {
        const auto& c = spec.curves[ci];
        if (c.label.empty()) continue;
        const char* color = palette[ci % palette_size];
        const double lx = ml + plot_w - 190.0;
        out << "<line x1=\"" << fmt(lx) << "\" y1=\"" << fmt(ly - 4)
            << "\" x2=\"" << fmt(lx + 26) << "\" y2=\"" << fmt(ly - 4)
            << "\" stroke=\"" << color << "\" stroke-width=\"1.6\"/>\n"
            << "<text x=\"" << fmt(lx + 32) << "\" y=\"" << fmt(ly)
            << "\" font-size=\"13\">" << escape(c.label) << "</text>\n";
        ly += 18.0;
    }

    // Titles.
    out << "<text x=\"" << fmt(ml + plot_w / 2) << "\" y=\"" << fmt(mt - 16)
        << "\" font-size=\"16\" text-anchor=\"middle\">" << escape(spec.title)
        << "</text>\n"
        << "<text x=\"" << fmt(ml + plot_w / 2) << "\" y=\""
        << fmt(canvas_h - 16) << "\" font-size=\"14\" text-anchor=\"middle\">"
        << escape(spec.xlabel) << "</text>\n"
        << "<text x=\"20\" y=\"" << fmt(mt + plot_h / 2)
        << "\" font-size=\"14\" text-anchor=\"middle\" transform=\"rotate(-90 20 "
        << fmt(mt + plot_h / 2) << ")\">" << escape(spec.ylabel) << "</text>\n"
        << "</svg>\n";
    if (!out)
        throw Error("write failed for " + file.string());
}

} // namespace mopo
