#ifndef MOPO_SVG_HPP
#define MOPO_SVG_HPP

#include <filesystem>
#include <string>
#include <vector>

namespace mopo {

// Minimal self-contained line-plot renderer. Output is deterministic:
// fixed canvas, fixed palette, fixed number formatting, no timestamps.

struct Curve {
    std::vector<double> x;
    std::vector<double> y;
    std::string label;
};

struct PlotSpec {
    std::string title;
    std::string xlabel;
    std::string ylabel;
    bool log_y = false;  // log10 vertical axis; non-positive values skipped
    std::vector<Curve> curves;
};

void write_svg_plot(const PlotSpec& spec, const std::filesystem::path& file);

} // namespace mopo

#endif
