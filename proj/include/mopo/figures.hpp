#ifndef MOPO_FIGURES_HPP
#define MOPO_FIGURES_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "mopo/spectra.hpp"

namespace mopo {

// Overrides for the named reference figures; zero/empty fields keep the
// per-figure defaults.
struct FigureOptions {
    std::filesystem::path out_dir = "out";
    std::vector<double> g_list;  // fig2/fig3 curve gains; fig4a: eps = pi/2 - g
    int points = 0;
    double span = 0.0;
};

// Regenerates one reference figure:
//   fig2  squeezing spectra vs Omega/omega_gvs for several gains
//   fig3  antisqueezing spectra, absolute and peak-normalized
//   fig4a closed-form spectrum vs its quadratic near-threshold law
//   fig4b zero-frequency squeezing vs distance from threshold
//   fig5  the two spectral scales along the signal-wavelength tuning curve
// Writes a data table and an SVG rendering per panel into out_dir and
// returns the written paths. Unknown names throw ConfigError.
std::vector<std::filesystem::path> run_figure(const std::string& name,
                                              const FigureOptions& opt);

// General spectrum-sweep job description; the CLI fills it from a config
// file plus command-line overrides.
struct SweepConfig {
    std::string material = "linbo3_e";
    double lambda_p = 800e-9;               // meters
    std::optional<double> lambda_s;          // meters; nullopt = degenerate
    double l_c = 0.01;                       // meters
    int m_order = 1;
    std::vector<double> g_list = {1.0};
    std::vector<double> epsilon_list;        // when set, replaces g_list
    std::string model = "linearized";        // exact | linearized | both
    std::string phase = "fixed";             // fixed | optimal | <rad value>
    std::string delta_t = "0";               // 0 | gvm | <seconds>
    std::string branch = "squeeze";          // squeeze | antisqueeze
    double span = 6.0;                       // grid half-width, omega_gvs units
    int points = 601;                        // odd, >= 3
    std::filesystem::path out_dir = "out";
};

// Throws ConfigError on contract violations (even point count, span <= 0,
// gains at threshold, unknown keyword values).
void validate(const SweepConfig& cfg);

// One table per requested gain plus a combined SVG; returns written paths.
std::vector<std::filesystem::path> run_sweep(const SweepConfig& cfg);

} // namespace mopo

#endif
