#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mopo/errors.hpp"
#include "mopo/figures.hpp"
#include "mopo/selfcheck.hpp"

namespace {

void print_written(const std::vector<std::filesystem::path>& paths) {
    for (const auto& p : paths) std::cout << "wrote " << p.string() << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Below-threshold mirrorless optical parametric oscillator:\n"
        "crystal dispersion, quasi-phase-matching, and squeezing / EPR\n"
        "correlation spectra of the counter-propagating twin beams."};
    app.require_subcommand(1);

    // figure
    std::string fig_name;
    mopo::FigureOptions fopt;
    auto* fig = app.add_subcommand(
        "figure", "Regenerate a reference figure (fig2 fig3 fig4a fig4b fig5): "
                  "data table plus SVG rendering");
    fig->add_option("name", fig_name, "figure name")->required();
    fig->add_option("--out", fopt.out_dir, "output directory")
        ->capture_default_str();
    fig->add_option("--g", fopt.g_list,
                    "comma-separated gains: fig2/fig3 curve set; fig4a "
                    "converts each to a distance from threshold pi/2 - g")
        ->delimiter(',');
    fig->add_option("--points", fopt.points, "grid point count (odd)");
    fig->add_option("--span", fopt.span,
                    "frequency half-width in omega_gvs units");

    // sweep
    mopo::SweepConfig cfg;
    double lambda_p_nm = 800.0;
    std::string lambda_s_nm = "degenerate";
    double lc_mm = 10.0;
    auto* sweep = app.add_subcommand(
        "sweep", "Spectrum tables for arbitrary tunings, gains, phases, and "
                 "grids, driven by a config file plus overrides");
    sweep->set_config("--config", "", "run configuration file (key=value)")
        ->required();
    sweep->add_option("--material", cfg.material,
                      "material name in the database directory")
        ->capture_default_str();
    sweep->add_option("--lambda-p-nm", lambda_p_nm, "pump vacuum wavelength, nm")
        ->capture_default_str();
    sweep->add_option("--lambda-s-nm", lambda_s_nm,
                      "signal vacuum wavelength in nm, or 'degenerate'")
        ->capture_default_str();
    sweep->add_option("--lc-mm", lc_mm, "crystal length, mm")
        ->capture_default_str();
    sweep->add_option("--m-order", cfg.m_order, "grating order (odd)")
        ->capture_default_str();
    sweep->add_option("--g", cfg.g_list, "comma-separated gains")
        ->delimiter(',');
    sweep->add_option("--epsilon", cfg.epsilon_list,
                      "comma-separated distances from threshold; overrides --g")
        ->delimiter(',');
    sweep->add_option("--model", cfg.model, "exact | linearized | both")
        ->capture_default_str();
    sweep->add_option("--phase", cfg.phase,
                      "fixed | optimal | local-oscillator phase sum in rad")
        ->capture_default_str();
    sweep->add_option("--delta-t", cfg.delta_t,
                      "0 | gvm | detection delay in seconds")
        ->capture_default_str();
    sweep->add_option("--branch", cfg.branch, "squeeze | antisqueeze")
        ->capture_default_str();
    sweep->add_option("--span", cfg.span,
                      "frequency half-width in omega_gvs units")
        ->capture_default_str();
    sweep->add_option("--points", cfg.points, "grid point count (odd)")
        ->capture_default_str();
    sweep->add_option("--out", cfg.out_dir, "output directory")
        ->capture_default_str();

    // selfcheck
    bool as_json = false;
    bool inject_fault = false;
    auto* selfcheck = app.add_subcommand(
        "selfcheck", "Run the built-in invariant suites and report per family");
    selfcheck->add_flag("--json", as_json, "machine-readable report");
    selfcheck->add_flag("--inject-fault", inject_fault,
                        "corrupt one coefficient inside the check harness to "
                        "demonstrate failure detection")
        ->group("");  // hidden from help

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // bad usage / bad config file
    }

    try {
        if (fig->parsed()) {
            print_written(mopo::run_figure(fig_name, fopt));
        } else if (sweep->parsed()) {
            cfg.lambda_p = lambda_p_nm * 1e-9;
            if (lambda_s_nm == "degenerate") {
                cfg.lambda_s.reset();
            } else {
                try {
                    cfg.lambda_s = std::stod(lambda_s_nm) * 1e-9;
                } catch (const std::exception&) {
                    throw mopo::ConfigError(
                        "lambda-s-nm must be a number or 'degenerate', got '" +
                        lambda_s_nm + "'");
                }
            }
            cfg.l_c = lc_mm * 1e-3;
            print_written(mopo::run_sweep(cfg));
        } else if (selfcheck->parsed()) {
            const mopo::SelfCheckReport report =
                mopo::run_selfcheck(inject_fault);
            if (as_json)
                std::cout << mopo::to_json(report);
            else
                mopo::print_text(report, std::cout);
            return report.all_pass ? 0 : 1;
        }
        return 0;
    } catch (const mopo::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const mopo::DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 3;
    } catch (const mopo::SolverError& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
