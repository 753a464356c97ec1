// Acceptance suite: one pass/fail line per criterion, exit 0 only if all
// selected criteria pass. Run with no argument for the full suite or with a
// single criterion number. Frozen expectations come from an independent
// high-precision evaluation recorded before implementation.
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "mopo/bogoliubov.hpp"
#include "mopo/constants.hpp"
#include "mopo/errors.hpp"
#include "mopo/material.hpp"
#include "mopo/spectra.hpp"
#include "mopo/table.hpp"
#include "mopo/tuning.hpp"

using namespace mopo;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

TuningConfiguration reference_tuning(double g) {
    return degenerate_tuning(find_material("linbo3_e"), 800e-9, 0.01, g);
}

// 1. Line-center squeezing at g = 1 equals (1 - sin 1)/(1 + sin 1).
Outcome check_line_center() {
    const TuningConfiguration t = reference_tuning(1.0);
    const DerivedScales s = derived_scales(t);
    QuadratureSetting q;
    q.phi_sum = fixed_phase(t);
    const double sigma = spectrum_general(t, s, q, 0.0, Model::linearized);
    const double expected = (1.0 - std::sin(1.0)) / (1.0 + std::sin(1.0));
    const double dev = std::abs(sigma - expected);
    return {dev < 1e-6, "|Sigma(0) - " + format_full(expected) + "| = " +
                            fmt(dev) + " (tol 1e-6 abs)"};
}

// 2. The shot-noise crossing sits at omega_gvs sqrt(pi^2 - g^2).
Outcome check_crossing() {
    const TuningConfiguration base = reference_tuning(1.0);
    const DerivedScales s = derived_scales(base);
    std::string detail;
    bool pass = true;
    for (double g : {1.0, 1.5}) {
        TuningConfiguration t = base;
        t.g = g;
        QuadratureSetting q;
        q.phi_sum = fixed_phase(t);
        const auto grid = symmetric_grid(5.0, 10001);
        const double step = 5.0 / 5000.0;
        const double predicted = std::sqrt(pi * pi - g * g);
        double found = -1.0;
        for (std::size_t i = grid.size() / 2; i + 1 < grid.size(); ++i) {
            const double a =
                spectrum_general(t, s, q, grid[i] * s.omega_gvs,
                                 Model::linearized) - 1.0;
            const double b =
                spectrum_general(t, s, q, grid[i + 1] * s.omega_gvs,
                                 Model::linearized) - 1.0;
            if (a <= 0.0 && b > 0.0) {
                found = grid[i];
                break;
            }
        }
        pass = pass && found >= 0.0 && std::abs(found - predicted) <= step;
        detail += "g=" + fmt(g) + ": grid " + fmt(found) + " vs " +
                  fmt(predicted) + "; ";
    }
    const double near = squeezing_bandwidth(1.5707, s) / s.omega_gvs;
    pass = pass && std::abs(near - 2.72) <= 0.01;
    detail += "near threshold " + fmt(near) + " (2.72 +/- 0.01)";
    return {pass, detail};
}

// 3. Quadratic law eps^2/4 within 2% up to eps = 0.1, within 10% at 0.3.
Outcome check_near_threshold_law() {
    bool pass = true;
    double worst = 0.0;
    for (double eps : {0.02, 0.05, 0.1, 0.3}) {
        const double exact =
            spectrum_universal(g_threshold - eps, 0.0, Branch::squeeze);
        const double law = eps * eps / 4.0;
        const double rel = std::abs(exact - law) / law;
        worst = std::max(worst, rel);
        pass = pass && rel < (eps <= 0.1 ? 0.02 : 0.10);
    }
    return {pass, "max relative deviation " + fmt(worst) +
                      " (tol 2% to eps=0.1, 10% at 0.3)"};
}

// 4. Squeeze and antisqueeze multiply to 1.
Outcome check_reciprocity() {
    std::mt19937 rng(1001);
    std::uniform_real_distribution<double> gain(0.0, 1.5699);
    std::uniform_real_distribution<double> detuning(-10.0, 10.0);
    double worst = 0.0;
    for (int it = 0; it < 10000; ++it) {
        const double g = gain(rng);
        const double w = detuning(rng);
        const double product = spectrum_universal(g, w, Branch::squeeze) *
                               spectrum_universal(g, w, Branch::antisqueeze);
        worst = std::max(worst, std::abs(product - 1.0));
    }
    return {worst < 1e-12, "max |product - 1| = " + fmt(worst) +
                               " over 10^4 samples (tol 1e-12)"};
}

// 5. The three coefficient identities hold in both dispersion models.
Outcome check_unitarity() {
    const TuningConfiguration base = reference_tuning(1.0);
    const DerivedScales s = derived_scales(base);
    std::mt19937 rng(1005);
    std::uniform_real_distribution<double> gain(0.0, 1.55);
    std::uniform_real_distribution<double> detuning(-20.0, 20.0);
    double worst = 0.0;
    for (int it = 0; it < 1000; ++it) {
        TuningConfiguration t = base;
        t.g = gain(rng);
        const double Omega = detuning(rng) * s.omega_gvs;
        for (Model model : {Model::exact, Model::linearized}) {
            const UnitarityResiduals r =
                unitarity_residuals(coefficients(t, s, Omega, model),
                                    coefficients(t, s, -Omega, model));
            worst = std::max({worst, r.r1, r.r2, r.r3});
        }
    }
    return {worst < 1e-10, "max residual " + fmt(worst) +
                               " over 1000 samples x 2 models (tol 1e-10)"};
}

// 6. First-order poling period of the 800 nm degenerate tuning.
Outcome check_poling_period() {
    const double Lambda_nm = reference_tuning(1.0).Lambda * 1e9;
    return {std::abs(Lambda_nm - 368.0) <= 3.0,
            "Lambda = " + fmt(Lambda_nm) + " nm (368 +/- 3)"};
}

// 7. omega_gvs ~ 10^10 rad/s; omega_gvm at least 100x larger off degeneracy.
Outcome check_time_scales() {
    const Material mat = find_material("linbo3_e");
    const DerivedScales sd = derived_scales(reference_tuning(1.0));
    const double ratio10 = sd.omega_gvs / 1e10;
    bool pass = ratio10 >= 0.5 && ratio10 <= 2.0;
    double min_ratio = 1e300;
    for (int j = 0; j < 120; ++j) {
        const TuningConfiguration t = tuning_from_signal(
            mat, 800e-9, (1000.0 + 5.0 * j) * 1e-9, 0.01, 0.0);
        const DerivedScales s = derived_scales(t);
        if (!s.omega_gvm) {
            pass = false;
            continue;
        }
        min_ratio = std::min(min_ratio, std::abs(*s.omega_gvm) / s.omega_gvs);
    }
    pass = pass && min_ratio >= 100.0;
    return {pass, "omega_gvs/10^10 = " + fmt(ratio10) +
                      " (0.5..2); min |omega_gvm|/omega_gvs = " +
                      fmt(min_ratio) + " (>= 100)"};
}

// 8. Exact dispersion never strays from the linearized spectrum in band.
Outcome check_model_agreement() {
    const TuningConfiguration base = reference_tuning(1.0);
    const DerivedScales s = derived_scales(base);
    double worst_in = 0.0, worst_out = 0.0;
    for (double g : {1.0, 1.5}) {
        TuningConfiguration t = base;
        t.g = g;
        QuadratureSetting q;
        q.phi_sum = fixed_phase(t);
        for (double w : symmetric_grid(15.0, 301)) {
            const double Omega = w * s.omega_gvs;
            const double se = spectrum_general(t, s, q, Omega, Model::exact);
            const double sl =
                spectrum_general(t, s, q, Omega, Model::linearized);
            const double rel = std::abs(se - sl) / sl;
            if (std::abs(w) <= 5.0)
                worst_in = std::max(worst_in, rel);
            else
                worst_out = std::max(worst_out, rel);
        }
    }
    return {worst_in < 0.01 && worst_out < 0.05,
            "max relative difference " + fmt(worst_in) +
                " inside 5 omega_gvs (tol 1%), " + fmt(worst_out) +
                " inside 15 (tol 5%)"};
}

// 9. No phase setting beats the optimized spectrum, which stays below 1.
Outcome check_optimality() {
    const TuningConfiguration base = reference_tuning(1.0);
    const DerivedScales s = derived_scales(base);
    std::mt19937 rng(1009);
    std::uniform_real_distribution<double> gain(0.0, 1.55);
    std::uniform_real_distribution<double> detuning(-10.0, 10.0);
    std::uniform_real_distribution<double> phase(-pi, pi);
    bool pass = true;
    double worst_gap = 0.0, worst_eq = 0.0, worst_bound = 0.0;
    for (int it = 0; it < 100; ++it) {
        TuningConfiguration t = base;
        t.g = gain(rng);
        const double Omega = detuning(rng) * s.omega_gvs;
        const double floor = spectrum_optimized(t, s, Omega, Model::linearized);
        worst_bound = std::max(worst_bound, floor);
        QuadratureSetting q;
        q.phi_sum = phase(rng);
        const double general =
            spectrum_general(t, s, q, Omega, Model::linearized);
        worst_gap = std::max(worst_gap, floor - general);
        q.phi_sum = optimal_phase(t, s, Omega, Model::linearized);
        const double at_opt =
            spectrum_general(t, s, q, Omega, Model::linearized);
        worst_eq = std::max(worst_eq, std::abs(at_opt - floor));
    }
    pass = worst_gap <= 1e-12 && worst_eq < 1e-10 && worst_bound <= 1.0 + 1e-14;
    return {pass, "floor exceedance " + fmt(worst_gap) + ", optimum gap " +
                      fmt(worst_eq) + " (tol 1e-10), max optimized " +
                      fmt(worst_bound) + " (<= 1)"};
}

// 10. Cavity-oscillator spectrum vs the shared quadratic law, 5% relative.
Outcome check_opo_correspondence() {
    double worst = 0.0, at_eps = 0.0, at_w = 0.0;
    for (double eps : {0.02, 0.05, 0.1}) {
        for (int j = -3; j <= 3; ++j) {
            const double w = 0.1 * j;
            const double law = 0.25 * (eps * eps + w * w);
            const double rel =
                std::abs(opo_spectrum(1.0 - eps, w) - law) / law;
            if (rel > worst) {
                worst = rel;
                at_eps = eps;
                at_w = w;
            }
        }
    }
    return {worst < 0.05, "max relative deviation " + fmt(worst) + " at eps=" +
                              fmt(at_eps) + ", Obar=" + fmt(at_w) +
                              " (tol 5%)"};
}

// 11. The CLI reproduces its tables byte for byte and self-checks clean.
Outcome check_cli_determinism() {
    const fs::path root =
        fs::temp_directory_path() / "mopo_acceptance_cli";
    fs::remove_all(root);
    fs::create_directories(root);
    auto run = [&](const std::string& args) {
        const std::string cmd = std::string("\"") + MOPO_CLI_PATH + "\" " +
                                args + " > " + (root / "log.txt").string() +
                                " 2>&1";
        const int status = std::system(cmd.c_str());
        return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    };
    auto bytes = [](const fs::path& p) {
        std::ifstream in(p, std::ios::binary);
        return std::string(std::istreambuf_iterator<char>(in), {});
    };
    const int rc1 = run("figure fig2 --out " + (root / "a").string());
    const int rc2 = run("figure fig2 --out " + (root / "b").string());
    const bool identical = rc1 == 0 && rc2 == 0 &&
                           !bytes(root / "a" / "fig2.tsv").empty() &&
                           bytes(root / "a" / "fig2.tsv") ==
                               bytes(root / "b" / "fig2.tsv");
    const int rc3 = run("selfcheck");
    fs::remove_all(root);
    return {identical && rc3 == 0,
            std::string("tables ") +
                (identical ? "byte-identical" : "DIFFER") +
                "; selfcheck exit " + std::to_string(rc3)};
}

} // namespace

int main(int argc, char** argv) {
    const std::vector<std::pair<std::string, std::function<Outcome()>>>
        criteria = {
            {"line-center squeezing at g=1", check_line_center},
            {"shot-noise crossing position", check_crossing},
            {"near-threshold quadratic law", check_near_threshold_law},
            {"squeeze/antisqueeze reciprocity", check_reciprocity},
            {"coefficient unitarity", check_unitarity},
            {"poling period", check_poling_period},
            {"group-velocity scales", check_time_scales},
            {"exact vs linearized dispersion", check_model_agreement},
            {"phase optimality", check_optimality},
            {"cavity-oscillator correspondence", check_opo_correspondence},
            {"CLI determinism and selfcheck", check_cli_determinism},
        };

    int only = 0;
    if (argc > 1) {
        only = std::atoi(argv[1]);
        if (only < 1 || only > static_cast<int>(criteria.size())) {
            std::fprintf(stderr, "usage: %s [1..%zu]\n", argv[0],
                         criteria.size());
            return 2;
        }
    }

    bool all_pass = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        if (only && static_cast<int>(i + 1) != only) continue;
        Outcome out{false, ""};
        try {
            out = criteria[i].second();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        std::printf("%s %2zu %s: %s\n", out.pass ? "PASS" : "FAIL", i + 1,
                    criteria[i].first.c_str(), out.detail.c_str());
        all_pass = all_pass && out.pass;
    }
    return all_pass ? 0 : 1;
}
