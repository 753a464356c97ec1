#include "mopo/selfcheck.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <random>

#include <json.hpp>

#include "mopo/constants.hpp"
#include "mopo/spectra.hpp"

namespace mopo {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

CheckFamily check_unitarity(const Material& mat, bool inject_fault) {
    CheckFamily family;
    family.name = "coefficient-unitarity";
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> g_dist(0.0, 1.55);
    std::uniform_real_distribution<double> w_dist(-20.0, 20.0);
    double worst = 0.0;
    for (int k = 0; k < 1000; ++k) {
        const double g = g_dist(rng);
        const double w = w_dist(rng);
        const TuningConfiguration t = degenerate_tuning(mat, 800e-9, 0.01, g);
        const DerivedScales s = derived_scales(t);
        const double Omega = w * s.omega_gvs;
        for (Model model : {Model::exact, Model::linearized}) {
            BogoliubovCoefficients cp = coefficients(t, s, Omega, model);
            BogoliubovCoefficients cm = coefficients(t, s, -Omega, model);
            if (inject_fault) cp.V_s = -cp.V_s;
            const UnitarityResiduals r = unitarity_residuals(cp, cm);
            const double m = std::max({r.r1, r.r2, r.r3});
            worst = std::max(worst, m);
            if (m >= 1e-10) {
                family.pass = false;
                family.detail = "residual " + fmt(m) + " at g = " + fmt(g) +
                                ", omega = " + fmt(Omega) + " rad/s (" +
                                (model == Model::exact ? "exact" : "linearized") +
                                " model)";
                return family;
            }
        }
    }
    family.pass = true;
    family.detail = "1000 samples, both models, worst residual " + fmt(worst);
    return family;
}

CheckFamily check_reciprocity() {
    CheckFamily family;
    family.name = "spectrum-reciprocity";
    std::mt19937 rng(23456);
    std::uniform_real_distribution<double> g_dist(0.0, 1.5699);
    std::uniform_real_distribution<double> w_dist(-10.0, 10.0);
    double worst = 0.0;
    for (int k = 0; k < 10000; ++k) {
        const double g = g_dist(rng);
        const double w = w_dist(rng);
        const double product = spectrum_universal(g, w, Branch::squeeze) *
                               spectrum_universal(g, w, Branch::antisqueeze);
        const double dev = std::abs(product - 1.0);
        worst = std::max(worst, dev);
        if (dev >= 1e-12) {
            family.pass = false;
            family.detail = "product deviates by " + fmt(dev) + " at g = " +
                            fmt(g) + ", omega_tilde = " + fmt(w);
            return family;
        }
    }
    family.pass = true;
    family.detail = "10000 samples, worst deviation " + fmt(worst);
    return family;
}

CheckFamily check_optimality(const Material& mat) {
    CheckFamily family;
    family.name = "phase-optimality";
    std::mt19937 rng(34567);
    std::uniform_real_distribution<double> g_dist(0.1, 1.55);
    std::uniform_real_distribution<double> w_dist(-3.0, 3.0);
    std::uniform_real_distribution<double> p_dist(-pi, pi);
    double worst_gap = 0.0, worst_eq = 0.0;
    for (int k = 0; k < 100; ++k) {
        const double g = g_dist(rng);
        const double w = w_dist(rng);
        const TuningConfiguration t = degenerate_tuning(mat, 800e-9, 0.01, g);
        const DerivedScales s = derived_scales(t);
        const double Omega = w * s.omega_gvs;
        const double best = spectrum_optimized(t, s, Omega, Model::linearized);
        QuadratureSetting q;
        q.phi_sum = p_dist(rng);
        const double anywhere =
            spectrum_general(t, s, q, Omega, Model::linearized);
        worst_gap = std::max(worst_gap, best - anywhere);
        q.phi_sum = optimal_phase(t, s, Omega, Model::linearized);
        const double at_opt = spectrum_general(t, s, q, Omega, Model::linearized);
        worst_eq = std::max(worst_eq, std::abs(at_opt - best));
        if (best - anywhere > 1e-12 || std::abs(at_opt - best) >= 1e-10 ||
            best > 1.0) {
            family.pass = false;
            family.detail = "violation at g = " + fmt(g) + ", omega_tilde = " +
                            fmt(w) + " (optimized " + fmt(best) +
                            ", general " + fmt(anywhere) + ", at optimum " +
                            fmt(at_opt) + ")";
            return family;
        }
    }
    family.pass = true;
    family.detail = "100 samples, worst optimality gap " + fmt(worst_gap) +
                    ", worst equality deviation " + fmt(worst_eq);
    return family;
}

CheckFamily check_model_consistency(const Material& mat) {
    CheckFamily family;
    family.name = "model-consistency";
    double worst = 0.0;
    for (double g : {1.0, 1.5}) {
        const TuningConfiguration t = degenerate_tuning(mat, 800e-9, 0.01, g);
        const DerivedScales s = derived_scales(t);
        QuadratureSetting q;
        q.phi_sum = fixed_phase(t);
        const auto grid = symmetric_grid(5.0, 201);
        for (double w : grid) {
            const double Omega = w * s.omega_gvs;
            const double exact = spectrum_general(t, s, q, Omega, Model::exact);
            const double lin =
                spectrum_general(t, s, q, Omega, Model::linearized);
            const double rel = std::abs(exact - lin) / lin;
            worst = std::max(worst, rel);
            if (rel >= 0.01) {
                family.pass = false;
                family.detail = "relative difference " + fmt(rel) + " at g = " +
                                fmt(g) + ", omega_tilde = " + fmt(w);
                return family;
            }
        }
    }
    family.pass = true;
    family.detail =
        "|omega| <= 5 omega_gvs, g in {1, 1.5}, worst relative difference " +
        fmt(worst);
    return family;
}

CheckFamily check_qpm_roundtrip(const Material& mat) {
    CheckFamily family;
    family.name = "qpm-roundtrip";
    double worst = 0.0;
    for (double ls : {1.2e-6, 1.4e-6, 1.6e-6}) {
        const double Lambda = poling_period(mat, 800e-9, ls, 1);
        const double back = solve_signal_wavelength(mat, 800e-9, Lambda, 1,
                                                    0.9 * ls, 1.1 * ls);
        const double rel = std::abs(back - ls) / ls;
        worst = std::max(worst, rel);
        if (rel >= 1e-4) {
            family.pass = false;
            family.detail = "recovered " + fmt(back * 1e9) + " nm for " +
                            fmt(ls * 1e9) + " nm (relative error " + fmt(rel) +
                            ")";
            return family;
        }
    }
    family.pass = true;
    family.detail = "3 tunings, worst relative error " + fmt(worst);
    return family;
}

} // namespace

SelfCheckReport run_selfcheck(bool inject_fault) {
    const Material mat = find_material("linbo3_e");
    SelfCheckReport report;
    report.families.push_back(check_unitarity(mat, inject_fault));
    report.families.push_back(check_reciprocity());
    report.families.push_back(check_optimality(mat));
    report.families.push_back(check_model_consistency(mat));
    report.families.push_back(check_qpm_roundtrip(mat));
    report.all_pass = true;
    for (const auto& family : report.families)
        report.all_pass = report.all_pass && family.pass;
    return report;
}

void print_text(const SelfCheckReport& report, std::ostream& out) {
    for (const auto& family : report.families)
        out << (family.pass ? "PASS" : "FAIL") << "  " << family.name << ": "
            << family.detail << "\n";
    out << (report.all_pass ? "all invariant families pass"
                            : "INVARIANT FAILURE") << "\n";
}

std::string to_json(const SelfCheckReport& report) {
    nlohmann::json j;
    j["families"] = nlohmann::json::array();
    for (const auto& family : report.families)
        j["families"].push_back({{"name", family.name},
                                 {"pass", family.pass},
                                 {"detail", family.detail}});
    j["all_pass"] = report.all_pass;
    return j.dump(2) + "\n";
}

} // namespace mopo
