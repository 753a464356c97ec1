#include "mopo/figures.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <limits>

#include "mopo/constants.hpp"
#include "mopo/errors.hpp"
#include "mopo/parallel.hpp"
#include "mopo/svg.hpp"
#include "mopo/table.hpp"

namespace mopo {

namespace {

namespace fs = std::filesystem;

std::string num_label(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

// One spectrum curve over a dimensionless grid; points are independent,
// so the sweep is evaluated in parallel with per-slot writes.
std::vector<double> curve_values(const TuningConfiguration& t,
                                 const DerivedScales& s,
                                 const QuadratureSetting& q,
                                 const std::vector<double>& grid, Model model) {
    std::vector<double> v(grid.size());
    parallel_for(grid.size(), [&](std::size_t i) {
        v[i] = spectrum_general(t, s, q, grid[i] * s.omega_gvs, model);
    });
    return v;
}

void push_tuning_metadata(Table& table, const TuningConfiguration& t) {
    table.metadata.emplace_back("material", t.material.name);
    table.metadata.emplace_back("material_reference", t.material.reference);
    table.metadata.emplace_back("lambda_p_nm", format_full(t.lambda_p * 1e9));
    table.metadata.emplace_back("lambda_s_nm", format_full(t.lambda_s * 1e9));
    table.metadata.emplace_back("lambda_i_nm", format_full(t.lambda_i * 1e9));
    table.metadata.emplace_back("Lambda_nm", format_full(t.Lambda * 1e9));
    table.metadata.emplace_back("m_order", std::to_string(t.m_order));
    table.metadata.emplace_back("l_c_m", format_full(t.l_c));
    table.metadata.emplace_back("phi_p_rad", format_full(t.phi_p));
}

std::string join_list(const std::vector<double>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i)
        out += (i ? " " : "") + num_label(xs[i]);
    return out;
}

// fig2 (squeeze) and fig3 (antisqueeze + normalized variant) share the
// degenerate reference tuning and differ only in branch and rendering.
std::vector<fs::path> spectra_figure(const std::string& name,
                                     const FigureOptions& opt, Branch branch) {
    std::vector<double> gains =
        opt.g_list.empty() ? std::vector<double>{1.0, 1.2, 1.4, 1.5, 1.55}
                           : opt.g_list;
    const int points = opt.points > 0 ? opt.points : 601;
    const double span = opt.span > 0.0 ? opt.span : 6.0;
    const auto grid = symmetric_grid(span, points);

    const Material mat = find_material("linbo3_e");
    Table table;
    PlotSpec plot;
    std::vector<std::vector<double>> columns;
    double phi_value = 0.0;
    TuningConfiguration t0;
    for (std::size_t ci = 0; ci < gains.size(); ++ci) {
        const TuningConfiguration t =
            degenerate_tuning(mat, 800e-9, 0.01, gains[ci]);
        const DerivedScales s = derived_scales(t);
        QuadratureSetting q;
        q.phi_sum = fixed_phase(t);
        q.delta_t = 0.0;
        q.branch = branch;
        phi_value = q.phi_sum;
        columns.push_back(curve_values(t, s, q, grid, Model::exact));
        if (ci == 0) t0 = t;
        Curve c;
        c.x = grid;
        c.y = columns.back();
        c.label = "g = " + num_label(gains[ci]);
        plot.curves.push_back(std::move(c));
    }

    table.metadata.emplace_back("figure", name);
    push_tuning_metadata(table, t0);
    table.metadata.emplace_back("g_list", join_list(gains));
    table.metadata.emplace_back("model", "exact");
    table.metadata.emplace_back(
        "branch", branch == Branch::squeeze ? "squeeze" : "antisqueeze");
    table.metadata.emplace_back("phi_sum_rad", format_full(phi_value));
    table.metadata.emplace_back("delta_t_s", "0");
    table.metadata.emplace_back("span", format_full(span));
    table.metadata.emplace_back("points", std::to_string(points));
    table.columns.push_back("omega_over_omega_gvs");
    for (double g : gains) table.columns.push_back("sigma_g" + num_label(g));
    table.rows.resize(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        table.rows[i].push_back(grid[i]);
        for (const auto& col : columns) table.rows[i].push_back(col[i]);
    }

    std::vector<fs::path> written;
    fs::create_directories(opt.out_dir);
    const fs::path tsv = opt.out_dir / (name + ".tsv");
    write_table(table, tsv);
    written.push_back(tsv);

    plot.xlabel = "Omega / omega_gvs";
    if (branch == Branch::squeeze) {
        plot.title = "Squeezing spectra, fixed phase, delta_t = 0";
        plot.ylabel = "Sigma (shot noise = 1)";
    } else {
        plot.title = "Antisqueezing spectra, fixed phase, delta_t = 0";
        plot.ylabel = "Sigma (shot noise = 1)";
        plot.log_y = true;
    }
    const fs::path svg = opt.out_dir / (name + ".svg");
    write_svg_plot(plot, svg);
    written.push_back(svg);

    if (branch == Branch::antisqueeze) {
        // Peak-normalized variant: every curve scaled into (0, 1].
        Table norm = table;
        norm.metadata.emplace_back("normalization", "unit peak per curve");
        PlotSpec nplot;
        nplot.title = "Antisqueezing spectra, unit peak";
        nplot.xlabel = plot.xlabel;
        nplot.ylabel = "Sigma / max(Sigma)";
        for (std::size_t ci = 0; ci < columns.size(); ++ci) {
            const double peak =
                *std::max_element(columns[ci].begin(), columns[ci].end());
            Curve c;
            c.x = grid;
            c.label = plot.curves[ci].label;
            for (std::size_t i = 0; i < grid.size(); ++i) {
                norm.rows[i][ci + 1] = columns[ci][i] / peak;
                c.y.push_back(norm.rows[i][ci + 1]);
            }
            nplot.curves.push_back(std::move(c));
        }
        const fs::path ntsv = opt.out_dir / (name + "_normalized.tsv");
        write_table(norm, ntsv);
        written.push_back(ntsv);
        const fs::path nsvg = opt.out_dir / (name + "_normalized.svg");
        write_svg_plot(nplot, nsvg);
        written.push_back(nsvg);
    }
    return written;
}

std::vector<fs::path> figure_near_threshold_vs_frequency(
    const FigureOptions& opt) {
    std::vector<double> eps_list{0.1, 0.3};
    if (!opt.g_list.empty()) {
        eps_list.clear();
        for (double g : opt.g_list) {
            if (!(g > 0.0 && g < g_threshold))
                throw ConfigError("fig4a curves need 0 < g < pi/2");
            eps_list.push_back(g_threshold - g);
        }
    }
    const int points = opt.points > 0 ? opt.points : 301;
    const double span = opt.span > 0.0 ? opt.span : 1.5;
    const auto grid = symmetric_grid(span, points);

    Table table;
    table.metadata.emplace_back("figure", "fig4a");
    table.metadata.emplace_back("epsilon_list", join_list(eps_list));
    table.metadata.emplace_back("span", format_full(span));
    table.metadata.emplace_back("points", std::to_string(points));
    table.columns.push_back("omega_over_omega_gvs");
    PlotSpec plot;
    plot.title = "Closed-form spectrum vs quadratic near-threshold law";
    plot.xlabel = "Omega / omega_gvs";
    plot.ylabel = "Sigma (shot noise = 1)";
    std::vector<std::vector<double>> cols;
    for (double eps : eps_list) {
        const double g = g_threshold - eps;
        if (!near_threshold_regime_ok(eps, span))
            std::cerr << "note: quadratic law for epsilon = " << eps
                      << " plotted outside its validity envelope "
                         "(epsilon <= 0.3 and |omega| <= g/2)\n";
        std::vector<double> exact(grid.size()), quad(grid.size());
        parallel_for(grid.size(), [&](std::size_t i) {
            exact[i] = spectrum_universal(g, grid[i], Branch::squeeze);
            quad[i] = near_threshold_squeeze(eps, grid[i]);
        });
        table.columns.push_back("sigma_exact_eps" + num_label(eps));
        table.columns.push_back("sigma_quadratic_eps" + num_label(eps));
        Curve ce{grid, exact, "exact, eps = " + num_label(eps)};
        Curve cq{grid, quad, "quadratic, eps = " + num_label(eps)};
        plot.curves.push_back(std::move(ce));
        plot.curves.push_back(std::move(cq));
        cols.push_back(std::move(exact));
        cols.push_back(std::move(quad));
    }
    table.rows.resize(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        table.rows[i].push_back(grid[i]);
        for (const auto& col : cols) table.rows[i].push_back(col[i]);
    }

    std::vector<fs::path> written;
    fs::create_directories(opt.out_dir);
    const fs::path tsv = opt.out_dir / "fig4a.tsv";
    write_table(table, tsv);
    written.push_back(tsv);
    const fs::path svg = opt.out_dir / "fig4a.svg";
    write_svg_plot(plot, svg);
    written.push_back(svg);
    return written;
}

std::vector<fs::path> figure_near_threshold_vs_epsilon(
    const FigureOptions& opt) {
    if (!opt.g_list.empty())
        std::cerr << "note: fig4b sweeps the distance from threshold; --g is "
                     "ignored\n";
    std::vector<double> eps;
    if (opt.points > 0) {
        const double lo = 0.01, hi = opt.span > 0.0 ? opt.span : 1.2;
        for (int j = 0; j < opt.points; ++j)
            eps.push_back(lo + (hi - lo) * j / double(opt.points - 1));
    } else {
        // j/100 keeps round two-decimal distances exactly on-grid.
        for (int j = 1; j <= 120; ++j) eps.push_back(j / 100.0);
    }

    Table table;
    table.metadata.emplace_back("figure", "fig4b");
    table.metadata.emplace_back("frequency", "0 (spectrum minimum)");
    table.columns = {"epsilon", "g", "sigma_exact", "sigma_quadratic",
                     "rel_deviation"};
    PlotSpec plot;
    plot.title = "Zero-frequency squeezing vs distance from threshold";
    plot.xlabel = "epsilon = pi/2 - g";
    plot.ylabel = "Sigma(0)";
    plot.log_y = true;
    Curve ce, cq;
    ce.label = "exact";
    cq.label = "quadratic law";
    for (double e : eps) {
        const double g = g_threshold - e;
        const double exact = spectrum_universal(g, 0.0, Branch::squeeze);
        const double quad = near_threshold_squeeze(e, 0.0);
        table.rows.push_back({e, g, exact, quad,
                              std::abs(exact - quad) / quad});
        ce.x.push_back(e);
        ce.y.push_back(exact);
        cq.x.push_back(e);
        cq.y.push_back(quad);
    }
    plot.curves = {ce, cq};

    std::vector<fs::path> written;
    fs::create_directories(opt.out_dir);
    const fs::path tsv = opt.out_dir / "fig4b.tsv";
    write_table(table, tsv);
    written.push_back(tsv);
    const fs::path svg = opt.out_dir / "fig4b.svg";
    write_svg_plot(plot, svg);
    written.push_back(svg);
    return written;
}

std::vector<fs::path> figure_spectral_scales(const FigureOptions& opt) {
    if (!opt.g_list.empty())
        std::cerr << "note: fig5 plots tuning-curve scales; --g is ignored\n";
    const Material mat = find_material("linbo3_e");
    const double lambda_p = 800e-9, l_c = 0.01;

    Table table;
    table.metadata.emplace_back("figure", "fig5");
    table.metadata.emplace_back("material", mat.name);
    table.metadata.emplace_back("material_reference", mat.reference);
    table.metadata.emplace_back("lambda_p_nm", "800");
    table.metadata.emplace_back("l_c_m", format_full(l_c));
    table.metadata.emplace_back("m_order", "1");
    table.metadata.emplace_back(
        "note", "omega_gvm_rad_s = inf marks the group-velocity-degenerate "
                "point lambda_s = lambda_i");
    table.columns = {"lambda_s_nm",      "lambda_i_nm",      "Lambda_nm",
                     "omega_gvs_rad_s",  "omega_gvm_rad_s",  "abs_gvm_over_gvs"};

    // 1.0 um to 1.595 um in 5 nm steps, then the exact degenerate point.
    struct Row {
        double ls, li, Lam, ogvs, ogvm, ratio;
    };
    const int steps = 120;
    std::vector<Row> rows(steps + 1);
    parallel_for(rows.size(), [&](std::size_t j) {
        TuningConfiguration t =
            (j == steps)
                ? degenerate_tuning(mat, lambda_p, l_c, 0.0)
                : tuning_from_signal(mat, lambda_p, (1000.0 + 5.0 * j) * 1e-9,
                                     l_c, 0.0);
        const DerivedScales s = derived_scales(t);
        Row& r = rows[j];
        r.ls = t.lambda_s * 1e9;
        r.li = t.lambda_i * 1e9;
        r.Lam = t.Lambda * 1e9;
        r.ogvs = s.omega_gvs;
        if (s.omega_gvm) {
            r.ogvm = *s.omega_gvm;
            r.ratio = std::abs(*s.omega_gvm) / s.omega_gvs;
        } else {
            r.ogvm = std::numeric_limits<double>::infinity();
            r.ratio = std::numeric_limits<double>::infinity();
        }
    });
    Curve cgvs, cgvm;
    cgvs.label = "omega_gvs";
    cgvm.label = "|omega_gvm|";
    for (const Row& r : rows) {
        table.rows.push_back({r.ls, r.li, r.Lam, r.ogvs, r.ogvm, r.ratio});
        cgvs.x.push_back(r.ls);
        cgvs.y.push_back(r.ogvs);
        cgvm.x.push_back(r.ls);
        cgvm.y.push_back(std::abs(r.ogvm));
    }

    PlotSpec plot;
    plot.title = "Spectral scales along the tuning curve (800 nm pump)";
    plot.xlabel = "lambda_s (nm)";
    plot.ylabel = "rad/s";
    plot.log_y = true;
    plot.curves = {cgvs, cgvm};

    std::vector<fs::path> written;
    fs::create_directories(opt.out_dir);
    const fs::path tsv = opt.out_dir / "fig5.tsv";
    write_table(table, tsv);
    written.push_back(tsv);
    const fs::path svg = opt.out_dir / "fig5.svg";
    write_svg_plot(plot, svg);
    written.push_back(svg);
    return written;
}

double parse_number(const std::string& text, const std::string& what) {
    char* end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (end == text.c_str() || *end != '\0')
        throw ConfigError("cannot parse " + what + " value '" + text + "'");
    return v;
}

} // namespace

std::vector<std::filesystem::path> run_figure(const std::string& name,
                                              const FigureOptions& opt) {
    if (name == "fig2") return spectra_figure(name, opt, Branch::squeeze);
    if (name == "fig3") return spectra_figure(name, opt, Branch::antisqueeze);
    if (name == "fig4a") return figure_near_threshold_vs_frequency(opt);
    if (name == "fig4b") return figure_near_threshold_vs_epsilon(opt);
    if (name == "fig5") return figure_spectral_scales(opt);
    throw ConfigError("unknown figure '" + name +
                      "' (expected fig2, fig3, fig4a, fig4b, or fig5)");
}

void validate(const SweepConfig& cfg) {
    if (cfg.points < 3 || cfg.points % 2 == 0)
        throw ConfigError("points must be odd and >= 3, got " +
                          std::to_string(cfg.points));
    if (!(cfg.span > 0.0)) throw ConfigError("span must be positive");
    if (!(cfg.lambda_p > 0.0)) throw ConfigError("pump wavelength must be positive");
    if (!(cfg.l_c > 0.0)) throw ConfigError("crystal length must be positive");
    if (cfg.m_order < 1 || cfg.m_order % 2 == 0)
        throw ConfigError("grating order must be odd and positive");
    if (cfg.model != "exact" && cfg.model != "linearized" && cfg.model != "both")
        throw ConfigError("model must be exact, linearized, or both");
    if (cfg.branch != "squeeze" && cfg.branch != "antisqueeze")
        throw ConfigError("branch must be squeeze or antisqueeze");
    if (cfg.phase != "fixed" && cfg.phase != "optimal")
        parse_number(cfg.phase, "phase");
    if (cfg.delta_t != "0" && cfg.delta_t != "gvm")
        parse_number(cfg.delta_t, "delta_t");
    const auto& gains = cfg.epsilon_list.empty() ? cfg.g_list : cfg.epsilon_list;
    if (gains.empty())
        throw ConfigError("at least one gain (or epsilon) is required");
    for (double g : cfg.g_list)
        if (!(g >= 0.0 && g < g_threshold - threshold_guard))
            throw ConfigError("every gain must satisfy 0 <= g < pi/2 - 1e-9");
    for (double e : cfg.epsilon_list)
        if (!(e > threshold_guard && e <= g_threshold))
            throw ConfigError("every epsilon must satisfy 1e-9 < eps <= pi/2");
}

std::vector<std::filesystem::path> run_sweep(const SweepConfig& cfg) {
    validate(cfg);
    const Material mat = find_material(cfg.material);

    std::vector<double> gains;
    const bool eps_mode = !cfg.epsilon_list.empty();
    if (eps_mode)
        for (double e : cfg.epsilon_list) gains.push_back(g_threshold - e);
    else
        gains = cfg.g_list;

    const auto grid = symmetric_grid(cfg.span, cfg.points);
    const bool both = cfg.model == "both";
    const Model single =
        cfg.model == "exact" ? Model::exact : Model::linearized;

    std::vector<fs::path> written;
    fs::create_directories(cfg.out_dir);
    PlotSpec plot;
    plot.title = "Spectrum sweep (" + cfg.branch + ", " + cfg.model + ")";
    plot.xlabel = "Omega / omega_gvs";
    plot.ylabel = "Sigma (shot noise = 1)";
    plot.log_y = cfg.branch == "antisqueeze";

    for (std::size_t gi = 0; gi < gains.size(); ++gi) {
        const double g = gains[gi];
        const TuningConfiguration t =
            cfg.lambda_s ? tuning_from_signal(mat, cfg.lambda_p, *cfg.lambda_s,
                                              cfg.l_c, g, 0.0, cfg.m_order)
                         : degenerate_tuning(mat, cfg.lambda_p, cfg.l_c, g, 0.0,
                                             cfg.m_order);
        const DerivedScales s = derived_scales(t);

        QuadratureSetting q;
        q.branch = cfg.branch == "squeeze" ? Branch::squeeze
                                           : Branch::antisqueeze;
        if (cfg.delta_t == "0") q.delta_t = 0.0;
        else if (cfg.delta_t == "gvm") q.delta_t = s.tau_gvm;
        else q.delta_t = parse_number(cfg.delta_t, "delta_t");

        const bool optimal = cfg.phase == "optimal";
        double phi_fixed = 0.0;
        if (cfg.phase == "fixed") phi_fixed = fixed_phase(t);
        else if (!optimal) phi_fixed = parse_number(cfg.phase, "phase");

        struct Row {
            double sigma_a, sigma_b, imbalance;
        };
        std::vector<Row> rows(grid.size());
        const Model model_a = both ? Model::exact : single;
        parallel_for(grid.size(), [&](std::size_t i) {
            const double Omega = grid[i] * s.omega_gvs;
            QuadratureSetting qi = q;
            if (optimal) qi.phi_sum = optimal_phase(t, s, Omega, model_a);
            else qi.phi_sum = phi_fixed;
            const auto [t1, t2] = spectrum_terms(t, s, qi, Omega, model_a);
            rows[i].sigma_a = 0.5 * (t1 + t2);
            rows[i].imbalance =
                std::abs(t1 - t2) / std::max(t1 + t2, 1e-300);
            if (both) {
                QuadratureSetting ql = qi;
                if (optimal)
                    ql.phi_sum = optimal_phase(t, s, Omega, Model::linearized);
                rows[i].sigma_b =
                    spectrum_general(t, s, ql, Omega, Model::linearized);
            }
        });

        Table table;
        table.metadata.emplace_back("job", "sweep");
        push_tuning_metadata(table, t);
        table.metadata.emplace_back("g", format_full(g));
        if (eps_mode)
            table.metadata.emplace_back("epsilon",
                                        format_full(cfg.epsilon_list[gi]));
        table.metadata.emplace_back("model", cfg.model);
        table.metadata.emplace_back("branch", cfg.branch);
        table.metadata.emplace_back("phase", cfg.phase);
        if (!optimal)
            table.metadata.emplace_back("phi_sum_rad", format_full(phi_fixed));
        table.metadata.emplace_back("delta_t", cfg.delta_t);
        table.metadata.emplace_back("delta_t_s", format_full(q.delta_t));
        table.metadata.emplace_back("span", format_full(cfg.span));
        table.metadata.emplace_back("points", std::to_string(cfg.points));
        table.columns.push_back("omega_over_omega_gvs");
        if (both) {
            table.columns.push_back("sigma_exact");
            table.columns.push_back("sigma_linearized");
            table.columns.push_back("rel_model_diff");
        } else {
            table.columns.push_back("sigma");
        }
        table.columns.push_back("term_imbalance");
        Curve curve;
        curve.label = (eps_mode ? "eps = " + num_label(cfg.epsilon_list[gi])
                                : "g = " + num_label(g));
        for (std::size_t i = 0; i < grid.size(); ++i) {
            std::vector<double> row{grid[i], rows[i].sigma_a};
            if (both) {
                row.push_back(rows[i].sigma_b);
                row.push_back(std::abs(rows[i].sigma_a - rows[i].sigma_b) /
                              std::max(std::abs(rows[i].sigma_b), 1e-300));
            }
            row.push_back(rows[i].imbalance);
            table.rows.push_back(std::move(row));
            curve.x.push_back(grid[i]);
            curve.y.push_back(rows[i].sigma_a);
        }
        plot.curves.push_back(std::move(curve));

        const std::string stem =
            eps_mode ? "sweep_eps" + num_label(cfg.epsilon_list[gi])
                     : "sweep_g" + num_label(g);
        const fs::path tsv = cfg.out_dir / (stem + ".tsv");
        write_table(table, tsv);
        written.push_back(tsv);
    }

    const fs::path svg = cfg.out_dir / "sweep.svg";
    write_svg_plot(plot, svg);
    written.push_back(svg);
    return written;
}

} // namespace mopo
