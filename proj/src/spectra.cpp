#include "mopo/spectra.hpp"

#include <cmath>

#include "mopo/constants.hpp"
#include "mopo/errors.hpp"

namespace mopo {

namespace {

double branch_phase(const QuadratureSetting& q) {
    return q.branch == Branch::antisqueeze ? q.phi_sum + pi : q.phi_sum;
}

void check_universal_args(double g) {
    if (!(g >= 0.0))
        throw DomainError("gain must be non-negative");
    if (g >= g_threshold - threshold_guard)
        throw ThresholdError("gain " + std::to_string(g) +
                             " is at or beyond the oscillation threshold pi/2");
}

} // namespace

std::pair<double, double> spectrum_terms(const TuningConfiguration& t,
                                         const DerivedScales& s,
                                         const QuadratureSetting& q,
                                         double Omega, Model model) {
    const BogoliubovCoefficients cp = coefficients(t, s, Omega, model);
    const BogoliubovCoefficients cm = coefficients(t, s, -Omega, model);
    const double phi = branch_phase(q);
    // cp holds U_s(+W) and V_i(-W); cm holds U_s(-W) and V_i(+W).
    const std::complex<double> rot_p = std::polar(1.0, Omega * q.delta_t + phi);
    const std::complex<double> rot_m = std::polar(1.0, -(Omega * q.delta_t) + phi);
    const double term_p = std::norm(cp.U_s - std::conj(cp.V_i) * rot_p);
    const double term_m = std::norm(cm.U_s - std::conj(cm.V_i) * rot_m);
    return {term_p, term_m};
}

double spectrum_general(const TuningConfiguration& t, const DerivedScales& s,
                        const QuadratureSetting& q, double Omega, Model model) {
    const auto [term_p, term_m] = spectrum_terms(t, s, q, Omega, model);
    return 0.5 * (term_p + term_m);
}

double optimal_phase(const TuningConfiguration& t, const DerivedScales& s,
                     double Omega, Model model, bool include_beta) {
    if (include_beta) {
        const BogoliubovCoefficients c = coefficients(t, s, Omega, model);
        return std::arg(c.U_s * c.V_i);
    }
    const double delta = (model == Model::exact)
                             ? mismatch_exact(t, Omega) * (t.l_c / 2.0)
                             : Omega / s.omega_gvs;
    const double snc = sinc(gamma(t.g, delta));
    const double flip = snc < 0.0 ? pi : 0.0;
    return std::remainder(fixed_phase(t) + flip, two_pi);
}

double fixed_phase(const TuningConfiguration& t) {
    const double omega_s = two_pi * c_light / t.lambda_s;
    const double ks_lc = std::remainder(wavenumber(t.material, omega_s) * t.l_c,
                                        two_pi);
    return std::remainder(ks_lc + t.phi_p, two_pi);
}

double spectrum_optimized(const TuningConfiguration& t, const DerivedScales& s,
                          double Omega, Model model) {
    const BogoliubovCoefficients c = coefficients(t, s, Omega, model);
    const double d = std::abs(c.U_s) - std::abs(c.V_i);
    return d * d;
}

double spectrum_universal(double g, double omega_tilde, Branch branch) {
    check_universal_args(g);
    const double gam = gamma(g, omega_tilde);
    const double gs = g * sinc(gam);  // in [0, 1) below threshold
    if (branch == Branch::squeeze) return (1.0 - gs) / (1.0 + gs);
    return (1.0 + gs) / (1.0 - gs);
}

double near_threshold_squeeze(double epsilon, double omega_tilde) {
    if (!(epsilon >= 0.0))
        throw DomainError("distance from threshold must be non-negative");
    const double w = omega_tilde / g_threshold;
    return 0.25 * (epsilon * epsilon + w * w);
}

double near_threshold_antisqueeze(double epsilon, double omega_tilde) {
    if (!(epsilon >= 0.0))
        throw DomainError("distance from threshold must be non-negative");
    const double w = omega_tilde / g_threshold;
    // At epsilon = 0, omega_tilde = 0 the Lorentzian height diverges;
    // the IEEE +infinity is the correct limit value there.
    return 4.0 / (epsilon * epsilon + w * w);
}

bool near_threshold_regime_ok(double epsilon, double omega_tilde) {
    if (!(epsilon >= 0.0)) return false;
    const double g = g_threshold - epsilon;
    return epsilon <= 0.3 && std::abs(omega_tilde) <= 0.5 * g;
}

double squeezing_bandwidth(double g, const DerivedScales& s) {
    if (!(g >= 0.0 && g < pi))
        throw DomainError("squeezing bandwidth is defined for 0 <= g < pi");
    return s.omega_gvs * std::sqrt(pi * pi - g * g);
}

double opo_spectrum(double A_p, double omega_bar) {
    if (!(A_p >= 0.0 && A_p <= 1.0))
        throw DomainError("cavity gain parameter must lie in [0, 1]");
    const double dm = 1.0 - A_p;
    const double dp = 1.0 + A_p;
    return (dm * dm + omega_bar * omega_bar) / (dp * dp + omega_bar * omega_bar);
}

std::vector<double> symmetric_grid(double span, int points) {
    if (points < 3 || points % 2 == 0)
        throw ConfigError("grid point count must be odd and >= 3, got " +
                          std::to_string(points));
    if (!(span > 0.0))
        throw ConfigError("grid span must be positive");
    const int mid = (points - 1) / 2;
    const double step = span / mid;
    std::vector<double> grid(points);
    for (int i = 0; i < points; ++i)
        grid[i] = (i - mid) * step;
    return grid;
}

} // namespace mopo
