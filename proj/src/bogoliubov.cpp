#include "mopo/bogoliubov.hpp"

#include <algorithm>
#include <cmath>

#include "mopo/constants.hpp"
#include "mopo/errors.hpp"

namespace mopo {

double gamma(double g, double delta) {
    if (!(g >= 0.0))
        throw DomainError("gamma requires g >= 0");
    return std::hypot(g, delta);
}

double sinc(double x) {
    const double ax = std::abs(x);
    if (ax < 1e-4) {
        const double x2 = x * x;
        // sin x / x = 1 - x^2/6 + x^4/120 - ...; truncation < 1e-26 here.
        return 1.0 - x2 / 6.0 * (1.0 - x2 / 20.0);
    }
    return std::sin(x) / x;
}

BogoliubovCoefficients coefficients(const TuningConfiguration& t,
                                    const DerivedScales& s, double Omega,
                                    Model model) {
    if (!(t.g >= 0.0))
        throw DomainError("gain must be non-negative");
    if (t.g >= g_threshold - threshold_guard)
        throw ThresholdError("gain " + std::to_string(t.g) +
                             " is at or beyond the oscillation threshold pi/2");

    const double omega_p = two_pi * c_light / t.lambda_p;
    const double omega_s = two_pi * c_light / t.lambda_s;
    const double omega_i = omega_p - omega_s;
    const double k_s0 = wavenumber(t.material, omega_s);
    const double k_i0 = wavenumber(t.material, omega_i);
    // Single modulo-2pi reduction shared by every phase factor below.
    const double ks_lc = std::remainder(k_s0 * t.l_c, two_pi);
    const double ki_lc = std::remainder(k_i0 * t.l_c, two_pi);

    double delta, beta;
    if (model == Model::exact) {
        delta = mismatch_exact(t, Omega) * (t.l_c / 2.0);
        beta = beta_exact(t, Omega);
    } else {
        delta = Omega / s.omega_gvs;
        beta = beta_linear(s, Omega);
    }

    const double gam = gamma(t.g, delta);
    const double snc = sinc(gam);
    // phi = 1 / (cos gamma - i delta sinc gamma); |phi|^2 stays finite for
    // every g < pi/2 because cos^2 + delta^2 sinc^2 = 1 - g^2 sinc^2 > 0.
    const std::complex<double> phi =
        1.0 / std::complex<double>(std::cos(gam), -delta * snc);
    const std::complex<double> phi_conj = std::conj(phi);
    const double v_mag = t.g * snc;

    BogoliubovCoefficients c;
    c.U_s = std::polar(1.0, ks_lc + beta) * phi;
    c.V_s = std::polar(v_mag, (ks_lc - ki_lc) + t.phi_p) * phi;
    c.U_i = std::polar(1.0, ki_lc + beta) * phi_conj;
    c.V_i = std::polar(v_mag, t.phi_p) * phi_conj;
    return c;
}

namespace {

UnitarityResiduals residuals_of(const BogoliubovCoefficients& c) {
    const double ns = std::norm(c.U_s) - std::norm(c.V_s);
    const double ni = std::norm(c.U_i) - std::norm(c.V_i);
    UnitarityResiduals r;
    r.r1 = std::max(std::abs(ns - 1.0), std::abs(ni - 1.0));
    r.r2 = std::abs(c.U_s * c.V_i - c.U_i * c.V_s);
    r.r3 = std::abs(std::abs(c.V_s) - std::abs(c.V_i));
    return r;
}

} // namespace

UnitarityResiduals unitarity_residuals(const BogoliubovCoefficients& at_plus,
                                       const BogoliubovCoefficients& at_minus) {
    const UnitarityResiduals a = residuals_of(at_plus);
    const UnitarityResiduals b = residuals_of(at_minus);
    return {std::max(a.r1, b.r1), std::max(a.r2, b.r2), std::max(a.r3, b.r3)};
}

} // namespace mopo
