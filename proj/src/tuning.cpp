#include "mopo/tuning.hpp"

#include <cmath>
#include <sstream>

#include "mopo/constants.hpp"
#include "mopo/errors.hpp"

namespace mopo {

namespace {

void check_odd_order(int m_order) {
    if (m_order < 1 || m_order % 2 == 0)
        throw DomainError("grating order must be an odd positive integer, got " +
                          std::to_string(m_order));
}

void check_gain(double g) {
    if (!(g >= 0.0))
        throw DomainError("gain must be non-negative");
    if (g >= g_threshold - threshold_guard) {
        std::ostringstream os;
        os << "gain " << g << " is at or beyond the oscillation threshold pi/2;"
           << " below-threshold coefficients diverge there";
        throw ThresholdError(os.str());
    }
}

// QPM residual whose root in lambda_s defines the tuning curve:
// f(lambda_s) = k_s - k_i - k_p + k_G. Strictly decreasing in lambda_s
// for normally dispersive materials (both k_s and -k_i decrease).
double qpm_residual(const Material& mat, double omega_p, double k_p,
                    double k_G, double lambda_s) {
    const double omega_s = two_pi * c_light / lambda_s;
    const double omega_i = omega_p - omega_s;
    if (!(omega_i > 0.0))
        throw DomainError("signal wavelength leaves no energy for the idler");
    const double k_s = wavenumber(mat, omega_s);
    const double k_i = wavenumber(mat, omega_i);
    return k_s - k_i - k_p + k_G;
}

} // namespace

double poling_period(const Material& mat, double lambda_p, double lambda_s,
                     int m_order) {
    check_odd_order(m_order);
    const double omega_p = two_pi * c_light / lambda_p;
    const double omega_s = two_pi * c_light / lambda_s;
    const double omega_i = omega_p - omega_s;
    if (!(omega_i > 0.0))
        throw DomainError("signal wavelength leaves no energy for the idler");
    const double k_p = wavenumber(mat, omega_p);
    const double k_s = wavenumber(mat, omega_s);
    const double k_i = wavenumber(mat, omega_i);
    const double denom = k_p - k_s + k_i;
    if (!(denom > 0.0))
        throw DomainError("k_p - k_s + k_i is not positive: geometry is not "
                          "backward-matchable at this tuning");
    return m_order * two_pi / denom;
}

double solve_signal_wavelength(const Material& mat, double lambda_p,
                               double Lambda, int m_order,
                               double bracket_lo, double bracket_hi) {
    check_odd_order(m_order);
    if (!(Lambda > 0.0))
        throw DomainError("poling period must be positive");
    if (!(bracket_lo > 0.0 && bracket_hi > bracket_lo))
        throw SolverError("signal-wavelength bracket must satisfy 0 < lo < hi");

    const double omega_p = two_pi * c_light / lambda_p;
    const double k_p = wavenumber(mat, omega_p);
    const double k_G = m_order * two_pi / Lambda;
    const double tol = 1e-6 * (two_pi / Lambda);

    double lo = bracket_lo, hi = bracket_hi;
    double f_lo = qpm_residual(mat, omega_p, k_p, k_G, lo);
    double f_hi = qpm_residual(mat, omega_p, k_p, k_G, hi);
    if (std::abs(f_lo) < tol) return lo;
    if (std::abs(f_hi) < tol) return hi;
    if (f_lo * f_hi > 0.0) {
        std::ostringstream os;
        os << "no sign change of the matching residual over [" << bracket_lo * 1e9
           << ", " << bracket_hi * 1e9 << "] nm (f = " << f_lo << " and " << f_hi
           << " rad/m)";
        throw SolverError(os.str());
    }
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double f_mid = qpm_residual(mat, omega_p, k_p, k_G, mid);
        if (std::abs(f_mid) < tol) return mid;
        if (f_lo * f_mid <= 0.0) {
            hi = mid;
            f_hi = f_mid;
        } else {
            lo = mid;
            f_lo = f_mid;
        }
        if (hi - lo <= 1e-18)  // bracket exhausted at double resolution
            return 0.5 * (lo + hi);
    }
    throw SolverError("signal-wavelength bisection did not converge in 200 "
                      "iterations");
}

TuningConfiguration degenerate_tuning(const Material& mat, double lambda_p,
                                      double l_c, double g, double phi_p,
                                      int m_order) {
    check_gain(g);
    if (!(l_c > 0.0))
        throw DomainError("crystal length must be positive");
    TuningConfiguration t;
    t.material = mat;
    t.lambda_p = lambda_p;
    // 2 * lambda_p is exact in binary floating point, so lambda_s and
    // lambda_i are the same double and tau_gvm vanishes identically.
    t.lambda_s = 2.0 * lambda_p;
    t.lambda_i = t.lambda_s;
    t.m_order = m_order;
    t.l_c = l_c;
    t.g = g;
    t.phi_p = phi_p;
    t.Lambda = poling_period(mat, lambda_p, t.lambda_s, m_order);
    return t;
}

TuningConfiguration tuning_from_signal(const Material& mat, double lambda_p,
                                       double lambda_s, double l_c, double g,
                                       double phi_p, int m_order) {
    check_gain(g);
    if (!(l_c > 0.0))
        throw DomainError("crystal length must be positive");
    if (!(lambda_s > lambda_p))
        throw DomainError("signal wavelength must exceed the pump wavelength");
    TuningConfiguration t;
    t.material = mat;
    t.lambda_p = lambda_p;
    t.lambda_s = lambda_s;
    t.lambda_i = 1.0 / (1.0 / lambda_p - 1.0 / lambda_s);
    t.m_order = m_order;
    t.l_c = l_c;
    t.g = g;
    t.phi_p = phi_p;
    t.Lambda = poling_period(mat, lambda_p, lambda_s, m_order);
    return t;
}

DerivedScales derived_scales(const TuningConfiguration& t) {
    const double omega_s = two_pi * c_light / t.lambda_s;
    const double omega_i = two_pi * c_light / t.lambda_i;
    DerivedScales s;
    s.kprime_s = inverse_group_velocity(t.material, omega_s);
    s.kprime_i = inverse_group_velocity(t.material, omega_i);
    const double half_lc = t.l_c / 2.0;
    s.tau_gvs = half_lc * (s.kprime_s + s.kprime_i);
    s.tau_gvm = half_lc * (s.kprime_s - s.kprime_i);
    s.omega_gvs = 1.0 / s.tau_gvs;
    if (s.tau_gvm != 0.0)
        s.omega_gvm = 1.0 / s.tau_gvm;
    return s;
}

double mismatch_exact(const TuningConfiguration& t, double Omega) {
    const double omega_p = two_pi * c_light / t.lambda_p;
    const double omega_s = two_pi * c_light / t.lambda_s;
    const double omega_i = omega_p - omega_s;
    const double k_s = wavenumber(t.material, omega_s + Omega);
    const double k_i = wavenumber(t.material, omega_i - Omega);
    const double k_p = wavenumber(t.material, omega_p);
    const double k_G = t.m_order * two_pi / t.Lambda;
    return k_s - k_i - k_p + k_G;
}

double beta_exact(const TuningConfiguration& t, double Omega) {
    const double omega_p = two_pi * c_light / t.lambda_p;
    const double omega_s = two_pi * c_light / t.lambda_s;
    const double omega_i = omega_p - omega_s;
    const double k_s0 = wavenumber(t.material, omega_s);
    const double k_i0 = wavenumber(t.material, omega_i);
    const double k_s = wavenumber(t.material, omega_s + Omega);
    const double k_i = wavenumber(t.material, omega_i - Omega);
    return ((k_s - k_s0) + (k_i - k_i0)) * (t.l_c / 2.0);
}

double beta_linear(const DerivedScales& s, double Omega) {
    if (s.tau_gvm == 0.0) return 0.0;
    return Omega * s.tau_gvm;
}

} // namespace mopo
