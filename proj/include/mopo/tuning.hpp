#ifndef MOPO_TUNING_HPP
#define MOPO_TUNING_HPP

#include <optional>

#include "mopo/material.hpp"

namespace mopo {

// One operating point of the counter-propagating parametric interaction:
// pump and signal co-propagate, the idler back-propagates, and a poling
// grating of period Lambda supplies the wavevector m_order * 2 pi / Lambda.
//
// Invariants (guaranteed by the factories below):
//   1/lambda_p = 1/lambda_s + 1/lambda_i  (energy conservation, 1e-12 rel)
//   mismatch_exact(0) = 0 within 1e-6 * (2 pi / Lambda)
//   m_order odd and positive, 0 <= g < pi/2 for spectra work.
struct TuningConfiguration {
    Material material;
    double lambda_p = 0.0;  // vacuum wavelengths, meters
    double lambda_s = 0.0;
    double lambda_i = 0.0;
    double Lambda = 0.0;    // poling period, meters
    int m_order = 1;
    double l_c = 0.0;       // crystal length, meters
    double g = 0.0;         // dimensionless gain
    double phi_p = 0.0;     // pump phase, rad
};

// Grating-order solution of the backward momentum balance
// k_s - k_i = k_p - m 2 pi / Lambda, with lambda_i from energy
// conservation: Lambda = m 2 pi / (k_p - k_s + k_i).
// Throws DomainError when the denominator is not positive.
double poling_period(const Material& mat, double lambda_p, double lambda_s,
                     int m_order);

// Inverse problem: the signal wavelength matched by a given grating.
// Bracketed bisection on the residual k_s - k_i - k_p + m 2 pi / Lambda;
// requires a sign change over [bracket_lo, bracket_hi]. Deterministic;
// stops when |residual| < 1e-6 * (2 pi / Lambda). Throws SolverError when
// the bracket has no sign change or the iteration cap (200) is reached.
double solve_signal_wavelength(const Material& mat, double lambda_p,
                               double Lambda, int m_order,
                               double bracket_lo, double bracket_hi);

// Degenerate operating point: lambda_s = lambda_i = 2 lambda_p bitwise,
// so the two inverse group velocities are identical doubles and
// tau_gvm == 0 exactly.
TuningConfiguration degenerate_tuning(const Material& mat, double lambda_p,
                                      double l_c, double g, double phi_p = 0.0,
                                      int m_order = 1);

// Non-degenerate operating point from a chosen signal wavelength; the
// idler follows from energy conservation and Lambda from poling_period.
TuningConfiguration tuning_from_signal(const Material& mat, double lambda_p,
                                       double lambda_s, double l_c, double g,
                                       double phi_p = 0.0, int m_order = 1);

// Group-velocity time and frequency scales of an operating point.
//   tau_gvs = (l_c/2)(k'_s + k'_i) > 0: the long scale (transit time).
//   tau_gvm = (l_c/2)(k'_s - k'_i), signed: the short-offset scale.
// omega_gvs is defined as 1/tau_gvs. omega_gvm = 1/tau_gvm is absent
// (nullopt) when tau_gvm == 0, i.e. at group-velocity degeneracy; no
// floating infinity ever enters arithmetic.
struct DerivedScales {
    double kprime_s = 0.0;  // s/m
    double kprime_i = 0.0;
    double tau_gvs = 0.0;   // s
    double tau_gvm = 0.0;   // s, signed
    double omega_gvs = 0.0; // rad/s
    std::optional<double> omega_gvm;  // rad/s, signed
};

DerivedScales derived_scales(const TuningConfiguration& t);

// Exact phase mismatch D(Omega) = k_s(+Omega) - k_i(-Omega) - k_p + k_G
// in rad/m, with k_j(Omega) the wavenumber at omega_j + Omega and
// k_G = m_order * 2 pi / Lambda. Linearization: D l_c / 2 ~ Omega/omega_gvs.
double mismatch_exact(const TuningConfiguration& t, double Omega);

// Exact propagation phase
// beta(Omega) = [k_s(+Omega) + k_i(-Omega) - (k_s + k_i)] l_c / 2, rad.
double beta_exact(const TuningConfiguration& t, double Omega);

// Linearized propagation phase Omega * tau_gvm = Omega / omega_gvm;
// identically 0 at group-velocity degeneracy.
double beta_linear(const DerivedScales& s, double Omega);

} // namespace mopo

#endif
