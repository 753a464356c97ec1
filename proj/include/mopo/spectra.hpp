#ifndef MOPO_SPECTRA_HPP
#define MOPO_SPECTRA_HPP

#include <string>
#include <utility>
#include <vector>

#include "mopo/bogoliubov.hpp"

namespace mopo {

// Squeeze: the quiet joint quadrature (difference of X or sum of Y).
// Antisqueeze: the orthogonal, noisy one; implemented as a pi shift of
// the local-oscillator phase sum, never as a separate formula.
enum class Branch { squeeze, antisqueeze };

// Balanced-detection settings for the joint quadrature measurement.
//   phi_sum: local-oscillator phase sum phi_s + phi_i, rad.
//   delta_t: detection delay between the two arms, seconds; delta_t equal
//            to tau_gvm removes the group-velocity offset of the beams.
struct QuadratureSetting {
    double phi_sum = 0.0;
    double delta_t = 0.0;
    Branch branch = Branch::squeeze;
};

// Noise spectrum of the joint quadrature, shot noise = 1:
//   Sigma = 1/2 { |U_s(+W) - V_i*(-W) e^{+i W dt} e^{i phi}|^2
//               + |U_s(-W) - V_i*(+W) e^{-i W dt} e^{i phi}|^2 }
// with phi = phi_sum (+ pi on the antisqueeze branch). The correlated and
// anticorrelated joint quadratures share this one spectrum; the branch
// toggle covers both.
double spectrum_general(const TuningConfiguration& t, const DerivedScales& s,
                        const QuadratureSetting& q, double Omega, Model model);

// The two halves of the spectrum before averaging (probe the noise at
// omega_j + Omega and omega_j - Omega respectively). Their imbalance is
// the diagnostic that delta_t = tau_gvm drives to zero.
std::pair<double, double> spectrum_terms(const TuningConfiguration& t,
                                         const DerivedScales& s,
                                         const QuadratureSetting& q,
                                         double Omega, Model model);

// Phase sum minimizing the first spectrum term at this detuning.
// include_beta = true returns the full arg[U_s(+W) V_i(-W)] in (-pi, pi];
// the default drops the slow propagation phase beta(Omega), leaving
// k_s l_c + phi_p + arg[sinc gamma] - the single phase an experiment
// fixes once. The variants coincide at group-velocity degeneracy.
double optimal_phase(const TuningConfiguration& t, const DerivedScales& s,
                     double Omega, Model model, bool include_beta = false);

// The Omega-independent phase choice k_s l_c + phi_p (reduced to
// (-pi, pi]) that is optimal at Omega = 0; the fixed setting used by the
// reference spectra.
double fixed_phase(const TuningConfiguration& t);

// Per-frequency minimum of the spectrum over the phase sum:
// Sigma = (|U_s(+W)| - |V_i(-W)|)^2. Never exceeds 1.
double spectrum_optimized(const TuningConfiguration& t, const DerivedScales& s,
                          double Omega, Model model);

// Closed form of the linearized-dispersion spectrum at the fixed phase,
// a function of g and W~ = Omega/omega_gvs only:
//   squeeze:     (1 - g sinc gamma) / (1 + g sinc gamma),
//   antisqueeze: its reciprocal,        gamma = sqrt(g^2 + W~^2).
// The sinc form is smooth through g = 0 and gamma = 0.
double spectrum_universal(double g, double omega_tilde, Branch branch);

// Quadratic near-threshold laws, epsilon = pi/2 - g:
//   squeeze:     (epsilon^2 + W~^2 / (pi/2)^2) / 4
//   antisqueeze: 4 / (epsilon^2 + W~^2 / (pi/2)^2), a Lorentzian of height
//                4/epsilon^2 and half width epsilon * pi/2.
double near_threshold_squeeze(double epsilon, double omega_tilde);
double near_threshold_antisqueeze(double epsilon, double omega_tilde);

// Validity envelope of the near-threshold laws: epsilon <= 0.3 and
// |W~| <= g/2 with g = pi/2 - epsilon. The laws themselves always
// evaluate; callers (and the CLI) use this to warn.
bool near_threshold_regime_ok(double epsilon, double omega_tilde);

// Where the fixed-phase spectrum crosses shot noise:
// delta_Omega = omega_gvs * sqrt(pi^2 - g^2), rad/s. Defined for
// 0 <= g < pi.
double squeezing_bandwidth(double g, const DerivedScales& s);

// Below-threshold spectrum of the degenerate cavity parametric
// oscillator, for comparison: ((1 - A_p)^2 + W^2) / ((1 + A_p)^2 + W^2)
// with W the frequency over the cavity linewidth and threshold at
// A_p = 1. Shares the epsilon^2/4 law near threshold.
double opo_spectrum(double A_p, double omega_bar);

// Uniform symmetric grid with an odd point count: value_i =
// (i - mid) * (span / mid), so 0 is on-grid exactly and +/- pairs are
// bitwise negations. points >= 3 and odd; span > 0.
std::vector<double> symmetric_grid(double span, int points);

// One sampled spectrum curve plus the metadata needed to reproduce it.
struct SpectrumSeries {
    std::vector<double> grid;    // Omega / omega_gvs
    std::vector<double> values;  // Sigma, >= 0
    std::vector<std::pair<std::string, std::string>> metadata;  // ordered
};

} // namespace mopo

#endif
