#ifndef MOPO_BOGOLIUBOV_HPP
#define MOPO_BOGOLIUBOV_HPP

#include <complex>

#include "mopo/tuning.hpp"

namespace mopo {

// Dispersion handling for the coefficient and spectrum evaluations.
//   exact:      D(Omega) and beta(Omega) from the full index formula.
//   linearized: D l_c/2 -> Omega/omega_gvs, beta -> Omega/omega_gvm.
enum class Model { exact, linearized };

// Input-output coefficients of the conjugate mode pair
// (omega_s + Omega, omega_i - Omega):
//   A_s_out(+Omega) = U_s A_s_in(+Omega) + V_s A_i_in^dag(-Omega)
//   A_i_out(-Omega) = U_i A_i_in(-Omega) + V_i A_s_in^dag(+Omega)
// U_s, V_s are evaluated at +Omega; U_i, V_i at -Omega.
struct BogoliubovCoefficients {
    std::complex<double> U_s, V_s, U_i, V_i;
};

// gamma = sqrt(g^2 + delta^2) with delta the dimensionless half-mismatch
// D(Omega) l_c / 2. Always >= g.
double gamma(double g, double delta);

// sin(x)/x with sinc(0) = 1; series evaluation for |x| < 1e-4 keeps the
// g -> 0 limit smooth.
double sinc(double x);

// Evaluates the four coefficients at detuning Omega.
//
// Phase bookkeeping: k_s l_c and k_i l_c are reduced modulo 2 pi once and
// shared between all four phase factors (the V_s factor uses their
// difference). With independent reductions the cross identity
// U_s V_i = U_i V_s would pick up spurious O(1e-7) residuals near
// threshold where |U| is large; with shared reductions it holds to
// rounding. Throws ThresholdError for g within 1e-9 of pi/2.
BogoliubovCoefficients coefficients(const TuningConfiguration& t,
                                    const DerivedScales& s, double Omega,
                                    Model model);

// Residual magnitudes of the three coefficient identities:
//   r1: max deviation of |U_s|^2 - |V_s|^2 and |U_i|^2 - |V_i|^2 from 1
//   r2: |U_s V_i - U_i V_s|   (cross identity, within one conjugate pair)
//   r3: | |V_s| - |V_i| |
// Both the +Omega and the -Omega coefficient sets are checked; the
// component-wise maximum is returned.
struct UnitarityResiduals {
    double r1, r2, r3;
};

UnitarityResiduals unitarity_residuals(const BogoliubovCoefficients& at_plus,
                                       const BogoliubovCoefficients& at_minus);

} // namespace mopo

#endif
