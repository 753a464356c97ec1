#ifndef MOPO_MATERIAL_HPP
#define MOPO_MATERIAL_HPP

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace mopo {

// Refractive-index model for one crystal axis/polarization.
//
// Formula variant "nsq_rational":
//   n^2(lam) = A + sum_j B_j lam^2 / (lam^2 - C_j),   lam in micrometers.
//
// All public wavelengths are vacuum wavelengths in meters; the micrometer
// convention is internal to the formula evaluation.
struct Material {
    std::string name;
    std::string axis;               // polarization/axis label, e.g. "extraordinary"
    std::string formula = "nsq_rational";
    double constant_term = 1.0;     // A
    std::vector<std::pair<double, double>> terms;  // (B_j, C_j), C_j in um^2
    double lambda_min = 0.0;        // validity window, meters
    double lambda_max = 0.0;
    std::string reference;          // literature citation for the coefficients
};

// n(lambda), lambda in meters. Throws DomainError outside the validity
// window; never extrapolates.
double refractive_index(const Material& mat, double lambda);

// k(omega) = omega * n(2 pi c / omega) / c, rad/m. omega is angular, rad/s.
double wavenumber(const Material& mat, double omega);

// dk/domega, s/m, from the analytically differentiated index formula.
// Equals n_group / c with n_group = n - lambda dn/dlambda.
double inverse_group_velocity(const Material& mat, double omega);

// Structural sanity only (used by the in-memory constructor path):
// ordered validity window, finite coefficients, known formula tag.
void validate_structure(const Material& mat);

// Loads one material file (key = value lines, '#' comments) and applies
// physical validation: n > 1 across the validity window, resonance poles
// outside it. Throws ParseError / DomainError.
Material load_material(const std::filesystem::path& file);

// Database directory: the MOPO_MATERIAL_DIR environment variable if set,
// otherwise the compiled-in default next to the sources.
std::filesystem::path material_database_dir();

// Loads "<database_dir>/<name>.mat".
Material find_material(const std::string& name);

} // namespace mopo

#endif
