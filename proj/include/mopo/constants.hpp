#ifndef MOPO_CONSTANTS_HPP
#define MOPO_CONSTANTS_HPP

namespace mopo {

inline constexpr double pi = 3.14159265358979323846;
inline constexpr double two_pi = 2.0 * pi;

// Speed of light in vacuum, m/s (exact SI value).
inline constexpr double c_light = 299792458.0;

// Oscillation threshold of the dimensionless gain. Below-threshold
// formulas require g < g_threshold strictly.
inline constexpr double g_threshold = pi / 2.0;

// Gains within this distance of g_threshold are rejected: cos(gamma)
// cancels catastrophically there and every coefficient diverges.
inline constexpr double threshold_guard = 1e-9;

} // namespace mopo

#endif
