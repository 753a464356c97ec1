#include "mopo/material.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "mopo/constants.hpp"
#include "mopo/errors.hpp"

namespace mopo {

namespace {

// n^2(lam_um) and its derivative d(n^2)/dlam in 1/um.
double n_squared(const Material& mat, double lam_um) {
    const double l2 = lam_um * lam_um;
    double f = mat.constant_term;
    for (const auto& [b, c] : mat.terms)
        f += b * l2 / (l2 - c);
    return f;
}

double n_squared_dlam(const Material& mat, double lam_um) {
    const double l2 = lam_um * lam_um;
    double df = 0.0;
    for (const auto& [b, c] : mat.terms) {
        const double d = l2 - c;
        // d/dlam [b l2/(l2-c)] = -2 b c lam / (l2-c)^2
        df += -2.0 * b * c * lam_um / (d * d);
    }
    return df;
}

void check_range(const Material& mat, double lambda) {
    if (!(lambda >= mat.lambda_min && lambda <= mat.lambda_max)) {
        std::ostringstream os;
        os << "wavelength " << lambda * 1e9 << " nm outside validity ["
           << mat.lambda_min * 1e9 << ", " << mat.lambda_max * 1e9
           << "] nm of material '" << mat.name << "'";
        throw DomainError(os.str());
    }
}

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

} // namespace

double refractive_index(const Material& mat, double lambda) {
    check_range(mat, lambda);
    const double n2 = n_squared(mat, lambda * 1e6);
    if (!(n2 > 0.0))
        throw DomainError("index formula of '" + mat.name +
                          "' evaluates to non-positive n^2");
    return std::sqrt(n2);
}

double wavenumber(const Material& mat, double omega) {
    if (!(omega > 0.0))
        throw DomainError("wavenumber requires omega > 0");
    const double lambda = two_pi * c_light / omega;
    return omega * refractive_index(mat, lambda) / c_light;
}

double inverse_group_velocity(const Material& mat, double omega) {
    if (!(omega > 0.0))
        throw DomainError("inverse_group_velocity requires omega > 0");
    const double lambda = two_pi * c_light / omega;
    check_range(mat, lambda);
    const double lam_um = lambda * 1e6;
    const double n = std::sqrt(n_squared(mat, lam_um));
    const double dn_dlam_um = n_squared_dlam(mat, lam_um) / (2.0 * n);
    // k' = dk/domega = (n - lam dn/dlam) / c; lam dn/dlam is unit-free.
    return (n - lam_um * dn_dlam_um) / c_light;
}

void validate_structure(const Material& mat) {
    if (mat.name.empty())
        throw ParseError("material has no name");
    if (mat.formula != "nsq_rational")
        throw ParseError("material '" + mat.name + "': unknown formula tag '" +
                         mat.formula + "'");
    if (!(mat.lambda_min > 0.0 && mat.lambda_max > mat.lambda_min))
        throw ParseError("material '" + mat.name +
                         "': validity window must satisfy 0 < min < max");
    if (!std::isfinite(mat.constant_term))
        throw ParseError("material '" + mat.name + "': non-finite constant term");
    for (const auto& [b, c] : mat.terms)
        if (!std::isfinite(b) || !std::isfinite(c))
            throw ParseError("material '" + mat.name + "': non-finite coefficient");
}

Material load_material(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in)
        throw ParseError("cannot open material file " + file.string());

    Material mat;
    bool have_min = false, have_max = false;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError(file.string() + ":" + std::to_string(lineno) +
                             ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (key == "name") {
            mat.name = val;
        } else if (key == "axis") {
            mat.axis = val;
        } else if (key == "formula") {
            mat.formula = val;
        } else if (key == "reference") {
            mat.reference = val;
        } else if (key == "constant") {
            mat.constant_term = std::stod(val);
        } else if (key == "term") {
            std::istringstream vs(val);
            double b = 0.0, c = 0.0;
            if (!(vs >> b >> c))
                throw ParseError(file.string() + ":" + std::to_string(lineno) +
                                 ": term needs two numbers (B_j C_j)");
            mat.terms.emplace_back(b, c);
        } else if (key == "lambda_min_um") {
            mat.lambda_min = std::stod(val) * 1e-6;
            have_min = true;
        } else if (key == "lambda_max_um") {
            mat.lambda_max = std::stod(val) * 1e-6;
            have_max = true;
        } else if (key == "temperature_c") {
            // informational; the bundled data is single-temperature
        } else {
            throw ParseError(file.string() + ":" + std::to_string(lineno) +
                             ": unknown key '" + key + "'");
        }
    }
    if (!have_min || !have_max)
        throw ParseError(file.string() + ": missing lambda_min_um / lambda_max_um");
    validate_structure(mat);

    // Physical validation of database entries: poles of the rational terms
    // must lie outside the validity window, and n > 1 across it.
    const double lo2 = mat.lambda_min * 1e6 * mat.lambda_min * 1e6;
    const double hi2 = mat.lambda_max * 1e6 * mat.lambda_max * 1e6;
    for (const auto& [b, c] : mat.terms) {
        (void)b;
        if (c >= lo2 && c <= hi2)
            throw DomainError("material '" + mat.name +
                              "': resonance pole inside the validity window");
    }
    const int samples = 257;
    for (int i = 0; i < samples; ++i) {
        const double lam = mat.lambda_min +
            (mat.lambda_max - mat.lambda_min) * i / double(samples - 1);
        if (!(refractive_index(mat, lam) > 1.0))
            throw DomainError("material '" + mat.name +
                              "': n <= 1 inside the validity window");
    }
    return mat;
}

std::filesystem::path material_database_dir() {
    if (const char* env = std::getenv("MOPO_MATERIAL_DIR"); env && *env)
        return env;
#ifdef MOPO_DATA_DIR
    return MOPO_DATA_DIR;
#else
    return "data/materials";
#endif
}

Material find_material(const std::string& name) {
    const auto file = material_database_dir() / (name + ".mat");
    if (!std::filesystem::exists(file))
        throw ConfigError("material '" + name + "' not found (looked for " +
                          file.string() + ")");
    return load_material(file);
}

} // namespace mopo
