#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <random>

#include "mopo/constants.hpp"
#include "mopo/errors.hpp"
#include "mopo/material.hpp"

using namespace mopo;

namespace {

Material bundled() { return find_material("linbo3_e"); }

Material constant_index(double n) {
    Material mat;
    mat.name = "const_n";
    mat.axis = "none";
    mat.constant_term = n * n;
    mat.lambda_min = 0.1e-6;
    mat.lambda_max = 10e-6;
    return mat;
}

double omega_of(double lambda) { return two_pi * c_light / lambda; }

std::filesystem::path write_temp(const std::string& stem,
                                 const std::string& body) {
    const auto path = std::filesystem::temp_directory_path() / stem;
    std::ofstream out(path);
    out << body;
    return path;
}

} // namespace

// Expected values below were frozen from an independent 50-digit
// evaluation of the bundled coefficient set before this module was
// implemented.

TEST_CASE("index of the bundled crystal at the reference wavelengths") {
    const Material mat = bundled();
    CHECK(refractive_index(mat, 800e-9) ==
          doctest::Approx(2.1754655579551773).epsilon(1e-12));
    CHECK(refractive_index(mat, 1600e-9) ==
          doctest::Approx(2.1361332722923934).epsilon(1e-12));
}

TEST_CASE("index evaluation is rejected outside the validity window") {
    const Material mat = bundled();
    CHECK_THROWS_AS(refractive_index(mat, 0.3e-6), DomainError);
    CHECK_THROWS_AS(refractive_index(mat, 6e-6), DomainError);
    CHECK_THROWS_AS(wavenumber(mat, omega_of(0.3e-6)), DomainError);
    CHECK_THROWS_AS(inverse_group_velocity(mat, omega_of(6e-6)), DomainError);
}

TEST_CASE("wavenumber at 800 nm") {
    const Material mat = bundled();
    CHECK(wavenumber(mat, omega_of(800e-9)) ==
          doctest::Approx(17086066.537524014).epsilon(1e-12));
}

TEST_CASE("vacuum identity and linearity at constant index") {
    const Material vacuum = constant_index(1.0);
    const double omega = omega_of(1.0e-6);
    CHECK(wavenumber(vacuum, omega) == omega / c_light);

    const Material glass = constant_index(1.5);
    CHECK(wavenumber(glass, 2.0 * omega) == 2.0 * wavenumber(glass, omega));
    // dispersionless: k' = n/c exactly
    CHECK(inverse_group_velocity(glass, omega) == 1.5 / c_light);
}

TEST_CASE("group index at 1600 nm") {
    const Material mat = bundled();
    const double ng = c_light * inverse_group_velocity(mat, omega_of(1600e-9));
    CHECK(ng == doctest::Approx(2.1812599533358633).epsilon(1e-12));
    // central finite difference with step 1e-4 * omega as a second oracle
    const double omega = omega_of(1600e-9);
    const double h = 1e-4 * omega;
    const double fd =
        (wavenumber(mat, omega + h) - wavenumber(mat, omega - h)) / (2.0 * h);
    CHECK(inverse_group_velocity(mat, omega) ==
          doctest::Approx(fd).epsilon(1e-6));
}

TEST_CASE("group index at the pump wavelength") {
    const Material mat = bundled();
    const double ng = c_light * inverse_group_velocity(mat, omega_of(800e-9));
    CHECK(ng == doctest::Approx(2.2642203520489254).epsilon(1e-12));
}

TEST_CASE("analytic derivative matches finite differences across the window") {
    const Material mat = bundled();
    std::mt19937 rng(987654);
    std::uniform_real_distribution<double> lam(0.41e-6, 4.95e-6);
    for (int i = 0; i < 100; ++i) {
        const double omega = omega_of(lam(rng));
        const double h = 1e-4 * omega;
        const double fd =
            (wavenumber(mat, omega + h) - wavenumber(mat, omega - h)) /
            (2.0 * h);
        const double analytic = inverse_group_velocity(mat, omega);
        CHECK(analytic == doctest::Approx(fd).epsilon(1e-6));
        CHECK(analytic > 1.0 / c_light);  // normal dispersion
    }
}

TEST_CASE("database file round trip") {
    const Material mat = bundled();
    CHECK(mat.name == "linbo3_e");
    CHECK(mat.axis == "extraordinary");
    CHECK(mat.formula == "nsq_rational");
    CHECK(mat.terms.size() == 3);
    CHECK(mat.lambda_min == doctest::Approx(0.4e-6));
    CHECK(mat.lambda_max == doctest::Approx(5.0e-6));
    CHECK(mat.reference.find("Zelmon") != std::string::npos);
}

TEST_CASE("environment variable overrides the database directory") {
    const auto dir = std::filesystem::temp_directory_path() / "mopo_mat_env";
    std::filesystem::create_directories(dir);
    std::filesystem::copy_file(material_database_dir() / "linbo3_e.mat",
                               dir / "linbo3_e.mat",
                               std::filesystem::copy_options::overwrite_existing);
    setenv("MOPO_MATERIAL_DIR", dir.c_str(), 1);
    CHECK(material_database_dir() == dir);
    CHECK(find_material("linbo3_e").name == "linbo3_e");
    unsetenv("MOPO_MATERIAL_DIR");
    CHECK_THROWS_AS(find_material("no_such_material"), ConfigError);
}

TEST_CASE("malformed database files are rejected") {
    const auto missing = write_temp("mopo_bad1.mat",
                                    "name = x\nformula = nsq_rational\n"
                                    "constant = 2.25\n");
    CHECK_THROWS_AS(load_material(missing), ParseError);

    const auto unknown = write_temp("mopo_bad2.mat",
                                    "name = x\nformula = polynomial\n"
                                    "constant = 2.25\nlambda_min_um = 0.5\n"
                                    "lambda_max_um = 2.0\n");
    CHECK_THROWS_AS(load_material(unknown), ParseError);

    const auto junk = write_temp("mopo_bad3.mat", "this is not key value\n");
    CHECK_THROWS_AS(load_material(junk), ParseError);

    // physically invalid: n < 1 across the window
    const auto thin = write_temp("mopo_bad4.mat",
                                 "name = x\nformula = nsq_rational\n"
                                 "constant = 0.81\nlambda_min_um = 0.5\n"
                                 "lambda_max_um = 2.0\n");
    CHECK_THROWS_AS(load_material(thin), DomainError);

    // resonance pole inside the validity window
    const auto pole = write_temp("mopo_bad5.mat",
                                 "name = x\nformula = nsq_rational\n"
                                 "constant = 2.25\nterm = 1.0 1.0\n"
                                 "lambda_min_um = 0.5\nlambda_max_um = 2.0\n");
    CHECK_THROWS_AS(load_material(pole), DomainError);
}
