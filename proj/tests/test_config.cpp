#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sstream>

#include "doctest.h"
#include "mor/config.hpp"

using namespace mor;

namespace {

ConfigFile parse(const std::string& text) {
    std::istringstream in(text);
    return ConfigFile::parse_stream(in, "<test>");
}

}  // namespace

TEST_CASE("sections, comments and whitespace are parsed") {
    const ConfigFile cfg = parse(
        "# leading comment\n"
        "[env]\n"
        "zeta = 10.5   ; trailing comment\n"
        "\n"
        "  alpha_l=300\n"
        "[control]\n"
        "G1_re = 100\n");
    CHECK(cfg.get_double("env", "zeta", 0.0) == doctest::Approx(10.5));
    CHECK(cfg.get_double("env", "alpha_l", 0.0) == doctest::Approx(300.0));
    CHECK(cfg.get_double("control", "G1_re", 0.0) == doctest::Approx(100.0));
    CHECK(!cfg.has("env", "omega_d"));
}

TEST_CASE("malformed lines report file and line number") {
    CHECK_THROWS_WITH_AS(parse("[env]\nzeta 10\n"),
                         doctest::Contains("<test>:2"), ConfigError);
    CHECK_THROWS_WITH_AS(parse("[env\n"), doctest::Contains("<test>:1"), ConfigError);
    CHECK_THROWS_WITH_AS(parse("zeta = 1\n"), doctest::Contains("outside any [section]"),
                         ConfigError);
}

TEST_CASE("typed accessors validate their values with key diagnostics") {
    const ConfigFile cfg = parse("[env]\nzeta = ten\n[sweep]\npoints = 2.5\ntwo_photon = maybe\n");
    CHECK_THROWS_WITH_AS(cfg.get_double("env", "zeta", 0.0),
                         doctest::Contains("env.zeta"), ConfigError);
    CHECK_THROWS_WITH_AS(cfg.get_int("sweep", "points", 0),
                         doctest::Contains("sweep.points"), ConfigError);
    CHECK_THROWS_WITH_AS(cfg.get_bool("sweep", "two_photon", false),
                         doctest::Contains("expected a boolean"), ConfigError);
}

TEST_CASE("unused keys are reported for typo detection") {
    const ConfigFile cfg = parse("[env]\nzeta = 1\nzeeta = 2\n");
    (void)cfg.get_double("env", "zeta", 0.0);
    const auto unused = cfg.unused_keys();
    REQUIRE(unused.size() == 1);
    CHECK(*unused.begin() == "env.zeeta");
}

TEST_CASE("sweep config overrides only the keys it names") {
    const ConfigFile cfg = parse(
        "[atom]\nGamma_1 = 2\n"
        "[control]\nG1_re = 50\nDelta = -3\n"
        "[env]\nzeta = 20\nalpha_l = 3000\n"
        "[sweep]\nvariable = zeta\nlo = -60\nhi = 60\npoints = 501\ndelta = -250\n");
    std::string notes;
    const SweepSpec spec = apply_config(cfg, SweepSpec{}, &notes);
    CHECK(spec.atom.Gamma_1 == doctest::Approx(2.0));
    CHECK(spec.atom.Gamma_2 == doctest::Approx(1.0));  // untouched default
    CHECK(spec.ctrl.G1 == Complex(50.0, 0.0));
    CHECK(spec.ctrl.Delta == doctest::Approx(-3.0));
    CHECK(spec.env.zeta == doctest::Approx(20.0));
    CHECK(spec.env.alpha_l == doctest::Approx(3000.0));
    CHECK(spec.variable == SweepVariable::Zeta);
    CHECK(spec.points == 501);
    CHECK(spec.fixed_delta == doctest::Approx(-250.0));
    // Documented default applied and noted.
    CHECK(spec.env.omega_d == doctest::Approx(50.0));
    CHECK(notes.find("omega_d") != std::string::npos);
}

TEST_CASE("an explicit omega_d silences the default note") {
    const ConfigFile cfg = parse("[env]\nomega_d = 25\n");
    std::string notes;
    const SweepSpec spec = apply_config(cfg, SweepSpec{}, &notes);
    CHECK(spec.env.omega_d == doctest::Approx(25.0));
    CHECK(notes.empty());
}

TEST_CASE("invalid sweep variable is rejected") {
    const ConfigFile cfg = parse("[sweep]\nvariable = magnetization\n");
    CHECK_THROWS_AS(apply_config(cfg, SweepSpec{}, nullptr), ConfigError);
}

TEST_CASE("lab section maps onto the unit-conversion inputs") {
    const ConfigFile cfg = parse(
        "[lab]\ntemperature_k = 550\nb_field_gauss = 240\ndensity_m3 = 7.0e16\n");
    const LabUnits lab = apply_lab_config(cfg, LabUnits{});
    CHECK(lab.temperature_k == doctest::Approx(550.0));
    CHECK(lab.b_field_gauss == doctest::Approx(240.0));
    CHECK(lab.density_m3 == doctest::Approx(7.0e16));
    CHECK(lab.cell_length_m == doctest::Approx(0.05));  // untouched default
}

TEST_CASE("missing files are reported as config errors") {
    CHECK_THROWS_AS(ConfigFile::parse_file("/nonexistent/mor.ini"), ConfigError);
}
