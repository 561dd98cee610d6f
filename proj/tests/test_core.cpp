#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "mor/types.hpp"
#include "mor/units.hpp"

using namespace mor;

TEST_CASE("default parameter set validates") {
    AtomParams atom;
    ControlParams ctrl;
    ctrl.G1 = 100.0;
    EnvParams env;
    env.zeta = 10.0;
    env.omega_d = 50.0;
    env.alpha_l = 300.0;
    CHECK_NOTHROW(validate(atom, ctrl, env));
    CHECK(atom.gamma_sum() == doctest::Approx(3.0));
    CHECK(atom.gamma() == doctest::Approx(1.0));
}

TEST_CASE("zero upper rate is a reported violation") {
    AtomParams atom;
    atom.Gamma_1 = 0.0;
    const auto v = validation_violations(atom, ControlParams{}, EnvParams{});
    REQUIRE(v.size() == 1);
    CHECK(v[0].find("upper decay must be positive") != std::string::npos);
    CHECK_THROWS_AS(validate(atom, ControlParams{}, EnvParams{}), ValidationError);
}

TEST_CASE("negative Doppler width is a violation") {
    EnvParams env;
    env.omega_d = -1.0;
    const auto v = validation_violations(AtomParams{}, ControlParams{}, env);
    REQUIRE(v.size() == 1);
    CHECK(v[0].find("omega_d") != std::string::npos);
}

TEST_CASE("all violations are enumerated at once") {
    AtomParams atom;
    atom.gamma_1 = -1.0;
    atom.Gamma_2 = 0.0;
    EnvParams env;
    env.alpha_l = -5.0;
    try {
        validate(atom, ControlParams{}, env);
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(e.violations().size() == 3);
    }
}

TEST_CASE("negative zeta is allowed (flipped field)") {
    EnvParams env;
    env.zeta = -22.4;
    CHECK(validation_violations(AtomParams{}, ControlParams{}, env).empty());
}

TEST_CASE("calcium cell near 550 K maps to the working Doppler width") {
    LabUnits lab;
    lab.temperature_k = 550.0;
    const ScaledParams s = scaled_from_lab(lab);
    // Target omega_d = 50 gamma with +-10% slack on the rounded anchor.
    CHECK(s.env.omega_d == doctest::Approx(50.0).epsilon(0.10));
}

TEST_CASE("240 gauss maps to a Zeeman splitting of 2 zeta ~ 20 gamma") {
    LabUnits lab;
    lab.b_field_gauss = 240.0;
    const ScaledParams s = scaled_from_lab(lab);
    CHECK(2.0 * s.env.zeta == doctest::Approx(20.0).epsilon(0.10));
}

TEST_CASE("5 cm cell at 7.0e10 cm^-3 maps to alpha_l ~ 300") {
    LabUnits lab;
    lab.density_m3 = 7.0e16;  // 7.0e10 cm^-3
    const ScaledParams s = scaled_from_lab(lab);
    CHECK(s.env.alpha_l == doctest::Approx(300.0).epsilon(0.10));
}

TEST_CASE("conversion report carries one formula per derived quantity") {
    const ScaledParams s = scaled_from_lab(LabUnits{});
    REQUIRE(s.conversions.size() == 4);
    for (const auto& c : s.conversions) {
        CHECK(!c.formula.empty());
        CHECK(std::isfinite(c.value));
    }
}

TEST_CASE("conversions are monotone in their lab inputs") {
    LabUnits lab;
    const ScaledParams base = scaled_from_lab(lab);

    LabUnits hot = lab;
    hot.temperature_k *= 2.0;
    CHECK(scaled_from_lab(hot).env.omega_d ==
          doctest::Approx(base.env.omega_d * std::sqrt(2.0)).epsilon(1e-12));

    LabUnits dense = lab;
    dense.density_m3 *= 2.0;
    CHECK(scaled_from_lab(dense).env.alpha_l ==
          doctest::Approx(base.env.alpha_l * 2.0).epsilon(1e-12));

    LabUnits strong = lab;
    strong.b_field_gauss *= 2.0;
    CHECK(scaled_from_lab(strong).env.zeta ==
          doctest::Approx(base.env.zeta * 2.0).epsilon(1e-12));
}

TEST_CASE("scaled -> lab round trip reproduces the inputs") {
    LabUnits lab;
    lab.temperature_k = 481.0;
    lab.b_field_gauss = 173.0;
    lab.density_m3 = 3.7e17;
    lab.control_intensity_w_cm2 = 2.9;
    const ScaledParams s = scaled_from_lab(lab);
    const LabUnits back = lab_from_scaled(s, lab);
    CHECK(back.temperature_k == doctest::Approx(lab.temperature_k).epsilon(1e-12));
    CHECK(back.b_field_gauss == doctest::Approx(lab.b_field_gauss).epsilon(1e-12));
    CHECK(back.density_m3 == doctest::Approx(lab.density_m3).epsilon(1e-12));
    CHECK(back.control_intensity_w_cm2 ==
          doctest::Approx(lab.control_intensity_w_cm2).epsilon(1e-12));
}

TEST_CASE("non-positive lab inputs are rejected") {
    LabUnits lab;
    lab.temperature_k = 0.0;
    CHECK_THROWS_AS(scaled_from_lab(lab), std::domain_error);
    lab = LabUnits{};
    lab.mass_kg = -1.0;
    CHECK_THROWS_AS(scaled_from_lab(lab), std::domain_error);
    lab = LabUnits{};
    lab.wavelength_m = 0.0;
    CHECK_THROWS_AS(scaled_from_lab(lab), std::domain_error);
}
