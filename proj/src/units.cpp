#include "mor/units.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mor {

namespace {

constexpr double kB = 1.380649e-23;       // J/K
constexpr double c0 = 2.99792458e8;       // m/s
constexpr double hbar = 1.054571817e-34;  // J s
constexpr double muB = 9.2740100783e-24;  // J/T
constexpr double eps0 = 8.8541878128e-12; // F/m
constexpr double gauss_to_tesla = 1e-4;

}  // namespace

ScaledParams scaled_from_lab(const LabUnits& lab) {
    auto require_pos = [](double x, const char* name) {
        if (!(x > 0.0) || !std::isfinite(x))
            throw std::domain_error(std::string("lab unit must be positive: ") + name);
    };
    require_pos(lab.temperature_k, "temperature_k");
    require_pos(lab.mass_kg, "mass_kg");
    require_pos(lab.wavelength_m, "wavelength_m");
    require_pos(lab.gamma_s1, "gamma_s1");
    require_pos(lab.cell_length_m, "cell_length_m");
    require_pos(lab.density_m3, "density_m3");
    require_pos(lab.dipole_d_cm, "dipole_d_cm");
    require_pos(lab.dipole_D_cm, "dipole_D_cm");
    if (lab.b_field_gauss < 0.0 || !std::isfinite(lab.b_field_gauss))
        throw std::domain_error("lab unit must be non-negative: b_field_gauss");
    if (lab.control_intensity_w_cm2 < 0.0 || !std::isfinite(lab.control_intensity_w_cm2))
        throw std::domain_error("lab unit must be non-negative: control_intensity_w_cm2");

    const double gamma = lab.gamma_s1;
    const double omega_og = 2.0 * std::numbers::pi * c0 / lab.wavelength_m;
    const double kp = 2.0 * std::numbers::pi / lab.wavelength_m;

    const double omega_d =
        omega_og * std::sqrt(kB * lab.temperature_k / (lab.mass_kg * c0 * c0)) / gamma;
    const double zeta =
        muB * lab.b_field_gauss * gauss_to_tesla / (2.0 * hbar * gamma);
    const double alpha_l = kp * lab.cell_length_m * lab.dipole_d_cm * lab.dipole_d_cm *
                           lab.density_m3 / (eps0 * hbar * gamma);
    const double e_field =
        std::sqrt(lab.control_intensity_w_cm2 * 1e4 / (2.0 * eps0 * c0));
    const double g1 = lab.dipole_D_cm * e_field / (hbar * gamma);

    ScaledParams out;
    out.atom = AtomParams{};  // all rates 1 in units of gamma
    out.ctrl.G1 = g1;
    out.ctrl.G2 = 0.0;
    out.ctrl.Delta = 0.0;
    out.env.zeta = zeta;
    out.env.omega_d = omega_d;
    out.env.alpha_l = alpha_l;
    out.conversions = {
        {"omega_d", "omega_og * sqrt(kB*T/(M*c^2)) / gamma", omega_d},
        {"zeta", "muB*B / (2*hbar*gamma)", zeta},
        {"alpha_l", "k_p*l*d^2*n / (eps0*hbar*gamma)", alpha_l},
        {"G1", "D*sqrt(I/(2*eps0*c)) / (hbar*gamma)", g1},
    };
    return out;
}

LabUnits lab_from_scaled(const ScaledParams& scaled, const LabUnits& ref) {
    LabUnits lab = ref;
    const double gamma = ref.gamma_s1;
    const double omega_og = 2.0 * std::numbers::pi * c0 / ref.wavelength_m;
    const double kp = 2.0 * std::numbers::pi / ref.wavelength_m;

    const double ratio = scaled.env.omega_d * gamma / omega_og;
    lab.temperature_k = ratio * ratio * ref.mass_kg * c0 * c0 / kB;
    lab.b_field_gauss =
        2.0 * hbar * gamma * scaled.env.zeta / (muB * gauss_to_tesla);
    lab.density_m3 = scaled.env.alpha_l * eps0 * hbar * gamma /
                     (kp * ref.cell_length_m * ref.dipole_d_cm * ref.dipole_d_cm);
    const double e_field = std::abs(scaled.ctrl.G1) * hbar * gamma / ref.dipole_D_cm;
    lab.control_intensity_w_cm2 = 2.0 * eps0 * c0 * e_field * e_field / 1e4;
    return lab;
}

}  // namespace mor
