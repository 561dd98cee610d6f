#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace mor {

using Complex = std::complex<double>;

/// Decay rates of the j=0 <-> j=1 <-> j=0 ladder, in units of gamma.
/// gamma_* are the lower (intermediate -> ground) half-rates, Gamma_* the
/// upper (excited -> intermediate) half-rates. The closed-form
/// susceptibilities assume the three lower rates are equal; gamma() is the
/// value they use.
struct AtomParams {
    double gamma_1 = 1.0;
    double gamma_2 = 1.0;
    double gamma_o = 1.0;
    double Gamma_1 = 1.0;
    double Gamma_2 = 1.0;
    double Gamma_o = 1.0;

    double gamma_sum() const { return Gamma_o + Gamma_1 + Gamma_2; }
    double gamma() const { return gamma_1; }
};

/// Control-field Rabi amplitudes (units of gamma) and detuning
/// Delta = omega_eo - omega_c. G2 = 0 selects the sigma+-polarized control.
struct ControlParams {
    Complex G1 = 0.0;
    Complex G2 = 0.0;
    double Delta = 0.0;
};

/// Cell environment: Zeeman half-splitting zeta (sign allowed), Doppler
/// width omega_d >= 0, line-center optical depth alpha_l >= 0.
struct EnvParams {
    double zeta = 0.0;
    double omega_d = 50.0;
    double alpha_l = 300.0;
};

/// Probe detuning delta = omega_og - omega_p and its velocity-shifted value
/// delta_v = delta + k_p v_z.
struct ProbePoint {
    double delta = 0.0;
    double delta_v = 0.0;
};

/// Laboratory-unit inputs for the scaled-parameter conversions.
struct LabUnits {
    double temperature_k = 500.0;
    double mass_kg = 6.636e-26;          // 40Ca
    double cell_length_m = 0.05;
    double density_m3 = 1e18;
    double b_field_gauss = 200.0;
    double control_intensity_w_cm2 = 5.0;
    double wavelength_m = 422.7e-9;
    double dipole_d_cm = 2.41e-29;       // lower transition
    double dipole_D_cm = 2.41e-29;       // upper transition
    double gamma_s1 = 1.087e8;           // natural half-linewidth, s^-1
};

struct ParamBundle {
    AtomParams atom;
    ControlParams ctrl;
    EnvParams env;
};

class ValidationError : public std::runtime_error {
  public:
    explicit ValidationError(std::vector<std::string> violations)
        : std::runtime_error(join(violations)), violations_(std::move(violations)) {}
    const std::vector<std::string>& violations() const { return violations_; }

  private:
    static std::string join(const std::vector<std::string>& v) {
        std::string out = "parameter validation failed:";
        for (const auto& s : v) out += "\n  - " + s;
        return out;
    }
    std::vector<std::string> violations_;
};

/// Checks every invariant; returns the bundle or throws a ValidationError
/// enumerating all violations at once.
ParamBundle validate(const AtomParams& atom, const ControlParams& ctrl, const EnvParams& env);

/// Same checks, but reports instead of throwing.
std::vector<std::string> validation_violations(const AtomParams& atom, const ControlParams& ctrl,
                                               const EnvParams& env);

}  // namespace mor
