#pragma once

#include "mor/types.hpp"

namespace mor {

/// Normalized susceptibilities (s+, s-) at one probe detuning.
/// Paper convention: s+ is the response seen by the sigma- probe component
/// and s- the response seen by the sigma+ component.
struct SusceptibilityPair {
    Complex s_plus;
    Complex s_minus;
    bool averaged = false;
    bool control_on = false;
};

/// General single-velocity susceptibilities for arbitrary G1, G2.
/// delta_v and Delta_v are kept independent here; the Doppler layer applies
/// the counter-propagating constraint Delta_v + delta_v = Delta + delta.
inline SusceptibilityPair s_general(const AtomParams& atom, const ControlParams& ctrl,
                                    double zeta, double delta_v, double Delta_v) {
    const double g = atom.gamma();
    const Complex i(0.0, 1.0);
    const Complex A = g + i * (delta_v - zeta);
    const Complex B = g + i * (delta_v + zeta);
    const Complex S = atom.gamma_sum() + i * (Delta_v + delta_v);
    const double G1sq = std::norm(ctrl.G1);
    const double G2sq = std::norm(ctrl.G2);
    SusceptibilityPair out;
    out.s_plus = i * g * (G2sq + A * S) / (G2sq * B + A * (G1sq + B * S));
    out.s_minus = i * g * (G1sq + B * S) / (G1sq * A + B * (G2sq + A * S));
    out.control_on = (G1sq != 0.0 || G2sq != 0.0);
    return out;
}

/// sigma+-control configuration (G2 = 0): s- is control-independent.
inline Complex s_reduced_minus(const AtomParams& atom, double zeta, double delta_v) {
    const double g = atom.gamma();
    return Complex(0.0, g) / Complex(g, delta_v - zeta);
}

/// sigma+-control configuration (G2 = 0): s+ carries the control field.
/// Delta + delta enters as the velocity-independent two-photon detuning.
inline Complex s_reduced_plus(const AtomParams& atom, Complex G1, double Delta, double delta,
                              double zeta, double delta_v) {
    const double g = atom.gamma();
    const Complex i(0.0, 1.0);
    const Complex S = atom.gamma_sum() + i * (Delta + delta);
    return i * g * S / (std::norm(G1) + (g + i * (delta_v + zeta)) * S);
}

/// No control field: s+- = gamma / ((delta_v +- zeta) - i gamma).
inline SusceptibilityPair s_no_control(const AtomParams& atom, double zeta, double delta_v) {
    const double g = atom.gamma();
    SusceptibilityPair out;
    out.s_plus = g / Complex(delta_v + zeta, -g);
    out.s_minus = g / Complex(delta_v - zeta, -g);
    return out;
}

/// Two-photon resonance (Delta = -delta) stationary-atom s+: a Lorentzian of
/// width |G1|^2/Gamma_sum + gamma centered at delta = -zeta.
inline Complex s_two_photon_stationary(const AtomParams& atom, Complex G1, double zeta,
                                       double delta) {
    const double g = atom.gamma();
    const double width = std::norm(G1) / atom.gamma_sum() + g;
    return Complex(0.0, g) / Complex(width, delta + zeta);
}

/// Result of the brute-force steady-state solve, with the linearity check.
struct OracleResult {
    SusceptibilityPair s;
    double linearity_error = 0.0;  // relative change when the probe is halved
    bool linear = true;
};

/// Steady state of the full five-level master equation, probed at amplitude
/// `probe_amplitude` (units of gamma). Each circular response coefficient is
/// extracted from its own solve with only that probe arm driven; linearity
/// is verified by halving the probe and requiring < 1e-6 relative change.
/// Test oracle for the closed forms above.
OracleResult steady_state_oracle(const AtomParams& atom, const ControlParams& ctrl, double zeta,
                                 double delta_v, double Delta_v, double probe_amplitude = 1e-4);

}  // namespace mor
