#pragma once

#include <functional>

#include "mor/faddeeva.hpp"
#include "mor/susceptibility.hpp"
#include "mor/types.hpp"

namespace mor {

class DegenerateWidthError : public std::domain_error {
  public:
    DegenerateWidthError()
        : std::domain_error("omega_d = 0: use the stationary-atom susceptibilities") {}
};

namespace detail {
inline void require_width(double omega_d) {
    if (!(omega_d > 0.0)) throw DegenerateWidthError();
}
inline Complex doppler_prefactor(double gamma, double omega_d) {
    return Complex(0.0, 1.0) * std::numbers::pi * gamma /
           std::sqrt(2.0 * std::numbers::pi * omega_d * omega_d);
}
}  // namespace detail

/// Doppler-averaged s-: (i pi gamma / sqrt(2 pi wD^2)) W((zeta - delta + i gamma)/(sqrt2 wD)).
inline Complex avg_s_minus(const AtomParams& atom, double zeta, double delta, double omega_d) {
    detail::require_width(omega_d);
    const double g = atom.gamma();
    const Complex arg = Complex(zeta - delta, g) / (std::numbers::sqrt2 * omega_d);
    return detail::doppler_prefactor(g, omega_d) * faddeeva_w(arg);
}

/// Doppler-averaged s+ for the sigma+-control configuration:
/// (i pi gamma / sqrt(2 pi wD^2)) W(xi),
/// xi = [i gamma - zeta - delta + |G1|^2/(Delta + delta - i Gamma_sum)] / (sqrt2 wD).
inline Complex avg_s_plus(const AtomParams& atom, Complex G1, double Delta, double zeta,
                          double delta, double omega_d) {
    detail::require_width(omega_d);
    const double g = atom.gamma();
    const Complex light_shift = std::norm(G1) / Complex(Delta + delta, -atom.gamma_sum());
    const Complex xi =
        (Complex(-zeta - delta, g) + light_shift) / (std::numbers::sqrt2 * omega_d);
    return detail::doppler_prefactor(g, omega_d) * faddeeva_w(xi);
}

/// Doppler-averaged s+ on two-photon resonance (Delta = -delta enforced).
inline Complex avg_s_two_photon(const AtomParams& atom, Complex G1, double zeta, double delta,
                                double omega_d) {
    return avg_s_plus(atom, G1, -delta, zeta, delta, omega_d);
}

struct QuadratureSettings {
    int initial_nodes = 128;   // Gauss-Hermite start
    int max_nodes = 512;       // doubled up to here before falling back
    double tol = 1e-10;        // absolute node-doubling tolerance
    double adaptive_tol = 1e-11;
    double half_range = 8.0;   // adaptive fallback window, units of omega_d
    int max_intervals = 20000;
};

/// Gaussian-weighted velocity average of an arbitrary single-velocity
/// susceptibility: <s> = Integral s(delta_v) sigma(delta_v) d delta_v with
/// sigma a Gaussian of s.d. omega_d centered at delta. Gauss-Hermite with a
/// node-doubling convergence check; adaptive refinement over
/// +-half_range*omega_d when narrow features defeat the fixed nodes.
/// Throws NonConvergenceError after the refinement budget.
Complex avg_quadrature(const std::function<Complex(double)>& s_fn, double delta, double omega_d,
                       const QuadratureSettings& settings = {});

}  // namespace mor
