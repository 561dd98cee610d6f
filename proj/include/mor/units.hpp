#pragma once

#include <string>
#include <vector>

#include "mor/types.hpp"

namespace mor {

/// One lab->scaled conversion with the formula it came from, for reporting.
struct Conversion {
    std::string name;
    std::string formula;
    double value;  // in units of gamma (alpha_l dimensionless)
};

struct ScaledParams {
    AtomParams atom;
    ControlParams ctrl;
    EnvParams env;
    std::vector<Conversion> conversions;
};

/// Dimensionless parameters from laboratory units, all frequencies scaled
/// by gamma. Formulas (SI):
///   omega_d = (2 pi c / lambda) * sqrt(kB T / (M c^2)) / gamma
///   zeta    = muB B / (2 hbar gamma)
///   alpha_l = k_p l d^2 n / (eps0 hbar gamma)
///   G1      = D E_c / (hbar gamma),  E_c = sqrt(I / (2 eps0 c))
/// Throws std::domain_error on non-positive mass/temperature/wavelength.
ScaledParams scaled_from_lab(const LabUnits& lab);

/// Inverse mapping: reconstructs the lab quantities that scaled_from_lab
/// derived, keeping the non-derived fields of `ref` (dipoles, gamma, mass,
/// wavelength, cell length) fixed.
LabUnits lab_from_scaled(const ScaledParams& scaled, const LabUnits& ref);

}  // namespace mor
