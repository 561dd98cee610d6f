#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <string_view>
#include <vector>

#include "mor/types.hpp"

namespace mor {

/// Output circular amplitudes after the cell, in units of E0/sqrt(2):
/// out_pm = exp(i alpha_l/2 * s_pm).
struct OutputField {
    Complex out_plus;
    Complex out_minus;
};

inline OutputField output_field(Complex s_plus, Complex s_minus, double alpha_l) {
    const Complex i(0.0, 1.0);
    const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
    return {inv_sqrt2 * std::exp(i * (alpha_l / 2.0) * s_plus),
            inv_sqrt2 * std::exp(i * (alpha_l / 2.0) * s_minus)};
}

/// Crossed-polarizer transmission:
/// T_y = (1/4) |exp(i alpha_l/2 s+) - exp(i alpha_l/2 s-)|^2.
inline double transmission_ty(Complex s_plus, Complex s_minus, double alpha_l) {
    const Complex i(0.0, 1.0);
    const Complex d = std::exp(i * (alpha_l / 2.0) * s_plus) - std::exp(i * (alpha_l / 2.0) * s_minus);
    return 0.25 * std::norm(d);
}

/// Small-absorption rotation angle theta = (alpha_l/4) Re(s- - s+), radians.
/// `approximate` is set when alpha_l * Im(s_pm) exceeds the small-absorption
/// regime (> 0.3) and the dispersion formula is only indicative.
struct RotationAngle {
    double theta;
    bool approximate;
};

inline RotationAngle rotation_angle(Complex s_plus, Complex s_minus, double alpha_l) {
    RotationAngle out;
    out.theta = (alpha_l / 4.0) * (s_minus.real() - s_plus.real());
    out.approximate =
        alpha_l * std::max(s_plus.imag(), s_minus.imag()) >= 0.3;
    return out;
}

/// Enhancement factor eta = T_y(control on) / T_y(control off), with the raw
/// transmissions attached. A denominator below 1e-300 yields +inf (or NaN
/// when the numerator underflows too: the undefined-ratio case).
struct Enhancement {
    double eta;
    double ty_on;
    double ty_off;
    bool is_infinite() const { return std::isinf(eta); }
    bool is_undefined() const { return std::isnan(eta); }
};

inline Enhancement enhancement_eta(double ty_on, double ty_off) {
    Enhancement out{0.0, ty_on, ty_off};
    if (ty_off < 1e-300) {
        out.eta = (ty_on < 1e-300) ? std::numeric_limits<double>::quiet_NaN()
                                   : std::numeric_limits<double>::infinity();
    } else {
        out.eta = ty_on / ty_off;
    }
    return out;
}

enum class Regime { Null, Dichroic, Birefringent, Attenuated };

inline std::string_view regime_name(Regime r) {
    switch (r) {
        case Regime::Null: return "NULL";
        case Regime::Dichroic: return "DICHROIC";
        case Regime::Birefringent: return "BIREFRINGENT";
        case Regime::Attenuated: return "ATTENUATED";
    }
    return "?";
}

/// Operational thresholds for the qualitative regime labels.
struct RegimeThresholds {
    double attenuation_large = 3.0;  // alpha_l*Im(s)/2 above this: opaque
    double attenuation_small = 0.3;  // below this: transparent
    double equal_rel = 0.05;         // relative difference counted as "equal"
};

struct RegimeDecision {
    Regime regime;
    double attenuation_plus;   // alpha_l * Im(s+) / 2
    double attenuation_minus;  // alpha_l * Im(s-) / 2
    double asymmetry_rel;      // |s+ - s-| / max(|s+|,|s-|)
};

inline RegimeDecision classify_regime(Complex s_plus, Complex s_minus, double alpha_l,
                                      const RegimeThresholds& th = {}) {
    RegimeDecision d{};
    d.attenuation_plus = alpha_l * s_plus.imag() / 2.0;
    d.attenuation_minus = alpha_l * s_minus.imag() / 2.0;
    const double scale = std::max(std::abs(s_plus), std::abs(s_minus));
    d.asymmetry_rel = scale > 0.0 ? std::abs(s_plus - s_minus) / scale : 0.0;
    if (d.asymmetry_rel < th.equal_rel) {
        d.regime = Regime::Null;
    } else if (std::min(d.attenuation_plus, d.attenuation_minus) > th.attenuation_large) {
        d.regime = Regime::Attenuated;
    } else if (std::max(d.attenuation_plus, d.attenuation_minus) < th.attenuation_small) {
        d.regime = Regime::Birefringent;
    } else {
        d.regime = Regime::Dichroic;
    }
    return d;
}

/// Roots of (alpha_l/2) Re(<s-> - <s+>) = (2n+1) pi over a scan variable.
/// `avg_diff` returns <s-> - <s+> at a scan value; sign changes of the
/// residual on a uniform grid are refined by bisection to `xtol`.
/// Returns roots in ascending order; empty if the residual never changes sign.
inline std::vector<double> solve_condition(const std::function<Complex(double)>& avg_diff,
                                           double lo, double hi, double alpha_l, int n,
                                           int grid_points = 512, double xtol = 1e-6) {
    const double target = (2 * n + 1) * std::numbers::pi;
    auto residual = [&](double x) { return alpha_l / 2.0 * avg_diff(x).real() - target; };
    std::vector<double> roots;
    double x_prev = lo;
    double r_prev = residual(lo);
    for (int i = 1; i < grid_points; ++i) {
        const double x = lo + (hi - lo) * i / (grid_points - 1);
        const double r = residual(x);
        if (r_prev == 0.0) {
            roots.push_back(x_prev);
        } else if (r_prev * r < 0.0) {
            double a = x_prev, b = x, ra = r_prev;
            while (b - a > xtol) {
                const double m = 0.5 * (a + b);
                const double rm = residual(m);
                if (ra * rm <= 0.0) {
                    b = m;
                } else {
                    a = m;
                    ra = rm;
                }
            }
            roots.push_back(0.5 * (a + b));
        }
        x_prev = x;
        r_prev = r;
    }
    return roots;
}

}  // namespace mor
