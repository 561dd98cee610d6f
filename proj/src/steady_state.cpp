#include <Eigen/Dense>

#include "mor/susceptibility.hpp"

namespace mor {

namespace {

// Basis order: g, 1, 2, o, e.
constexpr int kG = 0, k1 = 1, k2 = 2, kO = 3, kE = 4;
constexpr int kDim = 5;

using Matrix5c = Eigen::Matrix<Complex, kDim, kDim>;
using Liouvillian = Eigen::Matrix<Complex, kDim * kDim, kDim * kDim>;

Matrix5c hamiltonian(const AtomParams&, const ControlParams& ctrl, double zeta, double delta_v,
                     double Delta_v, Complex g1, Complex g2) {
    Matrix5c h = Matrix5c::Zero();
    h(k1, k1) = delta_v + zeta;
    h(k2, k2) = delta_v - zeta;
    h(kE, kE) = delta_v + Delta_v;
    h(k1, kG) = -g1;
    h(k2, kG) = -g2;
    h(kE, k1) = -ctrl.G1;
    h(kE, k2) = -ctrl.G2;
    h(kG, k1) = -std::conj(g1);
    h(kG, k2) = -std::conj(g2);
    h(k1, kE) = -std::conj(ctrl.G1);
    h(k2, kE) = -std::conj(ctrl.G2);
    return h;
}

// rho_dot = -i[H,rho] - sum_i (Gamma_i {Pe,rho} + gamma_i {Pi,rho}
//                              - 2 Gamma_i rho_ee Pi - 2 gamma_i rho_ii Pg)
Matrix5c apply_master(const Matrix5c& h, const AtomParams& atom, const Matrix5c& rho) {
    const Complex i(0.0, 1.0);
    Matrix5c out = -i * (h * rho - rho * h);
    const struct {
        int level;
        double gamma_lower;
        double Gamma_upper;
    } channels[] = {{kO, atom.gamma_o, atom.Gamma_o},
                    {k1, atom.gamma_1, atom.Gamma_1},
                    {k2, atom.gamma_2, atom.Gamma_2}};
    for (const auto& ch : channels) {
        out.row(kE) -= ch.Gamma_upper * rho.row(kE);
        out.col(kE) -= ch.Gamma_upper * rho.col(kE);
        out.row(ch.level) -= ch.gamma_lower * rho.row(ch.level);
        out.col(ch.level) -= ch.gamma_lower * rho.col(ch.level);
        out(ch.level, ch.level) += 2.0 * ch.Gamma_upper * rho(kE, kE);
        out(kG, kG) += 2.0 * ch.gamma_lower * rho(ch.level, ch.level);
    }
    return out;
}

Matrix5c solve_steady(const AtomParams& atom, const ControlParams& ctrl, double zeta,
                      double delta_v, double Delta_v, Complex g1, Complex g2) {
    if (!(atom.gamma_1 > 0 && atom.gamma_2 > 0 && atom.gamma_o > 0))
        throw std::runtime_error("steady_state_oracle: singular system, lower rates must be > 0");
    const Matrix5c h = hamiltonian(atom, ctrl, zeta, delta_v, Delta_v, g1, g2);
    Liouvillian L = Liouvillian::Zero();
    Matrix5c basis = Matrix5c::Zero();
    for (int a = 0; a < kDim; ++a) {
        for (int b = 0; b < kDim; ++b) {
            basis(a, b) = 1.0;
            const Matrix5c col = apply_master(h, atom, basis);
            basis(a, b) = 0.0;
            for (int r = 0; r < kDim; ++r)
                for (int c = 0; c < kDim; ++c) L(r * kDim + c, a * kDim + b) = col(r, c);
        }
    }
    // Replace one redundant row with the trace constraint.
    Eigen::Matrix<Complex, kDim * kDim, 1> rhs = Eigen::Matrix<Complex, kDim * kDim, 1>::Zero();
    L.row(0).setZero();
    for (int j = 0; j < kDim; ++j) L(0, j * kDim + j) = 1.0;
    rhs(0) = 1.0;
    const Eigen::Matrix<Complex, kDim * kDim, 1> sol = L.partialPivLu().solve(rhs);
    Matrix5c rho;
    for (int r = 0; r < kDim; ++r)
        for (int c = 0; c < kDim; ++c) rho(r, c) = sol(r * kDim + c);
    return rho;
}

SusceptibilityPair extract(const AtomParams& atom, const ControlParams& ctrl, double zeta,
                           double delta_v, double Delta_v, double g) {
    // One solve per probe arm: s+- are per-component response coefficients.
    const Matrix5c rho_plus = solve_steady(atom, ctrl, zeta, delta_v, Delta_v, g, 0.0);
    const Matrix5c rho_minus = solve_steady(atom, ctrl, zeta, delta_v, Delta_v, 0.0, g);
    SusceptibilityPair out;
    out.s_plus = rho_plus(k1, kG) * atom.gamma() / g;
    out.s_minus = rho_minus(k2, kG) * atom.gamma() / g;
    out.control_on = (std::norm(ctrl.G1) != 0.0 || std::norm(ctrl.G2) != 0.0);
    return out;
}

}  // namespace

OracleResult steady_state_oracle(const AtomParams& atom, const ControlParams& ctrl, double zeta,
                                 double delta_v, double Delta_v, double probe_amplitude) {
    const SusceptibilityPair full = extract(atom, ctrl, zeta, delta_v, Delta_v, probe_amplitude);
    const SusceptibilityPair half =
        extract(atom, ctrl, zeta, delta_v, Delta_v, probe_amplitude / 2.0);
    OracleResult out;
    out.s = full;
    out.linearity_error =
        std::max(std::abs(full.s_plus - half.s_plus) / std::abs(half.s_plus),
                 std::abs(full.s_minus - half.s_minus) / std::abs(half.s_minus));
    out.linear = out.linearity_error < 1e-6;
    return out;
}

}  // namespace mor
