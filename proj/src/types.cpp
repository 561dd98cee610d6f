#include "mor/types.hpp"

#include <cmath>

namespace mor {

namespace {

bool finite(double x) { return std::isfinite(x); }
bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

std::vector<std::string> validation_violations(const AtomParams& atom, const ControlParams& ctrl,
                                               const EnvParams& env) {
    std::vector<std::string> v;
    auto positive = [&](double x, const char* name, const char* what) {
        if (!(x > 0.0) || !finite(x)) v.push_back(std::string(what) + " must be positive: " + name);
    };
    positive(atom.gamma_1, "gamma_1", "lower decay");
    positive(atom.gamma_2, "gamma_2", "lower decay");
    positive(atom.gamma_o, "gamma_o", "lower decay");
    positive(atom.Gamma_1, "Gamma_1", "upper decay");
    positive(atom.Gamma_2, "Gamma_2", "upper decay");
    positive(atom.Gamma_o, "Gamma_o", "upper decay");
    if (!finite(ctrl.G1)) v.push_back("control amplitude G1 must be finite");
    if (!finite(ctrl.G2)) v.push_back("control amplitude G2 must be finite");
    if (!finite(ctrl.Delta)) v.push_back("control detuning Delta must be finite");
    if (!finite(env.zeta)) v.push_back("zeta must be finite");
    if (!(env.omega_d >= 0.0) || !finite(env.omega_d))
        v.push_back("Doppler width omega_d must be >= 0");
    if (!(env.alpha_l >= 0.0) || !finite(env.alpha_l))
        v.push_back("optical depth alpha_l must be >= 0");
    return v;
}

ParamBundle validate(const AtomParams& atom, const ControlParams& ctrl, const EnvParams& env) {
    auto v = validation_violations(atom, ctrl, env);
    if (!v.empty()) throw ValidationError(std::move(v));
    return ParamBundle{atom, ctrl, env};
}

}  // namespace mor
