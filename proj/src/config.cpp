#include <cctype>
#include <fstream>
#include <sstream>

#include "mor/config.hpp"

namespace mor {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

}  // namespace

ConfigFile ConfigFile::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open '" + path + "'");
    return parse_stream(in, path);
}

ConfigFile ConfigFile::parse_stream(std::istream& in, const std::string& origin) {
    ConfigFile cfg;
    cfg.origin_ = origin;
    std::string line;
    std::string section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::size_t comment = line.find_first_of("#;");
        if (comment != std::string::npos) line.erase(comment);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError(origin + ":" + std::to_string(lineno) +
                                  ": unterminated section header '" + line + "'");
            section = trim(line.substr(1, line.size() - 2));
            if (section.empty())
                throw ConfigError(origin + ":" + std::to_string(lineno) +
                                  ": empty section name");
            continue;
        }
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(origin + ":" + std::to_string(lineno) +
                              ": expected 'key = value', got '" + line + "'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            throw ConfigError(origin + ":" + std::to_string(lineno) + ": empty key");
        if (section.empty())
            throw ConfigError(origin + ":" + std::to_string(lineno) + ": key '" + key +
                              "' outside any [section]");
        cfg.entries_["" + section + "." + key] = Entry{value, lineno};
    }
    return cfg;
}

const ConfigFile::Entry* ConfigFile::find(const std::string& section,
                                          const std::string& key) const {
    auto it = entries_.find(section + "." + key);
    if (it == entries_.end()) return nullptr;
    it->second.used = true;
    return &it->second;
}

bool ConfigFile::has(const std::string& section, const std::string& key) const {
    return find(section, key) != nullptr;
}

double ConfigFile::get_double(const std::string& section, const std::string& key,
                              double fallback) const {
    const Entry* e = find(section, key);
    if (!e) return fallback;
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(e->value, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != e->value.size() || e->value.empty())
        throw ConfigError(origin_ + ":" + std::to_string(e->line) + ": key '" + section +
                          "." + key + "': expected a number, got '" + e->value + "'");
    return v;
}

int ConfigFile::get_int(const std::string& section, const std::string& key,
                        int fallback) const {
    const Entry* e = find(section, key);
    if (!e) return fallback;
    std::size_t pos = 0;
    long v = 0;
    try {
        v = std::stol(e->value, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != e->value.size() || e->value.empty())
        throw ConfigError(origin_ + ":" + std::to_string(e->line) + ": key '" + section +
                          "." + key + "': expected an integer, got '" + e->value + "'");
    return static_cast<int>(v);
}

bool ConfigFile::get_bool(const std::string& section, const std::string& key,
                          bool fallback) const {
    const Entry* e = find(section, key);
    if (!e) return fallback;
    if (e->value == "true" || e->value == "1" || e->value == "yes" || e->value == "on")
        return true;
    if (e->value == "false" || e->value == "0" || e->value == "no" || e->value == "off")
        return false;
    throw ConfigError(origin_ + ":" + std::to_string(e->line) + ": key '" + section + "." +
                      key + "': expected a boolean, got '" + e->value + "'");
}

std::string ConfigFile::get_string(const std::string& section, const std::string& key,
                                   const std::string& fallback) const {
    const Entry* e = find(section, key);
    return e ? e->value : fallback;
}

std::set<std::string> ConfigFile::unused_keys() const {
    std::set<std::string> out;
    for (const auto& [k, e] : entries_)
        if (!e.used) out.insert(k);
    return out;
}

SweepSpec apply_config(const ConfigFile& cfg, SweepSpec base, std::string* notes) {
    std::ostringstream note;

    base.atom.gamma_1 = cfg.get_double("atom", "gamma_1", base.atom.gamma_1);
    base.atom.gamma_2 = cfg.get_double("atom", "gamma_2", base.atom.gamma_2);
    base.atom.gamma_o = cfg.get_double("atom", "gamma_o", base.atom.gamma_o);
    base.atom.Gamma_1 = cfg.get_double("atom", "Gamma_1", base.atom.Gamma_1);
    base.atom.Gamma_2 = cfg.get_double("atom", "Gamma_2", base.atom.Gamma_2);
    base.atom.Gamma_o = cfg.get_double("atom", "Gamma_o", base.atom.Gamma_o);

    base.ctrl.G1 = Complex(cfg.get_double("control", "G1_re", base.ctrl.G1.real()),
                           cfg.get_double("control", "G1_im", base.ctrl.G1.imag()));
    base.ctrl.G2 = Complex(cfg.get_double("control", "G2_re", base.ctrl.G2.real()),
                           cfg.get_double("control", "G2_im", base.ctrl.G2.imag()));
    base.ctrl.Delta = cfg.get_double("control", "Delta", base.ctrl.Delta);

    base.env.zeta = cfg.get_double("env", "zeta", base.env.zeta);
    if (cfg.has("env", "omega_d")) {
        base.env.omega_d = cfg.get_double("env", "omega_d", base.env.omega_d);
    } else {
        note << "note: env.omega_d not set, using default " << base.env.omega_d << "\n";
    }
    base.env.alpha_l = cfg.get_double("env", "alpha_l", base.env.alpha_l);

    const std::string var = cfg.get_string("sweep", "variable", std::string());
    if (!var.empty()) {
        if (var == "delta") {
            base.variable = SweepVariable::Delta;
        } else if (var == "zeta") {
            base.variable = SweepVariable::Zeta;
        } else if (var == "g1" || var == "G1") {
            base.variable = SweepVariable::G1;
        } else {
            throw ConfigError("config: key 'sweep.variable': expected delta|zeta|g1, got '" +
                              var + "'");
        }
    }
    base.lo = cfg.get_double("sweep", "lo", base.lo);
    base.hi = cfg.get_double("sweep", "hi", base.hi);
    base.points = cfg.get_int("sweep", "points", base.points);
    base.fixed_delta = cfg.get_double("sweep", "delta", base.fixed_delta);
    base.two_photon = cfg.get_bool("sweep", "two_photon", base.two_photon);
    base.field_on = cfg.get_bool("sweep", "field_on", base.field_on);

    if (notes) *notes = note.str();
    return base;
}

LabUnits apply_lab_config(const ConfigFile& cfg, LabUnits base) {
    base.temperature_k = cfg.get_double("lab", "temperature_k", base.temperature_k);
    base.mass_kg = cfg.get_double("lab", "mass_kg", base.mass_kg);
    base.cell_length_m = cfg.get_double("lab", "cell_length_m", base.cell_length_m);
    base.density_m3 = cfg.get_double("lab", "density_m3", base.density_m3);
    base.b_field_gauss = cfg.get_double("lab", "b_field_gauss", base.b_field_gauss);
    base.control_intensity_w_cm2 =
        cfg.get_double("lab", "control_intensity_w_cm2", base.control_intensity_w_cm2);
    base.wavelength_m = cfg.get_double("lab", "wavelength_m", base.wavelength_m);
    base.dipole_d_cm = cfg.get_double("lab", "dipole_lower_cm", base.dipole_d_cm);
    base.dipole_D_cm = cfg.get_double("lab", "dipole_upper_cm", base.dipole_D_cm);
    base.gamma_s1 = cfg.get_double("lab", "gamma_s1", base.gamma_s1);
    return base;
}

}  // namespace mor
