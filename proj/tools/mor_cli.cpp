#include <clocale>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "mor/config.hpp"
#include "mor/doppler.hpp"
#include "mor/faddeeva.hpp"
#include "mor/scan.hpp"
#include "mor/units.hpp"

namespace {

// Exit code contract: 0 ok, 1 acceptance fail, 2 config, 3 kernel, 4 no roots.
constexpr int kExitOk = 0;
constexpr int kExitAcceptance = 1;
constexpr int kExitConfig = 2;
constexpr int kExitKernel = 3;
constexpr int kExitNoRoots = 4;

struct CommonOpts {
    std::string config_path;
    std::string preset;
    std::string format = "csv";
    std::string output;
    int points = 0;  // 0: keep preset/config value
    bool two_photon = false;
    bool no_control = false;
    bool no_field = false;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--config", o.config_path, "Config file (INI sections)");
    cmd->add_option("--preset", o.preset, "Figure preset: fig3|fig4|fig5a|fig5b|fig6");
    cmd->add_option("--format", o.format, "Output format: csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--output", o.output, "Write to file instead of stdout");
    cmd->add_option("--points", o.points, "Override grid point count");
    cmd->add_flag("--two-photon", o.two_photon, "Lock Delta = -delta");
    cmd->add_flag("--no-control", o.no_control, "Switch the control field off (G1=G2=0)");
    cmd->add_flag("--no-field", o.no_field, "Switch the magnetic field off (zeta=0)");
}

mor::SweepSpec build_spec(const CommonOpts& o) {
    mor::SweepSpec spec;
    if (!o.preset.empty()) {
        const auto id = mor::figure_id_from_string(o.preset);
        if (!id) throw mor::ConfigError("unknown preset '" + o.preset + "'");
        spec = mor::figure_preset(*id);
    }
    if (!o.config_path.empty()) {
        const mor::ConfigFile cfg = mor::ConfigFile::parse_file(o.config_path);
        std::string notes;
        spec = mor::apply_config(cfg, spec, &notes);
        std::cerr << notes;
        for (const std::string& k : cfg.unused_keys())
            if (k.rfind("lab.", 0) != 0)
                throw mor::ConfigError("config: unknown key '" + k + "'");
    }
    if (o.points > 0) spec.points = o.points;
    if (o.two_photon) spec.two_photon = true;
    if (o.no_control) spec.ctrl.G1 = spec.ctrl.G2 = 0.0;
    if (o.no_field) spec.field_on = false;
    return spec;
}

std::string format_g17(double v) {
    std::ostringstream out;
    out.imbue(std::locale::classic());
    out << std::setprecision(17) << v;
    return out.str();
}

const char* const kColumns[] = {"scan_var",     "re_s_plus_0",  "im_s_plus_0",
                                "re_s_minus_0", "im_s_minus_0", "re_s_plus_c",
                                "im_s_plus_c",  "ty_off",       "ty_on",
                                "eta",          "theta",        "regime"};

std::vector<double> row_numbers(const mor::SpectrumRow& r) {
    return {r.scan_value,       r.s_plus_0.real(),  r.s_plus_0.imag(),
            r.s_minus_0.real(), r.s_minus_0.imag(), r.s_plus_c.real(),
            r.s_plus_c.imag(),  r.ty_off,           r.ty_on,
            r.eta,              r.theta};
}

void emit_csv(std::ostream& out, const std::vector<mor::SpectrumRow>& rows) {
    for (std::size_t i = 0; i < std::size(kColumns); ++i)
        out << (i ? "," : "") << kColumns[i];
    out << "\n";
    for (const auto& r : rows) {
        for (double v : row_numbers(r)) out << format_g17(v) << ",";
        out << mor::regime_name(r.regime) << "\n";
    }
}

void emit_json(std::ostream& out, const std::vector<mor::SpectrumRow>& rows) {
    nlohmann::json table = nlohmann::json::array();
    for (const auto& r : rows) {
        nlohmann::json obj;
        const std::vector<double> nums = row_numbers(r);
        for (std::size_t i = 0; i < nums.size(); ++i) obj[kColumns[i]] = nums[i];
        obj["regime"] = mor::regime_name(r.regime);
        table.push_back(std::move(obj));
    }
    out << table.dump(2) << "\n";
}

void emit_rows(const CommonOpts& o, const std::vector<mor::SpectrumRow>& rows) {
    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!o.output.empty()) {
        file.open(o.output);
        if (!file) throw mor::ConfigError("cannot open output file '" + o.output + "'");
        out = &file;
    }
    if (o.format == "json") {
        emit_json(*out, rows);
    } else {
        emit_csv(*out, rows);
    }
}

int cmd_spectrum(const CommonOpts& o) {
    const mor::SweepSpec spec = build_spec(o);
    emit_rows(o, mor::sweep(spec));
    return kExitOk;
}

int cmd_solve(const CommonOpts& o, int n) {
    const mor::SweepSpec spec = build_spec(o);
    auto diff = [&](double x) {
        const mor::SpectrumRow r = mor::evaluate_point(spec, x);
        return r.s_minus_0 - r.s_plus_c;
    };
    const std::vector<double> roots =
        mor::solve_condition(diff, spec.lo, spec.hi, spec.env.alpha_l, n);
    if (roots.empty()) {
        std::cerr << "solve: no roots of the (2n+1)pi condition in [" << spec.lo << ", "
                  << spec.hi << "] for n=" << n << "\n";
        return kExitNoRoots;
    }
    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!o.output.empty()) {
        file.open(o.output);
        if (!file) throw mor::ConfigError("cannot open output file '" + o.output + "'");
        out = &file;
    }
    if (o.format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (double r : roots) j.push_back(r);
        *out << j.dump(2) << "\n";
    } else {
        *out << "root\n";
        for (double r : roots) *out << format_g17(r) << "\n";
    }
    return kExitOk;
}

int cmd_units(const CommonOpts& o) {
    mor::LabUnits lab;
    if (!o.config_path.empty())
        lab = mor::apply_lab_config(mor::ConfigFile::parse_file(o.config_path), lab);
    const mor::ScaledParams scaled = mor::scaled_from_lab(lab);
    if (o.format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& c : scaled.conversions)
            j.push_back({{"name", c.name}, {"formula", c.formula}, {"value", c.value}});
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "name,formula,value\n";
        for (const auto& c : scaled.conversions)
            std::cout << c.name << ",\"" << c.formula << "\"," << format_g17(c.value)
                      << "\n";
    }
    return kExitOk;
}

int cmd_check(const std::string& figure) {
    const auto id = mor::figure_id_from_string(figure);
    if (!id) throw mor::ConfigError("unknown figure id '" + figure + "'");
    const mor::FigureResult result = mor::figure_driver(*id);
    for (const auto& a : result.anchors) {
        std::cout << (a.passed() ? "[PASS] " : "[FAIL] ") << a.description
                  << ": expected " << a.expected << " +- " << a.tolerance << ", computed "
                  << format_g17(a.computed) << "\n";
    }
    std::cout << (result.all_passed() ? "OK" : "FAILED") << " ("
              << mor::figure_id_name(*id) << ")\n";
    return result.all_passed() ? kExitOk : kExitAcceptance;
}

}  // namespace

int main(int argc, char** argv) {
    std::setlocale(LC_ALL, "C");
    CLI::App app{"Magneto-optical rotation spectra in a Doppler-broadened four-level medium"};
    app.require_subcommand(1);

    CommonOpts spectrum_opts;
    CLI::App* spectrum = app.add_subcommand("spectrum", "Spectrum table over the scan grid");
    add_common(spectrum, spectrum_opts);

    CommonOpts sweep_opts;
    CLI::App* sweep_cmd = app.add_subcommand("sweep", "Alias of spectrum for generic sweeps");
    add_common(sweep_cmd, sweep_opts);

    CommonOpts solve_opts;
    int solve_n = 0;
    CLI::App* solve = app.add_subcommand("solve", "Roots of the maximal-rotation condition");
    add_common(solve, solve_opts);
    solve->add_option("--n", solve_n, "Branch index n of the (2n+1)pi condition");

    CommonOpts units_opts;
    CLI::App* units = app.add_subcommand("units", "Lab-unit to scaled-parameter report");
    add_common(units, units_opts);

    std::string check_figure;
    CLI::App* check = app.add_subcommand("check", "Run a figure preset's anchor checks");
    check->add_option("figure", check_figure, "fig3|fig4|fig5a|fig5b|fig6")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (spectrum->parsed()) return cmd_spectrum(spectrum_opts);
        if (sweep_cmd->parsed()) return cmd_spectrum(sweep_opts);
        if (solve->parsed()) return cmd_solve(solve_opts, solve_n);
        if (units->parsed()) return cmd_units(units_opts);
        if (check->parsed()) return cmd_check(check_figure);
    } catch (const mor::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const mor::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitKernel;
    }
    return kExitOk;
}
