#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mor/rotation.hpp"
#include "mor/types.hpp"

namespace mor {

enum class SweepVariable { Delta, Zeta, G1 };

/// One parameter sweep: which variable runs, over what grid, around which
/// fixed parameter bundle, and the configuration flags.
struct SweepSpec {
    SweepVariable variable = SweepVariable::Delta;
    double lo = -300.0;
    double hi = 300.0;
    int points = 2001;
    AtomParams atom;
    ControlParams ctrl;
    EnvParams env;
    double fixed_delta = 0.0;  // probe detuning when it is not the scan variable
    bool two_photon = false;   // lock Delta = -delta
    bool field_on = true;      // false: zeta forced to 0 (B off)
};

/// Per-grid-point record carrying exactly the curves the figures plot.
struct SpectrumRow {
    double scan_value;
    Complex s_plus_0;   // <s+>, control off
    Complex s_minus_0;  // <s->, control off
    Complex s_plus_c;   // <s+>, control on
    double ty_off;
    double ty_on;
    double eta;
    double theta;
    Regime regime;
};

/// Evaluates the sweep on a uniform grid, in scan order. Throws kernel
/// errors with the offending scan value attached.
std::vector<SpectrumRow> sweep(const SweepSpec& spec);

/// One row of the same sweep at an arbitrary (possibly off-grid) scan value.
SpectrumRow evaluate_point(const SweepSpec& spec, double scan_value);

struct Peak {
    double position;  // quadratic-interpolated
    double height;
};

enum class RowColumn { TyOn, TyOff, Eta, Theta };

/// Local maxima of a row column by three-point test, refined by quadratic
/// interpolation of the neighbors.
std::vector<Peak> find_peaks(const std::vector<SpectrumRow>& rows, RowColumn column);

/// Named parameter presets taken from the figure captions.
enum class FigureId { Fig3, Fig4, Fig5a, Fig5b, Fig6 };

std::optional<FigureId> figure_id_from_string(const std::string& name);
std::string figure_id_name(FigureId id);

/// The base sweep for a figure preset (first curve's parameters).
SweepSpec figure_preset(FigureId id);

struct FigureTable {
    std::string label;
    SweepSpec spec;
    std::vector<SpectrumRow> rows;
};

struct AnchorCheck {
    std::string description;
    double expected;
    double computed;
    double tolerance;  // absolute
    bool passed() const { return std::abs(computed - expected) <= tolerance; }
};

struct FigureResult {
    std::vector<FigureTable> tables;
    std::vector<AnchorCheck> anchors;
    bool all_passed() const {
        for (const auto& a : anchors)
            if (!a.passed()) return false;
        return true;
    }
};

/// Runs a figure's parameter bundles and checks its reported anchor values.
FigureResult figure_driver(FigureId id);

}  // namespace mor
