#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "graetzkit/fdm_oracle.hpp"
#include "graetzkit/types.hpp"

namespace graetzkit::cli {

enum class Method { order4, order6, series, fdm };
enum class OutputFormat { csv, json };
enum class FigureId { fig2, fig3, fig4, fig6 };

std::string method_name(Method m);

/// Canonical re-runnable flag string for a resolved problem (embedded in
/// output headers so every row carries its full parameter set).
std::string spec_echo(const ProblemSpec& spec);
Method parse_method(const std::string& s);       // throws std::invalid_argument
FigureId parse_figure(const std::string& s);     // throws std::invalid_argument
OutputFormat parse_format(const std::string& s); // throws std::invalid_argument

/// Sweep definition: an explicit value list, or a log-spaced range.
struct SweepDef {
    std::vector<double> values;
    double lo = 0.0, hi = 0.0;
    int n = 0;
    std::vector<double> resolve() const;  // throws std::invalid_argument if empty
};

/// Fully resolved run configuration (flags already merged over any JSON
/// config file; all quantities SI).
struct RunConfig {
    ProblemSpec spec;
    std::vector<Method> methods;
    SweepDef pe_sweep;     ///< figures 2/3 override; default log [0.1, 1000]
    SweepDef alpha_sweep;  ///< figure 6 override; default 0.01..0.99 step 0.02
    OutputFormat format = OutputFormat::csv;
    std::string out_path;       ///< empty = stdout
    std::optional<double> tol;  ///< compare: declared bound on max |dtheta|
    int points = 121;           ///< compare/solve profile resolution
    double xi_max = 0.0;        ///< compare/solve axial extent; 0 = auto
    FdmConfig fdm;
    std::string params_echo;  ///< resolved parameters, echoed into headers
};

/// Write one of the published figure data sets. Deterministic bytes for a
/// fixed config and platform.
void emit_figure(FigureId fig, const RunConfig& cfg, std::ostream& out);

/// Single-case centerline/wall profile table for one method.
void emit_solve(const RunConfig& cfg, Method method, std::ostream& out);

/// Full finite-difference field as (x, r, T) rows.
void emit_fdm_dump(const RunConfig& cfg, std::ostream& out);

struct PairDeviation {
    Method a, b;
    double max_abs_dtheta;  ///< max |theta_a - theta_b| over the shared grid
    double l2_dtheta;       ///< rms of the same
    double max_rel_dtheta;  ///< normalized by the largest |theta| seen
};

struct ComparisonReport {
    std::vector<double> xi;  ///< shared axial grid (x/a)
    std::vector<PairDeviation> pairs;
    bool has_fdm = false;
    double fdm_residual = 0.0;
    std::int64_t fdm_sweeps = 0;
    int fdm_nx = 0, fdm_nr = 0;
    std::optional<double> tol;
    bool pass = true;
    std::vector<std::string> notes;  ///< applicability flags, e.g. series at finite pe
};

/// Run >= 2 methods on the same problem and report centerline deviations in
/// theta units. Method/boundary mismatches (series off parallel plates,
/// order6 with an Exchange wall) throw BCMismatchError.
ComparisonReport compare_methods(const RunConfig& cfg);

void render(const ComparisonReport& report, const RunConfig& cfg, std::ostream& out);

/// Centerline theta profile for one method on the given xi grid (shared
/// helper for compare/solve and tests).
std::vector<double> centerline_theta(const RunConfig& cfg, Method method,
                                     const std::vector<double>& xi);

/// Exit codes of the command-line tool.
inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 1;
inline constexpr int exit_numerical = 2;
inline constexpr int exit_invalid_regime = 3;

/// Entry point used by the graetzkit binary; argv-style interface kept
/// library-side so tests can drive it.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace graetzkit::cli
