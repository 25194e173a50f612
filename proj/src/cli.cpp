#include "graetzkit/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "graetzkit/charpoly.hpp"
#include "graetzkit/core.hpp"
#include "graetzkit/exchange_rbf.hpp"
#include "graetzkit/fdm_oracle.hpp"
#include "graetzkit/series_ref.hpp"
#include "graetzkit/version.hpp"
#include "graetzkit/wall_rbf.hpp"

namespace graetzkit::cli {

namespace {

std::string fmt_num(double v) {
    if (std::isnan(v)) return "";  // missing value -> empty field
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

/// Tabular output product with the common header convention.
struct Table {
    std::string command;
    std::string params;
    std::vector<std::string> notes;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    void write(std::ostream& out, OutputFormat format) const {
        if (format == OutputFormat::csv) {
            out << "# graetzkit " << GRAETZKIT_VERSION << " " << command << " " << params << "\n";
            for (const auto& n : notes) out << "# note: " << n << "\n";
            for (std::size_t c = 0; c < columns.size(); ++c)
                out << columns[c] << (c + 1 < columns.size() ? "," : "");
            out << "\n";
            for (const auto& row : rows) {
                for (std::size_t c = 0; c < row.size(); ++c)
                    out << fmt_num(row[c]) << (c + 1 < row.size() ? "," : "");
                out << "\n";
            }
        } else {
            nlohmann::ordered_json j;
            j["tool"] = "graetzkit";
            j["version"] = GRAETZKIT_VERSION;
            j["command"] = command;
            j["parameters"] = params;
            j["notes"] = notes;
            j["columns"] = columns;
            j["rows"] = rows;  // NaN serializes as null
            out << j.dump(1) << "\n";
        }
    }
};

std::vector<double> log_sweep(double lo, double hi, int n) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i)
        v[i] = lo * std::pow(hi / lo, n > 1 ? static_cast<double>(i) / (n - 1) : 0.0);
    return v;
}

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i)
        v[i] = lo + (hi - lo) * (n > 1 ? static_cast<double>(i) / (n - 1) : 0.0);
    return v;
}

std::vector<double> resolve_or(const SweepDef& def, std::vector<double> fallback) {
    if (def.values.empty() && def.n <= 0) return fallback;
    return def.resolve();
}

double auto_xi_max(const ProblemSpec& spec) {
    const auto g = dimensionless(spec);
    const int d = geometry_flag(spec.geometry);
    const double b = std::holds_alternative<UniformWall>(spec.bc)
                         ? beta1_wall_order4(g.pe, d)
                         : beta1_exchange(g.pe, *g.alpha, d);
    if (b < 1e-6) return 10.0;
    return std::clamp(8.0 / b, 4.0, 400.0);
}

FdmConfig resolved_fdm(const RunConfig& cfg) {
    FdmConfig f = cfg.fdm;
    if (f.length <= 0.0 || f.nx <= 0) {
        const FdmConfig def = default_config(cfg.spec);
        if (f.length <= 0.0) f.length = def.length;
        if (f.nx <= 0)
            f.nx = std::max(16, static_cast<int>(std::ceil(8.0 * f.length / cfg.spec.a)) + 1);
    }
    return f;
}

ProblemSpec canonical_plate_spec(double pe) {
    ProblemSpec spec;
    spec.geometry = Geometry::parallel_plates;
    spec.a = 1.0;
    spec.u0 = pe;  // D = 1 with the unit fluid
    spec.fluid = {1.0, 1.0, 1.0, 0.0};
    spec.t_inlet = 1.0;
    spec.bc = UniformWall{0.0};
    return spec;
}

}  // namespace

std::string spec_echo(const ProblemSpec& spec) {
    std::ostringstream s;
    s << "--d " << geometry_flag(spec.geometry) << " --a " << fmt_num(spec.a) << " --u0 "
      << fmt_num(spec.u0) << " --fluid " << fmt_num(spec.fluid.k) << "," << fmt_num(spec.fluid.rho)
      << "," << fmt_num(spec.fluid.cp) << "," << fmt_num(spec.fluid.mu) << " --ti "
      << fmt_num(spec.t_inlet);
    if (const auto* w = std::get_if<UniformWall>(&spec.bc))
        s << " --tw " << fmt_num(w->t_wall);
    else {
        const auto& e = std::get<Exchange>(spec.bc);
        s << " --h " << fmt_num(e.h) << " --tinf " << fmt_num(e.t_inf);
    }
    return s.str();
}

std::string method_name(Method m) {
    switch (m) {
        case Method::order4: return "order4";
        case Method::order6: return "order6";
        case Method::series: return "series";
        case Method::fdm: return "fdm";
    }
    return "?";
}

Method parse_method(const std::string& s) {
    if (s == "order4") return Method::order4;
    if (s == "order6") return Method::order6;
    if (s == "series") return Method::series;
    if (s == "fdm") return Method::fdm;
    throw std::invalid_argument("unknown method '" + s + "'");
}

FigureId parse_figure(const std::string& s) {
    if (s == "fig2") return FigureId::fig2;
    if (s == "fig3") return FigureId::fig3;
    if (s == "fig4") return FigureId::fig4;
    if (s == "fig6") return FigureId::fig6;
    throw std::invalid_argument("unknown figure '" + s + "' (expected fig2|fig3|fig4|fig6)");
}

OutputFormat parse_format(const std::string& s) {
    if (s == "csv") return OutputFormat::csv;
    if (s == "json") return OutputFormat::json;
    throw std::invalid_argument("unknown format '" + s + "' (expected csv|json)");
}

std::vector<double> SweepDef::resolve() const {
    if (!values.empty()) return values;
    if (n > 0) {
        if (!(lo > 0.0) || !(hi > lo)) throw std::invalid_argument("bad sweep range");
        return log_sweep(lo, hi, n);
    }
    throw std::invalid_argument("empty sweep definition");
}

void emit_figure(FigureId fig, const RunConfig& cfg, std::ostream& out) {
    Table t;
    switch (fig) {
        case FigureId::fig2: {
            const auto pes = resolve_or(cfg.pe_sweep, log_sweep(0.1, 1000.0, 81));
            t.command = "figure fig2";
            t.params = "--pe-range " + fmt_num(pes.front()) + ":" + fmt_num(pes.back()) + ":" +
                       std::to_string(pes.size()) + " --d 0,1";
            t.columns = {"pe", "beta1_order4_d0", "beta1_order6_d0", "beta1_order4_d1",
                         "beta1_order6_d1"};
            for (double pe : pes) {
                const auto q0 = solve_quartic_wall_order6(pe, 0);
                const auto q1 = solve_quartic_wall_order6(pe, 1);
                t.rows.push_back({pe, beta1_wall_order4(pe, 0), q0.beta1, beta1_wall_order4(pe, 1),
                                  q1.beta1});
            }
            break;
        }
        case FigureId::fig3: {
            const auto pes = resolve_or(cfg.pe_sweep, log_sweep(0.1, 1000.0, 81));
            t.command = "figure fig3";
            t.params = "--pe-range " + fmt_num(pes.front()) + ":" + fmt_num(pes.back()) + ":" +
                       std::to_string(pes.size()) + " --d 0,1";
            t.columns = {"pe", "beta2_d0", "beta2_d1"};
            for (double pe : pes)
                t.rows.push_back({pe, *solve_quartic_wall_order6(pe, 0).beta2,
                                  *solve_quartic_wall_order6(pe, 1).beta2});
            break;
        }
        case FigureId::fig4: {
            t.command = "figure fig4";
            t.params = "--d 0 --fluid 1,1,1,0 --ti 1 --tw 0 --pe 1000,1 --xi1-range 0.001:2:61";
            t.notes.push_back(
                "series curve assumes negligible axial conduction; finite-pe proxy for the "
                "series comparison is pe=1000");
            t.columns = {"pe", "xi1", "theta_series_8terms", "theta_order4", "theta_order6"};
            const auto xi1s = log_sweep(1e-3, 2.0, 61);
            for (double pe : {1000.0, 1.0}) {
                const ProblemSpec spec = canonical_plate_spec(pe);
                const ThetaScale ts = theta_scale(spec);
                const auto o4 = solve_wall_order4(spec);
                const auto o6 = solve_wall_order6(spec);
                for (double xi1 : xi1s) {
                    const double x = xi1 * pe * spec.a;
                    t.rows.push_back({pe, xi1, theta_series(xi1, 8),
                                      ts.to_theta(o4.centerline(x)), ts.to_theta(o6.centerline(x))});
                }
            }
            break;
        }
        case FigureId::fig6: {
            std::vector<double> alphas = cfg.alpha_sweep.values;
            if (alphas.empty() && cfg.alpha_sweep.n <= 0) alphas = linspace(0.01, 0.99, 50);
            else alphas = cfg.alpha_sweep.resolve();
            t.command = "figure fig6";
            t.params = "--pe 1,10,100,1000 --alpha-range " + fmt_num(alphas.front()) + ":" +
                       fmt_num(alphas.back()) + ":" + std::to_string(alphas.size()) + " --d 0,1";
            t.columns = {"d", "pe", "alpha", "beta1_exchange"};
            for (int d : {0, 1})
                for (double pe : {1.0, 10.0, 100.0, 1000.0})
                    for (double alpha : alphas)
                        t.rows.push_back({static_cast<double>(d), pe, alpha,
                                          beta1_exchange(pe, alpha, d)});
            break;
        }
    }
    t.write(out, cfg.format);
}

std::vector<double> centerline_theta(const RunConfig& cfg, Method method,
                                     const std::vector<double>& xi) {
    const ProblemSpec& spec = cfg.spec;
    const ThetaScale ts = theta_scale(spec);
    std::vector<double> theta(xi.size());
    switch (method) {
        case Method::order4: {
            if (std::holds_alternative<UniformWall>(spec.bc)) {
                const auto sol = solve_wall_order4(spec);
                for (std::size_t i = 0; i < xi.size(); ++i)
                    theta[i] = ts.to_theta(sol.centerline(xi[i] * spec.a));
            } else {
                const auto sol = solve_exchange_order4(spec);
                for (std::size_t i = 0; i < xi.size(); ++i)
                    theta[i] = ts.to_theta(centerline_exchange(sol, xi[i] * spec.a));
            }
            break;
        }
        case Method::order6: {
            if (!std::holds_alternative<UniformWall>(spec.bc))
                throw BCMismatchError("order6 exists only for the uniform-wall boundary");
            const auto sol = solve_wall_order6(spec);
            for (std::size_t i = 0; i < xi.size(); ++i)
                theta[i] = ts.to_theta(sol.centerline(xi[i] * spec.a));
            break;
        }
        case Method::series: {
            if (!std::holds_alternative<UniformWall>(spec.bc))
                throw BCMismatchError("series reference requires the uniform-wall boundary");
            if (spec.geometry != Geometry::parallel_plates)
                throw BCMismatchError("series reference is tabulated for parallel plates only");
            const double pe = dimensionless(spec).pe;
            if (pe <= 0.0) throw BCMismatchError("series reference requires pe > 0");
            for (std::size_t i = 0; i < xi.size(); ++i) theta[i] = theta_series(xi[i] / pe, 8);
            break;
        }
        case Method::fdm: {
            const auto sol = fdm_solve(spec, resolved_fdm(cfg));
            const auto prof = extract_boundary_functions(sol);
            for (std::size_t i = 0; i < xi.size(); ++i)
                theta[i] = ts.to_theta(sample_profile(prof.x, prof.t0, xi[i] * spec.a));
            break;
        }
    }
    return theta;
}

ComparisonReport compare_methods(const RunConfig& cfg) {
    std::vector<Method> methods;
    for (Method m : cfg.methods)
        if (std::find(methods.begin(), methods.end(), m) == methods.end()) methods.push_back(m);
    if (methods.size() < 2) throw std::invalid_argument("compare needs at least two methods");

    ComparisonReport rep;
    rep.tol = cfg.tol;

    std::optional<BoundaryProfiles> fdm_prof;
    double xi_max = cfg.xi_max > 0.0 ? cfg.xi_max : auto_xi_max(cfg.spec);
    const ThetaScale ts = theta_scale(cfg.spec);
    if (std::find(methods.begin(), methods.end(), Method::fdm) != methods.end()) {
        const FdmConfig fcfg = resolved_fdm(cfg);
        const FdmSolution sol = fdm_solve(cfg.spec, fcfg);
        rep.has_fdm = true;
        rep.fdm_residual = sol.residual;
        rep.fdm_sweeps = sol.sweeps;
        rep.fdm_nx = sol.nx;
        rep.fdm_nr = sol.nr;
        xi_max = std::min(xi_max, sol.length / cfg.spec.a);
        fdm_prof = extract_boundary_functions(sol);
    }
    rep.xi = linspace(0.0, xi_max, std::max(2, cfg.points));

    if (std::find(methods.begin(), methods.end(), Method::series) != methods.end()) {
        std::ostringstream n;
        n << "series curve assumes negligible axial conduction; compared at pe="
          << fmt_num(dimensionless(cfg.spec).pe);
        rep.notes.push_back(n.str());
    }

    std::vector<std::vector<double>> theta(methods.size());
    for (std::size_t m = 0; m < methods.size(); ++m) {
        if (methods[m] == Method::fdm) {
            theta[m].resize(rep.xi.size());
            for (std::size_t i = 0; i < rep.xi.size(); ++i)
                theta[m][i] =
                    ts.to_theta(sample_profile(fdm_prof->x, fdm_prof->t0, rep.xi[i] * cfg.spec.a));
        } else {
            theta[m] = centerline_theta(cfg, methods[m], rep.xi);
        }
    }

    for (std::size_t i = 0; i < methods.size(); ++i) {
        for (std::size_t j = i + 1; j < methods.size(); ++j) {
            PairDeviation dev{methods[i], methods[j], 0.0, 0.0, 0.0};
            double sumsq = 0.0, maxabs = 0.0;
            for (std::size_t p = 0; p < rep.xi.size(); ++p) {
                const double diff = std::abs(theta[i][p] - theta[j][p]);
                dev.max_abs_dtheta = std::max(dev.max_abs_dtheta, diff);
                sumsq += diff * diff;
                maxabs = std::max({maxabs, std::abs(theta[i][p]), std::abs(theta[j][p])});
            }
            dev.l2_dtheta = std::sqrt(sumsq / static_cast<double>(rep.xi.size()));
            dev.max_rel_dtheta = maxabs > 0.0 ? dev.max_abs_dtheta / maxabs : 0.0;
            rep.pairs.push_back(dev);
        }
    }
    if (rep.tol)
        for (const auto& p : rep.pairs)
            if (!(p.max_abs_dtheta <= *rep.tol)) rep.pass = false;
    return rep;
}

void render(const ComparisonReport& rep, const RunConfig& cfg, std::ostream& out) {
    if (cfg.format == OutputFormat::csv) {
        out << "# graetzkit " << GRAETZKIT_VERSION << " compare " << cfg.params_echo << "\n";
        for (const auto& n : rep.notes) out << "# note: " << n << "\n";
        out << "# xi-grid: [0," << fmt_num(rep.xi.back()) << "] x" << rep.xi.size() << "\n";
        if (rep.has_fdm)
            out << "# fdm: residual=" << fmt_num(rep.fdm_residual) << " sweeps=" << rep.fdm_sweeps
                << " nx=" << rep.fdm_nx << " nr=" << rep.fdm_nr << "\n";
        out << "pair,max_abs_dtheta,l2_dtheta,max_rel_dtheta\n";
        for (const auto& p : rep.pairs)
            out << method_name(p.a) << ":" << method_name(p.b) << "," << fmt_num(p.max_abs_dtheta)
                << "," << fmt_num(p.l2_dtheta) << "," << fmt_num(p.max_rel_dtheta) << "\n";
        if (rep.tol)
            out << "# tolerance " << fmt_num(*rep.tol) << " -> " << (rep.pass ? "PASS" : "FAIL")
                << "\n";
    } else {
        nlohmann::ordered_json j;
        j["tool"] = "graetzkit";
        j["version"] = GRAETZKIT_VERSION;
        j["command"] = "compare";
        j["parameters"] = cfg.params_echo;
        j["notes"] = rep.notes;
        j["xi_max"] = rep.xi.back();
        j["points"] = rep.xi.size();
        if (rep.has_fdm) {
            j["fdm"] = {{"residual", rep.fdm_residual},
                        {"sweeps", rep.fdm_sweeps},
                        {"nx", rep.fdm_nx},
                        {"nr", rep.fdm_nr}};
        }
        auto pairs = nlohmann::ordered_json::array();
        for (const auto& p : rep.pairs)
            pairs.push_back({{"pair", method_name(p.a) + ":" + method_name(p.b)},
                             {"max_abs_dtheta", p.max_abs_dtheta},
                             {"l2_dtheta", p.l2_dtheta},
                             {"max_rel_dtheta", p.max_rel_dtheta}});
        j["pairs"] = pairs;
        if (rep.tol) {
            j["tolerance"] = *rep.tol;
            j["pass"] = rep.pass;
        }
        out << j.dump(1) << "\n";
    }
}

void emit_solve(const RunConfig& cfg, Method method, std::ostream& out) {
    const ProblemSpec& spec = cfg.spec;
    const ThetaScale ts = theta_scale(spec);
    const double xi_max = cfg.xi_max > 0.0 ? cfg.xi_max : auto_xi_max(spec);
    const auto xi = linspace(0.0, xi_max, std::max(2, cfg.points));

    Table t;
    t.command = "solve";
    t.params = "--method " + method_name(method) + " " + cfg.params_echo;

    if (method == Method::series) {
        const double pe = dimensionless(spec).pe;
        const auto theta = centerline_theta(cfg, method, xi);
        t.columns = {"xi", "xi1", "theta"};
        for (std::size_t i = 0; i < xi.size(); ++i)
            t.rows.push_back({xi[i], xi[i] / pe, theta[i]});
        if (spec.geometry != Geometry::parallel_plates)
            t.notes.push_back("series reference is tabulated for parallel plates only");
        t.write(out, cfg.format);
        return;
    }

    t.columns = {"xi", "x", "t0", "ta", "t1a", "theta0"};
    if (method == Method::fdm) {
        const auto sol = fdm_solve(spec, resolved_fdm(cfg));
        const auto prof = extract_boundary_functions(sol);
        std::ostringstream diag;
        diag << "fdm residual=" << fmt_num(sol.residual) << " sweeps=" << sol.sweeps
             << " nx=" << sol.nx << " nr=" << sol.nr;
        t.notes.push_back(diag.str());
        for (double v : xi) {
            const double x = v * spec.a;
            const double t0 = sample_profile(prof.x, prof.t0, x);
            t.rows.push_back({v, x, t0, sample_profile(prof.x, prof.ta, x),
                              sample_profile(prof.x, prof.t1a, x), ts.to_theta(t0)});
        }
    } else if (method == Method::order6) {
        const auto sol = solve_wall_order6(spec);
        for (double v : xi) {
            const double x = v * spec.a;
            const double t0 = sol.centerline(x);
            t.rows.push_back({v, x, t0, sol.t_wall, sol.wall_gradient(x), ts.to_theta(t0)});
        }
    } else if (std::holds_alternative<UniformWall>(spec.bc)) {
        const auto sol = solve_wall_order4(spec);
        for (double v : xi) {
            const double x = v * spec.a;
            const double t0 = sol.centerline(x);
            t.rows.push_back({v, x, t0, sol.t_wall, sol.wall_gradient(x), ts.to_theta(t0)});
        }
    } else {
        const auto sol = solve_exchange_order4(spec);
        for (double v : xi) {
            const double x = v * spec.a;
            const double t0 = centerline_exchange(sol, x);
            t.rows.push_back({v, x, t0, sol.wall_temperature(x), sol.wall_gradient(x),
                              ts.to_theta(t0)});
        }
    }
    t.write(out, cfg.format);
}

void emit_fdm_dump(const RunConfig& cfg, std::ostream& out) {
    const auto fcfg = resolved_fdm(cfg);
    const auto sol = fdm_solve(cfg.spec, fcfg);
    Table t;
    t.command = "fdm-dump";
    std::ostringstream p;
    p << cfg.params_echo << " --fdm-nx " << sol.nx << " --fdm-nr " << sol.nr << " --fdm-length "
      << fmt_num(sol.length) << " --fdm-relax " << fmt_num(fcfg.relax) << " --fdm-tol "
      << fmt_num(fcfg.tol) << " --fdm-scheme "
      << (fcfg.scheme == AdvectionScheme::central ? "central" : "hybrid");
    t.params = p.str();
    std::ostringstream diag;
    diag << "residual=" << fmt_num(sol.residual) << " sweeps=" << sol.sweeps;
    t.notes.push_back(diag.str());
    t.columns = {"x", "r", "temperature"};
    for (int i = 0; i < sol.nx; ++i)
        for (int j = 0; j < sol.nr; ++j)
            t.rows.push_back({sol.x[i], sol.r[j], sol.at(i, j)});
    t.write(out, cfg.format);
}

}  // namespace graetzkit::cli
