#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <optional>
#include <sstream>

#include "graetzkit/cli.hpp"
#include "graetzkit/core.hpp"

namespace graetzkit::cli {

namespace {

using nlohmann::json;

struct Raw {
    std::optional<int> d;
    std::optional<double> pe, a, u0, ti, tw, h, tinf;
    std::optional<std::string> fluid;
    std::optional<int> order;
    std::optional<std::string> method, methods, format, out_path, config_path;
    std::optional<int> points;
    std::optional<double> xi_max, tol;
    std::optional<std::string> pe_range, pe_list, alpha_list;
    // fdm overrides
    std::optional<int> fdm_nx, fdm_nr;
    std::optional<double> fdm_length, fdm_relax, fdm_tol;
    std::optional<std::string> fdm_scheme;
    std::optional<long long> fdm_max_sweeps;
};

std::vector<double> parse_list(const std::string& s, const char* what) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            out.push_back(std::stod(tok));
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string("bad ") + what + " value '" + tok + "'");
        }
    }
    if (out.empty()) throw std::invalid_argument(std::string("empty ") + what + " list");
    return out;
}

SweepDef parse_range(const std::string& s, const char* what) {
    // lo:hi:n
    SweepDef def;
    std::stringstream ss(s);
    std::string lo, hi, n;
    if (!std::getline(ss, lo, ':') || !std::getline(ss, hi, ':') || !std::getline(ss, n, ':'))
        throw std::invalid_argument(std::string("bad ") + what + " range '" + s +
                                    "' (expected lo:hi:n)");
    try {
        def.lo = std::stod(lo);
        def.hi = std::stod(hi);
        def.n = std::stoi(n);
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string("bad ") + what + " range '" + s + "'");
    }
    return def;
}

template <typename T>
void from_config(const json& j, const char* key, std::optional<T>& slot) {
    if (slot) return;  // flags win
    if (j.contains(key)) slot = j.at(key).get<T>();
}

void merge_config_file(Raw& raw) {
    if (!raw.config_path) return;
    std::ifstream in(*raw.config_path);
    if (!in) throw std::invalid_argument("cannot open config file '" + *raw.config_path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw std::invalid_argument("bad JSON config: " + std::string(e.what()));
    }
    from_config(j, "d", raw.d);
    from_config(j, "pe", raw.pe);
    from_config(j, "a", raw.a);
    from_config(j, "u0", raw.u0);
    from_config(j, "ti", raw.ti);
    from_config(j, "tw", raw.tw);
    from_config(j, "h", raw.h);
    from_config(j, "tinf", raw.tinf);
    from_config(j, "order", raw.order);
    from_config(j, "method", raw.method);
    from_config(j, "methods", raw.methods);
    from_config(j, "format", raw.format);
    from_config(j, "out", raw.out_path);
    from_config(j, "points", raw.points);
    from_config(j, "xi_max", raw.xi_max);
    from_config(j, "tol", raw.tol);
    if (j.contains("fluid") && !raw.fluid) {
        if (j["fluid"].is_array()) {
            std::ostringstream s;
            for (std::size_t i = 0; i < j["fluid"].size(); ++i)
                s << (i ? "," : "") << j["fluid"][i].get<double>();
            raw.fluid = s.str();
        } else {
            raw.fluid = j["fluid"].get<std::string>();
        }
    }
    if (j.contains("fdm")) {
        const json& f = j["fdm"];
        from_config(f, "nx", raw.fdm_nx);
        from_config(f, "nr", raw.fdm_nr);
        from_config(f, "length", raw.fdm_length);
        from_config(f, "relax", raw.fdm_relax);
        from_config(f, "tol", raw.fdm_tol);
        from_config(f, "scheme", raw.fdm_scheme);
        from_config(f, "max_sweeps", raw.fdm_max_sweeps);
    }
}

RunConfig build_run_config(Raw& raw) {
    merge_config_file(raw);

    RunConfig cfg;
    ProblemSpec& spec = cfg.spec;
    const int d = raw.d.value_or(0);
    if (d != 0 && d != 1) throw std::invalid_argument("--d must be 0 or 1");
    spec.geometry = d == 0 ? Geometry::parallel_plates : Geometry::circular_tube;
    spec.a = raw.a.value_or(1.0);
    if (raw.fluid) {
        const auto f = parse_list(*raw.fluid, "fluid");
        if (f.size() != 4) throw std::invalid_argument("--fluid expects k,rho,cp,mu");
        spec.fluid = {f[0], f[1], f[2], f[3]};
    }
    spec.t_inlet = raw.ti.value_or(1.0);

    if ((raw.h || raw.tinf) && raw.tw)
        throw std::invalid_argument("choose one wall boundary: --tw or --h/--tinf");
    if (raw.h || raw.tinf)
        spec.bc = Exchange{raw.h.value_or(0.0), raw.tinf.value_or(0.0)};
    else
        spec.bc = UniformWall{raw.tw.value_or(0.0)};

    if (raw.pe && raw.u0) throw std::invalid_argument("give either --pe or --u0, not both");
    if (raw.u0) {
        spec.u0 = *raw.u0;
    } else {
        const double pe = raw.pe.value_or(10.0);
        if (pe < 0.0) throw std::invalid_argument("--pe must be >= 0");
        spec.u0 = pe * thermal_diffusivity(spec.fluid) / spec.a;
    }
    validate(spec);

    if (raw.format) cfg.format = parse_format(*raw.format);
    if (raw.out_path) cfg.out_path = *raw.out_path;
    if (raw.points) {
        if (*raw.points < 2) throw std::invalid_argument("--points must be >= 2");
        cfg.points = *raw.points;
    }
    if (raw.xi_max) {
        if (*raw.xi_max <= 0.0) throw std::invalid_argument("--xi-max must be positive");
        cfg.xi_max = *raw.xi_max;
    }
    cfg.tol = raw.tol;

    if (raw.pe_range) cfg.pe_sweep = parse_range(*raw.pe_range, "pe");
    if (raw.pe_list) cfg.pe_sweep.values = parse_list(*raw.pe_list, "pe");
    if (raw.alpha_list) cfg.alpha_sweep.values = parse_list(*raw.alpha_list, "alpha");

    if (raw.fdm_nx) cfg.fdm.nx = *raw.fdm_nx;
    if (raw.fdm_nr) cfg.fdm.nr = *raw.fdm_nr;
    if (raw.fdm_length) cfg.fdm.length = *raw.fdm_length;
    if (raw.fdm_relax) cfg.fdm.relax = *raw.fdm_relax;
    if (raw.fdm_tol) cfg.fdm.tol = *raw.fdm_tol;
    if (raw.fdm_max_sweeps) cfg.fdm.max_sweeps = *raw.fdm_max_sweeps;
    if (raw.fdm_scheme) {
        if (*raw.fdm_scheme == "central")
            cfg.fdm.scheme = AdvectionScheme::central;
        else if (*raw.fdm_scheme == "hybrid")
            cfg.fdm.scheme = AdvectionScheme::hybrid_upwind;
        else
            throw std::invalid_argument("--fdm-scheme must be central or hybrid");
    }

    cfg.params_echo = spec_echo(spec);
    return cfg;
}

Method resolve_solve_method(const Raw& raw) {
    if (raw.method && raw.order)
        throw std::invalid_argument("give either --method or --order, not both");
    if (raw.method) return parse_method(*raw.method);
    if (raw.order) {
        if (*raw.order == 4) return Method::order4;
        if (*raw.order == 6) return Method::order6;
        throw std::invalid_argument("--order must be 4 or 6");
    }
    return Method::order4;
}

std::vector<Method> resolve_methods(const Raw& raw) {
    if (!raw.methods) throw std::invalid_argument("compare requires --methods m1,m2[,...]");
    std::vector<Method> out;
    std::stringstream ss(*raw.methods);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(parse_method(tok));
    return out;
}

void add_common_flags(CLI::App* cmd, Raw& raw) {
    cmd->set_help_flag("--help", "print this help message and exit");  // frees --h
    cmd->add_option("--d", raw.d, "geometry: 0 parallel plates, 1 circular tube");
    cmd->add_option("--pe", raw.pe, "Peclet number (sets u0 from a and the fluid)");
    cmd->add_option("--a", raw.a, "half-gap or tube radius [m]");
    cmd->add_option("--u0", raw.u0, "centerline velocity [m/s]");
    cmd->add_option("--fluid", raw.fluid, "k,rho,cp,mu (SI)");
    cmd->add_option("--ti", raw.ti, "inlet temperature [K]");
    cmd->add_option("--tw", raw.tw, "uniform wall temperature [K]");
    cmd->add_option("--h", raw.h, "wall heat transfer coefficient [W/(m^2 K)]");
    cmd->add_option("--tinf", raw.tinf, "surrounding temperature [K]");
    cmd->add_option("--out", raw.out_path, "output path (default stdout)");
    cmd->add_option("--format", raw.format, "csv or json");
    cmd->add_option("--config", raw.config_path, "JSON config file (flags take precedence)");
    cmd->add_option("--points", raw.points, "profile resolution");
    cmd->add_option("--xi-max", raw.xi_max, "axial extent in x/a units");
    cmd->add_option("--fdm-nx", raw.fdm_nx, "FDM axial nodes");
    cmd->add_option("--fdm-nr", raw.fdm_nr, "FDM radial nodes");
    cmd->add_option("--fdm-length", raw.fdm_length, "FDM domain length [m]");
    cmd->add_option("--fdm-relax", raw.fdm_relax, "FDM relaxation factor");
    cmd->add_option("--fdm-tol", raw.fdm_tol, "FDM residual tolerance");
    cmd->add_option("--fdm-scheme", raw.fdm_scheme, "central or hybrid");
    cmd->add_option("--fdm-max-sweeps", raw.fdm_max_sweeps, "FDM sweep limit");
}

int dispatch(const std::function<void(std::ostream&)>& emit, const std::string& out_path,
             std::ostream& out, std::ostream& err) {
    if (out_path.empty()) {
        emit(out);
        return exit_ok;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
        err << "graetzkit: cannot open output path '" << out_path << "'\n";
        return exit_usage;
    }
    emit(file);
    if (!file.good()) {
        err << "graetzkit: write failed for '" << out_path << "'\n";
        return exit_usage;
    }
    return exit_ok;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Laminar convective heat transfer toolkit: closed-form boundary-function "
                 "solutions, Graetz series reference, and a finite-difference oracle"};
    app.name("graetzkit");
    app.set_help_flag("--help", "print this help message and exit");
    app.require_subcommand(1);

    Raw raw;
    std::string figure_id;
    CLI::App* fig = app.add_subcommand("figure", "reproduce published figure data as CSV/JSON");
    fig->add_option("id", figure_id, "fig2 | fig3 | fig4 | fig6")->required();
    fig->add_option("--pe-range", raw.pe_range, "override pe sweep, lo:hi:n (log spaced)");
    fig->add_option("--pe-list", raw.pe_list, "override pe sweep, comma list");
    fig->add_option("--alpha-list", raw.alpha_list, "override alpha sweep, comma list");
    add_common_flags(fig, raw);

    CLI::App* solve = app.add_subcommand("solve", "solve one case with one method");
    solve->add_option("--method", raw.method, "order4 | order6 | series | fdm");
    solve->add_option("--order", raw.order, "4 or 6 (shorthand for --method)");
    add_common_flags(solve, raw);

    CLI::App* compare = app.add_subcommand("compare", "run several methods and report deviations");
    compare->add_option("--methods", raw.methods, "comma list of methods (>= 2)");
    compare->add_option("--tol", raw.tol, "declared bound on max |dtheta|; exit 2 if exceeded");
    add_common_flags(compare, raw);

    CLI::App* dump = app.add_subcommand("fdm-dump", "dump the full FDM field as (x, r, T)");
    add_common_flags(dump, raw);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        RunConfig cfg = build_run_config(raw);
        if (fig->parsed()) {
            const FigureId id = parse_figure(figure_id);
            return dispatch([&](std::ostream& os) { emit_figure(id, cfg, os); }, cfg.out_path, out,
                            err);
        }
        if (solve->parsed()) {
            const Method m = resolve_solve_method(raw);
            return dispatch([&](std::ostream& os) { emit_solve(cfg, m, os); }, cfg.out_path, out,
                            err);
        }
        if (compare->parsed()) {
            cfg.methods = resolve_methods(raw);
            const ComparisonReport rep = compare_methods(cfg);
            const int code = dispatch([&](std::ostream& os) { render(rep, cfg, os); },
                                      cfg.out_path, out, err);
            if (code != exit_ok) return code;
            return rep.pass ? exit_ok : exit_numerical;
        }
        // fdm-dump
        return dispatch([&](std::ostream& os) { emit_fdm_dump(cfg, os); }, cfg.out_path, out, err);
    } catch (const InvalidRegimeError& e) {
        err << "graetzkit: invalid regime: " << e.what() << "\n";
        return exit_invalid_regime;
    } catch (const RootStructureError& e) {
        err << "graetzkit: numerical failure: " << e.what() << "\n";
        return exit_numerical;
    } catch (const DegenerateRootsError& e) {
        err << "graetzkit: numerical failure: " << e.what() << "\n";
        return exit_numerical;
    } catch (const NonConvergenceError& e) {
        err << "graetzkit: numerical failure: " << e.what() << "\n";
        return exit_numerical;
    } catch (const BCMismatchError& e) {
        err << "graetzkit: " << e.what() << "\n";
        return exit_usage;
    } catch (const NoMoreEigenvalues& e) {
        err << "graetzkit: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        err << "graetzkit: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        err << "graetzkit: error: " << e.what() << "\n";
        return exit_numerical;
    }
}

}  // namespace graetzkit::cli
