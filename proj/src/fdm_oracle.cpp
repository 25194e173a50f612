#include "graetzkit/fdm_oracle.hpp"

#include <algorithm>
#include <limits>
#include <cmath>
#include <sstream>

#include "graetzkit/charpoly.hpp"
#include "graetzkit/core.hpp"

namespace graetzkit {

namespace {

struct Stencil {
    // per-row (j) coefficients of  cw*T[i-1][j] + ce*T[i+1][j] + cs*T[i][j-1]
    //                            + cn*T[i][j+1] + cp*T[i][j] + src = 0
    std::vector<double> cw, ce, cs, cn, cp, src;
    std::vector<char> solved;  // 0 for the Dirichlet wall row
};

void validate_config(const FdmConfig& cfg) {
    if (cfg.nx < 16) throw std::invalid_argument("nx must be >= 16");
    if (cfg.nr < 8) throw std::invalid_argument("nr must be >= 8");
    if (!(cfg.length > 0.0)) throw std::invalid_argument("length must be positive");
    if (!(cfg.relax > 0.0 && cfg.relax < 2.0)) throw std::invalid_argument("relax must be in (0, 2)");
    if (!(cfg.tol > 0.0)) throw std::invalid_argument("tol must be positive");
    if (cfg.max_sweeps < 1) throw std::invalid_argument("max_sweeps must be >= 1");
}

Stencil build_stencil(const ProblemSpec& spec, const FdmConfig& cfg, double hx, double hr) {
    const int d = geometry_flag(spec.geometry);
    const double diff = thermal_diffusivity(spec.fluid);
    const double aa = spec.a;
    const double src_rate = dimensionless(spec).dissipation_rate;  // A [K/s]
    const int nr = cfg.nr;

    Stencil st;
    st.cw.assign(nr, 0.0);
    st.ce.assign(nr, 0.0);
    st.cs.assign(nr, 0.0);
    st.cn.assign(nr, 0.0);
    st.cp.assign(nr, 0.0);
    st.src.assign(nr, 0.0);
    st.solved.assign(nr, 1);

    for (int j = 0; j < nr; ++j) {
        const double r = j * hr;
        const double v = spec.u0 * (1.0 - (r / aa) * (r / aa));

        double diag = 0.0;
        if (j == 0) {
            // axis: (d/r) dT/dr -> d * d2T/dr2, symmetric ghost
            st.cn[j] = 2.0 * diff * (1 + d) / (hr * hr);
            diag -= 2.0 * diff * (1 + d) / (hr * hr);
        } else if (j == nr - 1) {
            if (const auto* w = std::get_if<UniformWall>(&spec.bc)) {
                st.solved[j] = 0;
                st.cp[j] = 1.0;
                st.src[j] = -w->t_wall;  // same F = 0 convention as solved rows
                continue;
            }
            // Robin wall via ghost node: dT/dr|a = (h/k)(t_inf - T)
            const auto& ex = std::get<Exchange>(spec.bc);
            const double hk = ex.h / spec.fluid.k;
            const double robin = 2.0 * diff * hk / hr + diff * (d / aa) * hk;
            st.cs[j] = 2.0 * diff / (hr * hr);
            diag -= 2.0 * diff / (hr * hr) + robin;
            st.src[j] += robin * ex.t_inf;
        } else {
            const double curv = diff * d / (2.0 * r * hr);
            st.cn[j] = diff / (hr * hr) + curv;
            st.cs[j] = diff / (hr * hr) - curv;
            diag -= 2.0 * diff / (hr * hr);
        }

        // axial diffusion
        st.ce[j] += diff / (hx * hx);
        st.cw[j] += diff / (hx * hx);
        diag -= 2.0 * diff / (hx * hx);

        // advection (v >= 0): central below cell Peclet 2, else first-order upwind
        if (v > 0.0) {
            const double cell_pe = v * hx / diff;
            if (cfg.scheme == AdvectionScheme::central || cell_pe <= 2.0) {
                st.ce[j] -= v / (2.0 * hx);
                st.cw[j] += v / (2.0 * hx);
            } else {
                st.cw[j] += v / hx;
                diag -= v / hx;
            }
        }

        st.src[j] += src_rate * (r / aa) * (r / aa);
        st.cp[j] = diag;
    }
    return st;
}

double temperature_scale(const ProblemSpec& spec) {
    const auto g = dimensionless(spec);
    const double diff = thermal_diffusivity(spec.fluid);
    const double span = std::abs(spec.t_inlet - reference_temperature(spec));
    const double heat = g.dissipation_rate * spec.a * spec.a / diff;
    const double s = std::max(span, heat);
    return s > 0.0 ? s : 1.0;
}

}  // namespace

FdmConfig default_config(const ProblemSpec& spec) {
    const auto g = dimensionless(spec);
    const int d = geometry_flag(spec.geometry);
    double beta1;
    if (std::holds_alternative<UniformWall>(spec.bc))
        beta1 = beta1_wall_order4(g.pe, d);
    else
        beta1 = beta1_exchange(g.pe, *g.alpha, d);

    FdmConfig cfg;
    const double xi_len = beta1 > 1e-6 ? std::max(10.0, 8.0 / beta1) : 10.0;
    cfg.length = spec.a * xi_len;
    cfg.nx = std::max(16, static_cast<int>(std::ceil(8.0 * xi_len)) + 1);
    return cfg;
}

FdmSolution fdm_solve(const ProblemSpec& spec, const FdmConfig& config) {
    validate(spec);
    FdmConfig cfg = config;
    if (cfg.length <= 0.0 || cfg.nx <= 0) {
        const FdmConfig def = default_config(spec);
        if (cfg.length <= 0.0) cfg.length = def.length;
        if (cfg.nx <= 0)
            cfg.nx = std::max(16, static_cast<int>(std::ceil(8.0 * cfg.length / spec.a)) + 1);
    }
    validate_config(cfg);

    if (const auto* ex = std::get_if<Exchange>(&spec.bc)) {
        if (ex->h == 0.0 && dimensionless(spec).dissipation_rate > 0.0)
            throw InvalidRegimeError(
                "insulated wall with viscous dissipation: no steady state exists");
    }

    const int nx = cfg.nx, nr = cfg.nr;
    const double hx = cfg.length / (nx - 1);
    const double hr = spec.a / (nr - 1);
    const Stencil st = build_stencil(spec, cfg, hx, hr);
    const double scale = temperature_scale(spec);

    FdmSolution sol;
    sol.nx = nx;
    sol.nr = nr;
    sol.a = spec.a;
    sol.length = cfg.length;
    sol.x.resize(nx);
    sol.r.resize(nr);
    for (int i = 0; i < nx; ++i) sol.x[i] = i * hx;
    for (int j = 0; j < nr; ++j) sol.r[j] = j * hr;

    // initial guess: boundary reference temperature everywhere (inlet value on
    // an insulated exchange wall), Dirichlet rows exact
    double fill = reference_temperature(spec);
    if (const auto* ex = std::get_if<Exchange>(&spec.bc); ex && ex->h == 0.0) fill = spec.t_inlet;
    sol.temperature.assign(static_cast<std::size_t>(nx) * nr, fill);
    double* t = sol.temperature.data();
    for (int j = 0; j < nr; ++j) t[j] = spec.t_inlet;  // inlet row
    if (std::holds_alternative<UniformWall>(spec.bc)) {
        const double tw = std::get<UniformWall>(spec.bc).t_wall;
        for (int i = 0; i < nx; ++i) t[static_cast<std::size_t>(i) * nr + nr - 1] = tw;
        t[nr - 1] = tw;  // wall value wins at the inlet corner
    }

    // Thomas factorization is shared by every line (coefficients depend on j only)
    std::vector<double> den(nr), csup(nr);
    {
        double prev_c = 0.0;
        for (int j = 0; j < nr; ++j) {
            den[j] = st.cp[j] - st.cs[j] * prev_c;
            csup[j] = st.cn[j] / den[j];
            prev_c = csup[j];
        }
    }

    std::vector<double> rhs(nr), work(nr);
    const auto scaled_residual = [&]() {
        double worst = 0.0;
        for (int i = 1; i < nx - 1; ++i) {
            const double* row = t + static_cast<std::size_t>(i) * nr;
            const double* west = row - nr;
            const double* east = row + nr;
            for (int j = 0; j < nr; ++j) {
                if (!st.solved[j]) continue;
                double f = st.cw[j] * west[j] + st.ce[j] * east[j] + st.cp[j] * row[j] + st.src[j];
                if (j > 0) f += st.cs[j] * row[j - 1];
                if (j < nr - 1) f += st.cn[j] * row[j + 1];
                const double s = std::abs(f) / (std::abs(st.cp[j]) * scale);
                if (!std::isfinite(s)) return std::numeric_limits<double>::infinity();
                worst = std::max(worst, s);
            }
        }
        return worst;
    };

    std::vector<double> history;
    double res = scaled_residual();
    history.push_back(res);
    if (res <= cfg.tol) {
        sol.residual = res;
        sol.sweeps = 0;
        return sol;
    }

    const auto relax_line = [&](int i) {
        double* row = t + static_cast<std::size_t>(i) * nr;
        const double* west = row - nr;
        const double* east = row + nr;
        for (int j = 0; j < nr; ++j)
            rhs[j] = -(st.cw[j] * west[j] + st.ce[j] * east[j] + st.src[j]);
        double prev = 0.0;
        for (int j = 0; j < nr; ++j) {
            prev = (rhs[j] - st.cs[j] * prev) / den[j];
            work[j] = prev;
        }
        for (int j = nr - 2; j >= 0; --j) work[j] -= csup[j] * work[j + 1];
        for (int j = 0; j < nr; ++j) {
            if (st.solved[j])
                row[j] += cfg.relax * (work[j] - row[j]);
            else
                row[j] = work[j];
        }
    };
    const auto refresh_outlet = [&]() {
        double* last = t + static_cast<std::size_t>(nx - 1) * nr;
        const double* inner = last - nr;
        for (int j = 0; j < nr; ++j) last[j] = inner[j];
    };

    // one sweep = a downstream pass followed by an upstream pass, so elliptic
    // information crosses the whole domain both ways each sweep
    const std::int64_t check_every = 10;
    std::int64_t sweep = 0;
    while (sweep < cfg.max_sweeps) {
        ++sweep;
        for (int i = 1; i < nx - 1; ++i) relax_line(i);
        refresh_outlet();
        for (int i = nx - 2; i >= 1; --i) relax_line(i);
        refresh_outlet();
        if (sweep % check_every == 0 || sweep == cfg.max_sweeps) {
            res = scaled_residual();
            if (history.size() < 4096) history.push_back(res);
            if (res <= cfg.tol) {
                sol.residual = res;
                sol.sweeps = sweep;
                return sol;
            }
            if (!std::isfinite(res) || res > 1e8 * (history.front() + 1.0))
                throw NonConvergenceError("iteration diverged; reduce the relaxation factor",
                                          std::move(history));
        }
    }
    std::ostringstream msg;
    msg << "no convergence after " << cfg.max_sweeps << " sweeps (residual " << res << ", tol "
        << cfg.tol << ")";
    throw NonConvergenceError(msg.str(), std::move(history));
}

BoundaryProfiles extract_boundary_functions(const FdmSolution& sol) {
    BoundaryProfiles p;
    p.x = sol.x;
    p.t0.resize(sol.nx);
    p.ta.resize(sol.nx);
    p.t1a.resize(sol.nx);
    const double hr = sol.r[1] - sol.r[0];
    for (int i = 0; i < sol.nx; ++i) {
        p.t0[i] = sol.at(i, 0);
        p.ta[i] = sol.at(i, sol.nr - 1);
        p.t1a[i] =
            (3.0 * sol.at(i, sol.nr - 1) - 4.0 * sol.at(i, sol.nr - 2) + sol.at(i, sol.nr - 3)) /
            (2.0 * hr);
    }
    return p;
}

double sample_profile(const std::vector<double>& grid_x, const std::vector<double>& values,
                      double x) {
    if (grid_x.empty()) throw std::invalid_argument("empty profile");
    if (x <= grid_x.front()) return values.front();
    if (x >= grid_x.back()) return values.back();
    const auto it = std::upper_bound(grid_x.begin(), grid_x.end(), x);
    const std::size_t hi = static_cast<std::size_t>(it - grid_x.begin());
    const std::size_t lo = hi - 1;
    const double w = (x - grid_x[lo]) / (grid_x[hi] - grid_x[lo]);
    return values[lo] + w * (values[hi] - values[lo]);
}

}  // namespace graetzkit
