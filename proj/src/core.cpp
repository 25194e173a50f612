#include "graetzkit/core.hpp"

#include <cmath>
#include <utility>

namespace graetzkit {

namespace {

bool finite(double v) { return std::isfinite(v); }

}  // namespace

void validate(const ProblemSpec& spec) {
    const int d = geometry_flag(spec.geometry);
    if (d != 0 && d != 1) throw std::invalid_argument("geometry flag must be 0 or 1");
    if (!finite(spec.a) || spec.a <= 0.0) throw std::invalid_argument("a must be positive");
    if (!finite(spec.u0) || spec.u0 < 0.0) throw std::invalid_argument("u0 must be >= 0");
    const auto& f = spec.fluid;
    if (!finite(f.k) || f.k <= 0.0) throw std::invalid_argument("k must be positive");
    if (!finite(f.rho) || f.rho <= 0.0) throw std::invalid_argument("rho must be positive");
    if (!finite(f.cp) || f.cp <= 0.0) throw std::invalid_argument("cp must be positive");
    if (!finite(f.mu) || f.mu < 0.0) throw std::invalid_argument("mu must be >= 0");
    if (!finite(spec.t_inlet)) throw std::invalid_argument("t_inlet must be finite");
    if (const auto* w = std::get_if<UniformWall>(&spec.bc)) {
        if (!finite(w->t_wall)) throw std::invalid_argument("t_wall must be finite");
    } else {
        const auto& e = std::get<Exchange>(spec.bc);
        if (!finite(e.h) || e.h < 0.0) throw std::invalid_argument("h must be >= 0");
        if (!finite(e.t_inf)) throw std::invalid_argument("t_inf must be finite");
    }
}

DimensionlessGroups dimensionless(const ProblemSpec& spec) {
    validate(spec);
    const int d = geometry_flag(spec.geometry);
    const double diff = thermal_diffusivity(spec.fluid);
    DimensionlessGroups g{};
    g.pe = spec.u0 * spec.a / diff;
    g.ubar = 2.0 * spec.u0 / (3.0 + d);
    g.dissipation_rate =
        4.0 * spec.fluid.mu * spec.u0 * spec.u0 / (spec.fluid.rho * spec.fluid.cp * spec.a * spec.a);
    if (const auto* e = std::get_if<Exchange>(&spec.bc)) {
        const double lambda = spec.a * e->h / spec.fluid.k;
        g.lambda = lambda;
        g.alpha = 1.0 / (1.0 + lambda / (3.0 + d));
    }
    return g;
}

double velocity(const ProblemSpec& spec, double r) {
    validate(spec);
    if (!std::isfinite(r) || r < 0.0 || r > spec.a)
        throw std::invalid_argument("r must lie in [0, a]");
    const double s = r / spec.a;
    return spec.u0 * (1.0 - s * s);
}

double reference_temperature(const ProblemSpec& spec) {
    if (const auto* w = std::get_if<UniformWall>(&spec.bc)) return w->t_wall;
    return std::get<Exchange>(spec.bc).t_inf;
}

ThetaScale theta_scale(const ProblemSpec& spec) {
    const double t_ref = reference_temperature(spec);
    const double span = spec.t_inlet - t_ref;
    return ThetaScale{t_ref, span != 0.0 ? span : 1.0};
}

namespace detail {

template <int N>
std::array<double, N> solve_dense(std::array<std::array<double, N>, N> A, std::array<double, N> b) {
    for (int col = 0; col < N; ++col) {
        int piv = col;
        for (int row = col + 1; row < N; ++row)
            if (std::abs(A[row][col]) > std::abs(A[piv][col])) piv = row;
        if (A[piv][col] == 0.0) throw Error("singular matrix in solve_dense");
        std::swap(A[col], A[piv]);
        std::swap(b[col], b[piv]);
        for (int row = col + 1; row < N; ++row) {
            const double f = A[row][col] / A[col][col];
            for (int c = col; c < N; ++c) A[row][c] -= f * A[col][c];
            b[row] -= f * b[col];
        }
    }
    std::array<double, N> x{};
    for (int row = N - 1; row >= 0; --row) {
        double s = b[row];
        for (int c = row + 1; c < N; ++c) s -= A[row][c] * x[c];
        x[row] = s / A[row][row];
    }
    return x;
}

template std::array<double, 2> solve_dense<2>(std::array<std::array<double, 2>, 2>,
                                              std::array<double, 2>);
template std::array<double, 3> solve_dense<3>(std::array<std::array<double, 3>, 3>,
                                              std::array<double, 3>);

double polyval(const double* coeffs, int n, double x) {
    double acc = 0.0;
    for (int i = 0; i < n; ++i) acc = acc * x + coeffs[i];
    return acc;
}

long double polyval(const long double* coeffs, int n, long double x) {
    long double acc = 0.0L;
    for (int i = 0; i < n; ++i) acc = acc * x + coeffs[i];
    return acc;
}

}  // namespace detail

}  // namespace graetzkit
