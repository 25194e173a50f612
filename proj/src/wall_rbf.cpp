#include "graetzkit/wall_rbf.hpp"

#include <cmath>

#include "graetzkit/charpoly.hpp"

namespace graetzkit {

namespace {

constexpr double kDegenerateGap = 1e-8;

void check_point(double x, double r, double a) {
    if (!std::isfinite(x) || x < 0.0) throw std::invalid_argument("x must be >= 0");
    if (!std::isfinite(r) || r < 0.0 || r > a) throw std::invalid_argument("r must lie in [0, a]");
}

const UniformWall& require_uniform_wall(const ProblemSpec& spec) {
    const auto* w = std::get_if<UniformWall>(&spec.bc);
    if (!w) throw BCMismatchError("uniform-wall solver called with an Exchange boundary");
    return *w;
}

}  // namespace

double WallSolutionO4::centerline(double x) const {
    return amp * std::exp(-beta1 * (x / a)) + t_inf_limit;
}

double WallSolutionO4::wall_gradient(double x) const {
    return t1a_amp * std::exp(-beta1 * (x / a)) + t1a_offset;
}

double WallSolutionO6::centerline(double x) const {
    const double xi = x / a;
    return c1 * std::exp(-beta1 * xi) + c2 * std::exp(-beta2 * xi) + c3;
}

double WallSolutionO6::wall_gradient(double x) const {
    const double xi = x / a;
    return d1 * std::exp(-beta1 * xi) + d2 * std::exp(-beta2 * xi) + d3;
}

double WallSolutionO6::wall_gradient_xx(double x) const {
    const double xi = x / a;
    return (d1 * beta1 * beta1 * std::exp(-beta1 * xi) + d2 * beta2 * beta2 * std::exp(-beta2 * xi)) /
           (a * a);
}

WallSolutionO4 solve_wall_order4(const ProblemSpec& spec) {
    const auto& wall = require_uniform_wall(spec);
    const auto groups = dimensionless(spec);
    const int d = geometry_flag(spec.geometry);
    const double diff = thermal_diffusivity(spec.fluid);
    const ThetaScale ts = theta_scale(spec);
    // dissipation temperature group A a^2/D in theta units
    const double g = groups.dissipation_rate * spec.a * spec.a / (diff * ts.scale);
    const double offset_theta = g / (4.0 * (3.0 + d));

    WallSolutionO4 sol{};
    sol.d = d;
    sol.a = spec.a;
    sol.diffusivity = diff;
    sol.pe = groups.pe;
    sol.dissipation_rate = groups.dissipation_rate;
    sol.t_wall = wall.t_wall;
    sol.t_inlet = spec.t_inlet;
    sol.beta1 = beta1_wall_order4(groups.pe, d);
    sol.t_inf_limit = ts.to_kelvin(offset_theta);
    sol.amp = ts.scale * (ts.to_theta(spec.t_inlet) - offset_theta);
    sol.t1a_amp = -8.0 * sol.amp / ((5.0 + d) * spec.a);
    sol.t1a_offset = -ts.scale * g / (spec.a * (3.0 + d));
    return sol;
}

WallSolutionO6 solve_wall_order6(const ProblemSpec& spec) {
    const auto& wall = require_uniform_wall(spec);
    const auto groups = dimensionless(spec);
    const int d = geometry_flag(spec.geometry);
    const double diff = thermal_diffusivity(spec.fluid);
    const double pe = groups.pe;
    const ThetaScale ts = theta_scale(spec);
    const double g = groups.dissipation_rate * spec.a * spec.a / (diff * ts.scale);

    const DecayConstants betas = solve_quartic_wall_order6(pe, d);
    const double b1 = betas.beta1;
    const double b2 = *betas.beta2;
    if (std::abs(b2 - b1) < kDegenerateGap)
        throw DegenerateRootsError("decay constants collided; confluent branch not implemented");

    WallSolutionO6 sol{};
    sol.d = d;
    sol.a = spec.a;
    sol.diffusivity = diff;
    sol.pe = pe;
    sol.dissipation_rate = groups.dissipation_rate;
    sol.t_wall = wall.t_wall;
    sol.t_inlet = spec.t_inlet;
    sol.beta1 = b1;
    sol.beta2 = b2;

    const double c3_theta = (g / 12.0) * (5.0 + d) / (5.0 + 3.0 * d);
    const double inlet_theta = ts.to_theta(spec.t_inlet);
    const double m1 = b1 * (b1 + pe);
    const double m2 = b2 * (b2 + pe);
    const double den = m2 - m1;
    const double c1_theta = -(c3_theta - inlet_theta) * m2 / den;
    const double c2_theta = (c3_theta - inlet_theta) * m1 / den;
    sol.c3 = ts.to_kelvin(c3_theta);
    sol.c1 = ts.scale * c1_theta;
    sol.c2 = ts.scale * c2_theta;

    const double eleven = 11.0 * (3.0 + d);
    sol.d1 = 48.0 * sol.c1 / (spec.a * (b1 * b1 - eleven));
    sol.d2 = 48.0 * sol.c2 / (spec.a * (b2 * b2 - eleven));
    sol.d3 = -(ts.scale * g / spec.a) * (5.0 + d) / (3.0 * (5.0 + 3.0 * d));
    return sol;
}

std::array<double, 2> radial_moments(const WallSolutionO4& sol, double x) {
    const double t1a = sol.wall_gradient(x);
    const double a = sol.a;
    const double src = sol.dissipation_rate / sol.diffusivity;  // A/D [K/m^2]
    const double t20 = (3.0 + sol.d) / (2.0 * a) * t1a + 0.5 * src;
    const double t40 = -3.0 * (1.0 + sol.d) / (a * a * a) * t1a - 3.0 * src / (a * a);
    return {t20, t40};
}

std::array<double, 3> radial_moments(const WallSolutionO6& sol, double x) {
    const double a = sol.a;
    const double d = sol.d;
    const double src = sol.dissipation_rate / sol.diffusivity;
    const double t1a = sol.wall_gradient(x);
    const double t1a_xx = sol.wall_gradient_xx(x);
    const double t2a = -(d / a) * t1a - src;
    const double t3a = -t1a_xx - (d / a) * t2a + (d / (a * a)) * t1a - 2.0 * src / a;
    const std::array<std::array<double, 3>, 3> m = {{
        {a, a * a * a / 6.0, a * a * a * a * a / 120.0},
        {1.0, a * a / 2.0, a * a * a * a / 24.0},
        {0.0, a, a * a * a / 6.0},
    }};
    return detail::solve_dense<3>(m, {t1a, t2a, t3a});
}

double t20_from_gradient_relation(const WallSolutionO6& sol, double x) {
    const double a = sol.a;
    const double src = sol.dissipation_rate / sol.diffusivity;
    return -(a / 8.0) * sol.wall_gradient_xx(x) +
           (15.0 + 9.0 * sol.d) / (8.0 * a) * sol.wall_gradient(x) + src * (5.0 + sol.d) / 8.0;
}

double reconstruct_field(const WallSolutionO4& sol, double x, double r) {
    check_point(x, r, sol.a);
    const auto m = radial_moments(sol, x);
    const double r2 = r * r;
    return sol.centerline(x) + 0.5 * r2 * m[0] + r2 * r2 / 24.0 * m[1];
}

double reconstruct_field(const WallSolutionO6& sol, double x, double r) {
    check_point(x, r, sol.a);
    const auto m = radial_moments(sol, x);
    const double r2 = r * r;
    return sol.centerline(x) + 0.5 * r2 * m[0] + r2 * r2 / 24.0 * m[1] +
           r2 * r2 * r2 / 720.0 * m[2];
}

double wall_residual(const WallSolutionO6& sol, double x) {
    return std::abs(reconstruct_field(sol, x, sol.a) - sol.t_wall);
}

FieldSampler sampler(const WallSolutionO4& sol) {
    return FieldSampler(4, [sol](double x, double r) { return reconstruct_field(sol, x, r); });
}

FieldSampler sampler(const WallSolutionO6& sol) {
    return FieldSampler(6, [sol](double x, double r) { return reconstruct_field(sol, x, r); });
}

}  // namespace graetzkit
