#pragma once

#include <array>

#include "graetzkit/core.hpp"
#include "graetzkit/types.hpp"

namespace graetzkit {

/// Steady fourth-order solution for the uniform-wall-temperature boundary.
/// Centerline temperature and wall gradient are single decaying exponentials
/// in xi = x/a:
///   T0(xi)  = amp * exp(-beta1 xi) + t_inf_limit
///   T1a(xi) = t1a_amp * exp(-beta1 xi) + t1a_offset
struct WallSolutionO4 {
    int d;
    double a;            ///< [m]
    double diffusivity;  ///< [m^2/s]
    double pe;
    double dissipation_rate;  ///< [K/s]
    double t_wall;            ///< [K]
    double t_inlet;           ///< [K]

    double beta1;
    double t_inf_limit;  ///< far-field centerline temperature t_wall + A a^2/(4D(3+d)) [K]
    double amp;          ///< t_inlet - t_inf_limit [K]
    double t1a_amp;      ///< [K/m]
    double t1a_offset;   ///< [K/m]

    double centerline(double x) const;     ///< T0 [K]
    double wall_gradient(double x) const;  ///< T1a [K/m]
};

/// Steady sixth-order solution, two decaying modes:
///   T0(xi)  = c1 e^{-beta1 xi} + c2 e^{-beta2 xi} + c3
///   T1a(xi) = d1 e^{-beta1 xi} + d2 e^{-beta2 xi} + d3
/// The inlet closure constrains T0 only; the wall gradient at xi = 0 is
/// whatever the coupled system produces (-24/(9+d) * span/a without
/// dissipation), not an imposed condition.
struct WallSolutionO6 {
    int d;
    double a;
    double diffusivity;
    double pe;
    double dissipation_rate;
    double t_wall;
    double t_inlet;

    double beta1, beta2;
    double c1, c2, c3;  ///< centerline coefficients [K]
    double d1, d2, d3;  ///< wall-gradient coefficients [K/m]

    double centerline(double x) const;
    double wall_gradient(double x) const;
    /// Analytic d^2 T1a/dx^2, used by the radial-moment closure. [K/m^3]
    double wall_gradient_xx(double x) const;
};

/// Throws BCMismatchError unless spec carries a UniformWall boundary.
WallSolutionO4 solve_wall_order4(const ProblemSpec& spec);

/// Throws BCMismatchError / RootStructureError / DegenerateRootsError.
WallSolutionO6 solve_wall_order6(const ProblemSpec& spec);

/// Radial derivative moments at the axis, (T20, T40) [K/m^2, K/m^4].
std::array<double, 2> radial_moments(const WallSolutionO4& sol, double x);

/// (T20, T40, T60) from the 3x3 wall-to-axis moment relation fed by the
/// closed-form T1a, T2a, T3a. [K/m^2, K/m^4, K/m^6]
std::array<double, 3> radial_moments(const WallSolutionO6& sol, double x);

/// T20 straight from the steady wall-gradient relation (independent route to
/// radial_moments()[0]; the two must agree).
double t20_from_gradient_relation(const WallSolutionO6& sol, double x);

/// Truncated radial Taylor reconstruction of T(x, r). Rejects r < 0, r > a,
/// x < 0.
double reconstruct_field(const WallSolutionO4& sol, double x, double r);
double reconstruct_field(const WallSolutionO6& sol, double x, double r);

/// |T(x, a) - t_wall| of the reconstructed order-6 field. The order-6 moment
/// closure is overdetermined; this diagnostic measures its internal
/// consistency (roundoff-level for the steady solution).
double wall_residual(const WallSolutionO6& sol, double x);

FieldSampler sampler(const WallSolutionO4& sol);
FieldSampler sampler(const WallSolutionO6& sol);

}  // namespace graetzkit
