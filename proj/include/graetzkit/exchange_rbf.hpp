#pragma once

#include <array>

#include "graetzkit/core.hpp"
#include "graetzkit/types.hpp"

namespace graetzkit {

/// Steady fourth-order solution for the heat-exchange (Robin) boundary.
/// The wall temperature advects with effective speed v_adv = alpha*ubar and
/// relaxes exponentially toward t_far:
///   Ta(xi)  = amp * exp(-beta1 xi) + t_far
///   T1a(xi) = (h/k) (t_inf - Ta(xi))
struct ExchangeSolution {
    int d;
    double a;
    double diffusivity;
    double u0;
    double pe;
    double dissipation_rate;  ///< [K/s]
    double t_inlet;           ///< [K]
    double t_inf;             ///< [K]
    double h;                 ///< [W/(m^2 K)]
    double k;                 ///< [W/(m K)]

    double lambda;  ///< a h / k
    double alpha;   ///< 1/(1 + lambda/(3+d))
    double v_adv;   ///< alpha * ubar [m/s]

    double beta1;
    double t_far;  ///< t_inf + (A a^2/D) alpha/((1-alpha)(3+d)^2) [K]
    double amp;    ///< t_inlet - t_far [K]

    double wall_temperature(double x) const;  ///< Ta [K]
    double wall_gradient(double x) const;     ///< T1a [K/m]
};

/// Throws BCMismatchError for a UniformWall spec and InvalidRegimeError for
/// an insulated wall (lambda = 0) with nonzero viscous dissipation, where the
/// far-field offset diverges and no steady state exists. An insulated wall
/// without dissipation yields the constant solution Ta = t_inlet, beta1 = 0.
ExchangeSolution solve_exchange_order4(const ProblemSpec& spec);

/// (T20, T40) at the axis from the 2x2 wall-to-axis moment relation.
///
/// The expansion is anchored at the wall, so the reconstructed interior is an
/// extrapolation: trustworthy at moderate Peclet (checked against the
/// finite-difference solver at pe = 10), but the centerline overshoots badly
/// when advection is weak and the exchange strong (pe*alpha -> 0 with large
/// lambda). The wall temperature Ta is the solved quantity; treat T0 there as
/// qualitative.
std::array<double, 2> radial_moments(const ExchangeSolution& sol, double x);

/// Second radial derivative at the wall from the steady axial closure.
double second_wall_derivative(const ExchangeSolution& sol, double x);

/// Third radial derivative at the wall from the steady axial closure;
/// diagnostic only (the fourth-order reconstruction does not consume it, but
/// it must match a*T40).
double third_wall_derivative(const ExchangeSolution& sol, double x);

/// Truncated radial reconstruction anchored at the wall value Ta(x).
double reconstruct_field_exchange(const ExchangeSolution& sol, double x, double r);

/// Centerline temperature T0(x) of the reconstructed field.
double centerline_exchange(const ExchangeSolution& sol, double x);

FieldSampler sampler(const ExchangeSolution& sol);

}  // namespace graetzkit
