#pragma once

#include <cstdint>
#include <vector>

#include "graetzkit/types.hpp"

namespace graetzkit {

enum class AdvectionScheme {
    central,        ///< second order everywhere; wiggles above cell Peclet 2
    hybrid_upwind,  ///< central where v*hx/D <= 2, first-order upwind beyond
};

/// Grid and iteration controls for the finite-difference solver.
/// nx = 0 or length = 0 selects the defaults: nr = 65, axial spacing <= a/8,
/// and L = a*max(10, 8/beta1) so the outlet sits past the decay length
/// (exp(-beta1 L/a) < 1e-4).
struct FdmConfig {
    int nx = 0;
    int nr = 65;
    double length = 0.0;  ///< [m]
    double relax = 1.0;   ///< values above ~1.1 can diverge on advection-dominated cases
    double tol = 1e-10;
    std::int64_t max_sweeps = 200000;
    AdvectionScheme scheme = AdvectionScheme::hybrid_upwind;
};

/// Resolve the default grid rule for a given problem.
FdmConfig default_config(const ProblemSpec& spec);

/// Converged steady temperature field on the (x, r) grid, row-major in x.
struct FdmSolution {
    int nx = 0, nr = 0;
    double a = 0.0, length = 0.0;
    std::vector<double> x;            ///< node coordinates [m], size nx
    std::vector<double> r;            ///< node coordinates [m], size nr
    std::vector<double> temperature;  ///< T[i*nr + j] [K]
    double residual = 0.0;            ///< final scaled residual
    std::int64_t sweeps = 0;

    double at(int i, int j) const { return temperature[static_cast<std::size_t>(i) * nr + j]; }
};

/// Solve the steady advection-conduction equation
///   v(r) dT/dx = D (d2T/dr2 + (d/r) dT/dr + d2T/dx2) + (mu/(rho cp)) (dv/dr)^2
/// with Dirichlet inlet, symmetry axis ((d/r) dT/dr replaced by d*d2T/dr2 at
/// r = 0), Dirichlet or Robin wall, and zero-gradient outlet. Line relaxation
/// in r, lines swept in increasing x, over-relaxed by config.relax;
/// deterministic sweep order, bit-reproducible results.
///
/// Throws InvalidRegimeError (insulated Exchange wall with dissipation) and
/// NonConvergenceError (with a sampled residual history) after
/// config.max_sweeps.
FdmSolution fdm_solve(const ProblemSpec& spec, const FdmConfig& config);

/// Axis, wall, and wall-gradient profiles. t1a uses a one-sided second-order
/// difference at the wall.
struct BoundaryProfiles {
    std::vector<double> x;    ///< [m]
    std::vector<double> t0;   ///< centerline [K]
    std::vector<double> ta;   ///< wall [K]
    std::vector<double> t1a;  ///< wall-normal gradient [K/m]
};

BoundaryProfiles extract_boundary_functions(const FdmSolution& sol);

/// Linear interpolation of a profile onto arbitrary x (clamped to the grid).
double sample_profile(const std::vector<double>& grid_x, const std::vector<double>& values,
                      double x);

}  // namespace graetzkit
