#pragma once

#include <array>
#include <cstddef>

namespace graetzkit {

/// One eigenmode of the classical parallel-plate Graetz series.
struct SeriesRow {
    double lambda_n;  ///< eigenvalue
    double a_n;       ///< expansion coefficient
};

/// The eight tabulated (lambda_n, A_n) pairs of the constant-wall-temperature
/// Graetz solution for parallel plates with negligible axial conduction
/// (Shah & London, "Laminar Flow Forced Convection in Ducts"). No further
/// eigenvalues are computed.
const std::array<SeriesRow, 8>& graetz_plate_table();

/// Dimensionless centerline temperature theta = (T_w - T0)/(T_w - T_i)
/// summed over the first n_terms modes:
///   theta(xi1) = sum A_n exp(-lambda_n^2 xi1),   xi1 = xi/pe.
/// Valid for parallel plates at negligible axial conduction; callers
/// comparing against finite-pe or tube solutions must flag that in their own
/// output. Near xi1 -> 0 the truncated series oscillates.
///
/// Throws NoMoreEigenvalues for n_terms > 8, std::invalid_argument for
/// n_terms < 1 or xi1 < 0.
double theta_series(double xi1, std::size_t n_terms = 8);

}  // namespace graetzkit
