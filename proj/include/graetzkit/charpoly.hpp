#pragma once

#include <array>
#include <optional>

#include "graetzkit/types.hpp"

namespace graetzkit {

/// Dimensionless axial decay constants. beta1 is the slow mode that sets the
/// thermal entrance length; beta2 exists only for the sixth-order expansion.
struct DecayConstants {
    double beta1;
    std::optional<double> beta2;
};

/// Decay constant of the fourth-order uniform-wall solution:
///   beta1 = (pe/2) [ sqrt(1 + 16(d+1)(d+3)/((d+5) pe^2)) - 1 ],
/// evaluated in a cancellation-free form; at pe = 0 the analytic limit
/// 2*sqrt((d+1)(d+3)/(d+5)) is returned.
double beta1_wall_order4(double pe, int d);

/// Both decay constants of the sixth-order uniform-wall solution: the two
/// negative real roots r of
///   r^4 - pe r^3 - (39+17d) r^2 + 11(3+d) pe r + 18(d+1)(5+3d) = 0
/// with beta = -r, returned sorted beta1 < beta2. The polynomial evaluated at
/// r = -m, m = sqrt(11(3+d)), is a negative constant independent of pe, and
/// is positive at r = -2m, so (0, m) and (m, 2m) bracket the two roots for
/// the entire pe sweep; each is found by safeguarded bisection/Newton in long
/// double. Globally convergent, no seeding, well conditioned at extreme pe.
///
/// The small root scales as c/pe for large pe with
/// c = 18(d+1)(5+3d)/(11(3+d)) by dominant balance; the large root tends to
/// sqrt(11(3+d)).
///
/// Throws RootStructureError if a bracket loses its sign change (a solver
/// failure guard; no valid pe, d regime does this).
DecayConstants solve_quartic_wall_order6(double pe, int d);

/// Decay constant of the heat-exchange solution:
///   beta1 = (pe a/(3+d)) [ sqrt(1 + (1-a)(d+1)(d+3)^3/(a^2 pe^2)) - 1 ],
/// a = alpha; cancellation-free form, with the analytic limit
/// sqrt((1-alpha)(d+1)(d+3)) when pe*alpha vanishes.
double beta1_exchange(double pe, double alpha, int d);

/// Residual of the defining quadratic for beta1_wall_order4, normalized by
/// the largest term magnitude. Cross-check helper.
double wall_order4_quadratic_residual(double beta, double pe, int d);

/// Same for beta1_exchange: beta^2 + (2 alpha pe/(3+d)) beta - (1-alpha)(d+1)(d+3).
double exchange_quadratic_residual(double beta, double pe, double alpha, int d);

/// Quartic value at r = -beta, normalized by the largest coefficient
/// magnitude times max(1, beta)^4.
double wall_order6_residual(double beta, double pe, int d);

/// Published closed-form limits, used for cross-validation only.
enum class Asymptote {
    wall_o4_high_pe,        ///< beta1 ~ 4(d+1)(d+3)/((d+5) pe)
    wall_o6_beta2_high_pe,  ///< beta2 -> sqrt(11(3+d))
    exchange_advective,     ///< beta1 ~ (1-alpha)(d+1)(d+3)^2/(2 alpha pe)
    exchange_dominated,     ///< beta1 -> sqrt((1-alpha)(d+1)(d+3))
};

double asymptote(Asymptote kind, double pe, double alpha, int d);

/// Coefficients of the order-6 characteristic quartic, highest power first.
std::array<double, 5> wall_order6_coefficients(double pe, int d);

}  // namespace graetzkit
