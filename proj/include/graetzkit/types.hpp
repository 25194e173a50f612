#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace graetzkit {

/// Channel cross-section: flow confined by two parallel plates a half-gap
/// apart, or by a circular tube of radius a. The integer value enters the
/// governing equations as the curvature flag d.
enum class Geometry : int {
    parallel_plates = 0,
    circular_tube = 1,
};

inline constexpr int geometry_flag(Geometry g) { return static_cast<int>(g); }

/// Constant fluid properties, SI units.
struct FluidProperties {
    double k;    ///< thermal conductivity [W/(m K)]
    double rho;  ///< density [kg/m^3]
    double cp;   ///< heat capacity [J/(kg K)]
    double mu;   ///< dynamic viscosity [Pa s]
};

/// Thermal diffusivity k/(rho*cp) [m^2/s].
inline double thermal_diffusivity(const FluidProperties& f) { return f.k / (f.rho * f.cp); }

/// Wall held at a fixed temperature.
struct UniformWall {
    double t_wall;  ///< [K]
};

/// Thin wall exchanging heat with surroundings at t_inf through a film
/// coefficient h (Newton cooling). h = 0 is an insulated wall.
struct Exchange {
    double h;      ///< heat transfer coefficient [W/(m^2 K)]
    double t_inf;  ///< surrounding temperature [K]
};

using WallBC = std::variant<UniformWall, Exchange>;

/// Full problem definition for fully developed laminar flow entering a
/// channel at a uniform temperature.
struct ProblemSpec {
    Geometry geometry = Geometry::parallel_plates;
    double a = 1.0;   ///< half-gap (plates) or radius (tube) [m]
    double u0 = 0.0;  ///< centerline maximum velocity [m/s]
    FluidProperties fluid{1.0, 1.0, 1.0, 0.0};
    double t_inlet = 0.0;  ///< [K]
    WallBC bc = UniformWall{0.0};
};

/// Dimensionless groups (plus the two dimensional rates the solutions need).
/// lambda/alpha are populated only for the Exchange boundary.
struct DimensionlessGroups {
    double pe;                ///< Peclet number u0*a/D
    double ubar;              ///< mean velocity 2*u0/(3+d) [m/s]
    double dissipation_rate;  ///< viscous heating rate 4*mu*u0^2/(rho*cp*a^2) [K/s]
    std::optional<double> lambda;  ///< a*h/k
    std::optional<double> alpha;   ///< 1/(1 + lambda/(3+d))
};

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The quartic characteristic polynomial did not yield exactly two negative
/// real roots; invalid regime or root-finder failure.
struct RootStructureError : Error {
    using Error::Error;
};

/// The two decay constants collided; the confluent solution branch is not
/// implemented.
struct DegenerateRootsError : Error {
    using Error::Error;
};

/// A solver was handed the wrong wall boundary family.
struct BCMismatchError : Error {
    using Error::Error;
};

/// No steady state exists (insulated wall with nonzero viscous dissipation).
struct InvalidRegimeError : Error {
    using Error::Error;
};

/// Iterative solve did not reach tolerance; carries a sampled residual trace.
struct NonConvergenceError : Error {
    NonConvergenceError(const std::string& what, std::vector<double> history)
        : Error(what), residual_history(std::move(history)) {}
    std::vector<double> residual_history;
};

/// Requested more series terms than are tabulated.
struct NoMoreEigenvalues : std::out_of_range {
    using std::out_of_range::out_of_range;
};

}  // namespace graetzkit
