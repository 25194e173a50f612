#pragma once

#include <array>
#include <functional>

#include "graetzkit/types.hpp"

namespace graetzkit {

/// Validate a ProblemSpec (finite values, positive properties, geometry flag,
/// h >= 0). Throws std::invalid_argument on violation.
void validate(const ProblemSpec& spec);

/// Derive all dimensionless groups for a valid spec.
DimensionlessGroups dimensionless(const ProblemSpec& spec);

/// Poiseuille profile u0*(1 - r^2/a^2). Rejects r outside [0, a].
double velocity(const ProblemSpec& spec, double r);

/// Affine map between kelvin and the internal dimensionless temperature
/// theta = (T - t_ref)/scale, with t_ref the wall (UniformWall) or
/// surrounding (Exchange) temperature and scale = t_inlet - t_ref.
/// Falls back to scale = 1 (plain kelvin offsets) when the inlet equals the
/// reference temperature.
struct ThetaScale {
    double t_ref;
    double scale;
    double to_theta(double t_kelvin) const { return (t_kelvin - t_ref) / scale; }
    double to_kelvin(double theta) const { return t_ref + scale * theta; }
};

ThetaScale theta_scale(const ProblemSpec& spec);

/// Reference wall boundary temperature: t_wall or t_inf.
double reference_temperature(const ProblemSpec& spec);

/// Evaluates a reconstructed temperature field T(x, r) for one of the
/// closed-form solutions. Construct via the sampler() factories of the
/// solution modules.
class FieldSampler {
  public:
    FieldSampler(int order, std::function<double(double, double)> eval)
        : order_(order), eval_(std::move(eval)) {}
    double operator()(double x, double r) const { return eval_(x, r); }
    int order() const { return order_; }

  private:
    int order_;
    std::function<double(double, double)> eval_;
};

namespace detail {

/// Solve a small dense system A*x = b in place (partial pivoting).
/// Throws Error if singular to working precision.
template <int N>
std::array<double, N> solve_dense(std::array<std::array<double, N>, N> A,
                                  std::array<double, N> b);

extern template std::array<double, 2> solve_dense<2>(std::array<std::array<double, 2>, 2>,
                                                     std::array<double, 2>);
extern template std::array<double, 3> solve_dense<3>(std::array<std::array<double, 3>, 3>,
                                                     std::array<double, 3>);

/// Horner evaluation, coefficients highest power first.
double polyval(const double* coeffs, int n, double x);
long double polyval(const long double* coeffs, int n, long double x);

}  // namespace detail

}  // namespace graetzkit
