#include "graetzkit/exchange_rbf.hpp"

#include <cmath>

#include "graetzkit/charpoly.hpp"

namespace graetzkit {

namespace {

void check_point(double x, double r, double a) {
    if (!std::isfinite(x) || x < 0.0) throw std::invalid_argument("x must be >= 0");
    if (!std::isfinite(r) || r < 0.0 || r > a) throw std::invalid_argument("r must lie in [0, a]");
}

}  // namespace

double ExchangeSolution::wall_temperature(double x) const {
    return amp * std::exp(-beta1 * (x / a)) + t_far;
}

double ExchangeSolution::wall_gradient(double x) const {
    return (h / k) * (t_inf - wall_temperature(x));
}

ExchangeSolution solve_exchange_order4(const ProblemSpec& spec) {
    const auto* bc = std::get_if<Exchange>(&spec.bc);
    if (!bc) throw BCMismatchError("exchange solver called with a UniformWall boundary");
    const auto groups = dimensionless(spec);
    const int d = geometry_flag(spec.geometry);

    ExchangeSolution sol{};
    sol.d = d;
    sol.a = spec.a;
    sol.diffusivity = thermal_diffusivity(spec.fluid);
    sol.u0 = spec.u0;
    sol.pe = groups.pe;
    sol.dissipation_rate = groups.dissipation_rate;
    sol.t_inlet = spec.t_inlet;
    sol.t_inf = bc->t_inf;
    sol.h = bc->h;
    sol.k = spec.fluid.k;
    sol.lambda = *groups.lambda;
    sol.alpha = *groups.alpha;
    sol.v_adv = sol.alpha * groups.ubar;

    if (sol.lambda == 0.0) {
        if (groups.dissipation_rate > 0.0)
            throw InvalidRegimeError(
                "insulated wall with viscous dissipation: generated heat has no sink, no steady "
                "state exists");
        sol.beta1 = 0.0;
        sol.t_far = spec.t_inlet;
        sol.amp = 0.0;
        return sol;
    }

    const ThetaScale ts = theta_scale(spec);
    const double g = groups.dissipation_rate * spec.a * spec.a / (sol.diffusivity * ts.scale);
    const double offset_theta = g * sol.alpha / ((1.0 - sol.alpha) * (3.0 + d) * (3.0 + d));
    sol.beta1 = beta1_exchange(groups.pe, sol.alpha, d);
    sol.t_far = ts.to_kelvin(offset_theta);
    sol.amp = ts.scale * (ts.to_theta(spec.t_inlet) - offset_theta);
    return sol;
}

double second_wall_derivative(const ExchangeSolution& sol, double x) {
    const double a = sol.a;
    const double xi = x / a;
    const double decay = std::exp(-sol.beta1 * xi);
    const double ta_x = -sol.amp * sol.beta1 / a * decay;
    const double ta_xx = sol.amp * sol.beta1 * sol.beta1 / (a * a) * decay;
    const double src = sol.dissipation_rate / sol.diffusivity;  // A/D
    const double t1a = sol.wall_gradient(x);
    return t1a / a -
           (2.0 * src - sol.lambda * ta_xx + 2.0 * sol.u0 / sol.diffusivity * ta_x) / (sol.d + 3.0);
}

double third_wall_derivative(const ExchangeSolution& sol, double x) {
    const double a = sol.a;
    const double xi = x / a;
    const double decay = std::exp(-sol.beta1 * xi);
    const double ta_x = -sol.amp * sol.beta1 / a * decay;
    const double ta_xx = sol.amp * sol.beta1 * sol.beta1 / (a * a) * decay;
    const double src = sol.dissipation_rate / sol.diffusivity;
    return -(6.0 * src / a - 3.0 * (sol.lambda / a) * ta_xx +
             6.0 * sol.u0 / (sol.diffusivity * a) * ta_x) /
           (sol.d + 3.0);
}

std::array<double, 2> radial_moments(const ExchangeSolution& sol, double x) {
    const double a = sol.a;
    const double t1a = sol.wall_gradient(x);
    const double t2a = second_wall_derivative(sol, x);
    const double t20 = 1.5 / a * t1a - 0.5 * t2a;
    const double t40 = -3.0 / (a * a * a) * t1a + 3.0 / (a * a) * t2a;
    return {t20, t40};
}

double reconstruct_field_exchange(const ExchangeSolution& sol, double x, double r) {
    check_point(x, r, sol.a);
    const auto m = radial_moments(sol, x);
    const double a2 = sol.a * sol.a;
    const double t0 = sol.wall_temperature(x) - 0.5 * a2 * m[0] - a2 * a2 / 24.0 * m[1];
    const double r2 = r * r;
    return t0 + 0.5 * r2 * m[0] + r2 * r2 / 24.0 * m[1];
}

double centerline_exchange(const ExchangeSolution& sol, double x) {
    return reconstruct_field_exchange(sol, x, 0.0);
}

FieldSampler sampler(const ExchangeSolution& sol) {
    return FieldSampler(4,
                        [sol](double x, double r) { return reconstruct_field_exchange(sol, x, r); });
}

}  // namespace graetzkit
