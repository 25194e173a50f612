#include "graetzkit/charpoly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "graetzkit/core.hpp"

namespace graetzkit {

namespace {

void check_geometry(int d) {
    if (d != 0 && d != 1) throw std::invalid_argument("geometry flag must be 0 or 1");
}

// p(x) = P(-x) for the order-6 characteristic quartic P:
//   p(x) = x^4 + pe x^3 - (39+17d) x^2 - 11(3+d) pe x + 18(d+1)(5+3d)
// has exactly two sign changes, hence exactly two positive roots (the decay
// constants). At m = sqrt(11(3+d)) the pe terms cancel identically and
//   p(m) = 121(3+d)^2 - 11(3+d)(39+17d) + 18(d+1)(5+3d) = -108 (d=0), -240 (d=1),
// while p(2m) = [16m^4 - 4(39+17d)m^2 + c0] + 2 pe m [4m^2 - 11(3+d)] > 0 for
// every pe >= 0. So (0, m) and (m, 2m) bracket the roots for the whole sweep,
// with no seeding or conditioning concerns at extreme pe.
struct NegatedQuartic {
    long double c3, c2, c1, c0;  // p(x) = x^4 + c3 x^3 + c2 x^2 + c1 x + c0

    long double value(long double x) const { return (((x + c3) * x + c2) * x + c1) * x + c0; }
    long double slope(long double x) const {
        return ((4.0L * x + 3.0L * c3) * x + 2.0L * c2) * x + c1;
    }
};

double bracketed_root(const NegatedQuartic& p, long double lo, long double hi) {
    long double flo = p.value(lo);
    long double fhi = p.value(hi);
    if (!(flo * fhi < 0.0L)) {
        std::ostringstream msg;
        msg << "root bracket [" << static_cast<double>(lo) << ", " << static_cast<double>(hi)
            << "] lost its sign change";
        throw RootStructureError(msg.str());
    }
    long double x = 0.5L * (lo + hi);
    for (int it = 0; it < 200; ++it) {
        const long double f = p.value(x);
        if (f == 0.0L) break;
        if ((f > 0.0L) == (flo > 0.0L))
            lo = x;
        else
            hi = x;
        const long double df = p.slope(x);
        long double next = df != 0.0L ? x - f / df : 0.5L * (lo + hi);
        if (!(next > lo && next < hi)) next = 0.5L * (lo + hi);
        const long double step = next - x;
        x = next;
        if (std::abs(step) <= 1e-19L * std::max(std::abs(x), 1e-300L)) break;
    }
    return static_cast<double>(x);
}

}  // namespace

double beta1_wall_order4(double pe, int d) {
    check_geometry(d);
    if (!std::isfinite(pe) || pe < 0.0) throw std::invalid_argument("pe must be >= 0");
    const double kconst = 16.0 * (d + 1) * (d + 3) / (d + 5);
    if (pe == 0.0) return std::sqrt(kconst) / 2.0;
    const double q = kconst / (pe * pe);
    return 0.5 * pe * q / (std::sqrt(1.0 + q) + 1.0);
}

double beta1_exchange(double pe, double alpha, int d) {
    check_geometry(d);
    if (!std::isfinite(pe) || pe < 0.0) throw std::invalid_argument("pe must be >= 0");
    if (!std::isfinite(alpha) || alpha <= 0.0 || alpha > 1.0)
        throw std::invalid_argument("alpha must lie in (0, 1]");
    const double kconst = (1.0 - alpha) * (d + 1) * (d + 3);
    const double scaled = pe * alpha / (3.0 + d);
    if (scaled == 0.0) return std::sqrt(kconst);
    const double q = kconst / (scaled * scaled);  // = (1-a)(d+1)(d+3)^3/(alpha^2 pe^2)
    if (!std::isfinite(q)) return std::sqrt(kconst);
    return scaled * q / (std::sqrt(1.0 + q) + 1.0);
}

std::array<double, 5> wall_order6_coefficients(double pe, int d) {
    return {1.0, -pe, -(39.0 + 17.0 * d), 11.0 * (3.0 + d) * pe,
            18.0 * static_cast<double>((d + 1) * (5 + 3 * d))};
}

DecayConstants solve_quartic_wall_order6(double pe, int d) {
    check_geometry(d);
    if (!std::isfinite(pe) || pe < 0.0) throw std::invalid_argument("pe must be >= 0");
    const NegatedQuartic p{pe, -(39.0L + 17.0L * d), -11.0L * (3 + d) * pe,
                           18.0L * (d + 1) * (5 + 3 * d)};
    const long double m = std::sqrt(11.0L * (3 + d));
    const double beta1 = bracketed_root(p, 0.0L, m);
    const double beta2 = bracketed_root(p, m, 2.0L * m);
    return DecayConstants{beta1, beta2};
}

double wall_order4_quadratic_residual(double beta, double pe, int d) {
    const double kconst = 4.0 * (d + 1) * (d + 3) / (d + 5);
    const double res = beta * beta + pe * beta - kconst;
    const double scale = std::max({beta * beta, pe * beta, kconst});
    return scale > 0.0 ? res / scale : res;
}

double exchange_quadratic_residual(double beta, double pe, double alpha, int d) {
    const double kconst = (1.0 - alpha) * (d + 1) * (d + 3);
    const double lin = 2.0 * alpha * pe / (3.0 + d);
    const double res = beta * beta + lin * beta - kconst;
    const double scale = std::max({beta * beta, lin * beta, kconst});
    return scale > 0.0 ? res / scale : res;
}

double wall_order6_residual(double beta, double pe, int d) {
    const auto c = wall_order6_coefficients(pe, d);
    const double p = detail::polyval(c.data(), 5, -beta);
    double cmax = 0.0;
    for (double v : c) cmax = std::max(cmax, std::abs(v));
    const double s = std::max(1.0, std::abs(beta));
    return p / (cmax * s * s * s * s);
}

double asymptote(Asymptote kind, double pe, double alpha, int d) {
    check_geometry(d);
    switch (kind) {
        case Asymptote::wall_o4_high_pe:
            if (pe <= 0.0) throw std::invalid_argument("pe must be positive for this limit");
            return 4.0 * (d + 1) * (d + 3) / ((d + 5) * pe);
        case Asymptote::wall_o6_beta2_high_pe:
            return std::sqrt(11.0 * (3.0 + d));
        case Asymptote::exchange_advective:
            if (pe <= 0.0 || alpha <= 0.0) throw std::invalid_argument("pe and alpha must be positive");
            return (1.0 - alpha) * (d + 1) * (d + 3) * (d + 3) / (2.0 * alpha * pe);
        case Asymptote::exchange_dominated:
            if (alpha < 0.0 || alpha > 1.0) throw std::invalid_argument("alpha must lie in [0, 1]");
            return std::sqrt((1.0 - alpha) * (d + 1) * (d + 3));
    }
    throw std::invalid_argument("unknown asymptote");
}

}  // namespace graetzkit
