#include "graetzkit/series_ref.hpp"

#include <cmath>
#include <stdexcept>

#include "graetzkit/types.hpp"

namespace graetzkit {

const std::array<SeriesRow, 8>& graetz_plate_table() {
    // Shah & London, Laminar Flow Forced Convection in Ducts: first eight
    // eigenvalues and coefficients, parallel plates, constant wall temperature.
    static const std::array<SeriesRow, 8> table = {{
        {1.6816, 1.2005},
        {5.6699, -0.2991},
        {9.6683, 0.1608},
        {13.6677, -0.1074},
        {17.6674, 0.0796},
        {21.6672, -0.0628},
        {25.6671, 0.0512},
        {29.6670, -0.0483},
    }};
    return table;
}

double theta_series(double xi1, std::size_t n_terms) {
    if (!std::isfinite(xi1) || xi1 < 0.0) throw std::invalid_argument("xi1 must be >= 0");
    if (n_terms < 1) throw std::invalid_argument("n_terms must be >= 1");
    const auto& table = graetz_plate_table();
    if (n_terms > table.size())
        throw NoMoreEigenvalues("only 8 eigenmodes are tabulated");
    double theta = 0.0;
    for (std::size_t n = 0; n < n_terms; ++n)
        theta += table[n].a_n * std::exp(-table[n].lambda_n * table[n].lambda_n * xi1);
    return theta;
}

}  // namespace graetzkit
