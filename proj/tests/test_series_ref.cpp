#include <doctest.h>

#include <cmath>

#include "graetzkit/series_ref.hpp"
#include "graetzkit/types.hpp"

using namespace graetzkit;

TEST_CASE("table shape: eight rows, increasing eigenvalues, alternating signs") {
    const auto& t = graetz_plate_table();
    REQUIRE(t.size() == 8);
    for (std::size_t n = 0; n < t.size(); ++n) {
        if (n > 0) CHECK(t[n].lambda_n > t[n - 1].lambda_n);
        const double expect_sign = (n % 2 == 0) ? 1.0 : -1.0;
        CHECK(t[n].a_n * expect_sign > 0.0);
    }
}

TEST_CASE("frozen reference values") {
    // independently evaluated from the tabulated constants at high precision
    CHECK(theta_series(0.0, 8) == doctest::Approx(0.9745).epsilon(1e-12));
    CHECK(theta_series(1.0, 1) == doctest::Approx(0.071002483525454360).epsilon(1e-13));
    CHECK(theta_series(0.1, 8) == doctest::Approx(0.89280235222911801).epsilon(1e-13));
    CHECK(theta_series(0.05, 8) == doctest::Approx(0.98376518461545975).epsilon(1e-13));
}

TEST_CASE("argument errors") {
    CHECK_THROWS_AS(theta_series(0.1, 9), NoMoreEigenvalues);
    CHECK_THROWS_AS(theta_series(0.1, 0), std::invalid_argument);
    CHECK_THROWS_AS(theta_series(-0.1, 8), std::invalid_argument);
}

TEST_CASE("strictly decreasing past the truncation-oscillation zone") {
    double prev = theta_series(0.02, 8);
    for (double x1 = 0.022; x1 <= 2.0 + 1e-12; x1 += 0.002) {
        const double v = theta_series(x1, 8);
        CHECK(v < prev);
        prev = v;
    }
}

TEST_CASE("bounded on [0, 2] with only a small truncation overshoot") {
    for (double x1 = 0.0; x1 <= 2.0 + 1e-12; x1 += 0.002) {
        const double v = theta_series(x1, 8);
        CHECK(v > 0.0);
        CHECK(v <= 1.01);
    }
}

TEST_CASE("higher modes are fully decayed by xi1 = 0.45") {
    // the n=1 mode decays as 0.2991*exp(-32.148*xi1); at xi1 = 0.3 the gap is
    // still ~1.9e-5, so the 1e-6 property is checked from 0.45 on
    for (double x1 : {0.45, 0.5, 0.7, 1.0, 2.0})
        CHECK(std::abs(theta_series(x1, 8) - theta_series(x1, 1)) <= 1e-6);
    CHECK(std::abs(theta_series(0.3, 8) - theta_series(0.3, 1)) ==
          doctest::Approx(1.9379260272901368e-5).epsilon(1e-9));
}
