#include <doctest.h>

#include <cmath>

#include "hermitrig/functions.hpp"

using namespace hermitrig;

namespace {

// Central difference of the (m-1)-th derivative as an independent check on
// the order-m formulas.
double central_diff(const AnalyticFunction& fn, double t, int m, double h = 1e-5) {
    return (fn.deriv(t + h, m - 1) - fn.deriv(t - h, m - 1)) / (2.0 * h);
}

}  // namespace

TEST_CASE("builtin_functions: the three documented names resolve") {
    CHECK(find_function("exp_sin") != nullptr);
    CHECK(find_function("inv_two_plus_cos") != nullptr);
    CHECK(find_function("cos3_plus_sin") != nullptr);
    CHECK(find_function("no_such_function") == nullptr);
    CHECK(builtin_functions().size() == 3);
}

TEST_CASE("exp_sin: values and low-order derivatives") {
    const AnalyticFunction& fn = *find_function("exp_sin");
    CHECK(fn.deriv(0.0, 0) == doctest::Approx(1.0));
    CHECK(fn.deriv(0.0, 1) == doctest::Approx(1.0));  // cos(0) e^{sin 0}
    for (double t : {0.0, 0.7, 2.9, 5.5}) {
        CHECK(fn.deriv(t, 0) == doctest::Approx(std::exp(std::sin(t))).epsilon(1e-14));
        CHECK(fn.deriv(t, 1) ==
              doctest::Approx(std::cos(t) * std::exp(std::sin(t))).epsilon(1e-14));
    }
}

TEST_CASE("inv_two_plus_cos: values and low-order derivatives") {
    const AnalyticFunction& fn = *find_function("inv_two_plus_cos");
    CHECK(fn.deriv(0.0, 0) == doctest::Approx(1.0 / 3.0));
    CHECK(fn.deriv(0.0, 1) == doctest::Approx(0.0));
    CHECK(fn.deriv(0.0, 2) == doctest::Approx(1.0 / 9.0));
    for (double t : {0.4, 1.9, 4.2}) {
        CHECK(fn.deriv(t, 0) == doctest::Approx(1.0 / (2.0 + std::cos(t))).epsilon(1e-14));
        const double want = std::sin(t) / std::pow(2.0 + std::cos(t), 2);
        CHECK(fn.deriv(t, 1) == doctest::Approx(want).epsilon(1e-13));
    }
}

TEST_CASE("cos3_plus_sin: closed-form derivatives") {
    const AnalyticFunction& fn = *find_function("cos3_plus_sin");
    for (double t : {0.0, 0.9, 3.3}) {
        CHECK(fn.deriv(t, 0) == doctest::Approx(std::cos(3 * t) + std::sin(t)).epsilon(1e-14));
        CHECK(fn.deriv(t, 1) ==
              doctest::Approx(-3.0 * std::sin(3 * t) + std::cos(t)).epsilon(1e-14));
        CHECK(fn.deriv(t, 2) ==
              doctest::Approx(-9.0 * std::cos(3 * t) - std::sin(t)).epsilon(1e-13));
    }
}

TEST_CASE("builtin derivatives agree with central differences up to order 6") {
    for (const AnalyticFunction& fn : builtin_functions()) {
        for (int m = 1; m <= 6; ++m) {
            for (double t : {0.3, 1.1, 2.7, 4.9}) {
                double scale = std::max(1.0, std::abs(fn.deriv(t, m)));
                CHECK(std::abs(fn.deriv(t, m) - central_diff(fn, t, m)) <= 1e-6 * scale);
            }
        }
    }
}

TEST_CASE("sample_function: shapes and values") {
    const AnalyticFunction& fn = *find_function("exp_sin");
    const GridSpec grid = make_grid(1, 3);
    const HermiteSamples samples = sample_function(grid, 2, fn);
    REQUIRE(samples.rows.size() == 3);
    for (const auto& row : samples.rows) {
        CHECK(row.size() == static_cast<std::size_t>(grid.N));
    }
    CHECK(samples.rows[0][0] == doctest::Approx(fn.deriv(node_at(grid, 0), 0)));
    CHECK(samples.rows[2][4] == doctest::Approx(fn.deriv(node_at(grid, 4), 2)));
}
