#include <doctest.h>

#include <array>
#include <cmath>

#include "gpce/scenarios.hpp"

using namespace gpce;

TEST_CASE("builtin outputs resolve") {
    const scenarios::Builtin b1 = scenarios::builtin_output("example1_case3");
    CHECK(b1.covariance(1, 2) == doctest::Approx(0.8));
    CHECK(b1.output.is_polynomial());

    const scenarios::Builtin b2 = scenarios::builtin_output("example2(1,0.5)");
    CHECK(b2.covariance(0, 0) == doctest::Approx(1.0 / 16.0));
    CHECK(b2.covariance(0, 1) == doctest::Approx(0.5 / 16.0));
    CHECK(b2.output.exact_integrable());

    const scenarios::Builtin b3 = scenarios::builtin_output("example3_synthetic");
    CHECK(b3.covariance.rows() == 11);
    CHECK_FALSE(b3.output.exact_integrable());

    CHECK_THROWS_AS(scenarios::builtin_output("example1_case9"), Error);
    CHECK_THROWS_AS(scenarios::builtin_output("nonsense"), SchemaError);
}

TEST_CASE("synthetic field scenario wiring") {
    const scenarios::Example3 ex = scenarios::example3_synthetic();
    GaussianMeasure m(ex.covariance);
    // sampled and analytic forms agree pointwise
    std::array<double, 11> x{};
    for (int i = 0; i < 11; ++i) {
        x[static_cast<std::size_t>(i)] = 0.05 * i - 0.2;
    }
    CHECK(ex.output(x) == doctest::Approx(ex.exact_output(x)).epsilon(1e-13));
    // the trapezoid weights integrate the mean thickness exactly
    const HermiteBasis basis(m, 0);
    const Eigen::VectorXd b0 = rhs_exact(m, basis, ex.exact_output, 0);
    CHECK(b0(0) == doctest::Approx(0.02).epsilon(1e-12));
}

TEST_CASE("validation suites pass on a clean tree") {
    for (const auto& check : scenarios::validate_example1()) {
        INFO(check.name, ": expected ", check.expected, ", got ", check.got);
        CHECK(check.passed);
    }
    for (const auto& check : scenarios::validate_example2()) {
        INFO(check.name, ": expected ", check.expected, ", got ", check.got);
        CHECK(check.passed);
    }
    for (const auto& check : scenarios::validate_properties()) {
        INFO(check.name, ": expected ", check.expected, ", got ", check.got);
        CHECK(check.passed);
    }
}
