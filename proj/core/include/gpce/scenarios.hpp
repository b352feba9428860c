#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gpce/pce.hpp"

namespace gpce::scenarios {

/// Trivariate quadratic benchmark: y = 12 + 4 x1 + 4 x2 + 4 x3
///                                       + x1 x2 + x1 x3 + x2 x3,
/// unit variances, four correlation patterns (1 = none, 2 = equal 1/5,
/// 3 = positive mixed, 4 = sign-mixed).
Eigen::MatrixXd example1_covariance(int case_id);
SparsePolynomial example1_output();

/// Bivariate relaxation-ODE benchmark at time t: input standard deviations
/// are 1/4, so the covariance entries are 1/16 and rho/16.
GaussianMeasure example2_measure(double rho);
/// y(t; x) = (1 + x2)(1 - e^{-(1+x1) t}) as a polynomial + tilted-polynomial
/// sum, so both the exact and the sampling right-hand-side paths apply.
OutputFunction example2_output(double t);

/// Eleven-point discretization of a lognormal-thickness integral: exponential
/// covariance kernel on [0, 2] with correlation length 0.4 and variance
/// ln(1.04); output integrates c * exp(X_i) with trapezoid weights.
struct Example3 {
    Eigen::MatrixXd covariance;
    OutputFunction output;       ///< pointwise-evaluation form (for QMC builds)
    OutputFunction exact_output; ///< analytic exponential-sum form
};
Example3 example3_synthetic();

/// Resolve a builtin output name: "example1_case1".."example1_case4",
/// "example2(t,rho)", "example3_synthetic".  Returns covariance + output.
struct Builtin {
    Eigen::MatrixXd covariance;
    OutputFunction output;
};
Builtin builtin_output(const std::string& name);

/// Deterministic random SPD covariance used by the property sweeps.
Eigen::MatrixXd random_spd(int dimension, std::uint64_t seed);

/// One validation comparison: |got - expected| against an absolute-or-relative
/// tolerance, with a human-readable name.
struct CheckResult {
    std::string name;
    bool passed = false;
    double expected = 0.0;
    double got = 0.0;
    double tolerance = 0.0;
};

std::vector<CheckResult> validate_example1();
std::vector<CheckResult> validate_example2();
std::vector<CheckResult> validate_properties();

// the pieces of validate_properties, separately callable
std::vector<CheckResult> validate_second_moment_oracle();
std::vector<CheckResult> validate_independence_reduction();
std::vector<CheckResult> validate_gram_spd();

/// Variance errors e_m, m = 1..max_order, of the ODE benchmark at t = 1,
/// computed from the Pythagorean tail of the expansion (numerically stable
/// down to the 1e-11 scale of e_6).
std::vector<double> example2_variance_errors(double rho, int max_order);

} // namespace gpce::scenarios
