#pragma once

#include "gpce/errors.hpp"

namespace gpce {

/// Standard normal cumulative distribution function.
double normal_cdf(double x);

/// Inverse of the standard normal CDF on (0, 1).  Rational initial guess
/// followed by one Halley refinement; absolute error below 1e-9 everywhere
/// (and near machine precision away from the extreme tails).  Throws
/// DomainError at or outside the interval endpoints.
double inverse_normal_cdf(double u);

} // namespace gpce
