#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <span>

#include <Eigen/Core>

#include "gpce/multi_index.hpp"
#include "gpce/polynomial.hpp"
#include "gpce/sobol.hpp"

namespace gpce {

/// Zero-mean Gaussian measure on R^N with a symmetric positive-definite
/// covariance.  Construction validates the matrix (symmetry, positive
/// pivots, condition estimate below 1e12) and caches the precision matrix,
/// the lower Cholesky factor, and the log-determinant.  Instances are
/// immutable and cheap to copy; copies share the moment memo table.
class GaussianMeasure {
public:
    static constexpr double kSymmetryTol = 1e-12;
    static constexpr double kIdentityTol = 1e-10;
    static constexpr double kConditionLimit = 1e12;

    explicit GaussianMeasure(Eigen::MatrixXd covariance);

    int dimension() const { return dimension_; }
    const Eigen::MatrixXd& covariance() const { return covariance_; }
    const Eigen::MatrixXd& precision() const { return precision_; }
    const Eigen::MatrixXd& chol_lower() const { return chol_lower_; }
    double log_det() const { return log_det_; }
    double condition_estimate() const { return condition_estimate_; }

    double log_density(std::span<const double> x) const;
    double density(std::span<const double> x) const;

    /// E[X^a] by the Stein recursion on the covariance entries; exact zero
    /// for odd total degree.  Memoized per measure (thread-safe).
    double monomial_moment(const MultiIndex& a) const;

    /// E[p(X)] by linearity over monomial moments.
    double expectation(const SparsePolynomial& p) const;

private:
    struct MomentCache;

    int dimension_;
    Eigen::MatrixXd covariance_;
    Eigen::MatrixXd precision_;
    Eigen::MatrixXd chol_lower_;
    double log_det_ = 0.0;
    double condition_estimate_ = 0.0;
    std::shared_ptr<MomentCache> cache_;
};

/// Componentwise probit then correlation: x = L Phi^{-1}(u).  Coordinates
/// must lie strictly inside (0,1).
Eigen::VectorXd gaussian_map(const GaussianMeasure& measure, std::span<const double> u);

/// Sobol points pushed through gaussian_map, one sample per row.
Eigen::MatrixXd sobol_gaussian_points(const GaussianMeasure& measure, const QmcConfig& config);

/// Reproducible N(0, Sigma) stream: a seeded 64-bit Mersenne Twister feeds
/// the inverse CDF, then the Cholesky factor correlates the coordinates.
/// The stream depends only on the seed, never on global state.
class GaussianSampler {
public:
    GaussianSampler(GaussianMeasure measure, std::uint64_t seed);

    Eigen::VectorXd next();

private:
    GaussianMeasure measure_;
    std::mt19937_64 engine_;
};

/// n reproducible draws, one per row.
Eigen::MatrixXd random_gaussian(const GaussianMeasure& measure, std::uint64_t seed, std::int64_t n);

/// Discretized exponential-kernel covariance: S_ij = variance * exp(-|c_i - c_j| / corr_length).
Eigen::MatrixXd exponential_field_covariance(std::span<const double> coords, double variance,
                                             double corr_length);

} // namespace gpce
