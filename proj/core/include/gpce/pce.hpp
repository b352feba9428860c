#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "gpce/gaussian.hpp"
#include "gpce/hermite.hpp"
#include "gpce/moments.hpp"
#include "gpce/polynomial.hpp"

namespace gpce {

/// Square-integrable output y(X).  Three representations:
///  - an explicit polynomial (analytic right-hand sides),
///  - a sum of polynomial * exp(a . x) terms (still analytic, via the
///    Gaussian tilt identity),
///  - an opaque evaluation callback (sampling-based right-hand sides only).
/// Every representation can be evaluated pointwise.
class OutputFunction {
public:
    using Callback = std::function<double(std::span<const double>)>;

    struct ExpTerm {
        SparsePolynomial poly;
        std::vector<double> exponent;
    };

    static OutputFunction from_polynomial(SparsePolynomial p);
    static OutputFunction exponential_sum(int dimension, std::vector<ExpTerm> terms);
    static OutputFunction from_callback(int dimension, Callback f, bool concurrent_safe = true);

    int dimension() const { return dimension_; }
    /// True when exact (analytic) right-hand sides are available.
    bool exact_integrable() const { return !callback_; }
    bool is_polynomial() const { return polynomial_.has_value() && exp_terms_.empty(); }
    bool concurrent_safe() const { return concurrent_safe_; }
    const std::optional<SparsePolynomial>& polynomial() const { return polynomial_; }
    const std::vector<ExpTerm>& exp_terms() const { return exp_terms_; }

    double operator()(std::span<const double> x) const;

private:
    explicit OutputFunction(int dimension) : dimension_(dimension) {}

    int dimension_;
    std::optional<SparsePolynomial> polynomial_;
    std::vector<ExpTerm> exp_terms_;
    Callback callback_;
    bool concurrent_safe_ = true;
};

/// How the coefficient right-hand sides are estimated.
enum class RhsMethod { exact, qmc };

struct BuildMeta {
    RhsMethod method = RhsMethod::exact;
    std::int64_t qmc_size = 0;
    std::int64_t qmc_skip = 0;
    std::vector<double> residuals; ///< per-degree solve residuals (inf norm)
};

/// Exact right-hand side b_l with entries E[y Psi_j], |j| = l, rank order.
/// Requires an exactly integrable output.
Eigen::VectorXd rhs_exact(const GaussianMeasure& measure, const HermiteBasis& basis,
                          const OutputFunction& y, int degree);

/// QMC estimate of b_l from Sobol points mapped to the Gaussian measure.
/// The overload taking precomputed samples lets one point set serve every
/// degree of a build.
Eigen::VectorXd rhs_qmc(const GaussianMeasure& measure, const HermiteBasis& basis,
                        const OutputFunction& y, int degree, const QmcConfig& config);
Eigen::VectorXd rhs_qmc_from_samples(const HermiteBasis& basis, int degree,
                                     const Eigen::MatrixXd& points,
                                     const Eigen::VectorXd& values);

struct DegreeSolve {
    Eigen::VectorXd coefficients;
    double residual = 0.0;
};

/// Solve A_l c_l = b_l through the Gram factorization; the residual
/// ||A c - b||_inf is reported and checked against 1e-8 * (1 + ||b||_inf).
DegreeSolve solve_degree(const GramMatrix& gram, const Eigen::VectorXd& rhs);

struct MomentReport {
    double mean = 0.0;
    double variance = 0.0;
    std::vector<double> degree_contributions; ///< one entry per degree 1..m
};

struct Histogram {
    std::vector<double> edges;       ///< size bins + 1
    std::vector<std::int64_t> counts;
};

struct SampleSummary {
    std::vector<double> values;
    Histogram histogram;
};

/// Truncated expansion: coefficients C_j in rank order across degrees
/// 0..order, the basis that defines them, and enough cached structure to
/// produce statistics and samples.
class PceModel {
public:
    static constexpr double kResidualTol = 1e-8;

    PceModel(GaussianMeasure measure, HermiteBasis basis, std::vector<double> coefficients,
             std::vector<GramMatrix> grams, BuildMeta meta);

    const GaussianMeasure& measure() const { return measure_; }
    const HermiteBasis& basis() const { return basis_; }
    int order() const { return basis_.max_degree(); }
    int dimension() const { return measure_.dimension(); }
    const std::vector<double>& coefficients() const { return coefficients_; }
    const std::vector<GramMatrix>& grams() const { return grams_; }
    const BuildMeta& meta() const { return meta_; }
    /// Coefficient C_j (zero if |j| > order).
    double coefficient(const MultiIndex& j) const;

    double mean() const;
    MomentReport moments() const;

    /// Surrogate value sum_j C_j Psi_j(x).
    double evaluate(std::span<const double> x) const;

    /// The surrogate expanded into one polynomial (term-by-term sum).
    SparsePolynomial expanded() const;

private:
    GaussianMeasure measure_;
    HermiteBasis basis_;
    std::vector<double> coefficients_;
    std::vector<GramMatrix> grams_;
    BuildMeta meta_;
};

/// Algorithm start to finish: basis, per-degree Gram and right-hand side,
/// independent degree solves, coefficients in rank order.
PceModel build_pce(const GaussianMeasure& measure, const OutputFunction& y, int order,
                   RhsMethod method, const QmcConfig& qmc = {});

/// Evaluate the surrogate on a reproducible Gaussian sample and summarize
/// with a Freedman-Diaconis histogram (bin count capped at 512).
SampleSummary sample_surrogate(const PceModel& model, std::int64_t n, std::uint64_t seed);

/// Relative L1 variance error |exact - model| / exact.
double l1_variance_error(double exact_variance, const PceModel& model);

/// Closed-form solution of the relaxation ODE benchmark:
/// y(t; x) = (1 + x2) (1 - exp(-(1 + x1) t)).
double ode_solution(double t, std::span<const double> x);

struct RawMoments {
    double mean = 0.0;
    double second = 0.0;

    double variance() const { return second - mean * mean; }
};

/// First two raw moments of the ODE benchmark output at time t for
/// correlation rho (input standard deviations fixed at 1/4).
RawMoments ode_exact_moments(double t, double rho);

} // namespace gpce
