#include "gpce/gaussian.hpp"

#include <cmath>
#include <mutex>
#include <string>
#include <unordered_map>

#include <Eigen/Cholesky>

#include "gpce/errors.hpp"
#include "gpce/normal.hpp"

namespace gpce {

struct GaussianMeasure::MomentCache {
    std::mutex mutex;
    std::unordered_map<MultiIndex, double, MultiIndexHash> values;
};

namespace {

// Largest-eigenvalue estimate by power iteration.  The start vector comes
// from a fixed-seed generator: structured starts (all ones, a unit vector)
// can sit inside an eigenspace of a structured matrix and stall there.
double spectral_norm_estimate(const Eigen::MatrixXd& m) {
    const int n = static_cast<int>(m.rows());
    std::mt19937_64 engine(0x9e3779b97f4a7c15ull);
    std::uniform_real_distribution<double> uniform(0.5, 1.5);
    Eigen::VectorXd v(n);
    for (int i = 0; i < n; ++i) {
        v(i) = uniform(engine);
    }
    v /= v.norm();
    double lambda = 0.0;
    for (int it = 0; it < 200; ++it) {
        Eigen::VectorXd w = m * v;
        const double norm = w.norm();
        if (norm == 0.0) {
            return 0.0;
        }
        w /= norm;
        const double next = std::abs(w.dot(m * w));
        if (it > 2 && std::abs(next - lambda) <= 1e-12 * std::abs(next)) {
            return next;
        }
        lambda = next;
        v = w;
    }
    return lambda;
}

} // namespace

GaussianMeasure::GaussianMeasure(Eigen::MatrixXd covariance)
    : dimension_(static_cast<int>(covariance.rows())), covariance_(std::move(covariance)) {
    if (dimension_ < 1 || covariance_.cols() != covariance_.rows()) {
        throw ShapeError("covariance must be a square matrix of dimension >= 1");
    }
    const double scale = covariance_.cwiseAbs().maxCoeff();
    for (int i = 0; i < dimension_; ++i) {
        for (int j = i + 1; j < dimension_; ++j) {
            if (std::abs(covariance_(i, j) - covariance_(j, i)) > kSymmetryTol * std::max(scale, 1.0)) {
                throw ShapeError("covariance is not symmetric at entry (" + std::to_string(i) +
                                 ", " + std::to_string(j) + ")");
            }
        }
    }

    Eigen::LLT<Eigen::MatrixXd> llt(covariance_);
    if (llt.info() != Eigen::Success) {
        throw DefinitenessError("covariance is not positive-definite (Cholesky pivot <= 0)");
    }
    chol_lower_ = llt.matrixL();
    log_det_ = 0.0;
    for (int i = 0; i < dimension_; ++i) {
        if (!(chol_lower_(i, i) > 0.0)) {
            throw DefinitenessError("covariance is not positive-definite (pivot " +
                                    std::to_string(i) + ")");
        }
        log_det_ += 2.0 * std::log(chol_lower_(i, i));
    }
    precision_ = llt.solve(Eigen::MatrixXd::Identity(dimension_, dimension_));
    precision_ = 0.5 * (precision_ + precision_.transpose().eval());

    condition_estimate_ = spectral_norm_estimate(covariance_) * spectral_norm_estimate(precision_);
    if (!(condition_estimate_ <= kConditionLimit)) {
        throw ConditioningError("covariance condition estimate " +
                                std::to_string(condition_estimate_) + " exceeds 1e12");
    }
    const double identity_gap =
        (precision_ * covariance_ - Eigen::MatrixXd::Identity(dimension_, dimension_))
            .cwiseAbs()
            .maxCoeff();
    if (identity_gap > kIdentityTol * condition_estimate_) {
        throw ConditioningError("precision * covariance deviates from identity by " +
                                std::to_string(identity_gap));
    }
    cache_ = std::make_shared<MomentCache>();
}

double GaussianMeasure::log_density(std::span<const double> x) const {
    if (static_cast<int>(x.size()) != dimension_) {
        throw DimensionError("density point length does not match measure dimension");
    }
    Eigen::Map<const Eigen::VectorXd> v(x.data(), dimension_);
    const double quad = v.dot(precision_ * v);
    return -0.5 * (dimension_ * std::log(2.0 * M_PI) + log_det_ + quad);
}

double GaussianMeasure::density(std::span<const double> x) const {
    return std::exp(log_density(x));
}

double GaussianMeasure::monomial_moment(const MultiIndex& a) const {
    if (a.size() != dimension_) {
        throw DimensionError("moment index length does not match measure dimension");
    }
    if (a.degree() == 0) {
        return 1.0;
    }
    if (a.degree() % 2 == 1) {
        return 0.0;
    }
    {
        std::lock_guard<std::mutex> lock(cache_->mutex);
        auto it = cache_->values.find(a);
        if (it != cache_->values.end()) {
            return it->second;
        }
    }
    // Stein recursion: E[X^a] = sum_k Sigma_ik (a - e_i)_k E[X^{a - e_i - e_k}]
    int axis = 0;
    while (a[axis] == 0) {
        ++axis;
    }
    const MultiIndex rest = a.bumped(axis, -1);
    double total = 0.0;
    for (int k = 0; k < dimension_; ++k) {
        if (rest[k] > 0 && covariance_(axis, k) != 0.0) {
            total += covariance_(axis, k) * rest[k] * monomial_moment(rest.bumped(k, -1));
        }
    }
    std::lock_guard<std::mutex> lock(cache_->mutex);
    cache_->values.emplace(a, total);
    return total;
}

double GaussianMeasure::expectation(const SparsePolynomial& p) const {
    if (p.dimension() != dimension_) {
        throw DimensionError("polynomial dimension does not match measure dimension");
    }
    double total = 0.0;
    for (const auto& [j, c] : p.terms()) {
        total += c * monomial_moment(j);
    }
    return total;
}

Eigen::VectorXd gaussian_map(const GaussianMeasure& measure, std::span<const double> u) {
    if (static_cast<int>(u.size()) != measure.dimension()) {
        throw DimensionError("uniform point length does not match measure dimension");
    }
    Eigen::VectorXd z(measure.dimension());
    for (int i = 0; i < measure.dimension(); ++i) {
        z(i) = inverse_normal_cdf(u[static_cast<std::size_t>(i)]);
    }
    return measure.chol_lower() * z;
}

Eigen::MatrixXd sobol_gaussian_points(const GaussianMeasure& measure, const QmcConfig& config) {
    QmcConfig cfg = config;
    cfg.dimension = measure.dimension();
    const Eigen::MatrixXd u = sobol_points(cfg);
    Eigen::MatrixXd x(u.rows(), u.cols());
    std::vector<double> row(static_cast<std::size_t>(measure.dimension()));
    for (Eigen::Index r = 0; r < u.rows(); ++r) {
        for (int d = 0; d < measure.dimension(); ++d) {
            row[static_cast<std::size_t>(d)] = u(r, d);
        }
        x.row(r) = gaussian_map(measure, row).transpose();
    }
    return x;
}

GaussianSampler::GaussianSampler(GaussianMeasure measure, std::uint64_t seed)
    : measure_(std::move(measure)), engine_(seed) {}

Eigen::VectorXd GaussianSampler::next() {
    Eigen::VectorXd z(measure_.dimension());
    constexpr double scale = 1.0 / 9007199254740992.0; // 2^-53
    for (int i = 0; i < measure_.dimension(); ++i) {
        // uniform strictly inside (0,1): 53 high bits plus a half ulp
        const double u = (static_cast<double>(engine_() >> 11) + 0.5) * scale;
        z(i) = inverse_normal_cdf(u);
    }
    return measure_.chol_lower() * z;
}

Eigen::MatrixXd random_gaussian(const GaussianMeasure& measure, std::uint64_t seed, std::int64_t n) {
    if (n < 1) {
        throw DomainError("sample count must be >= 1");
    }
    GaussianSampler sampler(measure, seed);
    Eigen::MatrixXd out(n, measure.dimension());
    for (std::int64_t i = 0; i < n; ++i) {
        out.row(i) = sampler.next().transpose();
    }
    return out;
}

Eigen::MatrixXd exponential_field_covariance(std::span<const double> coords, double variance,
                                             double corr_length) {
    if (!(corr_length > 0.0)) {
        throw DomainError("correlation length must be positive");
    }
    if (!(variance > 0.0)) {
        throw DomainError("variance must be positive");
    }
    const int n = static_cast<int>(coords.size());
    Eigen::MatrixXd s(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            s(i, j) = variance * std::exp(-std::abs(coords[static_cast<std::size_t>(i)] -
                                                    coords[static_cast<std::size_t>(j)]) /
                                          corr_length);
        }
    }
    return s;
}

} // namespace gpce
