#include "gpce/pce.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gpce/errors.hpp"

namespace gpce {

OutputFunction OutputFunction::from_polynomial(SparsePolynomial p) {
    OutputFunction f(p.dimension());
    f.polynomial_ = std::move(p);
    return f;
}

OutputFunction OutputFunction::exponential_sum(int dimension, std::vector<ExpTerm> terms) {
    OutputFunction f(dimension);
    for (const ExpTerm& term : terms) {
        if (term.poly.dimension() != dimension ||
            static_cast<int>(term.exponent.size()) != dimension) {
            throw DimensionError("exponential-sum term dimension mismatch");
        }
    }
    f.exp_terms_ = std::move(terms);
    return f;
}

OutputFunction OutputFunction::from_callback(int dimension, Callback f, bool concurrent_safe) {
    if (dimension < 1) {
        throw DimensionError("output dimension must be >= 1");
    }
    OutputFunction out(dimension);
    out.callback_ = std::move(f);
    out.concurrent_safe_ = concurrent_safe;
    return out;
}

double OutputFunction::operator()(std::span<const double> x) const {
    if (static_cast<int>(x.size()) != dimension_) {
        throw DimensionError("output evaluation point length mismatch");
    }
    if (callback_) {
        return callback_(x);
    }
    double total = polynomial_ ? polynomial_->evaluate(x) : 0.0;
    for (const ExpTerm& term : exp_terms_) {
        double dot = 0.0;
        for (int i = 0; i < dimension_; ++i) {
            dot += term.exponent[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(i)];
        }
        total += term.poly.evaluate(x) * std::exp(dot);
    }
    return total;
}

namespace {

// E[q(X) exp(a . X)] = exp(a' Sigma a / 2) E[q(X + Sigma a)]
double tilted_expectation(const GaussianMeasure& measure, const SparsePolynomial& q,
                          std::span<const double> exponent) {
    const int n = measure.dimension();
    Eigen::Map<const Eigen::VectorXd> a(exponent.data(), n);
    const Eigen::VectorXd shift = measure.covariance() * a;
    const double gain = 0.5 * a.dot(shift);
    std::vector<double> offset(shift.data(), shift.data() + n);
    return std::exp(gain) * measure.expectation(q.shifted(offset));
}

} // namespace

Eigen::VectorXd rhs_exact(const GaussianMeasure& measure, const HermiteBasis& basis,
                          const OutputFunction& y, int degree) {
    if (!y.exact_integrable()) {
        throw DomainError("exact right-hand sides require a polynomial or exponential-sum output");
    }
    if (y.dimension() != measure.dimension()) {
        throw DimensionError("output dimension does not match measure dimension");
    }
    const auto& level = basis.degree(degree);
    Eigen::VectorXd b(static_cast<Eigen::Index>(level.size()));
    for (std::size_t p = 0; p < level.size(); ++p) {
        double value = 0.0;
        if (y.polynomial()) {
            value += measure.expectation(*y.polynomial() * level[p].psi);
        }
        for (const OutputFunction::ExpTerm& term : y.exp_terms()) {
            value += tilted_expectation(measure, term.poly * level[p].psi, term.exponent);
        }
        b(static_cast<Eigen::Index>(p)) = value;
    }
    return b;
}

Eigen::VectorXd rhs_qmc_from_samples(const HermiteBasis& basis, int degree,
                                     const Eigen::MatrixXd& points, const Eigen::VectorXd& values) {
    const auto& level = basis.degree(degree);
    const Eigen::Index count = points.rows();
    if (values.size() != count) {
        throw DimensionError("sample values do not match sample points");
    }
    Eigen::VectorXd b = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(level.size()));
    std::vector<double> x(static_cast<std::size_t>(points.cols()));
    for (Eigen::Index k = 0; k < count; ++k) {
        for (Eigen::Index d = 0; d < points.cols(); ++d) {
            x[static_cast<std::size_t>(d)] = points(k, d);
        }
        for (std::size_t p = 0; p < level.size(); ++p) {
            b(static_cast<Eigen::Index>(p)) += values(k) * level[p].psi.evaluate(x);
        }
    }
    return b / static_cast<double>(count);
}

namespace {

Eigen::VectorXd evaluate_outputs(const OutputFunction& y, const Eigen::MatrixXd& points) {
    Eigen::VectorXd values(points.rows());
    std::vector<double> x(static_cast<std::size_t>(points.cols()));
    for (Eigen::Index k = 0; k < points.rows(); ++k) {
        for (Eigen::Index d = 0; d < points.cols(); ++d) {
            x[static_cast<std::size_t>(d)] = points(k, d);
        }
        const double v = y(x);
        if (!std::isfinite(v)) {
            throw EvaluationError("output function returned a non-finite value at sample " +
                                  std::to_string(k));
        }
        values(k) = v;
    }
    return values;
}

} // namespace

Eigen::VectorXd rhs_qmc(const GaussianMeasure& measure, const HermiteBasis& basis,
                        const OutputFunction& y, int degree, const QmcConfig& config) {
    if (y.dimension() != measure.dimension()) {
        throw DimensionError("output dimension does not match measure dimension");
    }
    const Eigen::MatrixXd points = sobol_gaussian_points(measure, config);
    const Eigen::VectorXd values = evaluate_outputs(y, points);
    return rhs_qmc_from_samples(basis, degree, points, values);
}

DegreeSolve solve_degree(const GramMatrix& gram, const Eigen::VectorXd& rhs) {
    DegreeSolve out;
    out.coefficients = gram.solve(rhs);
    out.residual = (gram.entries() * out.coefficients - rhs).cwiseAbs().maxCoeff();
    const double gate = PceModel::kResidualTol * (1.0 + rhs.cwiseAbs().maxCoeff());
    if (!(out.residual <= gate)) {
        throw ConditioningError("degree-" + std::to_string(gram.degree()) + " solve residual " +
                                std::to_string(out.residual) + " exceeds tolerance " +
                                std::to_string(gate));
    }
    return out;
}

PceModel::PceModel(GaussianMeasure measure, HermiteBasis basis, std::vector<double> coefficients,
                   std::vector<GramMatrix> grams, BuildMeta meta)
    : measure_(std::move(measure)),
      basis_(std::move(basis)),
      coefficients_(std::move(coefficients)),
      grams_(std::move(grams)),
      meta_(std::move(meta)) {
    const std::int64_t expected = count_total(measure_.dimension(), basis_.max_degree());
    if (static_cast<std::int64_t>(coefficients_.size()) != expected) {
        throw ConsistencyError("coefficient count " + std::to_string(coefficients_.size()) +
                               " does not equal " + std::to_string(expected));
    }
    if (static_cast<int>(grams_.size()) != basis_.max_degree() + 1) {
        throw ConsistencyError("one Gram matrix per degree is required");
    }
}

double PceModel::coefficient(const MultiIndex& j) const {
    if (j.size() != dimension()) {
        throw DimensionError("coefficient index length does not match model dimension");
    }
    if (j.degree() > order()) {
        return 0.0;
    }
    std::size_t offset = 0;
    for (int l = 0; l < j.degree(); ++l) {
        offset += static_cast<std::size_t>(count_degree(dimension(), l));
    }
    const auto& level = basis_.degree(j.degree());
    for (std::size_t p = 0; p < level.size(); ++p) {
        if (level[p].index == j) {
            return coefficients_[offset + p];
        }
    }
    throw ConsistencyError("rank order lookup failed");
}

double PceModel::mean() const {
    return coefficients_.front();
}

MomentReport PceModel::moments() const {
    MomentReport report;
    report.mean = mean();
    std::size_t offset = 1;
    for (int l = 1; l <= order(); ++l) {
        const GramMatrix& gram = grams_[static_cast<std::size_t>(l)];
        const Eigen::Index k = gram.entries().rows();
        Eigen::Map<const Eigen::VectorXd> c(coefficients_.data() + offset, k);
        // degree quantum c' A c covers both the square and the cross terms
        report.degree_contributions.push_back(c.dot(gram.entries() * c));
        offset += static_cast<std::size_t>(k);
    }
    report.variance = 0.0;
    for (double q : report.degree_contributions) {
        report.variance += q;
    }
    return report;
}

double PceModel::evaluate(std::span<const double> x) const {
    if (static_cast<int>(x.size()) != dimension()) {
        throw DimensionError("surrogate evaluation point length mismatch");
    }
    double total = 0.0;
    std::size_t offset = 0;
    for (int l = 0; l <= order(); ++l) {
        for (const auto& entry : basis_.degree(l)) {
            total += coefficients_[offset++] * entry.psi.evaluate(x);
        }
    }
    return total;
}

SparsePolynomial PceModel::expanded() const {
    SparsePolynomial sum(dimension());
    std::size_t offset = 0;
    for (int l = 0; l <= order(); ++l) {
        for (const auto& entry : basis_.degree(l)) {
            sum += entry.psi * coefficients_[offset++];
        }
    }
    return sum;
}

PceModel build_pce(const GaussianMeasure& measure, const OutputFunction& y, int order,
                   RhsMethod method, const QmcConfig& qmc) {
    if (order < 0) {
        throw DomainError("expansion order must be >= 0");
    }
    if (y.dimension() != measure.dimension()) {
        throw DimensionError("output dimension does not match measure dimension");
    }
    if (method == RhsMethod::exact && !y.exact_integrable()) {
        throw DomainError("the exact build path needs a polynomial or exponential-sum output");
    }

    HermiteBasis basis(measure, order);

    // one shared point set across every degree of the build
    Eigen::MatrixXd points;
    Eigen::VectorXd values;
    BuildMeta meta;
    meta.method = method;
    if (method == RhsMethod::qmc) {
        if (qmc.sample_count < 1) {
            throw DomainError("QMC build requested without a sample count");
        }
        QmcConfig config = qmc;
        config.dimension = measure.dimension();
        points = sobol_gaussian_points(measure, config);
        values = evaluate_outputs(y, points);
        meta.qmc_size = config.sample_count;
        meta.qmc_skip = config.skip;
    }

    std::vector<double> coefficients;
    coefficients.reserve(static_cast<std::size_t>(count_total(measure.dimension(), order)));
    std::vector<GramMatrix> grams;
    grams.reserve(static_cast<std::size_t>(order) + 1);
    for (int l = 0; l <= order; ++l) {
        grams.emplace_back(measure, l);
        Eigen::VectorXd b;
        try {
            b = (method == RhsMethod::exact)
                    ? rhs_exact(measure, basis, y, l)
                    : rhs_qmc_from_samples(basis, l, points, values);
            const DegreeSolve solved = solve_degree(grams.back(), b);
            meta.residuals.push_back(solved.residual);
            for (Eigen::Index i = 0; i < solved.coefficients.size(); ++i) {
                coefficients.push_back(solved.coefficients(i));
            }
        } catch (const Error& e) {
            throw ConditioningError("build failed at degree " + std::to_string(l) + ": " +
                                    e.what());
        }
    }
    return PceModel(measure, std::move(basis), std::move(coefficients), std::move(grams),
                    std::move(meta));
}

namespace {

Histogram freedman_diaconis(const std::vector<double>& values) {
    constexpr int kMaxBins = 512;
    Histogram hist;
    std::vector<double> sorted = values;
    std::sort(sorted.begin(), sorted.end());
    const double lo = sorted.front();
    const double hi = sorted.back();
    const std::size_t n = sorted.size();
    const double q1 = sorted[(n - 1) / 4];
    const double q3 = sorted[(3 * (n - 1)) / 4];
    const double width = 2.0 * (q3 - q1) / std::cbrt(static_cast<double>(n));
    int bins = 1;
    if (width > 0.0 && hi > lo) {
        bins = static_cast<int>(std::ceil((hi - lo) / width));
        bins = std::clamp(bins, 1, kMaxBins);
    }
    const double span = hi > lo ? (hi - lo) : 1.0;
    hist.edges.resize(static_cast<std::size_t>(bins) + 1);
    for (int i = 0; i <= bins; ++i) {
        hist.edges[static_cast<std::size_t>(i)] = lo + span * static_cast<double>(i) / bins;
    }
    hist.counts.assign(static_cast<std::size_t>(bins), 0);
    for (double v : values) {
        int b = static_cast<int>((v - lo) / span * bins);
        b = std::clamp(b, 0, bins - 1);
        ++hist.counts[static_cast<std::size_t>(b)];
    }
    return hist;
}

} // namespace

SampleSummary sample_surrogate(const PceModel& model, std::int64_t n, std::uint64_t seed) {
    if (n < 1) {
        throw DomainError("sample count must be >= 1");
    }
    SampleSummary summary;
    summary.values.reserve(static_cast<std::size_t>(n));
    GaussianSampler sampler(model.measure(), seed);
    std::vector<double> x(static_cast<std::size_t>(model.dimension()));
    for (std::int64_t i = 0; i < n; ++i) {
        const Eigen::VectorXd point = sampler.next();
        for (int d = 0; d < model.dimension(); ++d) {
            x[static_cast<std::size_t>(d)] = point(d);
        }
        summary.values.push_back(model.evaluate(x));
    }
    summary.histogram = freedman_diaconis(summary.values);
    return summary;
}

double l1_variance_error(double exact_variance, const PceModel& model) {
    if (!(exact_variance > 0.0)) {
        throw DomainError("exact variance must be positive");
    }
    return std::abs(exact_variance - model.moments().variance) / exact_variance;
}

double ode_solution(double t, std::span<const double> x) {
    if (!(t >= 0.0 && t <= 1.0)) {
        throw DomainError("time must lie in [0, 1]");
    }
    if (x.size() != 2) {
        throw DimensionError("the ODE benchmark takes a two-dimensional input");
    }
    return (1.0 + x[1]) * (1.0 - std::exp(-(1.0 + x[0]) * t));
}

RawMoments ode_exact_moments(double t, double rho) {
    if (!(t >= 0.0 && t <= 1.0)) {
        throw DomainError("time must lie in [0, 1]");
    }
    if (!(rho > -1.0 && rho < 1.0)) {
        throw DomainError("correlation must lie strictly inside (-1, 1)");
    }
    RawMoments m;
    m.mean = 1.0 + (rho * t / 16.0 - 1.0) * std::exp(t * t / 32.0 - t);
    // the exp(-2t) factor is distributed over the bracket to keep the
    // intermediates O(100); the subtraction happens at full precision
    m.second = (136.0 - std::exp(-t + t * t / 32.0) * (272.0 + rho * t * (rho * t - 32.0)) +
                2.0 * std::exp(-2.0 * t + t * t / 8.0) * (68.0 + rho * t * (rho * t - 16.0))) /
               128.0;
    return m;
}

} // namespace gpce
