#include "gpce/moments.hpp"

#include <cmath>
#include <string>

#include "gpce/errors.hpp"

namespace gpce {

double second_moment_h(const GaussianMeasure& measure, const MultiIndex& j, const MultiIndex& k) {
    if (j.size() != measure.dimension() || k.size() != measure.dimension()) {
        throw DimensionError("moment index length does not match measure dimension");
    }
    if (j.degree() != k.degree()) {
        return 0.0;
    }
    const Eigen::MatrixXd& prec = measure.precision();
    const int n = j.size();
    double sum = 0.0;
    for (const IndexMatrix& theta : enumerate_margin_matrices(j, k)) {
        double term = 1.0;
        for (int p = 0; p < n; ++p) {
            for (int q = 0; q < n; ++q) {
                for (int e = 0; e < theta.at(p, q); ++e) {
                    term *= prec(p, q);
                }
            }
        }
        sum += term / static_cast<double>(matrix_factorial(theta));
    }
    return static_cast<double>(multi_factorial(j)) * static_cast<double>(multi_factorial(k)) * sum;
}

double norm_sq_h(const GaussianMeasure& measure, const MultiIndex& j) {
    const double value = second_moment_h(measure, j, j);
    if (!(value > 0.0)) {
        throw ConsistencyError("norm of H_j came out nonpositive; margin enumeration is broken");
    }
    return value;
}

double second_moment_psi(const GaussianMeasure& measure, const MultiIndex& j, const MultiIndex& k) {
    if (j.degree() != k.degree()) {
        return 0.0;
    }
    if (j == k) {
        return 1.0;
    }
    return second_moment_h(measure, j, k) /
           std::sqrt(norm_sq_h(measure, j) * norm_sq_h(measure, k));
}

GramMatrix::GramMatrix(const GaussianMeasure& measure, int degree)
    : degree_(degree), index_map_(enumerate_degree(measure.dimension(), degree)) {
    const int order = static_cast<int>(index_map_.size());
    std::vector<double> norms(static_cast<std::size_t>(order));
    for (int p = 0; p < order; ++p) {
        norms[static_cast<std::size_t>(p)] = norm_sq_h(measure, index_map_[static_cast<std::size_t>(p)]);
    }
    entries_.resize(order, order);
    for (int p = 0; p < order; ++p) {
        entries_(p, p) = 1.0;
        for (int q = p + 1; q < order; ++q) {
            const double value =
                second_moment_h(measure, index_map_[static_cast<std::size_t>(p)],
                                index_map_[static_cast<std::size_t>(q)]) /
                std::sqrt(norms[static_cast<std::size_t>(p)] * norms[static_cast<std::size_t>(q)]);
            entries_(p, q) = value;
            entries_(q, p) = value;
        }
    }
    llt_.compute(entries_);
    if (llt_.info() != Eigen::Success) {
        throw ConditioningError("Gram matrix of degree " + std::to_string(degree) +
                                " failed its Cholesky factorization");
    }
}

Eigen::VectorXd GramMatrix::solve(const Eigen::VectorXd& rhs) const {
    if (rhs.size() != entries_.rows()) {
        throw DimensionError("right-hand side length does not match Gram order");
    }
    return llt_.solve(rhs);
}

} // namespace gpce
