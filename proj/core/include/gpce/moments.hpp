#pragma once

#include <vector>

#include <Eigen/Cholesky>
#include <Eigen/Core>

#include "gpce/gaussian.hpp"
#include "gpce/multi_index.hpp"

namespace gpce {

/// E[H_j H_k]: zero for unequal total degrees, otherwise the margin-matrix
/// sum j! k! sum_theta (Sigma^{-1})^theta / theta! over all index matrices
/// with row sums j and column sums k.
double second_moment_h(const GaussianMeasure& measure, const MultiIndex& j, const MultiIndex& k);

/// E[H_j^2]; strictly positive for a valid measure.
double norm_sq_h(const GaussianMeasure& measure, const MultiIndex& j);

/// E[Psi_j Psi_k] = E[H_j H_k] / sqrt(E[H_j^2] E[H_k^2]).
double second_moment_psi(const GaussianMeasure& measure, const MultiIndex& j, const MultiIndex& k);

/// Degree-l Gram matrix of standardized polynomials, rank-ordered, with its
/// Cholesky factorization cached for the per-degree solves.
class GramMatrix {
public:
    GramMatrix(const GaussianMeasure& measure, int degree);

    int degree() const { return degree_; }
    int order() const { return static_cast<int>(entries_.rows()); }
    const Eigen::MatrixXd& entries() const { return entries_; }
    const std::vector<MultiIndex>& index_map() const { return index_map_; }

    /// Reciprocal condition estimate from the cached factorization.
    double rcond() const { return llt_.rcond(); }

    Eigen::VectorXd solve(const Eigen::VectorXd& rhs) const;

private:
    int degree_;
    std::vector<MultiIndex> index_map_;
    Eigen::MatrixXd entries_;
    Eigen::LLT<Eigen::MatrixXd> llt_;
};

inline GramMatrix gram_matrix(const GaussianMeasure& measure, int degree) {
    return GramMatrix(measure, degree);
}

} // namespace gpce
