#pragma once

#include <span>
#include <vector>

#include "gpce/gaussian.hpp"
#include "gpce/moments.hpp"
#include "gpce/polynomial.hpp"

namespace gpce {

/// Measure-consistent Hermite polynomial H_j, built by the differential
/// recursion H_{j+e_i} = (Sigma^{-1} x)_i H_j - dH_j/dx_i starting from
/// H_0 = 1.  The path through the axes does not matter; increments are
/// applied leftmost axis first.
SparsePolynomial hermite_polynomial(const GaussianMeasure& measure, const MultiIndex& j);

/// All Hermite polynomials and their standardized versions up to a maximum
/// degree, rank-ordered within each degree.
class HermiteBasis {
public:
    struct Entry {
        MultiIndex index;
        SparsePolynomial h;
        double norm_sq;
        SparsePolynomial psi;
    };

    HermiteBasis(GaussianMeasure measure, int max_degree);

    const GaussianMeasure& measure() const { return measure_; }
    int max_degree() const { return max_degree_; }
    const std::vector<Entry>& degree(int l) const;
    std::int64_t total_count() const;

private:
    GaussianMeasure measure_;
    int max_degree_;
    std::vector<std::vector<Entry>> levels_;
};

/// Partial sum sum_{|j| <= degree_cap} t^j / j! H_j(x), the truncated
/// generating function; converges to exp(t' Sigma^{-1} x - t' Sigma^{-1} t / 2).
double generating_function_partial_sum(const GaussianMeasure& measure, std::span<const double> t,
                                       std::span<const double> x, int degree_cap);

} // namespace gpce
