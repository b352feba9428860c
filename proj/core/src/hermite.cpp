#include "gpce/hermite.hpp"

#include <cmath>
#include <string>
#include <unordered_map>

#include "gpce/errors.hpp"

namespace gpce {

namespace {

// One recursion step along `axis`: H -> (Sigma^{-1} x)_axis * H - dH/dx_axis.
SparsePolynomial raise_degree(const GaussianMeasure& measure, const SparsePolynomial& h, int axis) {
    const Eigen::MatrixXd& prec = measure.precision();
    const int n = measure.dimension();
    std::vector<double> row(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        row[static_cast<std::size_t>(k)] = prec(axis, k);
    }
    return SparsePolynomial::linear(row) * h - h.diff(axis);
}

} // namespace

SparsePolynomial hermite_polynomial(const GaussianMeasure& measure, const MultiIndex& j) {
    if (j.size() != measure.dimension()) {
        throw DimensionError("Hermite index length does not match measure dimension");
    }
    SparsePolynomial h = SparsePolynomial::constant(measure.dimension(), 1.0);
    for (int axis = 0; axis < j.size(); ++axis) {
        for (int step = 0; step < j[axis]; ++step) {
            h = raise_degree(measure, h, axis);
        }
    }
    return h;
}

HermiteBasis::HermiteBasis(GaussianMeasure measure, int max_degree)
    : measure_(std::move(measure)), max_degree_(max_degree) {
    if (max_degree < 0) {
        throw DomainError("basis degree must be >= 0");
    }
    levels_.reserve(static_cast<std::size_t>(max_degree) + 1);

    // Grow each level from its predecessor: for j with leftmost positive
    // entry at axis i, H_j extends H_{j - e_i}; cache by index.
    std::unordered_map<MultiIndex, SparsePolynomial, MultiIndexHash> built;
    built.emplace(MultiIndex::zeros(measure_.dimension()),
                  SparsePolynomial::constant(measure_.dimension(), 1.0));
    for (int l = 0; l <= max_degree; ++l) {
        std::vector<Entry> level;
        for (MultiIndex& j : enumerate_degree(measure_.dimension(), l)) {
            SparsePolynomial h(measure_.dimension());
            if (l == 0) {
                h = built.at(j);
            } else {
                int axis = 0;
                while (j[axis] == 0) {
                    ++axis;
                }
                h = raise_degree(measure_, built.at(j.bumped(axis, -1)), axis);
                built.emplace(j, h);
            }
            const double norm_sq = norm_sq_h(measure_, j);
            SparsePolynomial psi = h * (1.0 / std::sqrt(norm_sq));
            level.push_back(Entry{std::move(j), std::move(h), norm_sq, std::move(psi)});
        }
        levels_.push_back(std::move(level));
    }
}

const std::vector<HermiteBasis::Entry>& HermiteBasis::degree(int l) const {
    if (l < 0 || l > max_degree_) {
        throw DomainError("basis degree " + std::to_string(l) + " outside built range 0.." +
                          std::to_string(max_degree_));
    }
    return levels_[static_cast<std::size_t>(l)];
}

std::int64_t HermiteBasis::total_count() const {
    std::int64_t total = 0;
    for (const auto& level : levels_) {
        total += static_cast<std::int64_t>(level.size());
    }
    return total;
}

double generating_function_partial_sum(const GaussianMeasure& measure, std::span<const double> t,
                                       std::span<const double> x, int degree_cap) {
    if (degree_cap < 0) {
        throw DomainError("degree cap must be >= 0");
    }
    if (static_cast<int>(t.size()) != measure.dimension() ||
        static_cast<int>(x.size()) != measure.dimension()) {
        throw DimensionError("generating-function arguments must match measure dimension");
    }
    double total = 0.0;
    for (int l = 0; l <= degree_cap; ++l) {
        for (const MultiIndex& j : enumerate_degree(measure.dimension(), l)) {
            double tpow = 1.0;
            for (int i = 0; i < j.size(); ++i) {
                for (int k = 0; k < j[i]; ++k) {
                    tpow *= t[static_cast<std::size_t>(i)];
                }
            }
            if (tpow == 0.0) {
                continue;
            }
            const double h = hermite_polynomial(measure, j).evaluate(x);
            total += tpow / static_cast<double>(multi_factorial(j)) * h;
        }
    }
    return total;
}

} // namespace gpce
