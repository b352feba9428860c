// Independent reference implementations used only by the tests.  Each one
// takes a different algorithmic route than the library code it checks.
#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include <Eigen/Core>

#include "gpce/multi_index.hpp"
#include "gpce/polynomial.hpp"

namespace gpce::testing {

/// Gaussian monomial moment by brute-force Isserlis pair-partition
/// enumeration: expand the index into variable labels and sum the products
/// of covariances over all perfect matchings.
inline double isserlis_moment(const Eigen::MatrixXd& covariance, const MultiIndex& a) {
    std::vector<int> labels;
    for (int i = 0; i < a.size(); ++i) {
        for (int k = 0; k < a[i]; ++k) {
            labels.push_back(i);
        }
    }
    if (labels.empty()) {
        return 1.0;
    }
    if (labels.size() % 2 == 1) {
        return 0.0;
    }
    // match labels[0] with each remaining label, recurse on the rest
    struct Rec {
        const Eigen::MatrixXd& cov;
        double operator()(std::vector<int>& rest) const {
            if (rest.empty()) {
                return 1.0;
            }
            const int first = rest.front();
            double total = 0.0;
            for (std::size_t k = 1; k < rest.size(); ++k) {
                const int partner = rest[k];
                std::vector<int> next;
                next.reserve(rest.size() - 2);
                for (std::size_t i = 1; i < rest.size(); ++i) {
                    if (i != k) {
                        next.push_back(rest[i]);
                    }
                }
                total += cov(first, partner) * (*this)(next);
            }
            return total;
        }
    };
    return Rec{covariance}(labels);
}

/// Contingency-table count with margins j, k by dynamic programming over
/// rows, memoized on the remaining column budget.
inline std::int64_t contingency_count(const MultiIndex& j, const MultiIndex& k) {
    if (j.degree() != k.degree()) {
        return 0;
    }
    const int n = j.size();
    std::map<std::pair<int, std::vector<int>>, std::int64_t> memo;

    struct Rec {
        const MultiIndex& rows;
        int n;
        std::map<std::pair<int, std::vector<int>>, std::int64_t>& memo;

        std::int64_t count(int p, std::vector<int> colrem) const {
            if (p == n) {
                for (int c : colrem) {
                    if (c != 0) {
                        return 0;
                    }
                }
                return 1;
            }
            const auto key = std::make_pair(p, colrem);
            if (auto it = memo.find(key); it != memo.end()) {
                return it->second;
            }
            const std::int64_t total = place(p, 0, rows[p], colrem);
            memo.emplace(key, total);
            return total;
        }

        std::int64_t place(int p, int q, int remaining, std::vector<int>& colrem) const {
            if (q == n - 1) {
                if (remaining > colrem[static_cast<std::size_t>(q)]) {
                    return 0;
                }
                colrem[static_cast<std::size_t>(q)] -= remaining;
                const std::int64_t r = count(p + 1, colrem);
                colrem[static_cast<std::size_t>(q)] += remaining;
                return r;
            }
            std::int64_t total = 0;
            const int cap = std::min(remaining, colrem[static_cast<std::size_t>(q)]);
            for (int v = 0; v <= cap; ++v) {
                colrem[static_cast<std::size_t>(q)] -= v;
                total += place(p, q + 1, remaining - v, colrem);
                colrem[static_cast<std::size_t>(q)] += v;
            }
            return total;
        }
    };
    std::vector<int> colrem(k.entries().begin(), k.entries().end());
    Rec rec{j, n, memo};
    return rec.count(0, colrem);
}

/// H_j by termwise differentiation of the density: with d^j phi = q_j phi,
/// q advances one axis at a time via q -> dq/dx_i - (precision x)_i q, and
/// H_j = (-1)^{|j|} q_j.  Axes are consumed right to left, the opposite of
/// the library's recursion path, so agreement also shows path independence.
inline SparsePolynomial rodrigues_hermite(const Eigen::MatrixXd& precision, const MultiIndex& j) {
    const int n = j.size();
    SparsePolynomial q = SparsePolynomial::constant(n, 1.0);
    for (int axis = n - 1; axis >= 0; --axis) {
        std::vector<double> row(static_cast<std::size_t>(n));
        for (int c = 0; c < n; ++c) {
            row[static_cast<std::size_t>(c)] = precision(axis, c);
        }
        const SparsePolynomial lin = SparsePolynomial::linear(row);
        for (int step = 0; step < j[axis]; ++step) {
            q = q.diff(axis) - lin * q;
        }
    }
    return j.degree() % 2 == 0 ? q : q * -1.0;
}

/// Univariate probabilists' Hermite polynomial He_n embedded on one axis of
/// an N-dimensional polynomial (three-term recurrence).
inline SparsePolynomial univariate_hermite(int dimension, int axis, int n) {
    SparsePolynomial prev = SparsePolynomial::constant(dimension, 1.0);
    if (n == 0) {
        return prev;
    }
    SparsePolynomial cur = SparsePolynomial::monomial(MultiIndex::unit(dimension, axis), 1.0);
    for (int k = 1; k < n; ++k) {
        SparsePolynomial next =
            SparsePolynomial::monomial(MultiIndex::unit(dimension, axis), 1.0) * cur -
            prev * static_cast<double>(k);
        prev = cur;
        cur = next;
    }
    return cur;
}

} // namespace gpce::testing
