#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gpce/errors.hpp"

namespace gpce {

/// Degree vector j in N_0^N indexing polynomials and expansion coefficients.
class MultiIndex {
public:
    explicit MultiIndex(std::vector<int> entries);
    MultiIndex(std::initializer_list<int> entries);

    static MultiIndex zeros(int dimension);
    /// Unit index e_axis (one at `axis`, zero elsewhere).
    static MultiIndex unit(int dimension, int axis);

    int size() const { return static_cast<int>(entries_.size()); }
    int operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }
    int degree() const;

    /// Copy with entry `axis` incremented by `delta` (result must stay nonnegative).
    MultiIndex bumped(int axis, int delta) const;

    std::span<const int> entries() const { return entries_; }

    bool operator==(const MultiIndex& other) const { return entries_ == other.entries_; }

private:
    std::vector<int> entries_;
};

enum class Ordering { less, equal, greater };

/// Graded lexicographic comparison: degrees first, then the leftmost nonzero
/// entry of a - b decides (positive means a is the larger index).
Ordering grlex_compare(const MultiIndex& a, const MultiIndex& b);

/// True when `a` comes before `b` in the enumeration rank order: ascending
/// degree, and within a degree the larger grlex index first.  This is the
/// single-index order used for basis polynomials, Gram rows, and coefficients.
bool rank_less(const MultiIndex& a, const MultiIndex& b);

struct RankLess {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const { return rank_less(a, b); }
};

struct MultiIndexHash {
    std::size_t operator()(const MultiIndex& j) const;
};

/// All multi-indices of dimension N with total degree l, in rank order.
std::vector<MultiIndex> enumerate_degree(int dimension, int degree);

/// K_{N,l} = binomial(N+l-1, l), the number of degree-l indices.
std::int64_t count_degree(int dimension, int degree);

/// L_{N,m} = binomial(N+m, m), the number of indices of degree at most m.
std::int64_t count_total(int dimension, int max_degree);

/// N x N nonnegative integer matrix together with its row and column sums.
class IndexMatrix {
public:
    IndexMatrix(int dimension, std::vector<int> row_major_entries);

    int dimension() const { return dimension_; }
    int at(int row, int col) const { return entries_[static_cast<std::size_t>(row * dimension_ + col)]; }
    const MultiIndex& row_sums() const { return row_sums_; }
    const MultiIndex& col_sums() const { return col_sums_; }
    std::span<const int> entries() const { return entries_; }

    bool operator==(const IndexMatrix& other) const = default;

private:
    int dimension_;
    std::vector<int> entries_;
    MultiIndex row_sums_;
    MultiIndex col_sums_;
};

/// All matrices with row sums `rows` and column sums `cols`, ascending
/// lexicographic by row-major entries.  Empty when the totals differ.
std::vector<IndexMatrix> enumerate_margin_matrices(const MultiIndex& rows, const MultiIndex& cols);

/// j! = j_1! ... j_N!  (RangeError on 64-bit overflow).
std::int64_t multi_factorial(const MultiIndex& j);

/// theta! = prod over entries of theta_pq!
std::int64_t matrix_factorial(const IndexMatrix& theta);

std::int64_t checked_factorial(int n);

} // namespace gpce
