#include "gpce/multi_index.hpp"

#include <functional>
#include <numeric>
#include <string>

namespace gpce {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out)) {
        throw RangeError("integer product exceeds 64-bit capacity");
    }
    return out;
}

void require_same_length(const MultiIndex& a, const MultiIndex& b) {
    if (a.size() != b.size()) {
        throw DimensionError("multi-index length mismatch: " + std::to_string(a.size()) +
                             " vs " + std::to_string(b.size()));
    }
}

} // namespace

MultiIndex::MultiIndex(std::vector<int> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) {
        throw DimensionError("multi-index must have length >= 1");
    }
    for (int v : entries_) {
        if (v < 0) {
            throw DomainError("multi-index entries must be nonnegative");
        }
    }
}

MultiIndex::MultiIndex(std::initializer_list<int> entries)
    : MultiIndex(std::vector<int>(entries)) {}

MultiIndex MultiIndex::zeros(int dimension) {
    if (dimension < 1) {
        throw DimensionError("dimension must be >= 1");
    }
    return MultiIndex(std::vector<int>(static_cast<std::size_t>(dimension), 0));
}

MultiIndex MultiIndex::unit(int dimension, int axis) {
    MultiIndex j = zeros(dimension);
    if (axis < 0 || axis >= dimension) {
        throw DimensionError("axis out of range");
    }
    j.entries_[static_cast<std::size_t>(axis)] = 1;
    return j;
}

int MultiIndex::degree() const {
    return std::accumulate(entries_.begin(), entries_.end(), 0);
}

MultiIndex MultiIndex::bumped(int axis, int delta) const {
    if (axis < 0 || axis >= size()) {
        throw DimensionError("axis out of range");
    }
    std::vector<int> e = entries_;
    e[static_cast<std::size_t>(axis)] += delta;
    return MultiIndex(std::move(e));
}

Ordering grlex_compare(const MultiIndex& a, const MultiIndex& b) {
    require_same_length(a, b);
    const int da = a.degree();
    const int db = b.degree();
    if (da != db) {
        return da < db ? Ordering::less : Ordering::greater;
    }
    for (int i = 0; i < a.size(); ++i) {
        const int diff = a[i] - b[i];
        if (diff != 0) {
            return diff > 0 ? Ordering::greater : Ordering::less;
        }
    }
    return Ordering::equal;
}

bool rank_less(const MultiIndex& a, const MultiIndex& b) {
    const int da = a.degree();
    const int db = b.degree();
    if (da != db) {
        return da < db;
    }
    return grlex_compare(a, b) == Ordering::greater;
}

std::size_t MultiIndexHash::operator()(const MultiIndex& j) const {
    std::size_t h = static_cast<std::size_t>(j.size());
    for (int v : j.entries()) {
        h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}

namespace {

void enumerate_degree_rec(int dimension, int remaining, std::vector<int>& prefix,
                          std::vector<MultiIndex>& out) {
    if (dimension == 1) {
        prefix.push_back(remaining);
        out.emplace_back(prefix);
        prefix.pop_back();
        return;
    }
    for (int first = remaining; first >= 0; --first) {
        prefix.push_back(first);
        enumerate_degree_rec(dimension - 1, remaining - first, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<MultiIndex> enumerate_degree(int dimension, int degree) {
    if (dimension < 1) {
        throw DimensionError("dimension must be >= 1");
    }
    if (degree < 0) {
        throw DomainError("degree must be >= 0");
    }
    std::vector<MultiIndex> out;
    out.reserve(static_cast<std::size_t>(count_degree(dimension, degree)));
    std::vector<int> prefix;
    enumerate_degree_rec(dimension, degree, prefix, out);
    return out;
}

namespace {

std::int64_t checked_binomial(int n, int k) {
    if (k < 0 || k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    std::int64_t result = 1;
    for (int i = 1; i <= k; ++i) {
        // exact at every step: result * (n-k+i) is divisible by i
        result = checked_mul(result, n - k + i) / i;
    }
    return result;
}

} // namespace

std::int64_t count_degree(int dimension, int degree) {
    if (dimension < 1) {
        throw DimensionError("dimension must be >= 1");
    }
    if (degree < 0) {
        throw DomainError("degree must be >= 0");
    }
    return checked_binomial(dimension + degree - 1, degree);
}

std::int64_t count_total(int dimension, int max_degree) {
    if (dimension < 1) {
        throw DimensionError("dimension must be >= 1");
    }
    if (max_degree < 0) {
        throw DomainError("degree must be >= 0");
    }
    return checked_binomial(dimension + max_degree, max_degree);
}

IndexMatrix::IndexMatrix(int dimension, std::vector<int> row_major_entries)
    : dimension_(dimension),
      entries_(std::move(row_major_entries)),
      row_sums_(MultiIndex::zeros(std::max(dimension, 1))),
      col_sums_(MultiIndex::zeros(std::max(dimension, 1))) {
    if (dimension < 1) {
        throw DimensionError("index matrix dimension must be >= 1");
    }
    if (entries_.size() != static_cast<std::size_t>(dimension) * static_cast<std::size_t>(dimension)) {
        throw ShapeError("index matrix entry count does not match dimension");
    }
    std::vector<int> rs(static_cast<std::size_t>(dimension), 0);
    std::vector<int> cs(static_cast<std::size_t>(dimension), 0);
    for (int p = 0; p < dimension; ++p) {
        for (int q = 0; q < dimension; ++q) {
            const int v = at(p, q);
            if (v < 0) {
                throw DomainError("index matrix entries must be nonnegative");
            }
            rs[static_cast<std::size_t>(p)] += v;
            cs[static_cast<std::size_t>(q)] += v;
        }
    }
    row_sums_ = MultiIndex(std::move(rs));
    col_sums_ = MultiIndex(std::move(cs));
}

namespace {

// Enumerate compositions of `total` into `slots` parts bounded by `budget`,
// in ascending lexicographic order, invoking `emit` with each complete row.
void compositions(int total, int slot, std::span<const int> budget, std::vector<int>& row,
                  const std::function<void(const std::vector<int>&)>& emit) {
    const int slots = static_cast<int>(budget.size());
    if (slot == slots - 1) {
        if (total <= budget[static_cast<std::size_t>(slot)]) {
            row.push_back(total);
            emit(row);
            row.pop_back();
        }
        return;
    }
    const int cap = std::min(total, budget[static_cast<std::size_t>(slot)]);
    for (int v = 0; v <= cap; ++v) {
        row.push_back(v);
        compositions(total - v, slot + 1, budget, row, emit);
        row.pop_back();
    }
}

} // namespace

std::vector<IndexMatrix> enumerate_margin_matrices(const MultiIndex& rows, const MultiIndex& cols) {
    require_same_length(rows, cols);
    std::vector<IndexMatrix> out;
    if (rows.degree() != cols.degree()) {
        return out;
    }
    const int n = rows.size();
    std::vector<int> entries;
    entries.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    std::vector<int> colrem(cols.entries().begin(), cols.entries().end());

    std::function<void(int)> fill_row = [&](int p) {
        if (p == n) {
            out.emplace_back(n, entries);
            return;
        }
        std::vector<int> row;
        compositions(rows[p], 0, colrem, row, [&](const std::vector<int>& r) {
            for (int q = 0; q < n; ++q) {
                colrem[static_cast<std::size_t>(q)] -= r[static_cast<std::size_t>(q)];
                entries.push_back(r[static_cast<std::size_t>(q)]);
            }
            fill_row(p + 1);
            for (int q = 0; q < n; ++q) {
                colrem[static_cast<std::size_t>(q)] += r[static_cast<std::size_t>(q)];
            }
            entries.resize(entries.size() - static_cast<std::size_t>(n));
        });
    };
    fill_row(0);
    return out;
}

std::int64_t checked_factorial(int n) {
    if (n < 0) {
        throw DomainError("factorial of a negative number");
    }
    std::int64_t result = 1;
    for (int i = 2; i <= n; ++i) {
        result = checked_mul(result, i);
    }
    return result;
}

std::int64_t multi_factorial(const MultiIndex& j) {
    std::int64_t result = 1;
    for (int v : j.entries()) {
        result = checked_mul(result, checked_factorial(v));
    }
    return result;
}

std::int64_t matrix_factorial(const IndexMatrix& theta) {
    std::int64_t result = 1;
    for (int v : theta.entries()) {
        result = checked_mul(result, checked_factorial(v));
    }
    return result;
}

} // namespace gpce
