#pragma once

#include <map>
#include <span>

#include "gpce/multi_index.hpp"

namespace gpce {

/// Multivariate polynomial stored as a finite map from multi-index to
/// coefficient.  Terms below the pruning threshold are dropped after every
/// arithmetic operation, so cancellation leaves no dust behind.
class SparsePolynomial {
public:
    /// Coefficients with |c| < kPruneEps are removed after each operation.
    static constexpr double kPruneEps = 1e-14;

    using TermMap = std::map<MultiIndex, double, RankLess>;

    explicit SparsePolynomial(int dimension);

    static SparsePolynomial constant(int dimension, double value);
    static SparsePolynomial monomial(MultiIndex index, double coefficient);
    /// Degree-one polynomial c . x for a coefficient vector c.
    static SparsePolynomial linear(std::span<const double> coefficients);

    int dimension() const { return dimension_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const;
    std::size_t term_count() const { return terms_.size(); }
    /// Coefficient of x^j (zero when the term is absent).
    double coefficient(const MultiIndex& j) const;

    SparsePolynomial& operator+=(const SparsePolynomial& other);
    SparsePolynomial& operator-=(const SparsePolynomial& other);
    SparsePolynomial& operator*=(double scale);

    friend SparsePolynomial operator+(SparsePolynomial a, const SparsePolynomial& b) {
        a += b;
        return a;
    }
    friend SparsePolynomial operator-(SparsePolynomial a, const SparsePolynomial& b) {
        a -= b;
        return a;
    }
    friend SparsePolynomial operator*(SparsePolynomial a, double s) {
        a *= s;
        return a;
    }
    friend SparsePolynomial operator*(double s, SparsePolynomial a) {
        a *= s;
        return a;
    }
    friend SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b);

    /// Formal partial derivative with respect to x_axis.
    SparsePolynomial diff(int axis) const;

    /// Composition with a translation: p(x + offset), expanded.
    SparsePolynomial shifted(std::span<const double> offset) const;

    double evaluate(std::span<const double> x) const;

    /// Insert/overwrite a term (used by builders; prunes tiny coefficients).
    void set_term(MultiIndex index, double coefficient);

    bool operator==(const SparsePolynomial& other) const = default;

private:
    void prune();

    int dimension_;
    TermMap terms_;
};

} // namespace gpce
