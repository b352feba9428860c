#include "gpce/polynomial.hpp"

#include <cmath>
#include <string>

namespace gpce {

namespace {

void require_dimension(const SparsePolynomial& p, int dimension, const char* what) {
    if (p.dimension() != dimension) {
        throw DimensionError(std::string(what) + ": polynomial dimension " +
                             std::to_string(p.dimension()) + " vs " + std::to_string(dimension));
    }
}

} // namespace

SparsePolynomial::SparsePolynomial(int dimension) : dimension_(dimension) {
    if (dimension < 1) {
        throw DimensionError("polynomial dimension must be >= 1");
    }
}

SparsePolynomial SparsePolynomial::constant(int dimension, double value) {
    SparsePolynomial p(dimension);
    p.set_term(MultiIndex::zeros(dimension), value);
    return p;
}

SparsePolynomial SparsePolynomial::monomial(MultiIndex index, double coefficient) {
    SparsePolynomial p(index.size());
    p.set_term(std::move(index), coefficient);
    return p;
}

SparsePolynomial SparsePolynomial::linear(std::span<const double> coefficients) {
    SparsePolynomial p(static_cast<int>(coefficients.size()));
    for (int i = 0; i < p.dimension(); ++i) {
        p.set_term(MultiIndex::unit(p.dimension(), i), coefficients[static_cast<std::size_t>(i)]);
    }
    return p;
}

int SparsePolynomial::degree() const {
    int d = 0;
    for (const auto& [j, c] : terms_) {
        d = std::max(d, j.degree());
    }
    return d;
}

double SparsePolynomial::coefficient(const MultiIndex& j) const {
    auto it = terms_.find(j);
    return it == terms_.end() ? 0.0 : it->second;
}

void SparsePolynomial::set_term(MultiIndex index, double coefficient) {
    if (index.size() != dimension_) {
        throw DimensionError("term index length does not match polynomial dimension");
    }
    if (std::abs(coefficient) < kPruneEps) {
        terms_.erase(index);
    } else {
        terms_.insert_or_assign(std::move(index), coefficient);
    }
}

void SparsePolynomial::prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (std::abs(it->second) < kPruneEps) {
            it = terms_.erase(it);
        } else {
            ++it;
        }
    }
}

SparsePolynomial& SparsePolynomial::operator+=(const SparsePolynomial& other) {
    require_dimension(other, dimension_, "poly add");
    for (const auto& [j, c] : other.terms_) {
        terms_[j] += c;
    }
    prune();
    return *this;
}

SparsePolynomial& SparsePolynomial::operator-=(const SparsePolynomial& other) {
    require_dimension(other, dimension_, "poly sub");
    for (const auto& [j, c] : other.terms_) {
        terms_[j] -= c;
    }
    prune();
    return *this;
}

SparsePolynomial& SparsePolynomial::operator*=(double scale) {
    for (auto& [j, c] : terms_) {
        c *= scale;
    }
    prune();
    return *this;
}

SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b) {
    require_dimension(b, a.dimension(), "poly mul");
    SparsePolynomial out(a.dimension());
    for (const auto& [ja, ca] : a.terms_) {
        for (const auto& [jb, cb] : b.terms_) {
            std::vector<int> e(ja.entries().begin(), ja.entries().end());
            for (int i = 0; i < a.dimension(); ++i) {
                e[static_cast<std::size_t>(i)] += jb[i];
            }
            out.terms_[MultiIndex(std::move(e))] += ca * cb;
        }
    }
    out.prune();
    return out;
}

SparsePolynomial SparsePolynomial::diff(int axis) const {
    if (axis < 0 || axis >= dimension_) {
        throw DimensionError("derivative axis out of range");
    }
    SparsePolynomial out(dimension_);
    for (const auto& [j, c] : terms_) {
        const int e = j[axis];
        if (e > 0) {
            out.terms_[j.bumped(axis, -1)] += c * e;
        }
    }
    out.prune();
    return out;
}

SparsePolynomial SparsePolynomial::shifted(std::span<const double> offset) const {
    if (static_cast<int>(offset.size()) != dimension_) {
        throw DimensionError("shift offset length does not match polynomial dimension");
    }
    // expand term by term via binomial theorem, one axis at a time
    SparsePolynomial out(dimension_);
    for (const auto& [j, c] : terms_) {
        SparsePolynomial term = SparsePolynomial::constant(dimension_, c);
        for (int i = 0; i < dimension_; ++i) {
            const int e = j[i];
            if (e == 0) {
                continue;
            }
            // (x_i + mu)^e by repeated multiplication
            SparsePolynomial factor(dimension_);
            factor.set_term(MultiIndex::unit(dimension_, i), 1.0);
            factor.set_term(MultiIndex::zeros(dimension_), offset[static_cast<std::size_t>(i)]);
            for (int k = 0; k < e; ++k) {
                term = term * factor;
            }
        }
        out += term;
    }
    return out;
}

double SparsePolynomial::evaluate(std::span<const double> x) const {
    if (static_cast<int>(x.size()) != dimension_) {
        throw DimensionError("evaluation point length does not match polynomial dimension");
    }
    double total = 0.0;
    for (const auto& [j, c] : terms_) {
        double v = c;
        for (int i = 0; i < dimension_; ++i) {
            for (int k = 0; k < j[i]; ++k) {
                v *= x[static_cast<std::size_t>(i)];
            }
        }
        total += v;
    }
    return total;
}

} // namespace gpce
