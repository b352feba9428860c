#include "gpce/sobol.hpp"

#include <string>

#include "gpce/errors.hpp"

namespace gpce {

namespace {

constexpr int kBits = 32;

struct SobolRow {
    int s;
    std::uint32_t a;
    std::uint32_t m[9];
};

#include "sobol_directions.inc"

constexpr int kMaxDimension = 1 + static_cast<int>(sizeof(kSobolRows) / sizeof(kSobolRows[0]));

// Direction integers V_k (k = 0..31), already aligned to the 32-bit fixed point.
void fill_directions(int dim_index, std::span<std::uint32_t> v) {
    if (dim_index == 0) {
        for (int k = 0; k < kBits; ++k) {
            v[static_cast<std::size_t>(k)] = 1u << (kBits - 1 - k);
        }
        return;
    }
    const SobolRow& row = kSobolRows[dim_index - 1];
    const int s = row.s;
    for (int k = 0; k < kBits; ++k) {
        if (k < s) {
            v[static_cast<std::size_t>(k)] = row.m[k] << (kBits - 1 - k);
        } else {
            std::uint32_t value = v[static_cast<std::size_t>(k - s)];
            value ^= value >> s;
            for (int i = 1; i < s; ++i) {
                if ((row.a >> (s - 1 - i)) & 1u) {
                    value ^= v[static_cast<std::size_t>(k - i)];
                }
            }
            v[static_cast<std::size_t>(k)] = value;
        }
    }
}

} // namespace

int SobolSequence::max_dimension() {
    return kMaxDimension;
}

SobolSequence::SobolSequence(int dimension) : dimension_(dimension) {
    if (dimension < 1) {
        throw DimensionError("Sobol dimension must be >= 1");
    }
    if (dimension > kMaxDimension) {
        throw CapacityError("Sobol dimension " + std::to_string(dimension) +
                            " exceeds the embedded direction-number table (max " +
                            std::to_string(kMaxDimension) + ")");
    }
    state_.assign(static_cast<std::size_t>(dimension), 0u);
    directions_.assign(static_cast<std::size_t>(dimension) * kBits, 0u);
    for (int d = 0; d < dimension; ++d) {
        fill_directions(d, std::span<std::uint32_t>(directions_.data() + d * kBits, kBits));
    }
}

void SobolSequence::next(std::span<double> out) {
    if (static_cast<int>(out.size()) != dimension_) {
        throw DimensionError("Sobol output span length does not match dimension");
    }
    constexpr double scale = 1.0 / 4294967296.0; // 2^-32
    for (int d = 0; d < dimension_; ++d) {
        out[static_cast<std::size_t>(d)] = state_[static_cast<std::size_t>(d)] * scale;
    }
    // Gray-code update: flip by the direction of the lowest zero bit of index
    std::uint64_t i = index_++;
    int c = 0;
    while (i & 1u) {
        i >>= 1;
        ++c;
    }
    for (int d = 0; d < dimension_; ++d) {
        state_[static_cast<std::size_t>(d)] ^= directions_[static_cast<std::size_t>(d * kBits + c)];
    }
}

void SobolSequence::advance(std::int64_t count) {
    std::vector<double> sink(static_cast<std::size_t>(dimension_));
    for (std::int64_t i = 0; i < count; ++i) {
        next(sink);
    }
}

Eigen::MatrixXd sobol_points(const QmcConfig& config) {
    if (config.sample_count < 1) {
        throw DomainError("QMC sample count must be >= 1");
    }
    if (config.skip < 0) {
        throw DomainError("QMC skip must be >= 0");
    }
    SobolSequence seq(config.dimension);
    seq.advance(std::max<std::int64_t>(config.skip, 1)); // never emit the zero point
    Eigen::MatrixXd points(config.sample_count, config.dimension);
    std::vector<double> row(static_cast<std::size_t>(config.dimension));
    for (std::int64_t i = 0; i < config.sample_count; ++i) {
        seq.next(row);
        for (int d = 0; d < config.dimension; ++d) {
            points(i, d) = row[static_cast<std::size_t>(d)];
        }
    }
    return points;
}

} // namespace gpce
