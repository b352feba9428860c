#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "gpce/errors.hpp"

namespace gpce {

/// Low-discrepancy sampling request.
struct QmcConfig {
    std::int64_t sample_count = 0;
    std::int64_t skip = 0; ///< leading points dropped; the zero point always is
    int dimension = 0;
};

/// Gray-code Sobol sequence over 32 bits.  Direction numbers come from the
/// Joe-Kuo table embedded in the library (see docs/sobol.md for provenance),
/// covering dimensions up to max_dimension().
class SobolSequence {
public:
    explicit SobolSequence(int dimension);

    static int max_dimension();

    int dimension() const { return dimension_; }

    /// Write the next raw point (the very first one is the all-zeros point).
    void next(std::span<double> out);

    /// Drop `count` raw points.
    void advance(std::int64_t count);

private:
    int dimension_;
    std::uint64_t index_ = 0;
    std::vector<std::uint32_t> state_;
    std::vector<std::uint32_t> directions_; // [dim][bit], row-major 32 per dim
};

/// Points of the Sobol sequence in (0,1)^d, one per row.  The initial
/// all-zeros point never appears: the first max(config.skip, 1) raw points
/// are dropped.
Eigen::MatrixXd sobol_points(const QmcConfig& config);

} // namespace gpce
