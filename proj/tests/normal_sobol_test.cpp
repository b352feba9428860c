#include <doctest.h>

#include <cmath>
#include <random>

#include "gpce/normal.hpp"
#include "gpce/sobol.hpp"

using namespace gpce;

TEST_CASE("inverse normal CDF reference values") {
    CHECK(inverse_normal_cdf(0.5) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(inverse_normal_cdf(0.975) == doctest::Approx(1.959963984540054).epsilon(1e-12));
    CHECK(inverse_normal_cdf(0.025) == doctest::Approx(-1.959963984540054).epsilon(1e-12));
    CHECK(inverse_normal_cdf(0.75) == doctest::Approx(0.6744897501960817).epsilon(1e-12));
    CHECK(inverse_normal_cdf(1e-9) == doctest::Approx(-5.997807015008182).epsilon(1e-10));
    CHECK_THROWS_AS(inverse_normal_cdf(0.0), DomainError);
    CHECK_THROWS_AS(inverse_normal_cdf(1.0), DomainError);
}

TEST_CASE("inverse normal CDF round trip accuracy") {
    // |Phi^{-1}(Phi(x)) - x| small across the working range, and the
    // absolute CDF defect stays below 1e-9 everywhere we can form it
    for (double u = 1e-8; u < 1.0 - 1e-8; u += 0.0009871) {
        const double x = inverse_normal_cdf(u);
        CHECK(std::abs(normal_cdf(x) - u) <= 1e-14 + 1e-12 * u);
    }
    // |x| <= 5: beyond that the spacing of representable u values near 1
    // already exceeds 1e-9 in x
    for (double x = -5.0; x <= 5.0; x += 0.0131) {
        const double u = normal_cdf(x);
        if (u > 0.0 && u < 1.0) {
            CHECK(inverse_normal_cdf(u) == doctest::Approx(x).epsilon(1e-9));
        }
    }
}

TEST_CASE("one-dimensional Sobol points") {
    QmcConfig config{3, 1, 1};
    const Eigen::MatrixXd pts = sobol_points(config);
    CHECK(pts(0, 0) == doctest::Approx(0.5));
    CHECK(pts(1, 0) == doctest::Approx(0.75));
    CHECK(pts(2, 0) == doctest::Approx(0.25));
    // skip 0 gives the same stream: the zero point never escapes
    const Eigen::MatrixXd pts0 = sobol_points(QmcConfig{3, 0, 1});
    CHECK(pts0(0, 0) == doctest::Approx(0.5));
}

TEST_CASE("known leading points in eight dimensions") {
    // frozen from the published direction numbers
    const double expected[5][8] = {
        {0.5, 0.5, 0.5, 0.5, 0.5, 0.5, 0.5, 0.5},
        {0.75, 0.25, 0.25, 0.25, 0.75, 0.75, 0.25, 0.75},
        {0.25, 0.75, 0.75, 0.75, 0.25, 0.25, 0.75, 0.25},
        {0.375, 0.375, 0.625, 0.875, 0.375, 0.125, 0.375, 0.875},
        {0.875, 0.875, 0.125, 0.375, 0.875, 0.625, 0.875, 0.375},
    };
    const Eigen::MatrixXd pts = sobol_points(QmcConfig{5, 1, 8});
    for (int r = 0; r < 5; ++r) {
        for (int c = 0; c < 8; ++c) {
            CHECK(pts(r, c) == doctest::Approx(expected[r][c]));
        }
    }
}

TEST_CASE("coordinates stay strictly inside the unit cube") {
    const Eigen::MatrixXd pts = sobol_points(QmcConfig{2048, 0, 16});
    CHECK(pts.minCoeff() > 0.0);
    CHECK(pts.maxCoeff() < 1.0);
}

TEST_CASE("dimension capacity") {
    CHECK(SobolSequence::max_dimension() >= 64);
    CHECK_THROWS_AS(SobolSequence(SobolSequence::max_dimension() + 1), CapacityError);
}

TEST_CASE("box-count equidistribution beats a pseudo-random set") {
    // 16 x 16 grid over 1024 points: max deviation of box counts from the
    // expected 4 per box
    const int n = 1024;
    const Eigen::MatrixXd pts = sobol_points(QmcConfig{n, 0, 2});
    auto box_deviation = [&](const Eigen::MatrixXd& p) {
        int counts[16][16] = {};
        for (int i = 0; i < n; ++i) {
            const int bx = std::min(15, static_cast<int>(p(i, 0) * 16.0));
            const int by = std::min(15, static_cast<int>(p(i, 1) * 16.0));
            ++counts[bx][by];
        }
        int dev = 0;
        for (auto& row : counts) {
            for (int c : row) {
                dev = std::max(dev, std::abs(c - n / 256));
            }
        }
        return dev;
    };
    std::mt19937_64 engine(20240);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    Eigen::MatrixXd random_pts(n, 2);
    for (int i = 0; i < n; ++i) {
        random_pts(i, 0) = uniform(engine);
        random_pts(i, 1) = uniform(engine);
    }
    CHECK(box_deviation(pts) < box_deviation(random_pts));
}
