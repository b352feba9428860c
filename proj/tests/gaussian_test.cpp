#include <doctest.h>

#include <array>
#include <cmath>

#include "gpce/gaussian.hpp"
#include "gpce/scenarios.hpp"
#include "gpce/serialize.hpp"
#include "oracles.hpp"

using namespace gpce;

TEST_CASE("measure construction and validation") {
    SUBCASE("identity") {
        GaussianMeasure m(Eigen::MatrixXd::Identity(3, 3));
        CHECK(m.precision().isApprox(Eigen::MatrixXd::Identity(3, 3), 1e-14));
        CHECK(m.log_det() == doctest::Approx(0.0));
    }
    SUBCASE("equicorrelated closed-form precision") {
        GaussianMeasure m(scenarios::example1_covariance(2));
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                const double expected = i == j ? 15.0 / 14.0 : -5.0 / 28.0;
                CHECK(m.precision()(i, j) == doctest::Approx(expected).epsilon(1e-12));
            }
        }
        CHECK((m.precision() * m.covariance())
                  .isApprox(Eigen::MatrixXd::Identity(3, 3), 1e-10));
    }
    SUBCASE("duplicated variable is rejected") {
        Eigen::MatrixXd s(2, 2);
        s << 1.0, 1.0, 1.0, 1.0;
        CHECK_THROWS_AS(GaussianMeasure{s}, DefinitenessError);
    }
    SUBCASE("asymmetry is rejected") {
        Eigen::MatrixXd s(2, 2);
        s << 1.0, 0.2, 0.3, 1.0;
        CHECK_THROWS_AS(GaussianMeasure{s}, ShapeError);
    }
    SUBCASE("non-square is rejected") {
        CHECK_THROWS_AS(GaussianMeasure{Eigen::MatrixXd::Ones(2, 3)}, ShapeError);
    }
}

TEST_CASE("density values") {
    GaussianMeasure m2(Eigen::MatrixXd::Identity(2, 2));
    CHECK(m2.density(std::array{0.0, 0.0}) == doctest::Approx(1.0 / (2.0 * M_PI)));

    Eigen::MatrixXd quarter(1, 1);
    quarter << 0.25;
    GaussianMeasure m1(quarter);
    CHECK(m1.density(std::array{0.0}) == doctest::Approx(0.7978845608).epsilon(1e-9));

    const std::array<double, 2> x{0.7, -1.3};
    const std::array<double, 2> neg{-0.7, 1.3};
    CHECK(m2.density(x) == doctest::Approx(m2.density(neg)));
    CHECK_THROWS_AS(m2.density(std::array{1.0}), DimensionError);
}

TEST_CASE("density integrates to one on a diagonal case") {
    Eigen::MatrixXd s(2, 2);
    s << 0.8, 0.0, 0.0, 1.7;
    GaussianMeasure m(s);
    const double s1 = std::sqrt(s(0, 0));
    const double s2 = std::sqrt(s(1, 1));
    const int n = 400;
    double total = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const double x = -8.0 * s1 + (i + 0.5) * 16.0 * s1 / n;
            const double y = -8.0 * s2 + (j + 0.5) * 16.0 * s2 / n;
            total += m.density(std::array{x, y}) * (16.0 * s1 / n) * (16.0 * s2 / n);
        }
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("monomial moments") {
    GaussianMeasure m(scenarios::random_spd(2, 7));
    SUBCASE("covariance pairs and parity") {
        CHECK(m.monomial_moment(MultiIndex{1, 1}) == doctest::Approx(m.covariance()(0, 1)));
        CHECK(m.monomial_moment(MultiIndex{2, 0}) == doctest::Approx(m.covariance()(0, 0)));
        CHECK(m.monomial_moment(MultiIndex{3, 2}) == 0.0);
        CHECK(m.monomial_moment(MultiIndex{0, 0}) == 1.0);
    }
    SUBCASE("fourth moment closed form") {
        const auto& s = m.covariance();
        const double expected = s(0, 0) * s(1, 1) + 2.0 * s(0, 1) * s(0, 1);
        CHECK(m.monomial_moment(MultiIndex{2, 2}) == doctest::Approx(expected).epsilon(1e-12));
    }
}

TEST_CASE("moments agree with the pair-partition oracle") {
    for (int n = 1; n <= 3; ++n) {
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
            GaussianMeasure m(scenarios::random_spd(n, 31 * static_cast<std::uint64_t>(n) + seed));
            for (int l = 0; l <= 8; l += 2) {
                for (const MultiIndex& a : enumerate_degree(n, l)) {
                    const double oracle = testing::isserlis_moment(m.covariance(), a);
                    const double got = m.monomial_moment(a);
                    CHECK(got == doctest::Approx(oracle).epsilon(1e-10));
                }
            }
        }
    }
}

TEST_CASE("moments agree with crude Monte Carlo") {
    Eigen::MatrixXd s(2, 2);
    s << 1.0, 0.5, 0.5, 1.25;
    GaussianMeasure m(s);
    const std::int64_t n = 1000000;
    const Eigen::MatrixXd draws = random_gaussian(m, 99, n);
    for (int l = 2; l <= 4; l += 2) {
        for (const MultiIndex& a : enumerate_degree(2, l)) {
            double mean = 0.0, sq = 0.0;
            for (std::int64_t i = 0; i < n; ++i) {
                double v = 1.0;
                for (int d = 0; d < 2; ++d) {
                    for (int k = 0; k < a[d]; ++k) {
                        v *= draws(i, d);
                    }
                }
                mean += v;
                sq += v * v;
            }
            mean /= static_cast<double>(n);
            sq /= static_cast<double>(n);
            const double se = std::sqrt((sq - mean * mean) / static_cast<double>(n));
            CHECK(std::abs(m.monomial_moment(a) - mean) <= 4.0 * se);
        }
    }
}

TEST_CASE("polynomial expectation") {
    GaussianMeasure m(scenarios::example1_covariance(2));
    CHECK(m.expectation(SparsePolynomial::constant(3, 1.0)) == 1.0);
    CHECK(m.expectation(SparsePolynomial::monomial(MultiIndex{1, 1, 0}, 1.0)) ==
          doctest::Approx(0.2));
    GaussianMeasure id(Eigen::MatrixXd::Identity(2, 2));
    CHECK(id.expectation(SparsePolynomial::monomial(MultiIndex{1, 1}, 1.0)) == 0.0);
}

TEST_CASE("gaussian map") {
    GaussianMeasure id(Eigen::MatrixXd::Identity(3, 3));
    const Eigen::VectorXd zero = gaussian_map(id, std::array{0.5, 0.5, 0.5});
    CHECK(zero.cwiseAbs().maxCoeff() < 1e-12);

    Eigen::MatrixXd four(1, 1);
    four << 4.0;
    GaussianMeasure m(four);
    CHECK(gaussian_map(m, std::array{0.975})(0) == doctest::Approx(3.919928).epsilon(1e-6));
    CHECK_THROWS_AS(gaussian_map(m, std::array{0.0}), DomainError);
}

TEST_CASE("mapped Sobol points reproduce the covariance") {
    GaussianMeasure m(scenarios::example1_covariance(3));
    const Eigen::MatrixXd x = sobol_gaussian_points(m, QmcConfig{4096, 0, 3});
    Eigen::MatrixXd cov = (x.transpose() * x) / static_cast<double>(x.rows());
    const double rel = (cov - m.covariance()).norm() / m.covariance().norm();
    CHECK(rel < 0.02);
}

TEST_CASE("mapped Sobol moments improve as the sample doubles") {
    GaussianMeasure m(scenarios::example1_covariance(2));
    std::vector<double> errors;
    for (int n : {1024, 2048, 4096, 8192}) {
        const Eigen::MatrixXd x = sobol_gaussian_points(m, QmcConfig{n, 0, 3});
        double err = (x.colwise().mean()).cwiseAbs().maxCoeff();
        Eigen::MatrixXd cov = (x.transpose() * x) / static_cast<double>(x.rows());
        err = std::max(err, (cov - m.covariance()).cwiseAbs().maxCoeff());
        errors.push_back(err);
    }
    int violations = 0;
    for (std::size_t i = 1; i < errors.size(); ++i) {
        if (errors[i] >= errors[i - 1]) {
            ++violations;
        }
    }
    CHECK(violations <= 1);
}

TEST_CASE("seeded sampling is reproducible and statistically sane") {
    GaussianMeasure m(Eigen::MatrixXd::Identity(2, 2));
    const Eigen::MatrixXd a = random_gaussian(m, 1234, 1000);
    const Eigen::MatrixXd b = random_gaussian(m, 1234, 1000);
    CHECK(a == b);

    const Eigen::MatrixXd big = random_gaussian(m, 42, 100000);
    CHECK(big.colwise().mean().cwiseAbs().maxCoeff() < 0.02);
    Eigen::MatrixXd cov = (big.transpose() * big) / static_cast<double>(big.rows());
    CHECK((cov - m.covariance()).norm() / m.covariance().norm() < 0.03);
}

TEST_CASE("exponential kernel covariance") {
    std::vector<double> coords(11);
    for (int i = 0; i < 11; ++i) {
        coords[static_cast<std::size_t>(i)] = 0.2 * i;
    }
    const double variance = std::log(1.04);
    const Eigen::MatrixXd s = exponential_field_covariance(coords, variance, 0.4);
    for (int i = 0; i < 11; ++i) {
        CHECK(s(i, i) == doctest::Approx(variance));
    }
    CHECK(s(0, 1) == doctest::Approx(variance * std::exp(-0.5)));
    CHECK_NOTHROW(GaussianMeasure{s}); // the kernel is positive-definite
    CHECK_THROWS_AS(exponential_field_covariance(coords, variance, 0.0), DomainError);
}
