#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "extropy/distribution.hpp"
#include "extropy/error.hpp"
#include "oracle.hpp"

using namespace extropy;

namespace {

std::vector<Distribution> continuous_models() {
    return {Distribution::uniform(0, 1), Distribution::uniform(2, 5), Distribution::exponential(0.5),
            Distribution::exponential(2), Distribution::power(1.5), Distribution::power(3)};
}

double ks_statistic(const Distribution& d, std::vector<double> x) {
    std::sort(x.begin(), x.end());
    const double n = static_cast<double>(x.size());
    double stat = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double f = d.cdf(x[i]);
        stat = std::max({stat, static_cast<double>(i + 1) / n - f, f - static_cast<double>(i) / n});
    }
    return stat;
}

}  // namespace

TEST_SUITE("distribution") {
    TEST_CASE("cdf examples") {
        CHECK(Distribution::uniform(0, 1).cdf(0.5) == 0.5);
        CHECK(Distribution::exponential(1).cdf(0.0) == 0.0);
        CHECK(Distribution::power(2).cdf(0.5) == doctest::Approx(0.25).epsilon(1e-15));
        const auto d = Distribution::degenerate(2);
        CHECK(d.cdf(1.999) == 0.0);
        CHECK(d.cdf(2.0) == 1.0);
    }

    TEST_CASE("quantile examples") {
        CHECK(Distribution::uniform(0, 1).quantile(0.3) == doctest::Approx(0.3).epsilon(1e-15));
        CHECK(Distribution::power(3).quantile(0.2) == doctest::Approx(std::pow(0.2, 1.0 / 3.0)).epsilon(1e-14));
        CHECK(Distribution::exponential(2).quantile(0.5) == doctest::Approx(std::log(2.0) / 2.0).epsilon(1e-14));
        CHECK_THROWS_AS(Distribution::uniform(0, 1).quantile(0.0), DomainError);
        CHECK_THROWS_AS(Distribution::exponential(1).quantile(1.0), DomainError);
    }

    TEST_CASE("hazard examples") {
        CHECK(Distribution::exponential(3).hazard(1.7) == doctest::Approx(3.0).epsilon(1e-14));
        CHECK(Distribution::uniform(0, 1).hazard(0.5) == doctest::Approx(2.0).epsilon(1e-14));
        CHECK(Distribution::power(2).hazard(0.5) == doctest::Approx(4.0 / 3.0).epsilon(1e-14));
        CHECK_THROWS_AS(Distribution::uniform(0, 1).hazard(1.0), DomainError);
        CHECK_THROWS_AS(Distribution::degenerate(1).pdf(1.0), DomainError);
        CHECK_THROWS_AS(Distribution::degenerate(1).hazard(0.5), DomainError);
    }

    TEST_CASE("parameter validation") {
        CHECK_THROWS_AS(Distribution::uniform(1, 1), DomainError);
        CHECK_THROWS_AS(Distribution::uniform(-1, 1), DomainError);
        CHECK_THROWS_AS(Distribution::exponential(0), DomainError);
        CHECK_THROWS_AS(Distribution::power(1.0), DomainError);
        CHECK_THROWS_AS(Distribution::degenerate(-0.5), DomainError);
        CHECK_THROWS_AS(Distribution::empirical({}), DomainError);
        CHECK_THROWS_AS(Distribution::mixture({{0.5, Distribution::exponential(1)}}), DomainError);
    }

    TEST_CASE("quantile inverts cdf on the centile grid") {
        for (const auto& d : continuous_models()) {
            for (int k = 1; k <= 99; ++k) {
                const double u = k / 100.0;
                CHECK(std::abs(d.cdf(d.quantile(u)) - u) < 1e-10);
            }
        }
        const auto mix = Distribution::mixture({{0.3, Distribution::uniform(0, 1)}, {0.7, Distribution::exponential(2)}});
        for (int k = 1; k <= 99; ++k) CHECK(std::abs(mix.cdf(mix.quantile(k / 100.0)) - k / 100.0) < 1e-10);
    }

    TEST_CASE("survival and cdf sum to one exactly") {
        auto models = continuous_models();
        models.push_back(Distribution::degenerate(1.5));
        models.push_back(Distribution::empirical({0.5, 1.0, 1.0, 3.0}));
        models.push_back(Distribution::affine(Distribution::exponential(1), 2.0, 1.0));
        models.push_back(Distribution::mixture({{0.5, Distribution::uniform(0, 1)}, {0.5, Distribution::power(2)}}));
        for (const auto& d : models)
            for (double x : {0.0, 0.1, 0.5, 0.99, 1.0, 1.5, 2.2, 3.0, 4.5, 7.0, 30.0}) CHECK(d.cdf(x) + d.survival(x) == 1.0);
    }

    TEST_CASE("sampling") {
        const auto d = Distribution::degenerate(3);
        CHECK(d.sample(5, 11) == std::vector<double>(5, 3.0));
        const auto u = Distribution::uniform(0, 1).sample(10000, 3);
        CHECK(std::abs(oracle::mean(u) - 0.5) < 0.02);
        CHECK(Distribution::exponential(1).sample(100, 99) == Distribution::exponential(1).sample(100, 99));
        CHECK(Distribution::exponential(1).sample(100, 99) != Distribution::exponential(1).sample(100, 98));
        for (double v : Distribution::exponential(4).sample(1000, 5)) CHECK(v >= 0.0);
    }

    TEST_CASE("Kolmogorov-Smirnov distance of 1e5 draws") {
        std::uint64_t seed = 20;
        for (const auto& d : continuous_models()) CHECK(ks_statistic(d, d.sample(100000, seed++)) < 0.01);
    }

    TEST_CASE("empirical law is the right-continuous step cdf") {
        const auto e = Distribution::empirical({3.0, 1.0, 2.0, 2.0});
        CHECK(e.cdf(0.99) == 0.0);
        CHECK(e.cdf(1.0) == 0.25);
        CHECK(e.cdf(2.0) == 0.75);
        CHECK(e.quantile(0.25) == 1.0);
        CHECK(e.quantile(0.26) == 2.0);
        CHECK(e.quantile(1.0) == 3.0);
    }

    TEST_CASE("expectation on the probability scale") {
        CHECK(Distribution::exponential(2).expectation([](double x) { return x * x; }).value ==
              doctest::Approx(0.5).epsilon(1e-11));
        CHECK(Distribution::uniform(2, 5).expectation([](double x) { return x; }).value ==
              doctest::Approx(3.5).epsilon(1e-12));
        CHECK(Distribution::degenerate(2).expectation([](double x) { return x * x; }).value == 4.0);
    }
}
