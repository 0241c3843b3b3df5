#include <cmath>

#include "doctest.h"
#include "extropy/error.hpp"
#include "extropy/measures.hpp"
#include "oracle.hpp"

using namespace extropy;

namespace {

const WeightSpec W1 = WeightSpec::power(1.0);
const WeightSpec ID = WeightSpec::identity();

// Independent x-domain reference for 1/2 ∫_lo^hi w(x)(1 - F²) dx.
double ncj_oracle(const Distribution& d, double m) {
    const auto s = d.support();
    auto g = [&](double x) {
        const double f = d.cdf(x);
        return std::pow(x, m) * (1.0 - f * f);
    };
    std::vector<double> cuts{s.lower};
    for (double b : d.breakpoints())
        if (b > s.lower && b < s.upper) cuts.push_back(b);
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) total += oracle::integrate(g, cuts[i], cuts[i + 1]);
    total += std::isfinite(s.upper) ? oracle::integrate(g, cuts.back(), s.upper) : oracle::integrate_to_inf(g, cuts.back());
    return 0.5 * total;
}

}  // namespace

TEST_SUITE("measures") {
    TEST_CASE("exponential GWCRJ closed form") {
        for (double lam : {0.5, 1.0, 2.0})
            for (double m : {0.0, 0.5, 1.0, 2.0}) {
                const double expected = -std::tgamma(m + 1.0) / (std::pow(2.0, m + 2.0) * std::pow(lam, m + 1.0));
                const auto v = gwcrj(Distribution::exponential(lam), WeightSpec::power(m));
                CHECK(v.value == doctest::Approx(expected).epsilon(1e-12));
                CHECK(v.method == MeasureValue::Method::ClosedForm);
            }
    }

    TEST_CASE("uniform WNCJ and GWCRJ") {
        for (auto [a, b] : {std::pair{0.0, 1.0}, {2.0, 3.0}, {1.0, 4.0}, {0.5, 0.75}})
            CHECK(gwncj(Distribution::uniform(a, b), W1).value == doctest::Approx((b - a) * (5 * a + 3 * b) / 24).epsilon(1e-13));
        CHECK(gwcrj(Distribution::uniform(0, 1), W1).value == doctest::Approx(-1.0 / 24).epsilon(1e-13));
    }

    TEST_CASE("power-law WNCJ") {
        for (double lam : {1.5, 2.0, 3.0, 7.0})
            CHECK(gwncj(Distribution::power(lam), W1).value == doctest::Approx(lam / (4 * (lam + 1))).epsilon(1e-13));
    }

    TEST_CASE("exponential WNCJ equals 7/(8 lambda^2)") {
        // oracle: 1/2 ∫ x (1 - (1 - e^{-λx})²) dx = 1/2 (2/λ² - 1/(4λ²))
        for (double lam : {0.5, 1.0, 2.0}) {
            const auto d = Distribution::exponential(lam);
            CHECK(gwncj(d, W1).value == doctest::Approx(7.0 / (8 * lam * lam)).epsilon(1e-13));
            CHECK(ncj_oracle(d, 1.0) == doctest::Approx(7.0 / (8 * lam * lam)).epsilon(1e-10));
        }
    }

    TEST_CASE("unit-weight NCJ values are finite") {
        CHECK(gwncj(Distribution::uniform(0, 3), ID).value == doctest::Approx(1.0).epsilon(1e-13));  // (b-a)/3
        CHECK(gwncj(Distribution::power(2), ID).value == doctest::Approx(0.4).epsilon(1e-13));      // λ/(2λ+1)
        const auto e = gwncj(Distribution::exponential(2), ID);
        CHECK_FALSE(e.divergent);
        CHECK(e.value == doctest::Approx(3.0 / 8).epsilon(1e-13));  // 3/(4λ)
        CHECK(ncj_oracle(Distribution::exponential(2), 0.0) == doctest::Approx(3.0 / 8).epsilon(1e-10));
    }

    TEST_CASE("divergence is detected, not truncated") {
        const auto cpj = cumulative_past_extropy(Distribution::exponential(1));
        CHECK(cpj.divergent);
        CHECK(cpj.value == -INFINITY);
        const auto ok = cumulative_past_extropy(Distribution::uniform(0, 1));
        CHECK(ok.value == doctest::Approx(-1.0 / 6).epsilon(1e-13));
    }

    TEST_CASE("closed forms agree with quadrature") {
        const std::vector<Distribution> models{Distribution::uniform(0, 1), Distribution::uniform(2, 5),
                                               Distribution::exponential(0.5), Distribution::exponential(2),
                                               Distribution::power(1.5), Distribution::power(3),
                                               Distribution::degenerate(2)};
        for (const auto& d : models)
            for (double m : {0.0, 0.5, 1.0, 2.0})
                for (bool residual : {false, true}) {
                    const auto w = WeightSpec::power(m);
                    const auto closed = residual ? gwcrj(d, w) : gwncj(d, w);
                    const auto num = residual ? gwcrj(d, w, {Origin::Support, true}) : gwncj(d, w, {Origin::Support, true});
                    CHECK(std::abs(closed.value - num.value) <= 1e-8 * std::max(1.0, std::abs(closed.value)));
                }
    }

    TEST_CASE("quadrature route matches the tanh-sinh oracle") {
        const auto mix = Distribution::mixture({{0.4, Distribution::uniform(0, 2)}, {0.6, Distribution::exponential(1)}});
        for (double m : {0.0, 1.0, 2.5}) CHECK(gwncj(mix, WeightSpec::power(m)).value == doctest::Approx(ncj_oracle(mix, m)).epsilon(1e-9));
    }

    TEST_CASE("power(0) and identity weights coincide") {
        for (const auto& d : {Distribution::uniform(1, 2), Distribution::exponential(3), Distribution::power(4)}) {
            CHECK(gwncj(d, WeightSpec::power(0)).value == gwncj(d, ID).value);
            CHECK(gwcrj(d, WeightSpec::power(0)).value == gwcrj(d, ID).value);
        }
        CHECK_THROWS_AS(WeightSpec::power(-1.0), DomainError);
    }

    TEST_CASE("extropy") {
        CHECK(extropy::extropy(Distribution::uniform(0, 1)).value == doctest::Approx(-0.5));
        CHECK(extropy::extropy(Distribution::uniform(2, 6)).value == doctest::Approx(-1.0 / 8));
        CHECK(extropy::extropy(Distribution::exponential(3)).value == doctest::Approx(-0.75).epsilon(1e-13));
        CHECK_THROWS_AS(extropy::extropy(Distribution::degenerate(1)), DomainError);
        const auto mix = Distribution::mixture({{0.5, Distribution::uniform(0, 1)}, {0.5, Distribution::uniform(0, 2)}});
        CHECK(extropy::extropy(mix).value == doctest::Approx(-0.5 * (0.75 * 0.75 + 0.25 * 0.25)).epsilon(1e-11));
    }

    TEST_CASE("cumulative residual extropy") {
        CHECK(cumulative_residual_extropy(Distribution::uniform(0, 1)).value == doctest::Approx(-1.0 / 6));
        CHECK(cumulative_residual_extropy(Distribution::exponential(2)).value == doctest::Approx(-1.0 / 8));
        CHECK(cumulative_residual_extropy(Distribution::degenerate(4)).value == 0.0);
    }

    TEST_CASE("degenerate laws have zero WNCJ, others positive") {
        CHECK(gwncj(Distribution::degenerate(3), W1).value == 0.0);
        CHECK(gwcrj(Distribution::degenerate(3), W1).value == 0.0);
        for (const auto& d : {Distribution::uniform(0, 1), Distribution::exponential(5), Distribution::power(9),
                              Distribution::uniform(10, 10.001)})
            CHECK(gwncj(d, W1).value > 0.0);
    }

    TEST_CASE("largest order statistic") {
        for (int n : {1, 2, 5, 10})
            CHECK(wncj_max_order_stat(Distribution::uniform(0, 1), n).value == doctest::Approx(n / (4.0 * (n + 1))).epsilon(1e-10));
        for (double lam : {1.5, 3.0})
            for (int n : {1, 3, 6}) {
                // direct oracle of 1/2 ∫ (1 - u^{2n}) u^{(2-λ)/λ} / λ du
                const double ref = 0.5 * oracle::integrate(
                                             [&](double u) { return (1 - std::pow(u, 2 * n)) * std::pow(u, (2 - lam) / lam) / lam; }, 0, 1);
                const double v = wncj_max_order_stat(Distribution::power(lam), n).value;
                CHECK(v == doctest::Approx(ref).epsilon(1e-9));
                CHECK(v == doctest::Approx(n * lam / (4 * (n * lam + 1))).epsilon(1e-10));
                CHECK(v > 0.0);
            }
        for (const auto& d : {Distribution::exponential(2), Distribution::uniform(2, 3), Distribution::power(4)}) {
            CHECK(wncj_max_order_stat(d, 1).value == doctest::Approx(gwncj(d, W1).value).epsilon(1e-10));
            for (int n : {2, 4, 8}) CHECK(wncj_max_order_stat(d, n).value >= gwncj(d, W1).value);
        }
    }

    TEST_CASE("linear transform identity") {
        for (const auto& base : {Distribution::uniform(0, 1), Distribution::uniform(1, 3), Distribution::power(2.5)})
            for (double a : {0.5, 1.0, 3.0})
                for (double b : {0.0, 0.7, 2.0}) {
                    const double lhs = gwncj(Distribution::affine(base, a, b), W1).value;
                    const double rhs = a * a * gwncj(base, W1).value + a * b * gwncj(base, ID).value;
                    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-8));
                }
        // uniform case through the exact representation U(a*lo+b, a*hi+b)
        const double lhs = gwncj(Distribution::uniform(2 * 1 + 3, 2 * 4 + 3), W1).value;
        const auto base = Distribution::uniform(1, 4);
        CHECK(lhs == doctest::Approx(4 * gwncj(base, W1).value + 6 * gwncj(base, ID).value).epsilon(1e-12));
    }

    TEST_CASE("usual stochastic order") {
        for (auto [l1, l2] : {std::pair{2.0, 1.0}, {5.0, 0.5}, {1.1, 1.0}})
            CHECK(gwncj(Distribution::exponential(l1), W1).value <= gwncj(Distribution::exponential(l2), W1).value);
    }

    TEST_CASE("origin convention") {
        // over [0, inf) the stretch below the support adds 1/2 ∫_0^a x dx
        const auto d = Distribution::uniform(2, 3);
        CHECK(gwncj(d, W1).value == doctest::Approx(19.0 / 24).epsilon(1e-14));
        CHECK(gwncj(d, W1, {Origin::Zero, false}).value == doctest::Approx(19.0 / 24 + 1.0).epsilon(1e-14));
        CHECK(gwcrj(d, W1, {Origin::Zero, false}).value == doctest::Approx(gwcrj(d, W1).value - 1.0).epsilon(1e-14));
        CHECK(gwncj(Distribution::degenerate(2), W1, {Origin::Zero, false}).value == doctest::Approx(1.0));
    }

    TEST_CASE("sign contracts") {
        for (const auto& d : {Distribution::uniform(0, 1), Distribution::exponential(1), Distribution::power(2)})
            for (double m : {-0.5, 0.0, 1.0, 3.0}) {
                CHECK(gwncj(d, WeightSpec::power(m)).value >= 0.0);
                CHECK(gwcrj(d, WeightSpec::power(m)).value <= 0.0);
            }
    }

    TEST_CASE("empirical law uses exact step sums") {
        const auto e = Distribution::empirical({0.0, 1.0});
        CHECK(gwncj(e, W1).value == doctest::Approx(3.0 / 16).epsilon(1e-15));
    }
}
