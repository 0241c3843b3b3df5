#include <cmath>

#include "doctest.h"
#include "extropy/conditional.hpp"
#include "extropy/error.hpp"

using namespace extropy;

namespace {

const WeightSpec W1 = WeightSpec::power(1.0);

Distribution random_component(Rng& rng) {
    switch (rng.index(3)) {
        case 0: {
            const double a = 3 * rng.uniform_open();
            return Distribution::uniform(a, a + 0.1 + 3 * rng.uniform_open());
        }
        case 1: return Distribution::exponential(0.2 + 3 * rng.uniform_open());
        default: return Distribution::power(1.05 + 5 * rng.uniform_open());
    }
}

}  // namespace

TEST_SUITE("conditional") {
    TEST_CASE("per-cell values") {
        const MixtureModel one({1.0}, {Distribution::uniform(0, 1)});
        CHECK(cwncj(one)[0].value == doctest::Approx(0.125));
        CHECK(cwncj_expectation_gap(one).slack == doctest::Approx(0.0).epsilon(1e-15));

        const MixtureModel twin({0.5, 0.5}, {Distribution::uniform(0, 1), Distribution::uniform(0, 1)});
        CHECK(cwncj(twin)[1].value == doctest::Approx(0.125));

        const MixtureModel split({0.5, 0.5}, {Distribution::uniform(0, 1), Distribution::uniform(2, 3)});
        const auto v = cwncj(split);
        CHECK(v[0].value == doctest::Approx(1.0 / 8));
        CHECK(v[1].value == doctest::Approx(19.0 / 24));
    }

    TEST_CASE("expectation gap") {
        const MixtureModel split({0.5, 0.5}, {Distribution::uniform(0, 1), Distribution::uniform(2, 3)});
        const auto r = cwncj_expectation_gap(split);
        CHECK(r.slack > 0.0);
        CHECK(r.satisfied);
        const MixtureModel same({0.9, 0.1}, {Distribution::exponential(1), Distribution::exponential(1)});
        const auto s = cwncj_expectation_gap(same);
        CHECK(std::abs(s.slack) < 1e-12);
        CHECK_FALSE(s.note.empty());
    }

    TEST_CASE("Jensen direction on random mixtures") {
        Rng rng(2024, 0);
        for (int i = 0; i < 200; ++i) {
            const std::size_t k = 2 + rng.index(2);
            std::vector<double> w(k);
            double total = 0.0;
            for (auto& x : w) total += (x = 0.05 + rng.uniform_open());
            for (auto& x : w) x /= total;
            w.back() = 1.0;
            for (std::size_t j = 0; j + 1 < k; ++j) w.back() -= w[j];
            std::vector<Distribution> parts;
            for (std::size_t j = 0; j < k; ++j) parts.push_back(random_component(rng));
            CHECK(cwncj_expectation_gap(MixtureModel(w, parts)).slack >= -1e-9);
        }
    }

    TEST_CASE("coarsening") {
        const MixtureModel fine({0.3, 0.3, 0.4}, {Distribution::uniform(0, 1), Distribution::uniform(0, 2), Distribution::uniform(1, 3)});
        const auto rep = cwncj_coarsening(fine, {{0, 1}, {2}});
        CHECK(rep.all_satisfied());
        CHECK(rep.cells.size() == 2);
        CHECK(rep.cells[1].slack == doctest::Approx(0.0).epsilon(1e-15));

        const auto singletons = cwncj_coarsening(fine, {{0}, {1}, {2}});
        for (const auto& c : singletons.cells) CHECK(c.slack == doctest::Approx(0.0).epsilon(1e-15));

        const auto whole = cwncj_coarsening(fine, {{0, 1, 2}});
        CHECK(whole.cells[0].lhs == doctest::Approx(cwncj_expectation_gap(fine).lhs).epsilon(1e-14));
        CHECK(whole.cells[0].rhs == doctest::Approx(cwncj_expectation_gap(fine).rhs).epsilon(1e-12));

        CHECK_THROWS_AS(coarsen(fine, {{0, 1}, {}, {2}}), DomainError);
        CHECK_THROWS_AS(coarsen(fine, {{0, 1}}), DomainError);
        CHECK_THROWS_AS(coarsen(fine, {{0, 1}, {1, 2}}), DomainError);
    }

    TEST_CASE("tower consistency") {
        const MixtureModel fine({0.1, 0.2, 0.3, 0.4}, {Distribution::uniform(0, 1), Distribution::exponential(2),
                                                       Distribution::power(3), Distribution::uniform(1, 2)});
        const auto step1 = coarsen(fine, {{0, 1}, {2}, {3}});
        const auto step2 = coarsen(step1, {{0, 1}, {2}});
        const auto direct = coarsen(fine, {{0, 1, 2}, {3}});
        for (std::size_t g = 0; g < 2; ++g) {
            CHECK(step2.weights()[g] == doctest::Approx(direct.weights()[g]).epsilon(1e-14));
            CHECK(std::abs(gwncj(step2.components()[g], W1).value - gwncj(direct.components()[g], W1).value) < 1e-10);
        }
    }

    TEST_CASE("conditional log-sum bound holds per component") {
        const MixtureModel m({0.2, 0.5, 0.3}, {Distribution::uniform(0, 1), Distribution::exponential(1), Distribution::power(2)});
        for (const auto& c : m.components()) CHECK(bound_logsum(c).satisfied);
    }

    TEST_CASE("weights must form a distribution") {
        CHECK_THROWS_AS(MixtureModel({0.5, 0.6}, {Distribution::uniform(0, 1), Distribution::uniform(0, 1)}), DomainError);
        CHECK_THROWS_AS(MixtureModel({1.0, 0.0}, {Distribution::uniform(0, 1), Distribution::uniform(0, 1)}), DomainError);
    }
}
