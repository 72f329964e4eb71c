#include <doctest.h>

#include <cmath>

#include "screening/cohort_sim.hpp"
#include "screening/errors.hpp"

using namespace screening;

namespace {

double ppv_sigma(double rho, std::uint64_t positives) {
    return std::sqrt(rho * (1.0 - rho) / static_cast<double>(positives));
}

}  // namespace

TEST_CASE("perfect test has no misclassifications") {
    for (std::uint64_t seed : {0ull, 1ull, 99ull}) {
        const CohortResult r = simulate_cohort(ScreeningTest(1.0, 1.0), Prevalence(0.3), 1000, seed);
        CHECK(r.false_pos == 0);
        CHECK(r.false_neg == 0);
        REQUIRE(r.empirical_ppv.has_value());
        CHECK(*r.empirical_ppv == 1.0);
        CHECK_FALSE(r.empirical_lr_plus.has_value());
        CHECK(r.true_pos + r.true_neg == 1000);
    }
}

TEST_CASE("counts sum to n") {
    const CohortResult r = simulate_cohort(ScreeningTest(0.8, 0.7), Prevalence(0.2), 12345, 5);
    CHECK(r.true_pos + r.false_pos + r.true_neg + r.false_neg == 12345);
    CHECK(r.n == 12345);
    CHECK(r.seed == 5);
}

TEST_CASE("figure 5 point, n = 1e6") {
    const ScreeningTest t(0.95, 0.75);
    const CohortResult r = simulate_cohort(t, Prevalence(0.34), 1'000'000, 42);
    REQUIRE(r.empirical_ppv.has_value());
    const double rho = ppv(t, Prevalence(0.34));  // 0.661885
    CHECK(std::abs(*r.empirical_ppv - rho) < 3.0 * ppv_sigma(rho, r.positives()));
    REQUIRE(r.empirical_lr_plus.has_value());
    CHECK(std::abs(*r.empirical_lr_plus / 3.8 - 1.0) < 0.05);
}

TEST_CASE("uninformative test has LR+ near 1") {
    const CohortResult r = simulate_cohort(ScreeningTest(0.5, 0.5), Prevalence(0.5), 1'000'000, 7);
    REQUIRE(r.empirical_lr_plus.has_value());
    // Delta-method sigma of the ratio of two proportions near 0.5 with ~5e5 each.
    const double sigma = std::sqrt(2.0 * 0.5 * 0.5 / 5e5) / 0.5;
    CHECK(std::abs(*r.empirical_lr_plus - 1.0) < 3.0 * sigma);
}

TEST_CASE("results are deterministic and independent of thread count") {
    const ScreeningTest t(0.7, 0.85);
    const CohortResult serial = simulate_cohort(t, Prevalence(0.15), 200'000, 2024, 1);
    CHECK(simulate_cohort(t, Prevalence(0.15), 200'000, 2024, 1) == serial);
    CHECK(simulate_cohort(t, Prevalence(0.15), 200'000, 2024, 3) == serial);
    CHECK(simulate_cohort(t, Prevalence(0.15), 200'000, 2024, 8) == serial);
    CHECK_FALSE(simulate_cohort(t, Prevalence(0.15), 200'000, 2025, 1) == serial);
}

TEST_CASE("zero positives give absent estimates") {
    const CohortResult r = simulate_cohort(ScreeningTest(0.0, 1.0), Prevalence(0.5), 1000, 3);
    CHECK(r.positives() == 0);
    CHECK_FALSE(r.empirical_ppv.has_value());
    CHECK_FALSE(r.ppv_reason.empty());
    CHECK_FALSE(r.empirical_lr_plus.has_value());
}

TEST_CASE("cohort size must be positive") {
    CHECK_THROWS_AS(simulate_cohort(ScreeningTest(0.5, 0.5), Prevalence(0.5), 0, 1),
                    InvalidParameterError);
}

TEST_CASE("derived seeds differ per grid index") {
    CHECK(derive_seed(42, 0) != derive_seed(42, 1));
    CHECK(derive_seed(42, 0) != derive_seed(43, 0));
    CHECK(derive_seed(42, 7) == derive_seed(42, 7));
}

TEST_CASE("empirical_ppv_curve") {
    SUBCASE("uninformative") {
        const auto curve = empirical_ppv_curve(ScreeningTest(0.5, 0.5), {Prevalence(0.5)}, 1'000'000, 1);
        REQUIRE(curve.size() == 1);
        REQUIRE(curve[0].ppv.has_value());
        CHECK(std::abs(*curve[0].ppv - 0.5) < 3.0 * ppv_sigma(0.5, curve[0].positives));
    }
    SUBCASE("figure 5 test across the plane") {
        const ScreeningTest t(0.95, 0.75);
        const std::vector<Prevalence> grid = {Prevalence(0.1), Prevalence(0.339), Prevalence(0.9)};
        // ppv: 0.296875, 0.660887, 0.971591
        const auto curve = empirical_ppv_curve(t, grid, 1'000'000, 11);
        REQUIRE(curve.size() == 3);
        for (const auto& p : curve) {
            REQUIRE(p.ppv.has_value());
            const double rho = ppv(t, p.phi);
            CHECK(std::abs(*p.ppv - rho) < 3.0 * ppv_sigma(rho, p.positives));
        }
        CHECK(ppv(t, Prevalence(0.1)) == doctest::Approx(0.296875).epsilon(1e-12));
    }
    SUBCASE("low-epsilon brown curve of figure 2") {
        const ScreeningTest t(0.02, 0.02);
        const auto curve = empirical_ppv_curve(t, {Prevalence(0.5)}, 1'000'000, 5);
        REQUIRE(curve[0].ppv.has_value());
        CHECK(ppv(t, Prevalence(0.5)) == doctest::Approx(0.02).epsilon(1e-12));
        CHECK(std::abs(*curve[0].ppv - 0.02) < 3.0 * ppv_sigma(0.02, curve[0].positives));
    }
    SUBCASE("zero positives are reported, not fabricated") {
        const auto curve = empirical_ppv_curve(ScreeningTest(0.0, 1.0), {Prevalence(0.5)}, 100, 5);
        CHECK_FALSE(curve[0].ppv.has_value());
        CHECK_FALSE(curve[0].reason.empty());
    }
    SUBCASE("preconditions") {
        CHECK_THROWS_AS(empirical_ppv_curve(ScreeningTest(0.5, 0.5), {Prevalence(0.5)}, 99, 1),
                        InvalidParameterError);
        CHECK_THROWS_AS(empirical_ppv_curve(ScreeningTest(0.5, 0.5), {Prevalence(0.0)}, 100, 1),
                        InvalidParameterError);
    }
}
