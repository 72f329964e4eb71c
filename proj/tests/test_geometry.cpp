#include <doctest.h>

#include <cmath>
#include <numbers>

#include "screening/errors.hpp"
#include "screening/geometry.hpp"
#include "support.hpp"

using namespace screening;
using screening::testing::central_difference;
using screening::testing::rel_close;
using screening::testing::Sampler;

namespace {

// Independent route to phi_e: bisect on the finite-difference slope of ppv
// until it crosses 1. Knows nothing about the closed forms.
double unit_slope_root(const ScreeningTest& t) {
    const auto slope = [&t](double phi) {
        return central_difference([&t](double x) { return ppv(t, Prevalence(x)); }, phi, 1e-7);
    };
    double lo = 1e-6;
    double hi = 1.0 - 1e-6;
    const bool decreasing = slope(lo) > slope(hi);
    for (int i = 0; i < 200 && hi - lo > 1e-13; ++i) {
        const double mid = 0.5 * (lo + hi);
        const bool above = slope(mid) > 1.0;
        if (above == decreasing) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("prevalence_threshold reference values") {
    const ThresholdPoint fig = prevalence_threshold(ScreeningTest(0.95, 0.75));
    // Figure 5/6 plot the threshold at (0.34, 0.66).
    CHECK(std::abs(fig.phi_e - 0.34) < 0.005);
    CHECK(std::abs(fig.rho_e - 0.66) < 0.005);
    CHECK(fig.phi_e == doctest::Approx(0.339056738915).epsilon(1e-11));
    CHECK(fig.rho_e == doctest::Approx(0.660943261085).epsilon(1e-11));

    CHECK(prevalence_threshold(ScreeningTest(0.5, 0.5)).phi_e == doctest::Approx(0.5).epsilon(1e-15));

    const ScreeningTest reversed(0.75, 0.95);
    const double phi_e = prevalence_threshold(reversed).phi_e;
    CHECK(phi_e == doctest::Approx(0.205213096158).epsilon(1e-11));
    CHECK(std::abs(phi_e - unit_slope_root(reversed)) < 1e-6);
}

TEST_CASE("prevalence_threshold degenerate tests") {
    CHECK_THROWS_AS(prevalence_threshold(ScreeningTest(0.0, 1.0)), DegenerateTestError);
    CHECK_THROWS_AS(prevalence_threshold(ScreeningTest(0.0, 0.5)), DegenerateTestError);
    CHECK_THROWS_AS(prevalence_threshold(ScreeningTest(0.5, 1.0)), DegenerateTestError);
}

TEST_CASE("threshold_forms") {
    const ThresholdForms f1 = threshold_forms(ScreeningTest(0.95, 0.75));
    CHECK(f1.difference_form == doctest::Approx(0.339056738915).epsilon(1e-11));
    CHECK(f1.root_form == doctest::Approx(0.339056738915).epsilon(1e-11));
    const ThresholdForms f2 = threshold_forms(ScreeningTest(0.75, 0.95));
    CHECK(f2.difference_form == doctest::Approx(0.205213096158).epsilon(1e-11));
    CHECK(f2.root_form == doctest::Approx(0.205213096158).epsilon(1e-11));
    CHECK_THROWS_AS(threshold_forms(ScreeningTest(0.5, 0.5)), EpsilonOneError);
    CHECK_THROWS_AS(threshold_forms(ScreeningTest(0.3, 0.7)), EpsilonOneError);
}

TEST_CASE("beta_geometry") {
    const BetaGeometry sym = beta_geometry(ScreeningTest(0.5, 0.5));
    CHECK(sym.beta == doctest::Approx(std::numbers::pi / 4).epsilon(1e-15));
    CHECK(sym.psi == 1.0);
    CHECK(sym.origin_slope == 1.0);

    const BetaGeometry fig = beta_geometry(ScreeningTest(0.95, 0.75));
    CHECK(fig.beta == doctest::Approx(0.473984870691).epsilon(1e-11));
    CHECK(fig.psi == doctest::Approx(0.512989176043).epsilon(1e-11));
    CHECK(fig.origin_slope == doctest::Approx(1.94935886896).epsilon(1e-11));

    // Cross-check: beta is the angle whose tangent is dx/dy of the threshold point.
    const ThresholdPoint th = prevalence_threshold(ScreeningTest(0.95, 0.75));
    CHECK(fig.beta == doctest::Approx(std::atan2(th.phi_e, th.rho_e)).epsilon(1e-14));

    CHECK(beta_geometry(ScreeningTest(0.75, 0.95)).beta == doctest::Approx(0.252680255142).epsilon(1e-11));
}

TEST_CASE("beta_geometry degenerate angles carry their limit") {
    try {
        beta_geometry(ScreeningTest(0.0, 0.5));
        FAIL("expected throw");
    } catch (const DegenerateAngleError& e) {
        CHECK(e.limit() == doctest::Approx(std::numbers::pi / 2));
    }
    try {
        beta_geometry(ScreeningTest(0.5, 1.0));
        FAIL("expected throw");
    } catch (const DegenerateAngleError& e) {
        CHECK(e.limit() == 0.0);
    }
}

TEST_CASE("LR+ direct and through beta") {
    CHECK(lr_positive_direct(ScreeningTest(0.95, 0.75)) == doctest::Approx(3.8).epsilon(1e-15));
    CHECK(lr_positive_direct(ScreeningTest(0.75, 0.95)) == doctest::Approx(15.0).epsilon(1e-14));
    CHECK(lr_positive_direct(ScreeningTest(0.5, 0.5)) == 1.0);
    CHECK_THROWS_AS(lr_positive_direct(ScreeningTest(0.5, 1.0)), InfiniteLRError);
    CHECK_THROWS_AS(lr_positive_direct(ScreeningTest(0.0, 0.5)), ZeroLRError);

    CHECK(lr_positive_from_beta(ScreeningTest(0.5, 0.5)) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(rel_close(lr_positive_from_beta(ScreeningTest(0.95, 0.75)), 3.8, 1e-12));
    CHECK(rel_close(lr_positive_from_beta(ScreeningTest(0.75, 0.95)), 15.0, 1e-12));
    CHECK_THROWS_AS(lr_positive_from_beta(ScreeningTest(0.5, 1.0)), DegenerateAngleError);
}

TEST_CASE("chords_at") {
    const ScreeningTest fig(0.95, 0.75);
    const ChordPair at_threshold = chords_at(fig, Prevalence(0.339056738915));
    CHECK(at_threshold.slope_origin == doctest::Approx(1.949359).epsilon(1e-6));
    CHECK(at_threshold.slope_endpoint == doctest::Approx(0.512989).epsilon(1e-6));

    const ChordPair identity = chords_at(ScreeningTest(0.5, 0.5), Prevalence(0.3));
    CHECK(identity.slope_origin == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(identity.slope_endpoint == doctest::Approx(1.0).epsilon(1e-15));

    const ChordPair half = chords_at(ScreeningTest(0.75, 0.95), Prevalence(0.5));
    CHECK(half.slope_origin == doctest::Approx(1.875).epsilon(1e-14));
    CHECK(half.slope_endpoint == doctest::Approx(0.125).epsilon(1e-14));

    CHECK_THROWS_AS(chords_at(fig, Prevalence(0.0)), DomainError);
    CHECK_THROWS_AS(chords_at(fig, Prevalence(1.0)), DomainError);
    CHECK_THROWS_AS(chords_at(ScreeningTest(0.5, 1.0), Prevalence(0.5)), DegenerateTestError);
}

TEST_CASE("lr_positive_from_chords") {
    const ScreeningTest fig(0.95, 0.75);
    CHECK(rel_close(lr_positive_from_chords(fig, Prevalence(0.339056738915)), 3.8, 1e-12));
    CHECK(rel_close(lr_positive_from_chords(fig, Prevalence(0.1)), 3.8, 1e-12));
    CHECK(rel_close(lr_positive_from_chords(ScreeningTest(0.5, 0.5), Prevalence(0.9)), 1.0, 1e-12));
}

TEST_CASE("endpoint_chord_line") {
    const Line fig = endpoint_chord_line(ScreeningTest(0.95, 0.75));
    // Figure 6 draws this line with slope 0.339/0.660.
    CHECK(std::abs(fig.slope - 0.339 / 0.660) < 0.001);
    CHECK(fig.slope == doctest::Approx(0.512989176043).epsilon(1e-11));
    CHECK(fig.intercept == doctest::Approx(0.487010823957).epsilon(1e-11));

    const Line identity = endpoint_chord_line(ScreeningTest(0.5, 0.5));
    CHECK(identity.slope == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(std::abs(identity.intercept) < 1e-15);

    const ScreeningTest reversed(0.75, 0.95);
    const Line line = endpoint_chord_line(reversed);
    CHECK(line.slope == doctest::Approx(0.258198889747).epsilon(1e-11));
    CHECK(line.intercept == doctest::Approx(0.741801110253).epsilon(1e-11));
    const ThresholdPoint th = prevalence_threshold(reversed);
    CHECK(std::abs(line(th.phi_e) - th.rho_e) < 1e-12);
    CHECK(std::abs(line(1.0) - 1.0) < 1e-12);

    CHECK_THROWS_AS(endpoint_chord_line(ScreeningTest(0.0, 1.0)), DegenerateTestError);
}

TEST_CASE("property: three LR+ routes agree") {
    Sampler s(21);
    for (int i = 0; i < 2000; ++i) {
        const ScreeningTest t(s.uniform(0.001, 1.0), s.uniform(0.0, 0.999));
        const double direct = lr_positive_direct(t);
        CHECK(rel_close(lr_positive_from_beta(t), direct, 1e-12));
        for (int k = 0; k < 10; ++k) {
            CHECK(rel_close(lr_positive_from_chords(t, Prevalence(s.open_unit())), direct, 1e-12));
        }
    }
}

TEST_CASE("property: slope of ppv at phi_e is 1") {
    Sampler s(22);
    for (int i = 0; i < 500; ++i) {
        const ScreeningTest t(s.uniform(0.05, 0.99), s.uniform(0.01, 0.95));
        const double phi_e = prevalence_threshold(t).phi_e;
        const double slope = central_difference(
            [&t](double x) { return ppv(t, Prevalence(x)); }, phi_e, 1e-6);
        CHECK(std::abs(slope - 1.0) < 1e-9);
    }
}

TEST_CASE("property: both threshold forms agree") {
    Sampler s(23);
    for (int i = 0; i < 2000; ++i) {
        const ScreeningTest t(s.uniform(0.01, 1.0), s.uniform(0.0, 0.99));
        if (std::abs(epsilon(t) - 1.0) < 1e-3) continue;
        const ThresholdForms f = threshold_forms(t);
        CHECK(std::abs(f.difference_form - f.root_form) < 1e-12);
    }
}

TEST_CASE("property: beta falls with specificity and vanishes with psi") {
    Sampler s(24);
    for (int i = 0; i < 200; ++i) {
        const double a = s.uniform(0.05, 1.0);
        double prev = std::numbers::pi / 2;
        for (int k = 0; k < 100; ++k) {
            const double beta = beta_geometry(ScreeningTest(a, k / 100.0)).beta;
            REQUIRE(beta < prev);
            prev = beta;
        }
    }
    // psi < 1e-3 once (1-b)/a < 1e-6
    const BetaGeometry tiny = beta_geometry(ScreeningTest(0.9, 1.0 - 0.8e-6));
    CHECK(tiny.psi < 1e-3);
    CHECK(tiny.beta < 1e-3);
}

TEST_CASE("property: origin chord at phi_e matches beta geometry slope") {
    Sampler s(25);
    for (int i = 0; i < 1000; ++i) {
        const ScreeningTest t(s.uniform(0.01, 1.0), s.uniform(0.0, 0.99));
        const ThresholdPoint th = prevalence_threshold(t);
        CHECK(rel_close(chords_at(t, Prevalence(th.phi_e)).slope_origin,
                        beta_geometry(t).origin_slope, 1e-12));
        CHECK(rel_close(origin_chord_line(t).slope, beta_geometry(t).origin_slope, 1e-12));
    }
}
